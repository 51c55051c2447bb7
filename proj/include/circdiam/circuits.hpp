#ifndef CIRCDIAM_CIRCUITS_HPP
#define CIRCDIAM_CIRCUITS_HPP

#include "circdiam/linalg.hpp"
#include "circdiam/polyhedron.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <vector>

namespace circdiam {

struct Circuit {
    PrimitiveVector direction;  // first nonzero component positive
    FacetSet image_support;     // rows i with (A_ineq g)_i != 0
    FacetSet zero_rows;         // complement of image_support
};

/// Circuits of (A_eq, A_ineq), one canonical representative per +/- pair,
/// ordered lexicographically by direction.
class CircuitSet {
public:
    CircuitSet() = default;
    explicit CircuitSet(std::vector<Circuit> circuits);

    const std::vector<Circuit>& canonical() const { return circuits_; }
    std::size_t size() const { return circuits_.size(); }

    /// Every circuit followed by its negation: g_1, -g_1, g_2, -g_2, ...
    const std::vector<PrimitiveVector>& signed_directions() const { return signed_; }

    /// Position of g in signed_directions(), if g is a signed circuit.
    std::optional<std::size_t> signed_index(const PrimitiveVector& g) const;
    bool contains(const PrimitiveVector& g) const { return signed_index(g).has_value(); }

private:
    std::vector<Circuit> circuits_;
    std::vector<PrimitiveVector> signed_;
    std::map<PrimitiveVector, std::size_t> index_;
};

/// Kernel lines of every rank-(dim-1) subsystem made of A_eq plus
/// (dim - rank(A_eq) - 1) inequality rows, deduplicated. Kernel lines that
/// A_ineq maps to zero (lineality directions) are dropped.
CircuitSet enumerate_circuits(const HPolyhedron& p);

/// Support-minimality check by global comparison: g is rejected when some
/// kernel line of [A_eq; A_ineq restricted to any row subset] has a strictly
/// smaller image support. Deliberately independent of enumerate_circuits.
/// Scale-free in g. Throws std::invalid_argument for the zero vector.
bool is_circuit(const HPolyhedron& p, std::span<const Rational> g);

/// Number of signed circuit directions, 2 * |canonical set|.
std::size_t circuit_count_bound(const HPolyhedron& p);

FacetSet image_support(const HPolyhedron& p, std::span<const Rational> g);

}  // namespace circdiam

#endif
