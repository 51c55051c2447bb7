#ifndef CIRCDIAM_VERTICES_HPP
#define CIRCDIAM_VERTICES_HPP

#include "circdiam/circuits.hpp"
#include "circdiam/polyhedron.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace circdiam {

struct Vertex {
    QVector coords;
    FacetSet tight;
    // "V5678" when the vertex is simple, otherwise the coordinates.
    std::string label;
};

/// Vertices of P, sorted lexicographically by coordinates. Every subset of
/// dim - rank(A_eq) inequality rows is solved together with a row basis of
/// A_eq; feasible solutions are kept and deduplicated exactly.
std::vector<Vertex> enumerate_vertices(const HPolyhedron& p);

struct Skeleton {
    std::vector<Vertex> vertices;
    std::vector<std::pair<std::size_t, std::size_t>> edges;  // (u, v) with u < v, sorted
    std::vector<std::vector<std::size_t>> adjacency;

    std::optional<std::size_t> find(const std::string& label) const;
    std::optional<std::size_t> find(const QVector& coords) const;
};

/// Vertices u, v are adjacent iff their common tight rows (with A_eq) have
/// rank dim - 1.
Skeleton build_skeleton(const HPolyhedron& p);
Skeleton build_skeleton(const HPolyhedron& p, std::vector<Vertex> vertices);

/// Breadth-first distance. Throws std::out_of_range for unknown ids and
/// std::runtime_error when v is unreachable.
std::size_t graph_distance(const Skeleton& s, std::size_t u, std::size_t v);
/// Distances from u to every vertex; unreachable entries are nullopt.
std::vector<std::optional<std::size_t>> graph_distances_from(const Skeleton& s, std::size_t u);
std::size_t graph_diameter(const Skeleton& s);

/// False iff some signed circuit is a recession direction
/// (A_eq g = 0, A_ineq g >= 0).
bool is_bounded(const HPolyhedron& p, const CircuitSet& circuits);
bool is_bounded(const HPolyhedron& p);

struct CombinatorialSignature {
    std::vector<FacetSet> vertex_sets;                       // sorted
    std::vector<std::pair<FacetSet, FacetSet>> edge_sets;    // each pair ordered, list sorted

    friend bool operator==(const CombinatorialSignature&, const CombinatorialSignature&) = default;
};

CombinatorialSignature combinatorial_signature(const HPolyhedron& p);
CombinatorialSignature combinatorial_signature(const Skeleton& s);

}  // namespace circdiam

#endif
