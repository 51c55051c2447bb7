#include "circdiam/circuits.hpp"

#include "circdiam/combinations.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace circdiam {

CircuitSet::CircuitSet(std::vector<Circuit> circuits) : circuits_(std::move(circuits)) {
    std::sort(circuits_.begin(), circuits_.end(),
              [](const Circuit& a, const Circuit& b) { return a.direction < b.direction; });
    for (const auto& c : circuits_) {
        for (const auto& g : {c.direction, c.direction.negated()}) {
            if (!index_.emplace(g, signed_.size()).second)
                throw std::invalid_argument("duplicate circuit " + to_string(g));
            signed_.push_back(g);
        }
    }
}

std::optional<std::size_t> CircuitSet::signed_index(const PrimitiveVector& g) const {
    auto it = index_.find(g);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

FacetSet image_support(const HPolyhedron& p, std::span<const Rational> g) {
    const QVector image = p.ineq_matrix().multiply(g);
    FacetSet support;
    for (std::size_t i = 0; i < image.size(); ++i)
        if (sgn(image[i]) != 0) support.push_back(static_cast<int>(i) + 1);
    return support;
}

namespace {

Circuit make_circuit(const HPolyhedron& p, PrimitiveVector g) {
    Circuit c{std::move(g), {}, {}};
    c.image_support = image_support(p, c.direction.to_rational());
    for (int i = 1; i <= static_cast<int>(p.num_inequalities()); ++i)
        if (!std::binary_search(c.image_support.begin(), c.image_support.end(), i)) c.zero_rows.push_back(i);
    return c;
}

}  // namespace

CircuitSet enumerate_circuits(const HPolyhedron& p) {
    const std::size_t n = p.dim();
    const std::size_t eq_rank = rank(p.eq_matrix());
    if (eq_rank >= n) return CircuitSet{};
    const std::size_t k = n - eq_rank - 1;

    std::set<PrimitiveVector> found;
    for_each_combination(p.num_inequalities(), k, [&](std::span<const std::size_t> rows) {
        FacetSet facets;
        for (auto r : rows) facets.push_back(static_cast<int>(r) + 1);
        auto g = kernel_line(p.active_system(facets));
        if (!g) return;
        if (image_support(p, g->to_rational()).empty()) return;
        found.insert(std::move(*g));
    });

    std::vector<Circuit> circuits;
    circuits.reserve(found.size());
    for (const auto& g : found) circuits.push_back(make_circuit(p, g));
    return CircuitSet(std::move(circuits));
}

bool is_circuit(const HPolyhedron& p, std::span<const Rational> g) {
    if (g.size() != p.dim()) throw std::invalid_argument("direction dimension does not match polyhedron");
    bool nonzero = false;
    for (const auto& q : g) nonzero = nonzero || sgn(q) != 0;
    if (!nonzero) throw std::invalid_argument("the zero vector is never a circuit");

    for (const auto& e : p.eq_matrix().multiply(g))
        if (sgn(e) != 0) return false;
    const FacetSet support = image_support(p, g);
    if (support.empty()) return false;

    // A nonzero lineality direction has empty image support, smaller than anything.
    if (!nullspace_basis(p.eq_matrix().stacked(p.ineq_matrix())).empty()) return false;

    const std::size_t m = p.num_inequalities();
    if (m >= 8 * sizeof(unsigned long)) throw std::invalid_argument("too many rows for the brute-force circuit check");
    for (unsigned long mask = 0; mask < (1UL << m); ++mask) {
        FacetSet rows;
        for (std::size_t i = 0; i < m; ++i)
            if (mask & (1UL << i)) rows.push_back(static_cast<int>(i) + 1);
        auto basis = nullspace_basis(p.active_system(rows));
        if (basis.size() != 1) continue;
        const FacetSet other = image_support(p, basis.front());
        if (other.size() < support.size() && std::includes(support.begin(), support.end(), other.begin(), other.end()))
            return false;
    }
    return true;
}

std::size_t circuit_count_bound(const HPolyhedron& p) { return 2 * enumerate_circuits(p).size(); }

}  // namespace circdiam
