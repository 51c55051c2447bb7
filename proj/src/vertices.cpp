#include "circdiam/vertices.hpp"

#include "circdiam/combinations.hpp"
#include "circdiam/linalg.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>

namespace circdiam {

namespace {

// Indices of a maximal linearly independent subset of the rows of m.
std::vector<std::size_t> row_basis(const QMatrix& m) {
    std::vector<std::size_t> basis;
    QMatrix acc(0, m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        QMatrix trial = acc;
        trial.append_row(m.row(r));
        if (rank(trial) > acc.rows()) {
            acc = std::move(trial);
            basis.push_back(r);
        }
    }
    return basis;
}

std::string vertex_label(const HPolyhedron& p, std::size_t eq_rank, const QVector& coords, const FacetSet& tight) {
    if (tight.size() == p.dim() - eq_rank) return facet_label(tight);
    return to_string(coords);
}

}  // namespace

std::vector<Vertex> enumerate_vertices(const HPolyhedron& p) {
    const std::size_t n = p.dim();
    const auto eq_rows = row_basis(p.eq_matrix());
    const QMatrix eq_basis = p.eq_matrix().select_rows(eq_rows);
    QVector eq_basis_rhs;
    for (auto r : eq_rows) eq_basis_rhs.push_back(p.eq_rhs()[r]);
    const std::size_t k = n - eq_rows.size();

    std::map<QVector, FacetSet> found;
    for_each_combination(p.num_inequalities(), k, [&](std::span<const std::size_t> rows) {
        QMatrix system = eq_basis;
        QVector rhs = eq_basis_rhs;
        for (auto r : rows) {
            system.append_row(p.ineq_matrix().row(r));
            rhs.push_back(p.ineq_rhs()[r]);
        }
        auto x = solve_square(system, rhs);
        if (!x || !p.contains(*x) || found.count(*x)) return;
        FacetSet tight = p.tight_rows(*x);
        found.emplace(std::move(*x), std::move(tight));
    });

    std::vector<Vertex> out;
    out.reserve(found.size());
    for (auto& [coords, tight] : found) {
        std::string label = vertex_label(p, eq_rows.size(), coords, tight);
        out.push_back(Vertex{coords, tight, std::move(label)});
    }
    return out;
}

std::optional<std::size_t> Skeleton::find(const std::string& label) const {
    for (std::size_t i = 0; i < vertices.size(); ++i)
        if (vertices[i].label == label) return i;
    return std::nullopt;
}

std::optional<std::size_t> Skeleton::find(const QVector& coords) const {
    for (std::size_t i = 0; i < vertices.size(); ++i)
        if (vertices[i].coords == coords) return i;
    return std::nullopt;
}

Skeleton build_skeleton(const HPolyhedron& p) { return build_skeleton(p, enumerate_vertices(p)); }

Skeleton build_skeleton(const HPolyhedron& p, std::vector<Vertex> vertices) {
    Skeleton s;
    s.vertices = std::move(vertices);
    s.adjacency.resize(s.vertices.size());
    if (p.dim() == 0) return s;
    for (std::size_t u = 0; u < s.vertices.size(); ++u) {
        for (std::size_t v = u + 1; v < s.vertices.size(); ++v) {
            FacetSet common;
            const auto& a = s.vertices[u].tight;
            const auto& b = s.vertices[v].tight;
            std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
            if (common.size() + p.num_equalities() + 1 < p.dim()) continue;
            if (rank(p.active_system(common)) != p.dim() - 1) continue;
            s.edges.emplace_back(u, v);
            s.adjacency[u].push_back(v);
            s.adjacency[v].push_back(u);
        }
    }
    return s;
}

std::vector<std::optional<std::size_t>> graph_distances_from(const Skeleton& s, std::size_t u) {
    if (u >= s.vertices.size()) throw std::out_of_range("unknown vertex id " + std::to_string(u));
    std::vector<std::optional<std::size_t>> dist(s.vertices.size());
    std::deque<std::size_t> queue{u};
    dist[u] = 0;
    while (!queue.empty()) {
        const auto x = queue.front();
        queue.pop_front();
        for (auto y : s.adjacency[x]) {
            if (dist[y]) continue;
            dist[y] = *dist[x] + 1;
            queue.push_back(y);
        }
    }
    return dist;
}

std::size_t graph_distance(const Skeleton& s, std::size_t u, std::size_t v) {
    if (v >= s.vertices.size()) throw std::out_of_range("unknown vertex id " + std::to_string(v));
    auto d = graph_distances_from(s, u)[v];
    if (!d) throw std::runtime_error("skeleton is disconnected");
    return *d;
}

std::size_t graph_diameter(const Skeleton& s) {
    if (s.vertices.empty()) throw std::invalid_argument("graph diameter of an empty skeleton");
    std::size_t best = 0;
    for (std::size_t u = 0; u < s.vertices.size(); ++u) {
        for (const auto& d : graph_distances_from(s, u)) {
            if (!d) throw std::runtime_error("skeleton is disconnected");
            best = std::max(best, *d);
        }
    }
    return best;
}

bool is_bounded(const HPolyhedron& p, const CircuitSet& circuits) {
    for (const auto& g : circuits.signed_directions()) {
        const QVector image = p.ineq_matrix().multiply(g.to_rational());
        if (std::all_of(image.begin(), image.end(), [](const Rational& q) { return sgn(q) >= 0; })) return false;
    }
    return true;
}

bool is_bounded(const HPolyhedron& p) { return is_bounded(p, enumerate_circuits(p)); }

CombinatorialSignature combinatorial_signature(const Skeleton& s) {
    CombinatorialSignature sig;
    for (const auto& v : s.vertices) sig.vertex_sets.push_back(v.tight);
    std::sort(sig.vertex_sets.begin(), sig.vertex_sets.end());
    for (const auto& [u, v] : s.edges) {
        auto a = s.vertices[u].tight;
        auto b = s.vertices[v].tight;
        if (b < a) std::swap(a, b);
        sig.edge_sets.emplace_back(std::move(a), std::move(b));
    }
    std::sort(sig.edge_sets.begin(), sig.edge_sets.end());
    return sig;
}

CombinatorialSignature combinatorial_signature(const HPolyhedron& p) {
    return combinatorial_signature(build_skeleton(p));
}

}  // namespace circdiam
