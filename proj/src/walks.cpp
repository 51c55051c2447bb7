#include "circdiam/walks.hpp"

#include "walk_engine.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace circdiam {

using detail::WalkEngine;

StepOutcome ratio_step(const HPolyhedron& p, std::span<const Rational> x, std::span<const Rational> g) {
    if (!p.contains(x)) throw InfeasiblePoint("step origin " + to_string(QVector(x.begin(), x.end())) + " is not in the polyhedron");
    const QVector residual = p.residuals(x);
    const QVector image = p.ineq_matrix().multiply(g);

    std::optional<Rational> best;
    for (std::size_t i = 0; i < image.size(); ++i) {
        if (sgn(image[i]) >= 0) continue;
        Rational ratio = residual[i] / -image[i];
        if (!best || ratio < *best) best = std::move(ratio);
    }
    StepOutcome out;
    if (!best) {
        out.kind = StepKind::unbounded;
        return out;
    }
    if (sgn(*best) == 0) {
        out.kind = StepKind::blocked;
        return out;
    }
    out.kind = StepKind::bounded;
    out.length = *best;
    out.endpoint = axpy(QVector(x.begin(), x.end()), out.length, QVector(g.begin(), g.end()));
    const QVector end_residual = p.residuals(out.endpoint);
    for (std::size_t i = 0; i < image.size(); ++i)
        if (sgn(image[i]) < 0 && sgn(end_residual[i]) == 0) out.blocking_rows.push_back(static_cast<int>(i) + 1);
    return out;
}

StepOutcome max_step(const HPolyhedron& p, const CircuitSet& circuits, std::span<const Rational> x,
                     const PrimitiveVector& g) {
    if (!circuits.contains(g)) throw std::invalid_argument(to_string(g) + " is not a circuit of the polyhedron");
    return ratio_step(p, x, g.to_rational());
}

namespace {

void require_vertex(const HPolyhedron& p, const QVector& x, const char* role) {
    if (x.size() != p.dim()) throw std::invalid_argument(std::string(role) + " has the wrong dimension");
    if (!p.contains(x)) throw std::invalid_argument(std::string(role) + " " + to_string(x) + " is not in the polyhedron");
    if (rank(p.active_system(p.tight_rows(x))) != p.dim())
        throw std::invalid_argument(std::string(role) + " " + to_string(x) + " is not a vertex");
}

WalkCertificate certificate_from_path(const std::vector<QVector>& path, const std::string& instance) {
    WalkCertificate cert;
    cert.instance = instance;
    cert.start = path.front();
    cert.end = path.back();
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
        const QVector diff = sub(path[i + 1], path[i]);
        const PrimitiveVector g = primitive_direction(diff);
        std::size_t j = 0;
        while (sgn(g[j]) == 0) ++j;
        cert.steps.push_back(WalkStep{g.components(), diff[j] / Rational(g[j])});
    }
    return cert;
}

struct Hit {
    std::size_t depth = 0;
    std::vector<QVector> path;
};

// Circuit distances from the source to each target. A target at depth k is
// detected from layer k-1 with a direct one-step test, so the deepest layer
// never has to be materialised.
template <typename Int>
std::vector<std::optional<Hit>> search(WalkEngine<Int>& engine, const HPolyhedron& p, const QVector& source,
                                       const std::vector<QVector>& targets, std::size_t max_depth) {
    std::vector<std::optional<Hit>> hits(targets.size());
    std::vector<detail::Target<Int>> keys;
    std::size_t remaining = targets.size();
    for (std::size_t t = 0; t < targets.size(); ++t) {
        keys.push_back(engine.make_target(targets[t], p.tight_rows(targets[t])));
        if (targets[t] == source) {
            hits[t] = Hit{0, {source}};
            --remaining;
        }
    }
    engine.start(source);
    std::vector<Int> diff(p.dim());
    for (std::size_t depth = 1; depth <= max_depth && remaining > 0; ++depth) {
        const std::size_t begin = engine.layer_begin(depth - 1), end = engine.layer_end(depth - 1);
        if (begin == end) break;
        for (std::size_t t = 0; t < targets.size(); ++t) {
            if (hits[t]) continue;
            for (std::size_t idx = begin; idx < end; ++idx) {
                if (!engine.step_to(idx, keys[t], diff)) continue;
                Hit hit{depth, engine.path_to(idx)};
                hit.path.push_back(targets[t]);
                hits[t] = std::move(hit);
                --remaining;
                break;
            }
        }
        if (remaining == 0 || depth == max_depth) break;
        engine.expand();
    }
    return hits;
}

std::vector<std::optional<Hit>> search_any(const HPolyhedron& p, const CircuitSet& circuits, const QVector& source,
                                           const std::vector<QVector>& targets, std::size_t max_depth) {
    return detail::with_engine(p, circuits,
                               [&](auto& engine) { return search(engine, p, source, targets, max_depth); });
}

}  // namespace

std::vector<ReachabilityLayer> reachable_layers(const HPolyhedron& p, const CircuitSet& circuits,
                                                const QVector& source, std::size_t max_depth,
                                                const std::vector<QVector>& targets) {
    require_vertex(p, source, "source");
    return detail::with_engine(p, circuits, [&](auto& engine) {
        engine.start(source);
        auto all_targets_seen = [&] {
            return !targets.empty() &&
                   std::all_of(targets.begin(), targets.end(),
                               [&](const QVector& t) { return engine.find(engine.make_key(t)).has_value(); });
        };
        while (engine.num_layers() <= max_depth && !all_targets_seen()) {
            if (engine.expand() == 0) break;
        }
        std::vector<ReachabilityLayer> layers;
        for (std::size_t d = 0; d < engine.num_layers(); ++d) {
            ReachabilityLayer layer;
            layer.depth = d;
            for (std::size_t idx = engine.layer_begin(d); idx < engine.layer_end(d); ++idx) {
                layer.points.push_back(engine.to_point(engine.key(idx)));
                if (d > 0) {
                    layer.parent.push_back(engine.parent(idx) - engine.layer_begin(d - 1));
                    layer.via.push_back(engine.via(idx));
                }
            }
            if (d > 0 && layer.points.empty()) break;
            layers.push_back(std::move(layer));
        }
        return layers;
    });
}

WalkCertificate extract_certificate(const std::vector<ReachabilityLayer>& layers, const QVector& point,
                                    const std::string& instance) {
    for (std::size_t d = 0; d < layers.size(); ++d) {
        auto it = std::find(layers[d].points.begin(), layers[d].points.end(), point);
        if (it == layers[d].points.end()) continue;
        std::vector<QVector> path;
        std::size_t pos = static_cast<std::size_t>(it - layers[d].points.begin());
        for (std::size_t k = d + 1; k-- > 0;) {
            path.push_back(layers[k].points[pos]);
            if (k > 0) pos = layers[k].parent[pos];
        }
        std::reverse(path.begin(), path.end());
        return certificate_from_path(path, instance);
    }
    throw std::invalid_argument("point " + to_string(point) + " was not reached");
}

DistanceResult circuit_distance(const HPolyhedron& p, const CircuitSet& circuits, const QVector& from,
                                const QVector& to, std::size_t max_depth, const std::string& instance) {
    require_vertex(p, from, "source");
    require_vertex(p, to, "target");
    auto hits = search_any(p, circuits, from, {to}, max_depth);
    DistanceResult result;
    if (hits.front()) {
        result.distance = hits.front()->depth;
        result.certificate = certificate_from_path(hits.front()->path, instance);
    }
    return result;
}

std::vector<std::optional<std::size_t>> circuit_distances_from(const HPolyhedron& p, const CircuitSet& circuits,
                                                               const QVector& source,
                                                               const std::vector<QVector>& targets,
                                                               std::size_t max_depth) {
    require_vertex(p, source, "source");
    for (const auto& t : targets) require_vertex(p, t, "target");
    std::vector<std::optional<std::size_t>> out;
    for (const auto& hit : search_any(p, circuits, source, targets, max_depth))
        out.push_back(hit ? std::optional<std::size_t>(hit->depth) : std::nullopt);
    return out;
}

DiameterResult circuit_diameter(const HPolyhedron& p, const CircuitSet& circuits, const std::vector<Vertex>& vertices,
                                std::size_t max_depth, const std::string& instance) {
    if (vertices.size() < 2) throw std::invalid_argument("circuit diameter needs at least two vertices");
    std::vector<QVector> points;
    for (const auto& v : vertices) points.push_back(v.coords);

    DiameterResult result;
    result.max_depth = max_depth;
    result.distances.resize(vertices.size());
    std::size_t best = 0;
    bool unresolved = false;
    for (std::size_t u = 0; u < vertices.size(); ++u) {
        result.distances[u] = circuit_distances_from(p, circuits, points[u], points, max_depth);
        for (std::size_t v = 0; v < vertices.size(); ++v) {
            if (u == v) continue;
            const auto& d = result.distances[u][v];
            if (!d && !unresolved) {
                unresolved = true;
                result.from = u;
                result.to = v;
            } else if (d && !unresolved && *d > best) {
                best = *d;
                result.from = u;
                result.to = v;
            }
        }
    }
    if (unresolved) return result;
    result.diameter = best;
    result.certificate = circuit_distance(p, circuits, points[result.from], points[result.to], max_depth, instance).certificate;
    return result;
}

DiameterResult circuit_diameter(const HPolyhedron& p, std::size_t max_depth, const std::string& instance) {
    return circuit_diameter(p, enumerate_circuits(p), enumerate_vertices(p), max_depth, instance);
}

std::string to_string(Violation v) {
    switch (v) {
        case Violation::none: return "ok";
        case Violation::infeasible_point: return "infeasible point";
        case Violation::not_a_circuit: return "direction is not a circuit";
        case Violation::nonpositive_length: return "non-positive step length";
        case Violation::non_maximal_step: return "step is not maximal";
        case Violation::endpoint_mismatch: return "endpoint mismatch";
        case Violation::malformed: return "malformed certificate";
    }
    return "unknown";
}

VerifyResult verify_walk(const HPolyhedron& p, const WalkCertificate& cert) {
    auto fail = [](Violation v, std::size_t step, std::string msg) { return VerifyResult{v, step, std::move(msg)}; };
    const std::size_t n = p.dim();
    if (cert.start.size() != n || cert.end.size() != n)
        return fail(Violation::malformed, 0, "start/end dimension does not match the polyhedron");
    for (std::size_t i = 0; i < cert.steps.size(); ++i)
        if (cert.steps[i].direction.size() != n)
            return fail(Violation::malformed, i, "direction dimension does not match the polyhedron");

    QVector y = cert.start;
    if (!p.contains(y)) return fail(Violation::infeasible_point, 0, "start point " + to_string(y) + " is not in P");

    std::map<ZVector, bool> circuit_cache;
    for (std::size_t i = 0; i < cert.steps.size(); ++i) {
        const auto& step = cert.steps[i];
        const QVector g = to_rational(step.direction);
        Integer common = 0;
        for (const auto& z : step.direction) common = gcd(common, z);
        if (common != 1)
            return fail(Violation::not_a_circuit, i, "direction is not a primitive nonzero integer vector");
        auto cached = circuit_cache.find(step.direction);
        if (cached == circuit_cache.end()) cached = circuit_cache.emplace(step.direction, is_circuit(p, g)).first;
        if (!cached->second) return fail(Violation::not_a_circuit, i, "direction " + to_string(g) + " is not a circuit");
        if (sgn(step.length) <= 0)
            return fail(Violation::nonpositive_length, i, "step length " + to_string(step.length) + " is not positive");
        QVector next = axpy(y, step.length, g);
        if (!p.contains(next)) return fail(Violation::infeasible_point, i, "point " + to_string(next) + " is not in P");
        const StepOutcome best = ratio_step(p, y, g);
        if (best.kind != StepKind::bounded || best.length != step.length)
            return fail(Violation::non_maximal_step, i,
                        "step length " + to_string(step.length) + " is not the maximal feasible length" +
                            (best.kind == StepKind::bounded ? " " + to_string(best.length) : std::string(" (unbounded)")));
        y = std::move(next);
    }
    if (y != cert.end)
        return fail(Violation::endpoint_mismatch, cert.steps.size(),
                    "walk ends at " + to_string(y) + ", certificate claims " + to_string(cert.end));
    return {};
}

}  // namespace circdiam
