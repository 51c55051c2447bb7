#ifndef CIRCDIAM_WALKS_HPP
#define CIRCDIAM_WALKS_HPP

#include "circdiam/certificate.hpp"
#include "circdiam/circuits.hpp"
#include "circdiam/polyhedron.hpp"
#include "circdiam/vertices.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace circdiam {

enum class StepKind { bounded, blocked, unbounded };

struct StepOutcome {
    StepKind kind = StepKind::blocked;
    Rational length;         // bounded only
    QVector endpoint;        // bounded only
    FacetSet blocking_rows;  // bounded only: decreasing rows tight at the endpoint
};

/// Ratio test along g from x without checking that g is a circuit:
/// length = min over rows with (A_ineq g)_i < 0 of residual_i / -(A_ineq g)_i.
/// Throws InfeasiblePoint if x is not in P.
StepOutcome ratio_step(const HPolyhedron& p, std::span<const Rational> x, std::span<const Rational> g);

/// Maximal circuit step. Throws InfeasiblePoint for infeasible x and
/// std::invalid_argument when g is not one of the signed circuits.
StepOutcome max_step(const HPolyhedron& p, const CircuitSet& circuits, std::span<const Rational> x,
                     const PrimitiveVector& g);

struct ReachabilityLayer {
    std::size_t depth = 0;
    std::vector<QVector> points;
    // For depth > 0: index of the predecessor in the previous layer and the
    // signed circuit (index into CircuitSet::signed_directions) used.
    std::vector<std::size_t> parent;
    std::vector<std::size_t> via;
};

/// Breadth-first expansion: every signed circuit is applied to every point of
/// the frontier, bounded outcomes are kept and deduplicated exactly against
/// all earlier layers. Stops after max_depth layers, an empty layer, or once
/// every target has appeared.
std::vector<ReachabilityLayer> reachable_layers(const HPolyhedron& p, const CircuitSet& circuits,
                                                const QVector& source, std::size_t max_depth,
                                                const std::vector<QVector>& targets = {});

/// Walk from layer 0 to `point`. Throws std::invalid_argument when not reached.
WalkCertificate extract_certificate(const std::vector<ReachabilityLayer>& layers, const QVector& point,
                                    const std::string& instance = {});

struct DistanceResult {
    std::optional<std::size_t> distance;  // nullopt: not found within the budget
    std::optional<WalkCertificate> certificate;
};

/// Length of the shortest circuit walk from u to v, searching up to max_depth
/// steps. Not symmetric in general.
DistanceResult circuit_distance(const HPolyhedron& p, const CircuitSet& circuits, const QVector& from,
                                const QVector& to, std::size_t max_depth, const std::string& instance = {});

/// Circuit distances from one source to each of the targets (nullopt when
/// not reached within max_depth).
std::vector<std::optional<std::size_t>> circuit_distances_from(const HPolyhedron& p, const CircuitSet& circuits,
                                                               const QVector& source,
                                                               const std::vector<QVector>& targets,
                                                               std::size_t max_depth);

struct DiameterResult {
    std::optional<std::size_t> diameter;  // nullopt: some ordered pair exceeds max_depth
    std::size_t max_depth = 0;
    // Ordered vertex pair attaining the diameter (or the first unresolved pair).
    std::size_t from = 0;
    std::size_t to = 0;
    std::optional<WalkCertificate> certificate;
    // distances[u][v]; nullopt when unresolved within max_depth.
    std::vector<std::vector<std::optional<std::size_t>>> distances;
};

DiameterResult circuit_diameter(const HPolyhedron& p, const CircuitSet& circuits, const std::vector<Vertex>& vertices,
                                std::size_t max_depth, const std::string& instance = {});
DiameterResult circuit_diameter(const HPolyhedron& p, std::size_t max_depth, const std::string& instance = {});

enum class Violation {
    none,
    infeasible_point,
    not_a_circuit,
    nonpositive_length,
    non_maximal_step,
    endpoint_mismatch,
    malformed
};

std::string to_string(Violation v);

struct VerifyResult {
    Violation violation = Violation::none;
    std::size_t step = 0;  // index of the offending step (or steps.size() for the endpoint)
    std::string message;

    bool ok() const { return violation == Violation::none; }
};

/// Re-checks a certificate from scratch against the walk conditions, using
/// is_circuit for directions and a fresh ratio test for each step.
VerifyResult verify_walk(const HPolyhedron& p, const WalkCertificate& cert);

}  // namespace circdiam

#endif
