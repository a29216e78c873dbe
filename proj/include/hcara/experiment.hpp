#pragma once

#include "hcara/cara_numbers.hpp"
#include "hcara/json_io.hpp"
#include "hcara/strong_convexity.hpp"
#include "hcara/witness.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace hcara {

inline constexpr const char* kToolVersion = "hcara 0.1.0";

struct ExperimentConfig {
    std::uint64_t seed = 42;
    std::size_t trials = 100;
    std::size_t dim = 2;
    std::size_t max_normals = 6;
    std::size_t max_points = 5;
    std::size_t coordinate_bound = 4;
    std::size_t scaling_depth = 8;

    /// Throws InputError unless trials >= 1, 2 <= dim <= 4,
    /// max_normals >= dim + 1 and the remaining fields are positive.
    void validate() const;
};

json_io::Json to_json(const ExperimentConfig& config);
/// Missing fields keep their defaults.
ExperimentConfig experiment_config_from_json(const json_io::Json& j);

struct TrialInstance {
    Polytope body;
    PointSet points;
};

/// Deterministic in (config.seed, trial_index): a bounded polytope containing
/// the origin in its interior and a point set that fits one of its translates.
/// Throws SamplingError when the rejection budget runs out.
TrialInstance random_instance(const ExperimentConfig& config, std::size_t trial_index);

/// Lower bound k >= cara(H) by shrinking an extremal witness set X towards 0
/// with factors 1, 1/2, ..., 1/2^depth.
struct ScalingRecord {
    WitnessKind kind = WitnessKind::Unspecified;
    std::size_t target = 0;  ///< |X| = cara(H)
    std::optional<Rational> epsilon;  ///< first factor certifying the bound
    std::size_t tested = 0;

    bool certified() const { return epsilon.has_value(); }
};

struct UpperBoundRecord {
    std::size_t witness_size = 0;
    std::size_t facets = 0;
    std::size_t caratheodory = 0;
    std::size_t size_bound = 0;  ///< max(cara(H), |H| - 1)
    bool size_bound_ok = true;
    std::size_t subset_bound = 0;  ///< max over H' of cara(H') = max(helly, relaxed cone)
    bool subset_bound_ok = true;
    /// Set when the witness reaches |H| - 1 on a non-simplex: "pyramid-like",
    /// "simplex-plus-facet", "both" or "neither".
    std::string tight_class;
};

struct GuardRecord {
    IndexSet minimal_witness;
    std::optional<std::vector<std::size_t>> guards;
    bool ok() const { return guards.has_value(); }
};

ScalingRecord check_lower_bound_scaling(const Polytope& body, std::size_t depth);
ScalingRecord check_lower_bound_scaling(const Polytope& body, std::size_t depth, const InvariantReport& invariants);

/// Requires p in conv_K X (PreconditionError otherwise).
UpperBoundRecord check_upper_bounds(const Polytope& body, const PointSet& points, const RVector& p);
UpperBoundRecord check_upper_bounds(const Polytope& body, const PointSet& points, const RVector& p,
                                    const InvariantReport& invariants);

/// Minimizes X for p first, then asks for a guard assignment on the result.
GuardRecord check_guard_lemma(const Polytope& body, const PointSet& points, const RVector& p);

struct TrialRecord {
    std::size_t index = 0;
    Polytope body;
    PointSet points;
    RVector query;
    InvariantReport invariants;
    UpperBoundRecord upper;
    GuardRecord guard;
    std::size_t subset_probes = 0;
    bool subset_ok = true;
    PointSet cube_points;
    std::size_t cube_probes = 0;
    bool cube_ok = true;
    ScalingRecord scaling;
};

/// A failed check. Hard violations use kinds "hull-inclusion",
/// "size-bound", "guard-assignment", "cube-equality"; counterexample
/// candidates use "subset-bound" and "tight-class".
struct Finding {
    std::size_t trial = 0;
    std::string kind;
    std::string detail;
    json_io::Json instance;
};

struct ExperimentReport {
    ExperimentConfig config;
    std::vector<TrialRecord> trials;
    std::vector<Finding> violations;
    std::vector<Finding> counterexample_candidates;

    bool clean() const { return violations.empty() && counterexample_candidates.empty(); }
};

/// Runs every trial. Each trial draws only from its own (seed, index)
/// stream and results are stored by index, so the report does not depend
/// on `workers`. workers == 0 picks the hardware concurrency.
ExperimentReport run_suite(const ExperimentConfig& config, std::size_t workers = 1);

/// Runs the per-trial checks on a given instance; used by run_suite and for
/// replaying a serialized instance.
TrialRecord run_trial(const ExperimentConfig& config, std::size_t trial_index, const TrialInstance& instance,
                      std::vector<Finding>& violations, std::vector<Finding>& candidates);

json_io::Json to_json(const ScalingRecord& record);
json_io::Json to_json(const UpperBoundRecord& record);
json_io::Json to_json(const TrialRecord& record);
json_io::Json to_json(const Finding& finding);
json_io::Json to_json(const ExperimentReport& report);

json_io::Json instance_json(const Polytope& body, const PointSet& points, const RVector& query);

}  // namespace hcara
