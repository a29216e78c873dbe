#include "hcara/experiment.hpp"

#include "hcara/errors.hpp"
#include "hcara/shapes.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <map>
#include <random>
#include <thread>

namespace hcara {
namespace {

using json_io::Json;

constexpr std::size_t kRejectionBudget = 1000;
constexpr std::size_t kQueryCandidates = 12;
constexpr std::size_t kCubeProbes = 4;

enum class Stream : std::uint64_t { Instance = 1, Queries = 2, Cube = 3 };

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

// Portable draws on top of mt19937_64 (whose output sequence is fixed by the
// standard, unlike the std distributions).
class TrialRng {
public:
    TrialRng(std::uint64_t seed, std::size_t trial, Stream stream)
        : engine_(splitmix64(seed ^ splitmix64(splitmix64(trial) + static_cast<std::uint64_t>(stream)))) {}

    std::uint64_t below(std::uint64_t n) {
        const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                    std::numeric_limits<std::uint64_t>::max() % n;
        std::uint64_t draw;
        do {
            draw = engine_();
        } while (draw >= limit);
        return draw % n;
    }

    long range(long lo, long hi) { return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1))); }

    Rational rational(long bound) {
        const long num = range(-bound, bound);
        const long den = range(1, bound);
        return Rational(num, den);
    }

private:
    std::mt19937_64 engine_;
};

std::vector<RVector> distinct(std::vector<RVector> points) {
    std::vector<RVector> out;
    for (auto& p : points) {
        if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(std::move(p));
    }
    return out;
}

Rational power_of_half(std::size_t exponent) {
    return Rational(Integer(1), Integer(1) << static_cast<unsigned>(exponent));
}

// Candidate query points near X: convex combinations, box samples, and
// perturbed members of X.
std::vector<RVector> query_candidates(const PointSet& points, long bound, TrialRng& rng) {
    const std::size_t dim = points.dim();
    RVector lo = points[0];
    RVector hi = points[0];
    for (const auto& x : points.points()) {
        for (std::size_t c = 0; c < dim; ++c) {
            lo[c] = std::min(lo[c], x[c]);
            hi[c] = std::max(hi[c], x[c]);
        }
    }
    Rational width = 0;
    for (std::size_t c = 0; c < dim; ++c) width = std::max(width, hi[c] - lo[c]);
    if (width == 0) width = Rational(1, 8);

    std::vector<RVector> out;
    for (std::size_t n = 0; n < kQueryCandidates; ++n) {
        RVector p(dim);
        switch (rng.below(3)) {
            case 0: {
                Rational total = 0;
                for (const auto& x : points.points()) {
                    const Rational w(rng.range(0, bound));
                    total += w;
                    p += w * x;
                }
                if (total == 0) {
                    p = points[0];
                } else {
                    p *= 1 / total;
                }
                break;
            }
            case 1:
                for (std::size_t c = 0; c < dim; ++c) {
                    const Rational t(rng.range(-bound, 3 * bound), 2 * bound);
                    p[c] = lo[c] + t * (hi[c] - lo[c] + width / 4) - width / 8;
                }
                break;
            default: {
                p = points[rng.below(points.size())];
                for (std::size_t c = 0; c < dim; ++c) p[c] += Rational(rng.range(-bound, bound), 4 * bound) * width;
                break;
            }
        }
        out.push_back(std::move(p));
    }
    return out;
}

std::string classify_tight(bool pyramid_like, bool simplex_plus_facet) {
    if (pyramid_like && simplex_plus_facet) return "both";
    if (pyramid_like) return "pyramid-like";
    if (simplex_plus_facet) return "simplex-plus-facet";
    return "neither";
}

}  // namespace

void ExperimentConfig::validate() const {
    if (trials < 1) throw InputError("trials must be at least 1");
    if (dim < 2 || dim > 4) throw InputError("dim must lie in [2, 4]");
    if (max_normals < dim + 1) throw InputError("max_normals must be at least dim + 1 for a bounded polytope");
    if (max_points < 1) throw InputError("max_points must be positive");
    if (coordinate_bound < 1) throw InputError("coordinate_bound must be positive");
    if (scaling_depth < 1) throw InputError("scaling_depth must be positive");
}

Json to_json(const ExperimentConfig& config) {
    return Json{{"seed", config.seed},
                {"trials", config.trials},
                {"dim", config.dim},
                {"max_normals", config.max_normals},
                {"max_points", config.max_points},
                {"coordinate_bound", config.coordinate_bound},
                {"scaling_depth", config.scaling_depth}};
}

ExperimentConfig experiment_config_from_json(const Json& j) {
    if (!j.is_object()) throw InputError("experiment config must be a JSON object");
    ExperimentConfig config;
    auto read = [&](const char* key, auto& target) {
        const auto it = j.find(key);
        if (it == j.end()) return;
        if (!it->is_number_integer() || it->get<std::int64_t>() < 0) {
            throw InputError(std::string(key) + " must be a nonnegative integer");
        }
        target = it->get<std::remove_reference_t<decltype(target)>>();
    };
    read("seed", config.seed);
    read("trials", config.trials);
    read("dim", config.dim);
    read("max_normals", config.max_normals);
    read("max_points", config.max_points);
    read("coordinate_bound", config.coordinate_bound);
    read("scaling_depth", config.scaling_depth);
    for (const auto& [key, value] : j.items()) {
        static const char* known[] = {"seed", "trials", "dim", "max_normals", "max_points", "coordinate_bound",
                                      "scaling_depth"};
        if (std::none_of(std::begin(known), std::end(known), [&](const char* k) { return key == k; })) {
            throw InputError("unknown experiment config field \"" + key + "\"");
        }
    }
    return config;
}

TrialInstance random_instance(const ExperimentConfig& config, std::size_t trial_index) {
    config.validate();
    TrialRng rng(config.seed, trial_index, Stream::Instance);
    const long bound = static_cast<long>(config.coordinate_bound);
    const std::size_t dim = config.dim;

    for (std::size_t attempt = 0; attempt < kRejectionBudget; ++attempt) {
        const auto m = static_cast<std::size_t>(rng.range(static_cast<long>(dim + 1), static_cast<long>(config.max_normals)));
        std::vector<RVector> normals;
        std::vector<Rational> offsets;
        while (normals.size() < m) {
            RVector a(dim);
            for (std::size_t c = 0; c < dim; ++c) a[c] = rng.range(-bound, bound);
            if (a.is_zero()) continue;
            normals.push_back(std::move(a));
            // Positive offsets keep the origin interior.
            const long num = rng.range(1, bound);
            const long den = rng.range(1, bound);
            offsets.emplace_back(num, den);
        }
        std::optional<Polytope> body;
        try {
            body.emplace(dim, std::move(normals), std::move(offsets));
        } catch (const InputError&) {
            continue;
        }

        const auto n_points = static_cast<std::size_t>(rng.range(1, static_cast<long>(config.max_points)));
        std::vector<RVector> raw;
        for (std::size_t i = 0; i < n_points; ++i) {
            RVector x(dim);
            for (std::size_t c = 0; c < dim; ++c) x[c] = rng.rational(bound);
            raw.push_back(std::move(x));
        }
        PointSet points(dim, distinct(std::move(raw)));
        for (std::size_t halvings = 0; halvings < 64 && !fits_in_translate(*body, points); ++halvings) {
            points = points.scaled(Rational(1, 2));
        }
        if (!fits_in_translate(*body, points)) continue;
        return TrialInstance{std::move(*body), std::move(points)};
    }
    throw SamplingError("no bounded polytope with interior after " + std::to_string(kRejectionBudget) +
                        " draws (seed " + std::to_string(config.seed) + ", trial " + std::to_string(trial_index) +
                        ", dim " + std::to_string(dim) + ", max_normals " + std::to_string(config.max_normals) + ")");
}

ScalingRecord check_lower_bound_scaling(const Polytope& body, std::size_t depth) {
    return check_lower_bound_scaling(body, depth, caratheodory_number(body.normal_set()));
}

ScalingRecord check_lower_bound_scaling(const Polytope& body, std::size_t depth, const InvariantReport& invariants) {
    const NormalSet normals = body.normal_set();
    const WitnessReport witness = invariants.cone >= invariants.helly
                                      ? cone_witness_points(normals, invariants.cone_witness)
                                      : helly_witness_points(normals, invariants.helly_witness);
    ScalingRecord record;
    record.kind = witness.kind;
    record.target = witness.points.size();
    const RVector origin = RVector::zero(body.dim());
    for (std::size_t i = 0; i <= depth; ++i) {
        const Rational eps = power_of_half(i);
        const PointSet shrunk = witness.points.scaled(eps);
        ++record.tested;
        if (!fits_in_translate(body, shrunk)) continue;
        if (is_minimal_strong_witness(body, shrunk, origin)) {
            record.epsilon = eps;
            break;
        }
    }
    return record;
}

UpperBoundRecord check_upper_bounds(const Polytope& body, const PointSet& points, const RVector& p) {
    return check_upper_bounds(body, points, p, caratheodory_number(body.normal_set()));
}

UpperBoundRecord check_upper_bounds(const Polytope& body, const PointSet& points, const RVector& p,
                                    const InvariantReport& invariants) {
    UpperBoundRecord record;
    record.witness_size = minimal_strong_witness_indices(body, points, p).size();
    record.facets = body.num_facets();
    record.caratheodory = invariants.caratheodory;
    record.size_bound = std::max(invariants.caratheodory, record.facets - 1);
    record.size_bound_ok = record.witness_size <= record.size_bound;
    record.subset_bound = std::max(invariants.helly, invariants.relaxed_cone);
    record.subset_bound_ok = record.witness_size <= record.subset_bound;
    if (record.witness_size == record.facets - 1 && invariants.helly < record.facets) {
        record.tight_class =
            classify_tight(invariants.relaxed_cone >= record.facets - 1, invariants.helly >= record.facets - 1);
    }
    return record;
}

GuardRecord check_guard_lemma(const Polytope& body, const PointSet& points, const RVector& p) {
    GuardRecord record;
    record.minimal_witness = minimal_strong_witness_indices(body, points, p);
    record.guards = guard_assignment(body, points.subset(record.minimal_witness), p);
    return record;
}

Json instance_json(const Polytope& body, const PointSet& points, const RVector& query) {
    return Json{{"polytope", json_io::to_json(body)},
                {"points", json_io::to_json(points)},
                {"query", json_io::to_json(query)}};
}

TrialRecord run_trial(const ExperimentConfig& config, std::size_t trial_index, const TrialInstance& instance,
                      std::vector<Finding>& violations, std::vector<Finding>& candidates) {
    const long bound = static_cast<long>(config.coordinate_bound);
    TrialRecord record;
    record.index = trial_index;
    record.body = instance.body;
    record.points = instance.points;
    const Polytope& body = record.body;
    const PointSet& points = record.points;
    const NormalSet normals = body.normal_set();
    record.invariants = caratheodory_number(normals);

    auto report = [&](std::vector<Finding>& sink, const char* kind, std::string detail, const RVector& query) {
        sink.push_back(Finding{trial_index, kind, std::move(detail), instance_json(body, points, query)});
    };

    // conv_H X inside conv_K X, probed at every candidate; the query for the
    // upper-bound checks prefers a point of conv_K X outside conv_H X.
    TrialRng query_rng(config.seed, trial_index, Stream::Queries);
    std::optional<RVector> strong_only;
    std::optional<RVector> strong_any;
    for (auto& candidate : query_candidates(points, bound, query_rng)) {
        ++record.subset_probes;
        const bool in_h = h_hull_contains(normals, points, candidate);
        const bool in_k = strong_hull_contains(body, points, candidate);
        if (in_h && !in_k) {
            record.subset_ok = false;
            report(violations, "hull-inclusion", "point in conv_H X but not in conv_K X", candidate);
        }
        if (in_k && !in_h && !strong_only) strong_only = candidate;
        if (in_k && !strong_any) strong_any = candidate;
    }
    record.query = strong_only ? *strong_only : strong_any ? *strong_any : points[0];

    record.upper = check_upper_bounds(body, points, record.query, record.invariants);
    if (!record.upper.size_bound_ok) {
        report(violations, "size-bound",
               "minimal strong witness of size " + std::to_string(record.upper.witness_size) + " exceeds " +
                   std::to_string(record.upper.size_bound),
               record.query);
    }
    if (!record.upper.subset_bound_ok) {
        report(candidates, "subset-bound",
               "COUNTEREXAMPLE-CANDIDATE: minimal strong witness of size " +
                   std::to_string(record.upper.witness_size) + " exceeds max over subsets " +
                   std::to_string(record.upper.subset_bound),
               record.query);
    }
    if (record.upper.tight_class == "neither") {
        report(candidates, "tight-class",
               "COUNTEREXAMPLE-CANDIDATE: witness reaches |H| - 1 but H is neither pyramid-like nor a simplex "
               "with an extra facet",
               record.query);
    }

    record.guard = check_guard_lemma(body, points, record.query);
    if (!record.guard.ok()) {
        report(violations, "guard-assignment", "minimal strong witness admits no guard assignment", record.query);
    }

    // Cube equality on a translated unit cube sample.
    TrialRng cube_rng(config.seed, trial_index, Stream::Cube);
    const std::size_t dim = config.dim;
    const Polytope cube = shapes::cube(dim);
    const NormalSet cube_normals = cube.normal_set();
    RVector shift(dim);
    for (std::size_t c = 0; c < dim; ++c) shift[c] = cube_rng.range(-bound, bound);
    std::vector<RVector> raw;
    const auto n_cube = static_cast<std::size_t>(cube_rng.range(1, static_cast<long>(config.max_points)));
    for (std::size_t i = 0; i < n_cube; ++i) {
        RVector x(dim);
        for (std::size_t c = 0; c < dim; ++c) x[c] = Rational(cube_rng.range(0, bound), bound) + shift[c];
        raw.push_back(std::move(x));
    }
    record.cube_points = PointSet(dim, distinct(std::move(raw)));
    for (std::size_t n = 0; n < kCubeProbes; ++n) {
        RVector p(dim);
        for (std::size_t c = 0; c < dim; ++c) p[c] = Rational(cube_rng.range(-bound, 3 * bound), 2 * bound) + shift[c];
        ++record.cube_probes;
        if (h_hull_contains(cube_normals, record.cube_points, p) != strong_hull_contains(cube, record.cube_points, p)) {
            record.cube_ok = false;
            violations.push_back(Finding{trial_index, "cube-equality", "conv_H X and conv_K X disagree on a cube",
                                         instance_json(cube, record.cube_points, p)});
        }
    }

    record.scaling = check_lower_bound_scaling(body, config.scaling_depth, record.invariants);
    return record;
}

ExperimentReport run_suite(const ExperimentConfig& config, std::size_t workers) {
    config.validate();
    const std::size_t n = config.trials;
    std::vector<std::optional<TrialRecord>> records(n);
    std::vector<std::vector<Finding>> violations(n);
    std::vector<std::vector<Finding>> candidates(n);
    std::vector<std::exception_ptr> errors(n);

    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i = next++; i < n; i = next++) {
            try {
                records[i] = run_trial(config, i, random_instance(config, i), violations[i], candidates[i]);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
    workers = std::min(workers, n);
    if (workers <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work);
        for (auto& t : pool) t.join();
    }

    ExperimentReport report;
    report.config = config;
    for (std::size_t i = 0; i < n; ++i) {
        if (errors[i]) std::rethrow_exception(errors[i]);
        report.trials.push_back(std::move(*records[i]));
        for (auto& f : violations[i]) report.violations.push_back(std::move(f));
        for (auto& f : candidates[i]) report.counterexample_candidates.push_back(std::move(f));
    }
    return report;
}

Json to_json(const ScalingRecord& record) {
    return Json{{"kind", to_string(record.kind)},
                {"target", record.target},
                {"certified", record.certified()},
                {"epsilon", record.epsilon ? json_io::to_json(*record.epsilon) : Json(nullptr)},
                {"tested", record.tested}};
}

Json to_json(const UpperBoundRecord& record) {
    return Json{{"witness_size", record.witness_size},
                {"facets", record.facets},
                {"caratheodory", record.caratheodory},
                {"size_bound", record.size_bound},
                {"size_bound_ok", record.size_bound_ok},
                {"subset_bound", record.subset_bound},
                {"subset_bound_ok", record.subset_bound_ok},
                {"tight_class", record.tight_class.empty() ? Json(nullptr) : Json(record.tight_class)}};
}

Json to_json(const TrialRecord& record) {
    return Json{{"index", record.index},
                {"instance", instance_json(record.body, record.points, record.query)},
                {"invariants", json_io::to_json(record.invariants)},
                {"upper_bounds", to_json(record.upper)},
                {"guard", Json{{"minimal_witness", record.guard.minimal_witness},
                               {"assignment", record.guard.guards ? Json(*record.guard.guards) : Json(nullptr)}}},
                {"hull_inclusion", Json{{"probes", record.subset_probes}, {"ok", record.subset_ok}}},
                {"cube_equality", Json{{"points", json_io::to_json(record.cube_points)},
                                       {"probes", record.cube_probes},
                                       {"ok", record.cube_ok}}},
                {"scaling", to_json(record.scaling)}};
}

Json to_json(const Finding& finding) {
    return Json{{"trial", finding.trial}, {"kind", finding.kind}, {"detail", finding.detail},
                {"instance", finding.instance}};
}

Json to_json(const ExperimentReport& report) {
    Json trials = Json::array();
    std::size_t max_witness = 0;
    std::size_t certified = 0;
    std::map<std::string, std::size_t> tight;
    for (const auto& t : report.trials) {
        trials.push_back(to_json(t));
        max_witness = std::max(max_witness, t.upper.witness_size);
        if (t.scaling.certified()) ++certified;
        if (!t.upper.tight_class.empty()) ++tight[t.upper.tight_class];
    }
    Json violations = Json::array();
    for (const auto& f : report.violations) violations.push_back(to_json(f));
    Json candidates = Json::array();
    for (const auto& f : report.counterexample_candidates) candidates.push_back(to_json(f));

    Json summary{{"trials", report.trials.size()},
                 {"violations", report.violations.size()},
                 {"counterexample_candidates", report.counterexample_candidates.size()},
                 {"max_witness_size", max_witness},
                 {"scaling_certified", certified},
                 {"scaling_inconclusive", report.trials.size() - certified},
                 {"tight_instances", tight}};
    return Json{{"tool_version", kToolVersion},
                {"config", to_json(report.config)},
                {"trials", std::move(trials)},
                {"violations", std::move(violations)},
                {"counterexample_candidates", std::move(candidates)},
                {"summary", std::move(summary)}};
}

}  // namespace hcara
