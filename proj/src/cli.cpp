#include "hcara/cli.hpp"

#include "hcara/errors.hpp"
#include "hcara/experiment.hpp"
#include "hcara/json_io.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <ostream>
#include <sstream>

namespace hcara::cli {
namespace {

using json_io::Json;

std::string join(const IndexSet& indices) {
    std::string out = "[";
    for (std::size_t i = 0; i < indices.size(); ++i) {
        if (i > 0) out += ", ";
        out += std::to_string(indices[i]);
    }
    return out + "]";
}

void print_witness_summary(std::ostream& out, const WitnessReport& report) {
    out << "kind " << to_string(report.kind) << "\n";
    out << "normals_used " << join(report.normals_used) << "\n";
    for (const auto& x : report.points.points()) out << "point " << to_string(x) << "\n";
    out << "covering_ok " << (report.covering_ok ? "true" : "false") << "\n";
    out << "drop_one_ok " << (report.drop_one_ok ? "true" : "false") << "\n";
    out << "assignment " << (report.assignment ? join(report.assignment->normal_of_point) : "none") << "\n";
    out << "valid " << (report.valid() ? "true" : "false") << "\n";
}

struct Options {
    bool json = false;
    std::string normals_path;
    std::string points_path;
    std::string point_text;
    std::string kind = "cone";
    std::string config_path;
    std::string out_path;
    std::optional<std::uint64_t> seed;
    std::optional<std::size_t> trials;
    std::optional<std::size_t> depth;
};

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, bool serial) {
    CLI::App app{"Carathéodory, Helly and cone numbers for H-convexity and strong convexity", "hcara"};
    app.require_subcommand(1, 1);
    Options opt;

    auto add_json = [&](CLI::App* sub) { sub->add_flag("--json", opt.json, "Emit the raw JSON document"); };

    auto* helly = app.add_subcommand("helly", "Helly number of a normal set");
    helly->add_option("normals", opt.normals_path, "NormalSet JSON")->required();
    add_json(helly);

    auto* cone = app.add_subcommand("cone", "Cone number of a normal set");
    cone->add_option("normals", opt.normals_path, "NormalSet JSON")->required();
    add_json(cone);

    auto* cara = app.add_subcommand("cara", "Carathéodory number with Helly and cone witnesses");
    cara->add_option("normals", opt.normals_path, "NormalSet JSON")->required();
    add_json(cara);

    auto* h_member = app.add_subcommand("h-member", "Is a point in the H-convex hull of X?");
    h_member->add_option("normals", opt.normals_path, "NormalSet JSON")->required();
    h_member->add_option("points", opt.points_path, "PointSet JSON")->required();
    h_member->add_option("--point", opt.point_text, "Comma-separated rationals, e.g. 1/2,-3")->required();
    add_json(h_member);

    auto* strong_member = app.add_subcommand("strong-member", "Is a point in the K-strongly convex hull of X?");
    strong_member->add_option("polytope", opt.normals_path, "Polytope JSON")->required();
    strong_member->add_option("points", opt.points_path, "PointSet JSON")->required();
    strong_member->add_option("--point", opt.point_text, "Comma-separated rationals, e.g. 1/2,-3")->required();
    add_json(strong_member);

    auto* witness = app.add_subcommand("witness", "Extremal point set realizing the Helly or cone number");
    witness->add_option("--kind", opt.kind, "helly or cone")->check(CLI::IsMember({"helly", "cone"}));
    witness->add_option("normals", opt.normals_path, "NormalSet JSON")->required();
    add_json(witness);

    auto* validate = app.add_subcommand("validate", "Check covering and drop-one minimality of X for 0");
    validate->add_option("normals", opt.normals_path, "NormalSet JSON")->required();
    validate->add_option("points", opt.points_path, "PointSet JSON")->required();
    add_json(validate);

    auto* experiment = app.add_subcommand("experiment", "Seeded property and counterexample search");
    experiment->add_option("--config", opt.config_path, "ExperimentConfig JSON (defaults when omitted)");
    experiment->add_option("--seed", opt.seed, "Override the seed");
    experiment->add_option("--trials", opt.trials, "Override the number of trials");
    experiment->add_option("--depth", opt.depth, "Override the scaling depth");
    experiment->add_option("--out", opt.out_path, "Also write the JSON report to this file");
    add_json(experiment);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kSuccess;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kSuccess;
    } catch (const CLI::ParseError& e) {
        err << "hcara: " << e.what() << "\n";
        return kInputError;
    }

    try {
        if (helly->parsed() || cone->parsed()) {
            const NormalSet normals = json_io::normal_set_from_json(json_io::load_file(opt.normals_path));
            const bool is_helly = helly->parsed();
            const SizedWitness result = is_helly ? helly_number(normals) : cone_number(normals);
            const char* name = is_helly ? "helly" : "cone";
            if (opt.json) {
                out << Json{{name, result.size}, {std::string(name) + "_witness", result.witness}}.dump(2) << "\n";
            } else {
                out << name << " " << result.size << " witness " << join(result.witness) << "\n";
            }
        } else if (cara->parsed()) {
            const NormalSet normals = json_io::normal_set_from_json(json_io::load_file(opt.normals_path));
            if (normals.empty()) throw InputError("normal set is empty");
            const InvariantReport report = caratheodory_number(normals);
            if (opt.json) {
                out << json_io::to_json(report).dump(2) << "\n";
            } else {
                out << "helly " << report.helly << " witness " << join(report.helly_witness) << "\n"
                    << "cone " << report.cone << " witness " << join(report.cone_witness) << "\n"
                    << "relaxed_cone " << report.relaxed_cone << "\n"
                    << "one_sided " << (report.one_sided ? "true" : "false") << "\n"
                    << "caratheodory " << report.caratheodory << "\n";
            }
        } else if (h_member->parsed() || strong_member->parsed()) {
            const PointSet points = json_io::point_set_from_json(json_io::load_file(opt.points_path));
            const RVector p = parse_point(opt.point_text);
            bool member = false;
            if (h_member->parsed()) {
                const NormalSet normals = json_io::normal_set_from_json(json_io::load_file(opt.normals_path));
                member = h_hull_contains(normals, points, p);
            } else {
                const Polytope body = json_io::polytope_from_json(json_io::load_file(opt.normals_path));
                member = strong_hull_contains(body, points, p);
            }
            if (opt.json) {
                out << Json{{"member", member}}.dump(2) << "\n";
            } else {
                out << (member ? "true" : "false") << "\n";
            }
        } else if (witness->parsed()) {
            const NormalSet normals = json_io::normal_set_from_json(json_io::load_file(opt.normals_path));
            if (normals.empty()) throw InputError("normal set is empty");
            WitnessReport report;
            if (opt.kind == "helly") {
                const auto helly_result = helly_number(normals);
                if (helly_result.size == 0) throw PreconditionError("H is one-sided; it has no Helly witness");
                report = helly_witness_points(normals, helly_result.witness);
            } else {
                report = cone_witness_points(normals, cone_number(normals).witness);
            }
            if (opt.json) {
                out << json_io::to_json(report).dump(2) << "\n";
            } else {
                print_witness_summary(out, report);
            }
        } else if (validate->parsed()) {
            const NormalSet normals = json_io::normal_set_from_json(json_io::load_file(opt.normals_path));
            const PointSet points = json_io::point_set_from_json(json_io::load_file(opt.points_path));
            const WitnessReport report = validate_witness(normals, points);
            if (opt.json) {
                out << json_io::to_json(report).dump(2) << "\n";
            } else {
                print_witness_summary(out, report);
            }
        } else if (experiment->parsed()) {
            ExperimentConfig config;
            if (!opt.config_path.empty()) config = experiment_config_from_json(json_io::load_file(opt.config_path));
            if (opt.seed) config.seed = *opt.seed;
            if (opt.trials) config.trials = *opt.trials;
            if (opt.depth) config.scaling_depth = *opt.depth;
            const ExperimentReport report = run_suite(config, serial ? 1 : 0);
            const Json doc = to_json(report);
            if (!opt.out_path.empty()) {
                std::ofstream file(opt.out_path);
                file << doc.dump(2) << "\n";
                if (!file) throw InputError("cannot write report to '" + opt.out_path + "'");
            }
            if (opt.json) {
                out << doc.dump(2) << "\n";
            } else {
                const Json& s = doc["summary"];
                out << kToolVersion << "\n";
                out << "seed " << config.seed << " trials " << config.trials << " dim " << config.dim << "\n";
                for (const auto& [key, value] : s.items()) out << key << " " << value.dump() << "\n";
                for (const auto& f : report.violations) {
                    out << "VIOLATION trial " << f.trial << " " << f.kind << ": " << f.detail << "\n";
                }
                for (const auto& f : report.counterexample_candidates) {
                    out << "COUNTEREXAMPLE-CANDIDATE trial " << f.trial << " " << f.kind << ": " << f.detail << "\n";
                }
            }
            if (!report.clean()) return kViolation;
        }
    } catch (const InputError& e) {
        err << "hcara: input error: " << e.what() << "\n";
        return kInputError;
    } catch (const SamplingError& e) {
        err << "hcara: sampling error: " << e.what() << "\n";
        return kInputError;
    } catch (const PreconditionError& e) {
        err << "hcara: precondition error: " << e.what() << "\n";
        return kPreconditionError;
    } catch (const InternalError& e) {
        err << "hcara: internal error: " << e.what() << "\n";
        return kInternalError;
    }
    return kSuccess;
}

}  // namespace hcara::cli
