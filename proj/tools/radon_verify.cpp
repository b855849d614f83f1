// radon-verify: run the verification suites and emit operator matrices.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "radon/radon.hpp"
#include "radon/suite.hpp"

namespace {

using namespace radon;
using radon::verify::Family;

constexpr const char* kCorpusVariable = "RADON_CORPUS";

void emit(const std::string& text, const std::string& path) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
    out << text;
    if (!out) throw std::runtime_error("write to '" + path + "' failed");
}

std::vector<std::string> corpus(const std::vector<std::string>& groups) {
    if (!groups.empty()) return groups;
    if (const char* env = std::getenv(kCorpusVariable); env && *env) return parse_corpus(env);
    return default_corpus();
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::string report_csv(const verify::SuiteResult& r) {
    std::string out = "case,group,family,L,H,K,convention,claim,status,asserted,holds,residual,detail\n";
    for (const auto& c : r.cases)
        for (const auto& claim : c.claims) {
            const std::string holds = claim.holds ? (*claim.holds ? "true" : "false") : "";
            out += csv_field(c.id.label()) + ',' + csv_field(c.id.group) + ',' + std::string(to_string(c.id.family)) +
                   ',' + csv_field(c.id.l) + ',' + csv_field(c.id.h) + ',' + csv_field(c.id.k) + ',' +
                   c.id.convention + ',' + claim.name + ',' + std::string(to_string(claim.status)) + ',' +
                   (claim.asserted ? "true" : "false") + ',' + holds + ',' + csv_field(claim.residual) + ',' +
                   csv_field(claim.detail) + '\n';
        }
    return out;
}

std::string format_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

struct Common {
    std::string format = "json";
    std::string out;
    std::string convention = "counting";
};

void add_common(CLI::App* app, Common& c, const char* format_help = "Output format (default json)") {
    app->add_option("--format", c.format, format_help)->check(CLI::IsMember({"json", "csv"}));
    app->add_option("--out", c.out, "Output path (default stdout)");
}

Subgroup require_subgroup(const GroupPtr& g, const std::string& text, const char* role) {
    if (text.empty()) throw ValidationError(std::string("--subgroup-") + role + " is required for this operator");
    return verify::parse_subgroup(g, text);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Radon transforms on finite coset spaces: verification and operator matrices"};
    app.require_subcommand(1);

    Common common;
    std::vector<std::string> groups;
    std::vector<std::string> families;
    std::string sub_l, sub_h, sub_k;
    std::uint64_t seed = 1;
    std::size_t random_functions = 100;
    bool timing = false;

    auto* verify_cmd = app.add_subcommand("verify", "Run claim families and write a report");
    verify_cmd->add_option("--group", groups, "Group name, JSON file or inline JSON (repeatable)");
    verify_cmd->add_option("--family", families, "Claim family (repeatable; default all)")
        ->check(CLI::IsMember({"measures", "projections", "radon-nested", "radon-general", "algebra", "transport",
                               "example"}));
    verify_cmd->add_option("--subgroup-L", sub_l, "Explicit L: e | G | gen:a,b | a,b,...");
    verify_cmd->add_option("--subgroup-H", sub_h, "Explicit H");
    verify_cmd->add_option("--subgroup-K", sub_k, "Explicit K");
    verify_cmd->add_option("--convention", common.convention, "Haar convention on subgroups")
        ->check(CLI::IsMember({"counting", "normalized"}));
    verify_cmd->add_option("--seed", seed, "Seed for random rational test functions");
    verify_cmd->add_option("--random-functions", random_functions, "Random functions per randomized claim");
    verify_cmd->add_flag("--timing", timing, "Include per-case wall time (makes output nondeterministic)");
    add_common(verify_cmd, common);

    std::string op = "radon-nested";
    std::string group_name;
    auto* matrix_cmd = app.add_subcommand("matrix", "Emit the matrix of an operator");
    matrix_cmd->add_option("--op", op, "Operator")
        ->check(CLI::IsMember({"radon-nested", "radon-dual-nested", "radon-general", "radon-dual-general",
                               "project-PH", "project-TH", "tau", "transport-T"}));
    matrix_cmd->add_option("--group", group_name, "Group name, JSON file or inline JSON")->required();
    matrix_cmd->add_option("--subgroup-L", sub_l, "L for nested operators");
    matrix_cmd->add_option("--subgroup-H", sub_h, "H");
    matrix_cmd->add_option("--subgroup-K", sub_k, "K for general operators and transport");
    matrix_cmd->add_option("--convention", common.convention,
                           "Fiber measure for Radon operators, Haar measure on H for projections (default normalized "
                           "for Radon operators, counting for projections)")
        ->check(CLI::IsMember({"counting", "normalized"}));
    add_common(matrix_cmd, common);

    std::size_t radii = 100, angles = 8;
    double tolerance = 1e-12;
    auto* example_cmd = app.add_subcommand("example", "Evaluate the circle-group example on a polar grid");
    example_cmd->add_option("--radii", radii, "Number of log-spaced radii in [0.01, 2]");
    example_cmd->add_option("--angles", angles, "Number of equally spaced angles");
    example_cmd->add_option("--tolerance", tolerance, "Maximum allowed |R f - f|");
    add_common(example_cmd, common, "Output format (default csv)");

    bool with_subgroups = false;
    auto* groups_cmd = app.add_subcommand("groups", "Describe the corpus groups");
    groups_cmd->add_option("--group", groups, "Group (repeatable; default corpus)");
    groups_cmd->add_flag("--subgroups", with_subgroups, "List every subgroup");
    add_common(groups_cmd, common);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        if (*verify_cmd) {
            verify::SuiteConfig cfg;
            cfg.groups = corpus(groups);
            if (!families.empty()) {
                cfg.families.clear();
                for (const auto& f : families) cfg.families.push_back(verify::parse_family(f));
            }
            if (!sub_l.empty()) cfg.subgroup_l = sub_l;
            if (!sub_h.empty()) cfg.subgroup_h = sub_h;
            if (!sub_k.empty()) cfg.subgroup_k = sub_k;
            cfg.convention = parse_convention(common.convention);
            cfg.seed = seed;
            cfg.random_functions = random_functions;
            cfg.timing = timing;
            const auto result = verify::run_suite(cfg);
            emit(common.format == "csv" ? report_csv(result) : result.json_text(), common.out);
            return result.any_failure() ? 1 : 0;
        }

        if (*matrix_cmd) {
            const GroupPtr g = share(load_group(group_name));
            const bool radon_op = op.rfind("radon", 0) == 0;
            const bool convention_given = matrix_cmd->count("--convention") > 0;
            const HaarConvention conv =
                convention_given ? parse_convention(common.convention)
                                 : (radon_op ? HaarConvention::normalized : HaarConvention::counting);
            OperatorDescription desc = NestedRadonDualOp{Subgroup::trivial(g), Subgroup::trivial(g)};
            auto witness = [&] {
                const Subgroup k = require_subgroup(g, sub_k, "K"), h = require_subgroup(g, sub_h, "H");
                auto w = ConjugacyWitness::find(k, h);
                if (!w) throw PreconditionError("K " + k.label() + " and H " + h.label() + " are not conjugate");
                return *w;
            };
            if (op == "radon-nested")
                desc = NestedRadonOp{require_subgroup(g, sub_l, "L"), require_subgroup(g, sub_h, "H"), conv};
            else if (op == "radon-dual-nested")
                desc = NestedRadonDualOp{require_subgroup(g, sub_l, "L"), require_subgroup(g, sub_h, "H")};
            else if (op == "radon-general")
                desc = GeneralRadonOp{require_subgroup(g, sub_k, "K"), require_subgroup(g, sub_h, "H"), conv};
            else if (op == "radon-dual-general")
                desc = GeneralRadonDualOp{require_subgroup(g, sub_k, "K"), require_subgroup(g, sub_h, "H"), conv};
            else if (op == "project-PH")
                desc = ProjectionPOp{require_subgroup(g, sub_h, "H"), conv};
            else if (op == "project-TH")
                desc = ProjectionTOp{RhoFunction::constant(require_subgroup(g, sub_h, "H")), conv};
            else if (op == "tau")
                desc = TauOp{witness()};
            else
                desc = TransportOp{witness()};
            const OperatorMatrix m = operator_matrix(desc);
            emit(common.format == "csv" ? to_csv(m) : to_json(m).dump(2) + "\n", common.out);
            return 0;
        }

        if (*example_cmd) {
            const auto grid = circle::standard_grid(radii, angles);
            const auto report = circle::verify_example(grid, tolerance);
            std::string text;
            if (common.format == "csv" || example_cmd->count("--format") == 0) {
                text = "r,angle,f,Rf,deviation\n";
                for (const auto& row : report.rows)
                    text += format_double(row.r) + ',' + format_double(row.angle) + ',' + format_double(row.f) + ',' +
                            format_double(row.rf) + ',' + format_double(row.deviation) + '\n';
            } else {
                json rows = json::array();
                for (const auto& row : report.rows)
                    rows.push_back({{"r", row.r}, {"angle", row.angle}, {"f", row.f}, {"Rf", row.rf},
                                    {"deviation", row.deviation}});
                text = json{{"rows", rows},
                            {"max_deviation", report.max_deviation},
                            {"max_invariance_deviation", report.max_invariance_deviation},
                            {"tolerance", report.tolerance},
                            {"passed", report.passed}}
                           .dump(2) +
                       "\n";
            }
            emit(text, common.out);
            if (!report.passed)
                std::cerr << "example: max deviation " << format_double(report.max_deviation) << " exceeds tolerance\n";
            return report.passed ? 0 : 1;
        }

        if (*groups_cmd) {
            std::string text;
            json out = json::array();
            if (common.format == "csv") text = "group,order,subgroups,nested_pairs,conjugate_pairs\n";
            for (const auto& source : corpus(groups)) {
                const GroupPtr g = share(load_group(source));
                const auto subs = all_subgroups(g);
                std::size_t nested = 0, conjugate = 0;
                for (const auto& h : subs)
                    for (const auto& l : subs) {
                        if (l.is_subset_of(h)) ++nested;
                        if (find_conjugator(l, h)) ++conjugate;
                    }
                if (common.format == "csv") {
                    text += g->name() + ',' + std::to_string(g->order()) + ',' + std::to_string(subs.size()) + ',' +
                            std::to_string(nested) + ',' + std::to_string(conjugate) + '\n';
                    continue;
                }
                json entry{{"group", g->name()},
                           {"order", g->order()},
                           {"subgroups", subs.size()},
                           {"nested_pairs", nested},
                           {"conjugate_pairs", conjugate}};
                if (with_subgroups) {
                    json list = json::array();
                    for (const auto& s : subs) list.push_back(s.elements());
                    entry["subgroup_elements"] = list;
                    entry["table"] = g->table();
                }
                out.push_back(entry);
            }
            emit(common.format == "csv" ? text : out.dump(2) + "\n", common.out);
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "radon-verify: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
