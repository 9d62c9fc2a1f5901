// sqfree: build Cartesian square-free evaluation codes and compute their
// generalized Hamming weights by exact search, footprint/shadow bounds, and
// closed formulas, with machine-readable reports.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "sqfree/cartesian.hpp"
#include "sqfree/formulas.hpp"
#include "sqfree/ghw.hpp"
#include "sqfree/projective.hpp"
#include "sqfree/report.hpp"
#include "sqfree/verify.hpp"

using namespace sqfree;

namespace {

struct CommonOpts {
    std::string format = "table";
    std::string out_path;
    unsigned jobs = 0;  // 0: env SQFREE_JOBS or 1
    std::uint64_t seed = 1;
    std::uint64_t subspace_cap = 10'000'000;
    std::uint64_t subset_budget = 4'000'000'000ull;
    double time_limit = 0;
    bool timings = false;
};

struct CodeOpts {
    unsigned q = 0;
    int m = 0;
    int d = 1;
    bool leq = false;  // build C_{<=d} instead of C_d
    std::string preset;
    std::string sets;
    int r = 0;           // 0: full hierarchy
    std::string method = "exact-subspace";
    bool extended = false;
    bool print_generator = false;
};

void add_common(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--format", o.format, "Output format: table, json, csv")
        ->check(CLI::IsMember({"table", "json", "csv"}));
    cmd->add_option("--out", o.out_path, "Write the report to a file instead of stdout");
    cmd->add_option("--jobs", o.jobs, "Worker threads (default: env SQFREE_JOBS or 1)");
    cmd->add_option("--seed", o.seed, "Seed for randomized suites");
    cmd->add_option("--subspace-cap", o.subspace_cap, "Max subspaces for exact-subspace search");
    cmd->add_option("--subset-budget", o.subset_budget, "Node budget for subset searches");
    cmd->add_option("--time-limit", o.time_limit, "Soft time limit in seconds for long searches");
    cmd->add_flag("--timings", o.timings, "Include wall-clock time in reports");
}

void add_code_opts(CLI::App* cmd, CodeOpts& o, bool with_method) {
    cmd->add_option("--q", o.q, "Field order (prime power)")->required();
    cmd->add_option("--m", o.m, "Number of variables / projective dimension");
    cmd->add_option("--d", o.d, "Degree");
    cmd->add_flag("--leq", o.leq, "Use all monomials of degree <= d instead of exactly d");
    cmd->add_option("--preset", o.preset,
                    "Point set preset: affine, affine-punctured, torus, projective")
        ->check(CLI::IsMember({"affine", "affine-punctured", "torus", "projective"}));
    cmd->add_option("--sets", o.sets,
                    "Explicit factors, e.g. \"0,1;0,1,2;0,1,2,3\" (overrides --preset)");
    if (with_method) {
        cmd->add_option("--r", o.r, "Single r (default: full hierarchy)");
        cmd->add_option("--method", o.method,
                        "exact-subspace, exact-support, footprint, formula, duality, all")
            ->check(CLI::IsMember({"exact-subspace", "exact-support", "footprint", "formula",
                                   "duality", "all"}));
        cmd->add_flag("--extended", o.extended,
                      "Allow long-running exact reproductions (hours-scale budgets)");
    } else {
        cmd->add_flag("--print-generator", o.print_generator, "Include the generator matrix");
    }
}

unsigned resolve_jobs(unsigned requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("SQFREE_JOBS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v > 0) return static_cast<unsigned>(v);
    }
    return 1;
}

GhwOptions make_ghw_options(const CommonOpts& c) {
    GhwOptions opt;
    opt.subspace_cap = c.subspace_cap;
    opt.support_node_budget = c.subset_budget;
    opt.jobs = resolve_jobs(c.jobs);
    opt.time_limit_sec = c.time_limit;
    return opt;
}

// Either a Cartesian set or an explicit point list, plus the variable count.
struct Domain {
    std::optional<CartesianSet> cart;
    std::optional<PointSet> pts;
    int m = 0;
    bool projective = false;

    bool has_zero_everywhere() const {
        if (!cart) return false;
        for (int i = 0; i < cart->m(); ++i)
            if (!cart->has_zero(i)) return false;
        return true;
    }
    std::vector<unsigned> sizes() const {
        if (cart) return cart->sizes();
        throw BadArgs("this point set is not a Cartesian product");
    }
};

Domain make_domain(const FieldPtr& f, const CodeOpts& o) {
    Domain dom;
    if (!o.sets.empty()) {
        dom.cart = parse_cartesian(f, o.sets);
        dom.m = dom.cart->m();
        return dom;
    }
    if (o.preset.empty()) throw BadPreset("need --preset or --sets");
    if (o.m < 1) throw BadArgs("need --m >= 1");
    if (o.preset == "affine") {
        dom.cart = preset_affine(f, o.m);
        dom.m = o.m;
    } else if (o.preset == "torus") {
        dom.cart = preset_torus(f, o.m);
        dom.m = o.m;
    } else if (o.preset == "affine-punctured") {
        dom.pts = preset_affine_punctured(f, o.m);
        dom.m = o.m;
    } else if (o.preset == "projective") {
        auto frame = representatives(f, o.m);
        PointSet ps;
        ps.field = f;
        ps.m = o.m + 1;
        ps.pts = std::move(frame.reps);
        dom.pts = std::move(ps);
        dom.m = o.m + 1;
        dom.projective = true;
    } else {
        throw BadPreset("unknown preset");
    }
    return dom;
}

EvaluationCode build_domain_code(const Domain& dom, int d, bool homogeneous) {
    if (dom.cart) return build_code(*dom.cart, d, homogeneous);
    return build_code(*dom.pts, d, homogeneous);
}

int emit(const ReportDocument& doc, const CommonOpts& c) {
    std::string text;
    if (c.format == "json")
        text = to_json(doc).dump(2) + "\n";
    else if (c.format == "csv")
        text = to_csv(doc);
    else
        text = to_table(doc);
    if (!c.out_path.empty()) {
        std::ofstream out(c.out_path, std::ios::binary);
        if (!out) throw BadArgs("cannot open output file: " + c.out_path);
        out << text;
    } else {
        std::cout << text;
    }
    return 0;
}

Json config_echo(const CommonOpts& c, const CodeOpts& o, const std::string& command) {
    // Execution knobs that only affect wall time (jobs) or presentation stay
    // out of the echo so reports are byte-identical across worker counts.
    Json cfg{{"command", command}, {"seed", c.seed}};
    if (o.q) cfg["q"] = o.q;
    if (o.m) cfg["m"] = o.m;
    cfg["d"] = o.d;
    cfg["homogeneous"] = !o.leq;
    if (!o.preset.empty()) cfg["preset"] = o.preset;
    if (!o.sets.empty()) cfg["sets"] = o.sets;
    if (o.r) cfg["r"] = o.r;
    cfg["method"] = o.method;
    return cfg;
}

// ---- subcommand: code ----

int cmd_code(const CommonOpts& c, const CodeOpts& o) {
    auto f = Field::make(o.q);
    auto dom = make_domain(f, o);
    auto code = build_domain_code(dom, o.d, !o.leq);

    ReportDocument doc;
    doc.config = config_echo(c, o, "code");
    Json summary{{"n", code.length()}, {"k", code.dimension()}};
    if (o.print_generator) {
        Json rows = Json::array();
        for (std::size_t i = 0; i < code.generator.rows(); ++i) {
            Json row = Json::array();
            for (std::size_t j = 0; j < code.generator.cols(); ++j)
                row.push_back(static_cast<unsigned>(code.generator(i, j)));
            rows.push_back(std::move(row));
        }
        summary["generator"] = std::move(rows);
        Json monos = Json::array();
        for (const auto& mono : code.monomials) monos.push_back(mono.to_string());
        summary["monomials"] = std::move(monos);
    }
    doc.code_summary = std::move(summary);

    const auto dims = code_dimensions(dom.m, o.d);
    const BigInt expected = dom.projective ? dims.projective
                            : o.leq        ? dims.up_to_degree
                                           : dims.homogeneous;
    std::ostringstream detail;
    detail << "n=" << code.length() << " k=" << code.dimension() << " expected k=" << expected;
    doc.checks.push_back(
        {"dimension_rank", BigInt(code.dimension()) == expected, detail.str()});
    return emit(doc, c);
}

// ---- subcommand: ghw ----

struct MethodRun {
    std::string method;
    WeightHierarchyReport report;
    bool exact_everywhere = true;  // values are true weights, not just bounds
};

int cmd_ghw(const CommonOpts& c, const CodeOpts& o) {
    auto f = Field::make(o.q);
    auto dom = make_domain(f, o);
    const bool homogeneous = !o.leq;
    auto opt = make_ghw_options(c);
    if (o.extended)
        opt.support_node_budget = std::max(opt.support_node_budget, 200'000'000'000ull);
    FootprintOptions fopt;
    fopt.jobs = opt.jobs;
    fopt.subset_budget = c.subset_budget;

    auto code = build_domain_code(dom, o.d, homogeneous);

    std::vector<std::string> methods;
    if (o.method == "all") {
        methods = {"exact-subspace", "exact-support", "footprint", "formula", "duality"};
    } else {
        methods = {o.method};
    }

    ReportDocument doc;
    doc.config = config_echo(c, o, "ghw");
    bool budget_hit = false;

    std::vector<MethodRun> runs;
    for (const auto& name : methods) {
        try {
            MethodRun run;
            run.method = name;
            if (name == "exact-subspace") {
                if (o.r) {
                    auto v = ghw_by_subspace_search(code.generator, o.r, opt);
                    run.report.length = code.length();
                    run.report.dimension = code.dimension();
                    run.report.records.push_back({o.r, BigInt(v.value), v.method, true,
                                                  std::move(v.witness), std::nullopt});
                } else {
                    run.report = weight_hierarchy(code.generator, GhwMethod::ExactSubspace, opt);
                }
            } else if (name == "exact-support") {
                if (o.r) {
                    auto v = ghw_by_support_search(code.generator, o.r, opt);
                    run.report.length = code.length();
                    run.report.dimension = code.dimension();
                    run.report.records.push_back({o.r, BigInt(v.value), v.method, true,
                                                  std::move(v.witness), std::nullopt});
                } else {
                    run.report = weight_hierarchy(code.generator, GhwMethod::ExactSupport, opt);
                }
            } else if (name == "duality") {
                run.report = weight_hierarchy(code.generator, GhwMethod::Duality, opt);
                if (o.r) {
                    auto& recs = run.report.records;
                    recs.erase(recs.begin(), recs.begin() + (o.r - 1));
                    recs.resize(1);
                }
            } else if (name == "footprint") {
                if (!dom.cart) throw BadArgs("footprint needs a Cartesian domain");
                if (o.r) {
                    auto fp = footprint_bound(dom.sizes(), o.d, o.r, homogeneous, fopt);
                    if (!fp.complete) budget_hit = true;
                    const bool exact = !homogeneous || dom.has_zero_everywhere();
                    run.report.length = code.length();
                    run.report.dimension = code.dimension();
                    run.report.records.push_back({o.r, fp.value, GhwMethod::Footprint, exact,
                                                  std::nullopt, std::move(fp.witness)});
                } else {
                    run.report = weight_hierarchy_footprint(*dom.cart, o.d, homogeneous, fopt);
                }
                run.exact_everywhere =
                    !run.report.records.empty() && run.report.records.front().exact;
            } else if (name == "formula") {
                if (!dom.cart) throw BadArgs("formula needs a Cartesian domain");
                run.report = weight_hierarchy_formula(dom.sizes(), o.d, homogeneous,
                                                      dom.has_zero_everywhere());
                if (o.r) {
                    if (o.r > static_cast<int>(run.report.records.size()))
                        throw BadRange(
                            "r outside the proven formula range; use footprint or exact methods");
                    auto rec = std::move(run.report.records[o.r - 1]);
                    run.report.records.clear();
                    run.report.records.push_back(std::move(rec));
                }
                run.exact_everywhere = true;
                for (const auto& rec : run.report.records)
                    run.exact_everywhere = run.exact_everywhere && rec.exact;
            }
            runs.push_back(std::move(run));
        } catch (const ResourceError& e) {
            if (o.method != "all") throw;
            // under "all", note the skipped method and move on
            doc.checks.push_back({"method " + name, true,
                                  std::string("skipped (") + e.what() + ")"});
        } catch (const ValidationError& e) {
            if (o.method != "all") throw;
            doc.checks.push_back({"method " + name, true,
                                  std::string("not applicable (") + e.what() + ")"});
        }
    }

    // cross-check: every method that claims exactness must agree per r
    bool disagreement = false;
    std::ostringstream disagree_detail;
    for (const auto& run : runs) {
        for (const auto& rec : run.report.records) {
            if (!rec.exact) continue;
            for (const auto& other : runs) {
                for (const auto& orec : other.report.records) {
                    if (orec.r != rec.r || !orec.exact) continue;
                    if (orec.value != rec.value) {
                        disagreement = true;
                        disagree_detail << "r=" << rec.r << ": " << run.method << "="
                                        << rec.value.str() << " vs " << other.method << "="
                                        << orec.value.str() << "; ";
                    }
                }
            }
        }
    }

    for (const auto& run : runs)
        for (auto& row : hierarchy_rows(run.report)) doc.rows.push_back(std::move(row));
    if (o.method == "all")
        doc.checks.push_back({"methods_agree", !disagreement,
                              disagreement ? disagree_detail.str() : "all exact methods agree"});

    const int rc = emit(doc, c);
    if (disagreement) {
        std::cerr << "method disagreement: " << disagree_detail.str() << "\n";
        return 4;
    }
    if (budget_hit) return 3;
    return rc;
}

// ---- subcommand: verify ----

int cmd_verify(const CommonOpts& c, std::vector<std::string> suites, int trials, unsigned q_min,
               unsigned q_max, int m_min, int m_max) {
    auto opt = make_ghw_options(c);
    std::vector<CheckOutcome> outcomes;
    if (std::find(suites.begin(), suites.end(), "sharpness") != suites.end() &&
        !(q_min == 0 && q_max == 0)) {
        outcomes.push_back(suite_sharpness(q_min ? q_min : 2, q_max ? q_max : 4,
                                           m_min ? m_min : 2, m_max ? m_max : 3, opt));
        suites.erase(std::remove(suites.begin(), suites.end(), "sharpness"), suites.end());
    }
    auto rest = run_suites(suites, c.seed, trials, opt);
    outcomes.insert(outcomes.end(), rest.begin(), rest.end());

    ReportDocument doc;
    doc.config = Json{{"command", "verify"}, {"seed", c.seed}, {"trials", trials}};
    bool all_pass = true;
    for (auto& oc : outcomes) {
        doc.checks.push_back({oc.name, oc.pass, oc.detail});
        all_pass = all_pass && oc.pass;
    }
    const int rc = emit(doc, c);
    if (!all_pass) return 4;
    return rc;
}

// ---- subcommand: table ----

int cmd_table(const CommonOpts& c, const std::string& family, std::vector<unsigned> qs, int m_max) {
    auto opt = make_ghw_options(c);
    FootprintOptions fopt;
    fopt.jobs = opt.jobs;

    ReportDocument doc;
    doc.config = Json{{"command", "table"}, {"family", family}, {"q", qs}, {"m_max", m_max}};

    if (family == "cartesian") {
        doc.table_columns = {"q", "m", "d", "r", "n", "k", "exact", "footprint", "formula",
                             "agree"};
        for (unsigned q : qs) {
            auto f = Field::make(q);
            for (int m = 2; m <= m_max; ++m) {
                auto grid = preset_affine(f, m);
                for (int d = 1; d <= m; ++d) {
                    auto code = build_code(grid, d, true);
                    for (int r = 1; r <= static_cast<int>(code.dimension()); ++r) {
                        std::vector<std::string> row{
                            std::to_string(q),      std::to_string(m),
                            std::to_string(d),      std::to_string(r),
                            std::to_string(code.length()), std::to_string(code.dimension())};
                        std::string exact, footprint, formula;
                        try {
                            exact = std::to_string(
                                ghw_by_subspace_search(code.generator, r, opt).value);
                        } catch (const ResourceError&) {
                        }
                        auto fp = footprint_bound(grid.sizes(), d, r, true, fopt);
                        footprint = fp.value.str();
                        if (r <= m + 1 - d)
                            formula = ghw_formula_homogeneous(grid.sizes(), d, r).value.str();
                        bool agree = true;
                        if (!exact.empty() && exact != footprint) agree = false;
                        if (!formula.empty() && formula != footprint) agree = false;
                        row.push_back(exact);
                        row.push_back(footprint);
                        row.push_back(formula);
                        row.push_back(agree ? "true" : "false");
                        doc.table.push_back(std::move(row));
                    }
                }
            }
        }
    } else if (family == "projective") {
        doc.table_columns = {"q",          "m",      "d",           "r",
                             "n_affine",   "n_proj", "affine",      "projective",
                             "formula",    "scale_agree"};
        for (unsigned q : qs) {
            auto f = Field::make(q);
            for (int m = 1; m <= m_max; ++m) {
                for (int d = 1; d <= m + 1; ++d) {
                    auto proj = build_projective_code(f, m, d);
                    auto punct = build_code(preset_affine_punctured(f, m + 1), d, true);
                    for (int r = 1; r <= static_cast<int>(proj.dimension()); ++r) {
                        std::vector<std::string> row{std::to_string(q), std::to_string(m),
                                                     std::to_string(d), std::to_string(r),
                                                     std::to_string(punct.length()),
                                                     std::to_string(proj.length())};
                        std::string affine, projective, formula;
                        try {
                            affine = std::to_string(
                                ghw_exact_auto(punct.generator, r, opt).value);
                            projective = std::to_string(
                                ghw_exact_auto(proj.generator, r, opt).value);
                        } catch (const ResourceError&) {
                        }
                        if (r <= m + 2 - d)
                            formula = ghw_formula_projective(q, m, d, r).str();
                        bool agree = true;
                        if (!affine.empty() && !projective.empty())
                            agree = BigInt(affine) == BigInt(projective) * (q - 1);
                        if (!formula.empty() && !projective.empty() && formula != projective)
                            agree = false;
                        row.push_back(affine);
                        row.push_back(projective);
                        row.push_back(formula);
                        row.push_back(agree ? "true" : "false");
                        doc.table.push_back(std::move(row));
                    }
                }
            }
        }
    } else {
        throw BadArgs("family must be cartesian or projective");
    }
    return emit(doc, c);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Cartesian square-free codes and their generalized Hamming weights"};
    app.require_subcommand(1);

    CommonOpts common;
    CodeOpts code_opts;

    auto* code_cmd = app.add_subcommand("code", "Build a code and report n, k");
    add_common(code_cmd, common);
    add_code_opts(code_cmd, code_opts, false);

    auto* ghw_cmd = app.add_subcommand("ghw", "Compute generalized Hamming weights");
    add_common(ghw_cmd, common);
    add_code_opts(ghw_cmd, code_opts, true);

    auto* verify_cmd = app.add_subcommand("verify", "Run verification suites");
    add_common(verify_cmd, common);
    std::vector<std::string> suites{"all"};
    int trials = 200;
    unsigned vq_min = 0, vq_max = 0;
    int vm_min = 0, vm_max = 0;
    verify_cmd->add_option("--suite", suites,
                           "shadow, bijection, duality, monotonicity, dimensions, permutation, "
                           "tensor, sharpness, all");
    verify_cmd->add_option("--trials", trials, "Trials per randomized suite");
    verify_cmd->add_option("--q-min", vq_min, "Sharpness grid: smallest q");
    verify_cmd->add_option("--q-max", vq_max, "Sharpness grid: largest q");
    verify_cmd->add_option("--m-min", vm_min, "Sharpness grid: smallest m");
    verify_cmd->add_option("--m-max", vm_max, "Sharpness grid: largest m");

    auto* table_cmd = app.add_subcommand("table", "Sweep a parameter grid");
    add_common(table_cmd, common);
    std::string family = "cartesian";
    std::vector<unsigned> qs{2, 3};
    int m_max = 3;
    table_cmd->add_option("--family", family, "cartesian or projective")
        ->check(CLI::IsMember({"cartesian", "projective"}));
    table_cmd->add_option("--q", qs, "Field orders to sweep");
    table_cmd->add_option("--m-max", m_max, "Largest m");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        if (code_cmd->parsed()) return cmd_code(common, code_opts);
        if (ghw_cmd->parsed()) return cmd_ghw(common, code_opts);
        if (verify_cmd->parsed())
            return cmd_verify(common, suites, trials, vq_min, vq_max, vm_min, vm_max);
        if (table_cmd->parsed()) return cmd_table(common, family, qs, m_max);
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ResourceError& e) {
        std::cerr << "budget: " << e.what() << "\n";
        if (const auto* cap = dynamic_cast<const CapExceeded*>(&e))
            std::cerr << "exact count: " << cap->count.str()
                      << " (switch to --method exact-support or raise --subspace-cap)\n";
        if (const auto* budget = dynamic_cast<const BudgetExceeded*>(&e))
            if (budget->verified_lower_bound)
                std::cerr << "verified lower bound: " << *budget->verified_lower_bound << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
