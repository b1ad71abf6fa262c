// shw: exact spin/classical Hurwitz number calculator with a verification
// mode and a finite-dimensional TR spectral-flow laboratory.
//
// Machine-readable JSON goes to stdout, diagnostics (including timing) to
// stderr.  Exit codes: 0 success, 1 verification failure, 2 usage error,
// 3 missing base case or oracle budget exceeded.

#include <chrono>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "shw/characters.hpp"
#include "shw/error.hpp"
#include "shw/hurwitz.hpp"
#include "shw/partition.hpp"
#include "shw/rational.hpp"
#include "shw/spin.hpp"
#include "shw/trflow.hpp"
#include "shw/verify.hpp"

namespace {

using nlohmann::json;

struct GlobalOptions {
    std::string cache_dir;
    std::uint64_t oracle_budget = shw::kDefaultOracleBudget;
    bool pretty = false;
};

std::string render_value(const shw::Rational& v, bool pretty) {
    shw::Rational c = v;
    c.canonicalize();
    if (pretty && c.get_den() == 1) return c.get_num().get_str();
    return shw::format_fraction(c);
}

json profiles_json(const std::vector<shw::Partition>& profiles) {
    json arr = json::array();
    for (const auto& m : profiles) arr.push_back(m.to_string());
    return arr;
}

json derivation_json(const shw::DerivationNode& node, bool pretty) {
    json j;
    j["rule"] = node.rule;
    j["query"] = node.query;
    j["value"] = render_value(node.value, pretty);
    if (!node.terms.empty()) {
        json terms = json::array();
        for (const auto& term : node.terms) {
            json t;
            t["z"] = term.coefficient.get_str();
            t["node"] = derivation_json(*term.node, pretty);
            terms.push_back(std::move(t));
        }
        j["terms"] = std::move(terms);
    }
    return j;
}

int run_spin(const GlobalOptions& g, int genus, const std::string& parity_text, int degree,
             const std::string& profiles_text, bool explain) {
    auto parity = shw::parse_parity(parity_text);
    if (!parity) {
        std::cerr << "error: parity must be 'even' or 'odd'\n";
        return 2;
    }
    auto q = shw::SpinQuery::make(genus, *parity, degree, shw::parse_profiles(profiles_text));
    shw::SpinQuery nq = shw::normalize(q);

    shw::SpinEngine engine;
    json out;
    if (explain) {
        shw::DerivationNode trace;
        shw::Rational v = engine.evaluate_traced(q, trace);
        out["value"] = render_value(v, g.pretty);
        out["derivation"] = derivation_json(trace, g.pretty);
    } else {
        out["value"] = render_value(engine.evaluate(q), g.pretty);
    }
    out["chi"] = shw::euler_characteristic(nq.d, nq.h, nq.profiles);
    out["query"] = {{"kind", "spin"},
                    {"genus", nq.h},
                    {"parity", shw::parity_name(nq.parity)},
                    {"degree", nq.d},
                    {"profiles", profiles_json(nq.profiles)}};
    std::cout << out.dump() << "\n";
    return 0;
}

int run_classical(const GlobalOptions& g, int genus, int degree, const std::string& profiles_text) {
    shw::ClassicalQuery q{genus, degree, shw::parse_profiles(profiles_text)};
    json out;
    out["value"] = render_value(shw::classical_hurwitz(q, g.cache_dir), g.pretty);
    out["chi"] = shw::euler_characteristic(q.d, q.h, q.profiles);
    out["query"] = {{"kind", "classical"},
                    {"genus", q.h},
                    {"degree", q.d},
                    {"profiles", profiles_json(q.profiles)}};
    std::cout << out.dump() << "\n";
    return 0;
}

int run_gt(const GlobalOptions& g, int genus, const std::string& parity_text, int degree) {
    auto parity = shw::parse_parity(parity_text);
    if (!parity) {
        std::cerr << "error: parity must be 'even' or 'odd'\n";
        return 2;
    }
    shw::SpinEngine engine;
    json out;
    out["value"] = render_value(shw::gt_local(engine, genus, *parity, degree), g.pretty);
    out["chi"] = shw::euler_characteristic(degree, genus, std::span<const shw::Partition>());
    out["query"] = {{"kind", "gt"},
                    {"genus", genus},
                    {"parity", shw::parity_name(*parity)},
                    {"degree", degree}};
    std::cout << out.dump() << "\n";
    return 0;
}

int run_table(const GlobalOptions&, int degree, int max_genus, int max_insertions,
              const std::string& format) {
    shw::SpinEngine engine;
    struct Row {
        int h;
        shw::Parity parity;
        int k;
        std::vector<shw::Partition> profiles;
        shw::Rational value;
    };
    std::vector<Row> rows;
    int kmax = degree >= 3 ? max_insertions : 0;
    for (int h = 0; h <= max_genus; ++h)
        for (shw::Parity p : {shw::Parity::even, shw::Parity::odd}) {
            if (h == 0 && p == shw::Parity::odd) continue;
            for (int k = 0; k <= kmax; ++k) {
                std::vector<shw::Partition> profiles(
                    k, degree == 3 ? shw::Partition({3}) : shw::Partition({3, 1}));
                auto q = shw::SpinQuery::make(h, p, degree, profiles);
                rows.push_back({h, p, k, profiles, engine.evaluate(q)});
            }
        }

    if (format == "json") {
        json arr = json::array();
        for (const auto& r : rows) {
            shw::Rational c = r.value;
            c.canonicalize();
            arr.push_back({{"h", r.h},
                           {"parity", shw::parity_name(r.parity)},
                           {"d", degree},
                           {"profiles", shw::format_profiles(r.profiles)},
                           {"k", r.k},
                           {"value_num", c.get_num().get_str()},
                           {"value_den", c.get_den().get_str()}});
        }
        std::cout << arr.dump() << "\n";
    } else if (format == "csv") {
        std::cout << "h,parity,d,profiles,k,value_num,value_den\n";
        for (const auto& r : rows) {
            shw::Rational c = r.value;
            c.canonicalize();
            std::cout << r.h << ',' << shw::parity_name(r.parity) << ',' << degree << ",\""
                      << shw::format_profiles(r.profiles) << "\"," << r.k << ','
                      << c.get_num().get_str() << ',' << c.get_den().get_str() << "\n";
        }
    } else {
        for (const auto& r : rows)
            std::cout << "h=" << r.h << " parity=" << shw::parity_name(r.parity) << " k=" << r.k
                      << "  H = " << render_value(r.value, true) << "\n";
    }
    return 0;
}

int run_verify(const GlobalOptions& g, const std::string& suite, int degree_max, int genus_max) {
    shw::verify::Options opt;
    opt.degree_max = degree_max;
    opt.genus_max = genus_max;
    opt.oracle_budget = g.oracle_budget;
    opt.cache_dir = g.cache_dir;

    auto results = shw::verify::run_suites(suite, opt);
    if (results.empty()) {
        std::cerr << "error: unknown suite '" << suite << "'\n";
        return 2;
    }
    json arr = json::array();
    bool all_passed = true;
    for (const auto& r : results) {
        arr.push_back({{"name", r.name},
                       {"passed", r.passed},
                       {"checks", r.checks},
                       {"skipped", r.skipped},
                       {"detail", r.detail}});
        std::cerr << (r.passed ? "ok   " : "FAIL ") << r.name << "  checks=" << r.checks
                  << " skipped=" << r.skipped;
        if (!r.detail.empty()) std::cerr << "  [" << r.detail << "]";
        std::cerr << "\n";
        all_passed = all_passed && r.passed;
    }
    std::cout << arr.dump() << "\n";
    return all_passed ? 0 : 1;
}

int run_trflow(const GlobalOptions&, const std::string& blocks_text, std::uint64_t seed,
               double t_max, double scale, bool plain) {
    namespace tr = shw::trflow;
    auto spec = tr::parse_block_spec(blocks_text);
    tr::TRFamily family = tr::make_block_family(spec, scale, seed, !plain);

    tr::SFResult by_det = tr::sf_by_determinant(family, t_max);
    tr::SFResult by_ker = tr::sf_by_kernel(family);

    std::vector<double> grid;
    for (int i = 0; i <= 10; ++i) grid.push_back(-t_max + 2.0 * t_max * i / 10.0);
    tr::VanishingReport vanishing = tr::vanishing_check(family, grid);

    json blocks = json::array();
    for (auto tag : spec) blocks.push_back(tr::block_tag_name(tag));
    json out;
    out["blocks"] = blocks;
    out["seed"] = seed;
    out["sf_det"] = by_det.sign;
    out["sf_ker"] = by_ker.sign;
    out["min_sv_path"] = by_det.min_singular_value_along_path;
    out["residuals"] = {{"tr_invariance", tr::tr_invariance_residual(family, t_max)},
                        {"vanishing_identity", vanishing.max_identity_residual}};
    std::cout << out.dump() << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"shw: exact spin and classical Hurwitz numbers, verification suites,\n"
                 "and a TR spectral-flow laboratory.\n\n"
                 "Parity convention: 'even' is sign +1 (the '+' superscript), 'odd' is\n"
                 "sign -1 ('-').  A genus-0 spin curve is always even."};
    app.require_subcommand(1);

    GlobalOptions g;
    app.add_option("--cache-dir", g.cache_dir,
                   "directory for character-table cache files (JSON, atomic rename)")
        ->envname("SHW_CACHE_DIR");
    app.add_option("--oracle-budget", g.oracle_budget,
                   "composition budget for the brute-force oracle")
        ->envname("SHW_ORACLE_BUDGET");
    app.add_flag("--pretty", g.pretty, "render integral values without the /1 suffix");

    int genus = 0, degree = 1;
    std::string parity_text = "even", profiles_text;
    bool explain = false;
    auto* spin_cmd = app.add_subcommand("spin", "spin Hurwitz number H^{h,p}_{m^1,...,m^k}");
    spin_cmd->add_option("--genus", genus, "target genus h")->required();
    spin_cmd->add_option("--parity", parity_text, "even|odd")->required();
    spin_cmd->add_option("--degree", degree, "degree d")->required();
    spin_cmd->add_option("--profiles", profiles_text,
                         "odd ramification profiles, e.g. \"3,1;3,1\" or \"1^4\"");
    spin_cmd->add_flag("--explain", explain, "attach the derivation tree to the output");

    auto* classical_cmd =
        app.add_subcommand("classical", "classical Hurwitz number by the character sum");
    classical_cmd->add_option("--genus", genus, "target genus h")->required();
    classical_cmd->add_option("--degree", degree, "degree d")->required();
    classical_cmd->add_option("--profiles", profiles_text, "ramification profiles \"2,1,1;4\"");

    auto* gt_cmd = app.add_subcommand("gt", "local GT invariant via the genus-1 chain");
    gt_cmd->add_option("--genus", genus, "genus h >= 2")->required();
    gt_cmd->add_option("--parity", parity_text, "even|odd")->required();
    gt_cmd->add_option("--degree", degree, "degree d")->required();

    int max_genus = 3, max_insertions = 4;
    std::string format = "text";
    auto* table_cmd = app.add_subcommand("table", "tabulate spin Hurwitz numbers");
    table_cmd->add_option("--degree", degree, "degree d")->required();
    table_cmd->add_option("--max-genus", max_genus, "largest genus");
    table_cmd->add_option("--max-insertions", max_insertions, "largest insertion count");
    table_cmd->add_option("--format", format, "json|csv|text")
        ->check(CLI::IsMember({"json", "csv", "text"}));

    std::string suite = "all";
    int degree_max = 4, genus_max = 5;
    auto* verify_cmd = app.add_subcommand("verify", "run property suites");
    verify_cmd->add_option("--suite", suite, "all|split|handle|gt|frobenius|trflow")
        ->check(CLI::IsMember({"all", "split", "handle", "gt", "frobenius", "trflow"}));
    verify_cmd->add_option("--degree-max", degree_max, "largest degree exercised");
    verify_cmd->add_option("--genus-max", genus_max, "largest genus exercised");

    std::string blocks_text = "kernel";
    std::uint64_t seed = 42;
    double t_max = 10.0, scale = 1.0;
    bool plain = false;
    auto* trflow_cmd =
        app.add_subcommand("trflow", "TR spectral flow of a block family A(t) = D + tR");
    trflow_cmd->add_option("--blocks", blocks_text, "comma list of kernel|invertible")->required();
    trflow_cmd->add_option("--seed", seed, "seed for the orthogonal conjugation");
    trflow_cmd->add_option("--t-max", t_max, "evaluation parameter for the determinant sign");
    trflow_cmd->add_option("--scale", scale, "R-part scale a > 0");
    trflow_cmd->add_flag("--plain", plain, "skip the random orthogonal conjugation");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp" ||
            e.get_name() == "CallForVersion")
            return app.exit(e);
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    }

    auto started = std::chrono::steady_clock::now();
    int rc = 2;
    try {
        if (*spin_cmd)
            rc = run_spin(g, genus, parity_text, degree, profiles_text, explain);
        else if (*classical_cmd)
            rc = run_classical(g, genus, degree, profiles_text);
        else if (*gt_cmd)
            rc = run_gt(g, genus, parity_text, degree);
        else if (*table_cmd)
            rc = run_table(g, degree, max_genus, max_insertions, format);
        else if (*verify_cmd)
            rc = run_verify(g, suite, degree_max, genus_max);
        else if (*trflow_cmd)
            rc = run_trflow(g, blocks_text, seed, t_max, scale, plain);
    } catch (const shw::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        rc = (e.code() == shw::errc::base_case_unavailable ||
              e.code() == shw::errc::oracle_budget_exceeded)
                 ? 3
                 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        rc = 2;
    }
    auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - started)
                       .count();
    std::cerr << "time_ms=" << elapsed << "\n";
    return rc;
}
