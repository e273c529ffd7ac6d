#include <fstream>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ctube/error.hpp"
#include "ctube/indec.hpp"
#include "ctube/io.hpp"
#include "ctube/rigid.hpp"
#include "ctube/seed.hpp"
#include "ctube/suites.hpp"
#include "ctube/tau_tilt.hpp"

namespace {

constexpr int kEnumCap = 12;
constexpr int kPatternCap = 8;

void check_rank(int n, int cap) {
    if (n < 1 || n > cap)
        ctube::fail(ctube::ErrorKind::InvalidRank, "rank " + std::to_string(n) +
                                                       " outside the supported range 1.." +
                                                       std::to_string(cap));
}

// Default initial object when --t is omitted: the fan of a single corner,
// {(1,n),(1,1),...,(1,n-1)}, with the length-n summand pinned first.
ctube::MaximalRigid standard_rigid(int n) {
    std::vector<ctube::Indec> summands;
    summands.reserve(n);
    summands.emplace_back(1, n, n + 1);
    for (int b = 1; b < n; ++b) summands.emplace_back(1, b, n + 1);
    return ctube::make_maximal_rigid(n, summands);
}

ctube::MaximalRigid resolve_t(int n, const std::string& t_str) {
    if (t_str.empty()) return standard_rigid(n);
    return ctube::parse_maximal_rigid(t_str, n);
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) ctube::fail(ctube::ErrorKind::UsageError, "cannot open output file " + out_path);
    f << text;
    if (!f) ctube::fail(ctube::ErrorKind::UsageError, "failed writing output file " + out_path);
}

std::string vec_str(const std::vector<int>& v) {
    std::string s = "(";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(v[i]);
    }
    return s + ")";
}

int exit_code_for(ctube::ErrorKind k) {
    switch (k) {
        case ctube::ErrorKind::InternalInvariantBroken:
        case ctube::ErrorKind::LaurentViolation:
        case ctube::ErrorKind::GradingViolation:
            return 1;  // broken mathematics, not a usage problem
        default:
            return 2;
    }
}

}  // namespace

int main(int argc, char** argv) {
    using ctube::dump_json;
    using ctube::to_json;

    CLI::App app{"ctube: rigid objects, mutation and cluster patterns in a tube of rank n+1"};
    app.require_subcommand(1);
    int exit_code = 0;

    int n = 0;
    std::string t_str, m_str, x_str, out_path, suite_name;
    int k = 0;
    long max_seeds = 1000000;
    bool as_json = false, as_csv = false, as_dot = false;

    auto add_common = [&](CLI::App* sub, bool with_t) {
        sub->add_option("--n", n, "rank of the cluster algebra (tube rank is n+1)")->required();
        if (with_t)
            sub->add_option("--t", t_str,
                            "initial maximal rigid object, semicolon-separated \"(a,b)\" pairs "
                            "(default: {(1,n),(1,1),...,(1,n-1)})");
        sub->add_option("--out", out_path, "write output to FILE instead of stdout");
        return sub;
    };

    CLI::App* enum_rigids = add_common(
        app.add_subcommand("enum-rigids", "list all rigid indecomposables at rank n"), false);
    enum_rigids->add_flag("--json", as_json, "emit JSON");
    enum_rigids->callback([&] {
        check_rank(n, kEnumCap);
        std::vector<ctube::Indec> rigids = ctube::enum_rigid_indecs(n);
        if (as_json) {
            nlohmann::json arr = nlohmann::json::array();
            for (const ctube::Indec& x : rigids) arr.push_back(to_json(x));
            emit(dump_json({{"count", rigids.size()}, {"rigids", std::move(arr)}}), out_path);
        } else {
            std::string text;
            for (const ctube::Indec& x : rigids) text += ctube::to_string(x) + "\n";
            emit(text, out_path);
        }
    });

    CLI::App* enum_max = add_common(
        app.add_subcommand("enum-maximal-rigids", "list all maximal rigid objects at rank n"),
        false);
    enum_max->add_flag("--json", as_json, "emit JSON");
    enum_max->callback([&] {
        check_rank(n, kEnumCap);
        std::vector<ctube::MaximalRigid> census = ctube::enum_maximal_rigids(n);
        if (as_json) {
            nlohmann::json arr = nlohmann::json::array();
            for (const ctube::MaximalRigid& t : census) arr.push_back(to_json(t));
            emit(dump_json({{"count", census.size()}, {"objects", std::move(arr)}}), out_path);
        } else {
            std::string text;
            for (const ctube::MaximalRigid& t : census) text += ctube::to_string(t) + "\n";
            emit(text, out_path);
        }
    });

    CLI::App* mutate = add_common(
        app.add_subcommand("mutate", "mutate a maximal rigid object in one direction"), true);
    mutate->add_option("--k", k, "mutation direction, 1..n")->required();
    mutate->add_flag("--json", as_json, "emit JSON");
    mutate->callback([&] {
        check_rank(n, kEnumCap);
        ctube::MaximalRigid t = resolve_t(n, t_str);
        auto [mutated, e] = ctube::mutate_rigid(t, k);
        if (as_json) {
            emit(dump_json({{"mutated", to_json(mutated)},
                            {"removed", to_json(e.removed)},
                            {"replacement", to_json(e.replacement)},
                            {"U", to_json(e.U)},
                            {"U_prime", to_json(e.U_prime)}}),
                 out_path);
        } else {
            emit("mutated: " + ctube::to_string(mutated) + "\n" +
                     "removed: " + ctube::to_string(e.removed) + "\n" +
                     "replacement: " + ctube::to_string(e.replacement) + "\n" +
                     "U: " + ctube::to_string(e.U) + "\n" +
                     "U': " + ctube::to_string(e.U_prime) + "\n",
                 out_path);
        }
    });

    CLI::App* bmat = add_common(
        app.add_subcommand("b-matrix", "exchange matrix of a maximal rigid object"), true);
    bmat->add_flag("--json", as_json, "emit JSON");
    bmat->callback([&] {
        check_rank(n, kEnumCap);
        ctube::IntMatrix b = ctube::b_matrix(resolve_t(n, t_str));
        emit(as_json ? dump_json(to_json(b)) : ctube::to_string(b) + "\n", out_path);
    });

    CLI::App* pattern = add_common(
        app.add_subcommand("cluster-pattern",
                           "enumerate the cluster pattern with principal coefficients"),
        true);
    bool no_coeff = false;
    pattern->add_flag("--json", as_json, "emit JSON");
    pattern->add_flag("--csv", as_csv, "emit the (object, den, g) table as CSV");
    pattern->add_flag("--no-coefficients", no_coeff,
                      "specialize coefficient variables to 1 in the reported variables");
    pattern->add_option("--max-seeds", max_seeds, "abort if the pattern exceeds CAP seeds");
    pattern->callback([&] {
        check_rank(n, kPatternCap);
        ctube::MaximalRigid t = resolve_t(n, t_str);
        ctube::PatternResult pat = ctube::enumerate_pattern(ctube::initial_seed(t), max_seeds);
        if (no_coeff)
            for (ctube::ClusterRecord& r : pat.records)
                r.variable = ctube::specialize_coefficients(r.variable);
        if (as_json) {
            nlohmann::json recs = nlohmann::json::array();
            for (const ctube::ClusterRecord& r : pat.records) recs.push_back(to_json(r));
            emit(dump_json({{"n", n},
                            {"t", to_json(t)},
                            {"seeds", pat.seeds.size()},
                            {"edges", pat.edges.size()},
                            {"records", std::move(recs)}}),
                 out_path);
        } else if (as_csv) {
            emit(ctube::records_csv(pat.records), out_path);
        } else {
            std::string text = "seeds: " + std::to_string(pat.seeds.size()) + "\n" +
                               "variables: " + std::to_string(pat.records.size()) + "\n";
            for (const ctube::ClusterRecord& r : pat.records)
                text += "object " + ctube::to_string(r.object) + ": den " + vec_str(r.den) +
                        ", g " + vec_str(r.g) + ", terms " +
                        std::to_string(r.variable.terms().size()) + "\n";
            emit(text, out_path);
        }
    });

    CLI::App* graph = add_common(
        app.add_subcommand("exchange-graph", "export the exchange graph (DOT by default)"), true);
    graph->add_flag("--dot", as_dot, "emit Graphviz DOT (the default)");
    graph->add_flag("--json", as_json, "emit JSON");
    graph->callback([&] {
        check_rank(n, kPatternCap);
        if (as_dot && as_json)
            ctube::fail(ctube::ErrorKind::UsageError, "choose one of --dot and --json");
        ctube::PatternResult pat =
            ctube::enumerate_pattern(ctube::initial_seed(resolve_t(n, t_str)));
        emit(as_json ? dump_json(ctube::exchange_graph_json(pat)) : ctube::exchange_graph_dot(pat),
             out_path);
    });

    CLI::App* rankv = add_common(
        app.add_subcommand("rank-vector", "rank vector of a rigid object relative to T"), true);
    rankv->add_option("--m", m_str, "rigid indecomposable \"(a,b)\"")->required();
    rankv->add_flag("--json", as_json, "emit JSON");
    rankv->callback([&] {
        check_rank(n, kEnumCap);
        ctube::MaximalRigid t = resolve_t(n, t_str);
        ctube::Indec m = ctube::parse_indec(m_str, n + 1);
        std::vector<int> rv = ctube::rank_vector(t, m);
        emit(as_json ? dump_json({{"m", to_json(m)}, {"rank", rv}}) : vec_str(rv) + "\n",
             out_path);
    });

    CLI::App* index = add_common(
        app.add_subcommand("index", "index of a rigid object in the triangulated category"),
        true);
    index->add_option("--x", x_str, "rigid indecomposable \"(a,b)\"")->required();
    index->add_flag("--json", as_json, "emit JSON");
    index->callback([&] {
        check_rank(n, kPatternCap);
        ctube::MaximalRigid t = resolve_t(n, t_str);
        ctube::Indec x = ctube::parse_indec(x_str, n + 1);
        std::vector<int> ind = ctube::index_vector(t, x);
        emit(as_json ? dump_json({{"x", to_json(x)}, {"index", ind}}) : vec_str(ind) + "\n",
             out_path);
    });

    CLI::App* cvec = add_common(
        app.add_subcommand("c-vectors", "positive c-vectors of the pattern rooted at T"), true);
    cvec->add_flag("--json", as_json, "emit JSON");
    cvec->callback([&] {
        check_rank(n, kEnumCap);
        std::set<std::vector<int>> cv = ctube::positive_c_vectors(resolve_t(n, t_str));
        if (as_json) {
            nlohmann::json arr = nlohmann::json::array();
            for (const std::vector<int>& v : cv) arr.push_back(v);
            emit(dump_json({{"count", cv.size()}, {"vectors", std::move(arr)}}), out_path);
        } else {
            std::string text;
            for (const std::vector<int>& v : cv) text += vec_str(v) + "\n";
            emit(text, out_path);
        }
    });

    CLI::App* suite = app.add_subcommand("run-suite", "run one verification suite at rank n");
    suite->add_option("suite", suite_name, "one of: " + [] {
                          std::string all;
                          for (const std::string& s : ctube::suite_names())
                              all += (all.empty() ? "" : ", ") + s;
                          return all;
                      }())
        ->required();
    suite->add_option("--n", n, "rank of the cluster algebra")->required();
    suite->add_option("--out", out_path, "write output to FILE instead of stdout");
    suite->add_flag("--json", as_json, "emit JSON");
    suite->callback([&] {
        ctube::Report report = ctube::run_suite(suite_name, n);
        emit(as_json ? dump_json(to_json(report)) : ctube::format_report(report), out_path);
        if (!report.all_pass()) exit_code = 1;
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const ctube::CtError& e) {
        std::cerr << "error [" << ctube::to_string(e.kind()) << "]: " << e.what() << "\n";
        return exit_code_for(e.kind());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return exit_code;
}
