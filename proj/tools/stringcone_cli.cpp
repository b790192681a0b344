// Command-line interface for the string polytope library.
//
// Exit codes: 0 success, 2 bad input or infeasible request, 3 budget
// exceeded.  All rational output is exact, printed as p or p/q.
#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "stringcone/gc.hpp"
#include "stringcone/gp_paths.hpp"
#include "stringcone/inequalities.hpp"
#include "stringcone/polyhedra.hpp"
#include "stringcone/rep_oracle.hpp"
#include "stringcone/verify.hpp"
#include "stringcone/wiring.hpp"
#include "stringcone/words.hpp"

using json = nlohmann::json;
using namespace stringcone;

namespace {

int default_workers() {
    unsigned hw = std::thread::hardware_concurrency();
    if (hw == 0) hw = 1;
    return static_cast<int>(std::min(hw, 8u));
}

// Reduced-word enumeration with an optional on-disk cache.  When
// STRINGCONE_CACHE_DIR is set, rank r is stored as one sorted word per line
// in <dir>/words_rank<r>.txt and reused on later runs.
std::vector<ReducedWord> enumerate_cached(int rank) {
    const char* dir = std::getenv("STRINGCONE_CACHE_DIR");
    std::filesystem::path file;
    if (dir && *dir) {
        file = std::filesystem::path(dir) / ("words_rank" + std::to_string(rank) + ".txt");
        std::ifstream in(file);
        if (in) {
            std::vector<ReducedWord> words;
            std::string line;
            while (std::getline(in, line))
                if (!line.empty()) words.push_back(parse_word(line));
            if (!words.empty()) return words;
        }
    }
    auto words = enumerate_reduced_words(rank);
    std::sort(words.begin(), words.end());
    if (!file.empty()) {
        std::error_code ec;
        std::filesystem::create_directories(file.parent_path(), ec);
        std::ofstream out(file);
        for (const auto& w : words) out << w.str() << "\n";
    }
    return words;
}

json form_json(const LinearForm& f) {
    json coeffs = json::array(), lambda = json::array();
    for (const auto& c : f.coeffs) coeffs.push_back(rat_str(c));
    for (const auto& c : f.cst.lambda) lambda.push_back(rat_str(c));
    return json{{"coeffs", coeffs}, {"lambda", lambda}, {"text", f.str("t")}};
}

json vec_json(const Vec& v) {
    json a = json::array();
    for (const auto& c : v) a.push_back(rat_str(c));
    return a;
}

struct Options {
    std::string word;
    std::string lambda;
    std::string bullet = "D";
    std::string mode = "quick";
    int rank = 0;
    int level = 0;
    int shift = 0;
    int workers = default_workers();
    bool as_json = false;
    bool wires = false;
    bool csv = false;
};

Side parse_bullet(const std::string& s) {
    if (s == "D" || s == "d") return Side::D;
    if (s == "A" || s == "a") return Side::A;
    throw WordError("bullet must be D or A");
}

int cmd_paths(const Options& o) {
    ReducedWord w = parse_word(o.word);
    if (o.level < 0 || o.level > w.rank) throw WordError("level out of range");
    WiringDiagram d = build_diagram(w);
    std::vector<int> levels;
    if (o.level == 0)
        for (int k = 1; k <= w.rank; ++k) levels.push_back(k);
    else
        levels.push_back(o.level);
    if (o.as_json) {
        json out{{"word", w.str()}, {"levels", json::array()}};
        for (int k : levels) {
            json jl{{"level", k}, {"paths", json::array()}};
            for (const auto& p : enumerate_paths(d, k)) {
                json coeffs = json::array();
                for (int c : p.coeffs) coeffs.push_back(c);
                jl["paths"].push_back({{"nodes", p.node_expr()},
                                       {"wires", p.wire_expr()},
                                       {"coeffs", coeffs}});
            }
            out["levels"].push_back(jl);
        }
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    for (int k : levels)
        for (const auto& p : enumerate_paths(d, k))
            std::cout << (o.wires ? p.wire_expr() : p.node_expr()) << "\n";
    return 0;
}

int cmd_ineq(const Options& o) {
    ReducedWord w = parse_word(o.word);
    auto cone = string_cone(w);
    auto upper = lambda_cone(w);
    if (o.as_json) {
        json out{{"word", w.str()}, {"cone", json::array()}, {"bounds", json::array()}};
        for (const auto& f : cone) out["cone"].push_back(form_json(f));
        for (const auto& f : upper) out["bounds"].push_back(form_json(f));
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    for (const auto& f : cone) std::cout << f.str("t") << " >= 0\n";
    for (const auto& f : upper) std::cout << f.str("t") << " >= 0\n";
    return 0;
}

int cmd_stats(const Options& o) {
    if (o.rank < 1) throw WordError("rank must be positive");
    auto words = enumerate_cached(o.rank);
    std::vector<ReducedWord> reps;
    for (const auto& w : words) {
        ReducedWord r = canonical_rep(w);
        if (r == w) reps.push_back(r);
    }
    std::map<int, int> histogram;
    for (const auto& r : reps) ++histogram[path_count(r)];
    if (o.as_json) {
        json h = json::array();
        for (const auto& [paths, classes] : histogram)
            h.push_back({{"paths", paths}, {"classes", classes}});
        std::cout << json{{"rank", o.rank},
                          {"words", words.size()},
                          {"classes", reps.size()},
                          {"histogram", h}}
                         .dump(2)
                  << "\n";
        return 0;
    }
    std::cout << "words: " << words.size() << "\n";
    std::cout << "classes: " << reps.size() << "\n";
    for (const auto& [paths, classes] : histogram)
        std::cout << "paths " << paths << ": " << classes << " classes\n";
    return 0;
}

int cmd_index(const Options& o) {
    ReducedWord w = parse_word(o.word);
    Indices ix = indices(w);
    if (o.as_json) {
        std::cout << json{{"word", w.str()},
                          {"ind_D", ix.ind_D},
                          {"coind_D", ix.coind_D},
                          {"ind_A", ix.ind_A},
                          {"coind_A", ix.coind_A}}
                         .dump(2)
                  << "\n";
        return 0;
    }
    std::cout << "ind_D=" << ix.ind_D << " coind_D=" << ix.coind_D << " ind_A=" << ix.ind_A
              << " coind_A=" << ix.coind_A << "\n";
    return 0;
}

int cmd_contract(const Options& o) {
    ReducedWord w = parse_word(o.word);
    Contraction ct = contract(w, parse_bullet(o.bullet));
    if (o.as_json) {
        json nm = json::array();
        for (std::size_t j = 1; j < ct.node_map.size(); ++j) nm.push_back(ct.node_map[j]);
        std::cout << json{{"word", ct.word.str()}, {"ind", ct.ind}, {"node_map", nm}}.dump(2)
                  << "\n";
        return 0;
    }
    std::cout << ct.word.str() << "\n";
    return 0;
}

int cmd_extend(const Options& o) {
    ReducedWord w = parse_word(o.word);
    ReducedWord e = extend(w, parse_bullet(o.bullet), o.shift);
    if (o.as_json) {
        std::cout << json{{"word", e.str()}}.dump(2) << "\n";
        return 0;
    }
    std::cout << e.str() << "\n";
    return 0;
}

std::pair<int, int> triangle_pos(int flat) {
    int k = 1;
    while (flat > k * (k + 1) / 2) ++k;
    return {k, flat - k * (k - 1) / 2};
}

int cmd_gcmap(const Options& o) {
    ReducedWord w = parse_word(o.word);
    Weight lam = parse_weight(o.lambda);
    GcMap g = gc_map(w, lam);
    const int N = g.built.length();
    std::vector<LinearForm> rows;
    for (int r = 0; r < N; ++r) rows.push_back(LinearForm{g.map.m[r], g.map.v[r]});
    if (o.as_json) {
        json jr = json::array();
        for (int r = 0; r < N; ++r) {
            auto [k, j] = triangle_pos(r + 1);
            jr.push_back({{"k", k}, {"j", j}, {"form", form_json(rows[r])}});
        }
        json perm = json::array();
        for (int p = 1; p <= N; ++p) perm.push_back(g.perm[p]);
        std::cout << json{{"word", w.str()},
                          {"sigma", sigma_str(g.sigma)},
                          {"built", g.built.str()},
                          {"perm", perm},
                          {"rows", jr},
                          {"verified", g.verified}}
                         .dump(2)
                  << "\n";
        return 0;
    }
    std::cout << "sigma: " << sigma_str(g.sigma) << "\n";
    std::cout << "built: " << g.built.str() << "\n";
    for (int r = 0; r < N; ++r) {
        auto [k, j] = triangle_pos(r + 1);
        std::cout << "x(" << k << "," << j << ") = " << rows[r].str("t") << "\n";
    }
    std::cout << "verified: " << (g.verified ? "yes" : "no") << "\n";
    return 0;
}

int cmd_classify(const Options& o) {
    if (o.rank < 1) throw WordError("rank must be positive");
    Weight lam = parse_weight(o.lambda);
    auto rows = classify(o.rank, lam, std::max(1, o.workers));
    if (o.as_json) {
        json out = json::array();
        for (const auto& r : rows)
            out.push_back({{"canonical", r.canonical.str()},
                           {"class_size", r.class_size},
                           {"paths", r.path_count},
                           {"facets", r.facets},
                           {"simplicial", r.simplicial},
                           {"map", r.gc},
                           {"sigma", r.sigma}});
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    if (o.csv) {
        for (const auto& r : rows)
            std::cout << '"' << r.canonical.str() << "\"," << r.class_size << ","
                      << r.path_count << "," << r.facets << "," << (r.simplicial ? 1 : 0)
                      << "," << (r.gc ? 1 : 0) << "," << r.sigma << "\n";
        return 0;
    }
    for (const auto& r : rows) {
        std::ostringstream line;
        line << r.canonical.str();
        std::cout << line.str() << std::string(line.str().size() < 24 ? 24 - line.str().size() : 1, ' ')
                  << "size=" << r.class_size << " paths=" << r.path_count
                  << " facets=" << r.facets << " simplicial=" << (r.simplicial ? "yes" : "no")
                  << " map=" << (r.gc ? "yes" : "no");
        if (!r.sigma.empty()) std::cout << " sigma=" << r.sigma;
        std::cout << "\n";
    }
    return 0;
}

int cmd_dim(const Options& o) {
    if (o.rank < 1) throw WordError("rank must be positive");
    Weight lam = parse_weight(o.lambda);
    Int d = weyl_dimension(o.rank, lam);
    if (o.as_json) {
        std::cout << json{{"rank", o.rank}, {"dim", d.str()}}.dump(2) << "\n";
        return 0;
    }
    std::cout << d.str() << "\n";
    return 0;
}

int cmd_verify(const Options& o) {
    bool full = o.mode == "full";
    if (!full && o.mode != "quick") throw WordError("mode must be quick or full");
    int failures = 0;
    json out = json::array();
    for (const auto& id : criterion_ids(full)) {
        CriterionResult r = run_criterion(id);
        if (!r.pass) ++failures;
        if (o.as_json)
            out.push_back({{"id", r.id},
                           {"title", r.title},
                           {"pass", r.pass},
                           {"seconds", r.seconds},
                           {"detail", r.detail}});
        else {
            std::cout << format_line(r) << "\n";
            std::cout.flush();
        }
    }
    if (o.as_json) std::cout << out.dump(2) << "\n";
    return failures == 0 ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact string polytopes, wiring diagrams, and pattern maps"};
    app.require_subcommand(1);
    Options o;
    int (*run)(const Options&) = nullptr;

    auto add_json = [&](CLI::App* cmd) { cmd->add_flag("--json", o.as_json, "JSON output"); };

    auto* paths = app.add_subcommand("paths", "inequality walks of a word");
    paths->add_option("word", o.word, "comma-separated reduced word")->required();
    paths->add_option("-k,--level", o.level, "level to list (default: all)");
    paths->add_flag("--wires", o.wires, "print wire itineraries instead of node walks");
    add_json(paths);
    paths->callback([&] { run = cmd_paths; });

    auto* ineq = app.add_subcommand("ineq", "defining inequalities of a word");
    ineq->add_option("word", o.word)->required();
    add_json(ineq);
    ineq->callback([&] { run = cmd_ineq; });

    auto* stats = app.add_subcommand("stats", "word and class counts for a rank");
    stats->add_option("rank", o.rank)->required();
    add_json(stats);
    stats->callback([&] { run = cmd_stats; });

    auto* index = app.add_subcommand("index", "boundary indices of a word");
    index->add_option("word", o.word)->required();
    add_json(index);
    index->callback([&] { run = cmd_index; });

    auto* contract_cmd = app.add_subcommand("contract", "remove a boundary wire");
    contract_cmd->add_option("word", o.word)->required();
    contract_cmd->add_option("--bullet", o.bullet, "boundary wire: D or A")->required();
    add_json(contract_cmd);
    contract_cmd->callback([&] { run = cmd_contract; });

    auto* extend_cmd = app.add_subcommand("extend", "insert a boundary wire");
    extend_cmd->add_option("word", o.word)->required();
    extend_cmd->add_option("--bullet", o.bullet, "boundary wire: D or A")->required();
    extend_cmd->add_option("--shift", o.shift, "target index of the extension (default 0)");
    add_json(extend_cmd);
    extend_cmd->callback([&] { run = cmd_extend; });

    auto* gcmap = app.add_subcommand("gcmap", "unimodular map onto the pattern polytope");
    gcmap->add_option("word", o.word)->required();
    gcmap->add_option("--lambda", o.lambda, "weight entries, comma-separated")->required();
    add_json(gcmap);
    gcmap->callback([&] { run = cmd_gcmap; });

    auto* classify_cmd = app.add_subcommand("classify", "per-class polytope table");
    classify_cmd->add_option("rank", o.rank)->required();
    classify_cmd->add_option("--lambda", o.lambda, "regular weight")->required();
    classify_cmd->add_option("--workers", o.workers, "worker threads");
    classify_cmd->add_flag("--csv", o.csv, "one CSV row per class");
    add_json(classify_cmd);
    classify_cmd->callback([&] { run = cmd_classify; });

    auto* dim = app.add_subcommand("dim", "lattice-count oracle value");
    dim->add_option("rank", o.rank)->required();
    dim->add_option("--lambda", o.lambda)->required();
    add_json(dim);
    dim->callback([&] { run = cmd_dim; });

    auto* verify = app.add_subcommand("verify", "run the acceptance criteria");
    verify->add_option("mode", o.mode, "quick (default) or full");
    add_json(verify);
    verify->callback([&] { run = cmd_verify; });

    try {
        app.parse(argc, argv);
        return run ? run(o) : 2;
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    } catch (const BudgetError& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
