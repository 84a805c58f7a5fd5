// qkz: command line front end. Every subcommand prints json (default), csv or
// text. Exit codes: 0 success, 2 a verification failed, 3 bad input (precondition,
// out of validated range, bound, parse or mode error).

#include "qkoszul/cohomology.hpp"
#include "qkoszul/errors.hpp"
#include "qkoszul/invariants.hpp"
#include "qkoszul/koszul.hpp"
#include "qkoszul/parse.hpp"
#include "qkoszul/qmatrix.hpp"
#include "qkoszul/suites.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <optional>
#include <sstream>

using namespace qkoszul;
using nlohmann::json;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_failed = 2;
constexpr int exit_input = 3;

struct RunConfig {
    int n = 3;
    std::string mode = "generic";
    int zeta_order = 0;
    int degree_bound = 6;
    int box = 0;
    std::string format = "json";
    std::uint64_t seed = 0;

    Field field() const {
        if (mode == "generic" && zeta_order == 0) return Field::generic();
        if (zeta_order == 0) throw PreconditionError("--mode " + mode + " needs --zeta-order");
        return Field::root_of_unity(zeta_order);
    }
    // The cohomology rule is only validated for ell >= n.
    Field cohomology_field() const {
        const Field f = field();
        if (!f.is_generic() && f.ell() < n)
            throw OutOfValidatedRange("zeta-order " + std::to_string(zeta_order) + " has ell = " +
                                      std::to_string(f.ell()) + " < n = " + std::to_string(n));
        return f;
    }
};

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
    return out + "\"";
}

std::string join(const std::vector<int>& v, const char* sep = ",") {
    std::string s;
    for (int x : v) s += (s.empty() ? "" : sep) + std::to_string(x);
    return s;
}

std::string coords(const Weight& w) { return join(w.coords()); }

json answer_json(const CohomologyAnswer& a) {
    if (a.vanishes) return {{"vanishes", true}};
    return {{"vanishes", false}, {"i", a.degree}, {"mu", coords(a.mu)}, {"dim", a.dim}};
}

void print_json(const json& j) { std::cout << j.dump(2) << "\n"; }

// ---------------------------------------------------------------- subcommands

int cmd_normal_form(const RunConfig& cfg, const std::string& expr) {
    const Field f = cfg.field();
    const XiPoly p = parse_xi(expr, f);
    const XiPoly nf = p.tilde() ? tilde_normal_form(p) : xi_normal_form(p);
    if (cfg.format == "text") {
        std::cout << nf.to_string() << "\n";
    } else if (cfg.format == "csv") {
        std::cout << "coefficient,word\n";
        for (const auto& [m, c] : nf.terms()) {
            std::string word;
            for (const auto& [r, s] : m)
                word += (word.empty() ? "" : " ") + std::string(nf.tilde() ? "xt[" : "x[") + std::to_string(r) + "," +
                        std::to_string(s) + "]";
            std::cout << csv_field(c.to_string()) << "," << csv_field(word) << "\n";
        }
    } else {
        json terms = json::array();
        for (const auto& [m, c] : nf.terms()) {
            json word = json::array();
            for (const auto& [r, s] : m) word.push_back({r, s});
            terms.push_back({{"coefficient", c.to_string()}, {"word", word}});
        }
        print_json({{"input", expr},
                    {"field", f.describe()},
                    {"algebra", nf.tilde() ? "xt" : "x"},
                    {"normal_form", nf.to_string()},
                    {"terms", terms}});
    }
    return exit_ok;
}

int cmd_koszul(const RunConfig& cfg) {
    const Field f = cfg.field();
    bool exact = true;
    std::vector<StrandHomology> strands;
    for (int d = 0; d <= cfg.degree_bound; ++d) {
        strands.push_back(strand_homology(cfg.n, d, f));
        exact = exact && strands.back().exact();
    }
    if (cfg.format == "csv") {
        std::cout << "d,p,dim,rank,betti\n";
        for (const auto& h : strands)
            for (std::size_t p = 0; p < h.dims.size(); ++p)
                std::cout << h.d << "," << p << "," << h.dims[p] << "," << (p < h.ranks.size() ? h.ranks[p] : 0) << ","
                          << h.betti[p] << "\n";
    } else if (cfg.format == "text") {
        std::cout << "n = " << cfg.n << ", " << f.describe() << "\n";
        for (const auto& h : strands) {
            std::cout << "d = " << h.d << "  betti";
            for (auto b : h.betti) std::cout << " " << b;
            std::cout << (h.exact() ? "  exact" : "  NOT exact") << "\n";
        }
    } else {
        json rows = json::array();
        for (const auto& h : strands)
            rows.push_back({{"d", h.d}, {"dims", h.dims}, {"ranks", h.ranks}, {"betti", h.betti}, {"exact", h.exact()}});
        print_json({{"n", cfg.n}, {"field", f.describe()}, {"strands", rows}, {"exact", exact}});
    }
    return exact ? exit_ok : exit_failed;
}

int cmd_bwb(const RunConfig& cfg, const std::string& weight) {
    const Weight lambda = Weight::parse(weight);
    RunConfig c = cfg;
    c.n = lambda.n();
    const CohomologyAnswer a = bwb(lambda, c.cohomology_field());
    if (cfg.format == "text") {
        std::cout << a.to_string() << "\n";
    } else if (cfg.format == "csv") {
        std::cout << "weight,vanishes,i,mu,dim\n"
                  << csv_field(weight) << "," << (a.vanishes ? "true" : "false") << ","
                  << (a.vanishes ? "" : std::to_string(a.degree)) << "," << (a.vanishes ? "" : csv_field(coords(a.mu)))
                  << "," << (a.vanishes ? "" : std::to_string(a.dim)) << "\n";
    } else {
        print_json(answer_json(a));
    }
    return exit_ok;
}

int cmd_step_table(const RunConfig& cfg, int a) {
    const StepTable t = step_lemma_table(cfg.n, a, cfg.cohomology_field());
    if (cfg.format == "csv") {
        std::cout << "j,lambda,result\n";
        for (const auto& row : t.rows)
            std::cout << csv_field(join(row.j)) << "," << csv_field(coords(row.lambda)) << ","
                      << csv_field(row.result.to_string()) << "\n";
    } else if (cfg.format == "text") {
        for (const auto& row : t.rows)
            std::cout << "(" << join(row.j) << ")  lambda = (" << coords(row.lambda) << ")  " << row.result.to_string()
                      << "\n";
    } else {
        json tuples = json::array();
        for (const auto& row : t.rows)
            tuples.push_back({{"j", row.j}, {"lambda", coords(row.lambda)}, {"result", answer_json(row.result)}});
        print_json({{"n", t.n}, {"a", t.a}, {"tuples", tuples}, {"unique_survivor", t.unique_survivor()}});
    }
    return exit_ok;
}

int cmd_decompose(const RunConfig& cfg, const std::string& input, bool untwisted) {
    std::string expr = input;
    int n = 0, box = cfg.box;
    if (!input.empty() && input.front() == '{') {
        const json j = json::parse(input);
        expr = j.at("g").get<std::string>();
        n = j.value("n", 0);
        box = j.value("box", box);
        untwisted = j.value("twist", std::string(untwisted ? "untwisted" : "twisted")) == "untwisted";
    }
    const Field f = cfg.field();
    const GroupAlgebraElement g = parse_group_element(expr, f, n);
    const Decomposition d = decompose(g, box, untwisted ? Twist::Untwisted : Twist::Twisted);
    if (cfg.format == "text") {
        for (std::size_t a = 0; a < d.f.size(); ++a) std::cout << "f_" << a << " = " << d.f[a].to_string() << "\n";
        std::cout << (d.unique() ? "unique" : "not unique") << " (rank " << d.rank << " of " << d.unknowns << ")\n";
    } else if (cfg.format == "csv") {
        std::cout << "a,f\n";
        for (std::size_t a = 0; a < d.f.size(); ++a) std::cout << a << "," << csv_field(d.f[a].to_string()) << "\n";
    } else {
        json fs = json::array();
        for (const auto& fa : d.f) fs.push_back(fa.to_string());
        print_json({{"n", g.n()},
                    {"field", f.describe()},
                    {"twist", untwisted ? "untwisted" : "twisted"},
                    {"g", g.to_string()},
                    {"box", d.box},
                    {"f", fs},
                    {"unknowns", d.unknowns},
                    {"rank", d.rank},
                    {"unique", d.unique()}});
    }
    return exit_ok;
}

int cmd_verify(const RunConfig& cfg, const std::string& suite) {
    const bool cohomology = suite == "bwb" || suite == "kostant";
    const Field f = cohomology ? cfg.cohomology_field() : cfg.field();
    const SuiteReport r = run_suite(suite, cfg.n, f, cfg.degree_bound, cfg.seed);
    if (cfg.format == "text") {
        std::cout << r.suite << " n = " << r.n << ", " << r.field << ": " << (r.ok() ? "pass" : "FAIL") << " ("
                  << r.checked << " checks)\n";
        for (const auto& [k, v] : r.facts) std::cout << "  " << k << " = " << v << "\n";
        for (const auto& w : r.failures) std::cout << "  witness: " << w << "\n";
    } else if (cfg.format == "csv") {
        std::cout << "suite,n,field,checked,pass,failures\n"
                  << r.suite << "," << r.n << "," << csv_field(r.field) << "," << r.checked << ","
                  << (r.ok() ? "true" : "false") << "," << r.failures.size() << "\n";
    } else {
        json facts = json::object();
        for (const auto& [k, v] : r.facts) facts[k] = v;
        print_json({{"suite", r.suite},
                    {"n", r.n},
                    {"field", r.field},
                    {"seed", cfg.seed},
                    {"checked", r.checked},
                    {"pass", r.ok()},
                    {"facts", facts},
                    {"witnesses", r.failures}});
    }
    return r.ok() ? exit_ok : exit_failed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact computations with quantum matrices, Koszul complexes and Borel-Weil-Bott tables"};
    app.require_subcommand(1);
    app.fallthrough();

    RunConfig cfg;
    app.add_option("--n", cfg.n, "rank of GL_n")->check(CLI::Range(1, 8));
    app.add_option("--mode", cfg.mode, "generic or zeta-order")->check(CLI::IsMember({"generic", "zeta-order"}));
    app.add_option("--zeta-order", cfg.zeta_order, "order m of the root of unity")->check(CLI::Range(2, 1000));
    app.add_option("--degree-bound", cfg.degree_bound, "largest degree (strand, |beta|)")->check(CLI::Range(0, 12));
    app.add_option("--box", cfg.box, "weight box for decompose (0: n + 2)")->check(CLI::NonNegativeNumber);
    app.add_option("--format", cfg.format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
    app.add_option("--seed", cfg.seed, "seed for randomized suites");

    std::string expr, weight, suite;
    int a = 0;
    bool untwisted = false;

    auto* nf = app.add_subcommand("normal-form", "PBW normal form of an x[r,s] or xt[r,s] expression");
    nf->add_option("expr", expr, "expression, e.g. \"xt[1,2] xt[2,3]\"")->required();
    auto* kz = app.add_subcommand("koszul", "strand dimensions, ranks and Betti numbers for d <= degree bound");
    auto* bw = app.add_subcommand("bwb", "induced cohomology of a line bundle");
    bw->add_option("--weight", weight, "coordinates, e.g. \"-2,1,1\"")->required();
    auto* st = app.add_subcommand("step-table", "cohomology of -(alpha_1j1 + ... + alpha_1ja) for all tuples");
    st->add_option("--a", a, "tuple length")->required();
    auto* dc = app.add_subcommand("decompose", "write a twisted W_J-invariant over twisted W-invariants");
    dc->add_option("g", expr, "element \"c * chi[..] + ...\" or json {\"g\": ..., \"n\", \"box\", \"twist\"}")->required();
    dc->add_flag("--untwisted", untwisted, "use the plain permutation action");
    auto* vf = app.add_subcommand("verify", "run a named verification suite");
    vf->add_option("suite", suite, "suite name")->required();

    CLI11_PARSE(app, argc, argv);
    if (cfg.zeta_order && cfg.mode == "generic" && app.get_option("--mode")->count()) {
        std::cerr << "error: --mode generic conflicts with --zeta-order\n";
        return exit_input;
    }
    if (cfg.zeta_order) cfg.mode = "zeta-order";

    try {
        if (*nf) return cmd_normal_form(cfg, expr);
        if (*kz) return cmd_koszul(cfg);
        if (*bw) return cmd_bwb(cfg, weight);
        if (*st) return cmd_step_table(cfg, a);
        if (*dc) return cmd_decompose(cfg, expr, untwisted);
        if (*vf) return cmd_verify(cfg, suite);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return exit_input;
    } catch (const OutOfValidatedRange& e) {
        std::cerr << "out of validated range: " << e.what() << "\n";
        return exit_input;
    } catch (const PreconditionError& e) {
        std::cerr << "precondition: " << e.what() << "\n";
        return exit_input;
    } catch (const ModeMismatch& e) {
        std::cerr << "mode mismatch: " << e.what() << "\n";
        return exit_input;
    } catch (const json::exception& e) {
        std::cerr << "bad json input: " << e.what() << "\n";
        return exit_input;
    }
    return exit_ok;
}
