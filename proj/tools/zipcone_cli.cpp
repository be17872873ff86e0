// Command-line frontend: exact zip-cone computations for GSp_2n over F_p.
//
// Exit codes: 0 success, 1 usage or parse error, 2 resource refusal
// (monomial budget), 3 invariant failure (selftest).

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "zipcone/characters.hpp"
#include "zipcone/hilbert.hpp"
#include "zipcone/selftest.hpp"
#include "zipcone/strata.hpp"
#include "zipcone/symtrans.hpp"
#include "zipcone/weylmod.hpp"
#include "zipcone/zip_cone.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace zipcone;

long long default_budget() {
    if (const char* env = std::getenv("ZIPCONE_DIM_BUDGET")) {
        try {
            return std::stoll(env);
        } catch (const std::exception&) {
            throw std::invalid_argument("ZIPCONE_DIM_BUDGET is not an integer");
        }
    }
    return kDefaultMonomialBudget;
}

json lambda_json(const Character& chi) {
    json arr = json::array();
    for (long long a : chi.a) arr.push_back(a);
    arr.push_back(chi.b);
    return arr;
}

json report_json(const H0Report& rep) {
    json out;
    out["lambda"] = lambda_json(rep.lambda);
    out["p"] = rep.p;
    out["mode"] = to_string(rep.mode);
    out["dim_module"] = rep.dim_module;
    out["dim_invariants"] = rep.dim_invariants;
    out["dim_nonpositive"] = rep.dim_nonpositive;
    out["dim_h0"] = rep.dim_h0;
    out["witness_d"] = nullptr;
    out["skipped_d"] = json::array();
    return out;
}

// Same comma format the --lambda flag accepts.
std::string lambda_text(const Character& chi) {
    std::string s;
    for (long long a : chi.a) s += std::to_string(a) + ",";
    s += std::to_string(chi.b);
    return s;
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << text;
}

struct BoxRange {
    long long lo = 0, hi = 0;
};

std::vector<BoxRange> parse_box(const std::string& text, std::size_t n) {
    std::vector<BoxRange> ranges;
    std::istringstream in(text);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        auto sep = tok.find(':');
        if (sep == std::string::npos)
            throw std::invalid_argument("box ranges use 'lo:hi' per coordinate");
        // lo > hi is an empty range: the scan produces no rows
        ranges.push_back(BoxRange{std::stoll(tok.substr(0, sep)), std::stoll(tok.substr(sep + 1))});
    }
    if (ranges.size() != n)
        throw std::invalid_argument("box must list exactly n ranges");
    return ranges;
}

struct ScanRow {
    Character lambda;
    bool idominant = false;
    bool in_gs = false, in_appro = false;
    std::optional<bool> in_zip3;
    ScanVerdict verdict;
};

int cmd_h0(std::size_t n, uint32_t p, const std::string& lambda_text_arg,
           const std::string& mode_text, long long budget, const std::string& out_path) {
    Character lambda = parse_character(lambda_text_arg);
    if (lambda.rank() != n)
        throw std::invalid_argument("lambda has rank " + std::to_string(lambda.rank()) +
                                    " but --n is " + std::to_string(n));
    H0Report rep = h0_gzip(lambda, p, parse_mode(mode_text), budget);
    write_output(out_path, report_json(rep).dump(2) + "\n");
    return 0;
}

int cmd_scan(std::size_t n, uint32_t p, const std::string& box_text, const std::string& b_policy,
             int d_max, const std::string& mode_text, long long budget, bool idom_only,
             const std::string& format, unsigned jobs, const std::string& out_path) {
    InvarianceMode mode = parse_mode(mode_text);
    auto ranges = parse_box(box_text, n);

    // Deterministic row-major enumeration of the box.
    std::vector<Character> lambdas;
    bool empty_box = false;
    for (const auto& r : ranges)
        if (r.lo > r.hi) empty_box = true;
    std::vector<long long> a(n);
    for (std::size_t i = 0; i < n; ++i) a[i] = ranges[i].lo;
    while (!empty_box) {
        long long asum = 0;
        for (long long ai : a) asum += ai;
        long long b;
        if (b_policy == "parity") b = ((asum % 2) + 2) % 2;
        else b = std::stoll(b_policy);
        // with a fixed b, points violating the parity constraint are not
        // characters at all; they produce no row
        if (parity_ok(a, b)) lambdas.emplace_back(a, b);
        bool done = false;
        std::size_t i = n;
        while (true) {
            if (i == 0) { done = true; break; }
            --i;
            if (++a[i] <= ranges[i].hi) break;
            a[i] = ranges[i].lo;
        }
        if (done) break;
    }

    std::vector<std::optional<ScanRow>> slots(lambdas.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        while (true) {
            std::size_t idx = next.fetch_add(1);
            if (idx >= lambdas.size()) break;
            ScanRow row{lambdas[idx]};
            row.idominant = is_I_dominant(row.lambda);
            row.in_gs = in_gs_cone(row.lambda);
            row.in_appro = in_appro_cone(row.lambda, p);
            if (n == 3) row.in_zip3 = in_zip3_explicit(row.lambda, p);
            if (!idom_only || row.idominant)
                row.verdict = czip_membership_scan(row.lambda, p, mode, d_max, budget);
            slots[idx] = std::move(row);
        }
    };
    if (jobs == 0) jobs = 1;
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < jobs; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    std::ostringstream out;
    auto skipped_join = [](const std::vector<int>& v) {
        std::string s;
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i) s += ";";
            s += std::to_string(v[i]);
        }
        return s;
    };
    if (format == "csv") {
        out << "lambda,p,mode,in_gs,in_appro,in_zip3,verdict,witness_d,skipped_d,"
               "dim_module,dim_invariants,dim_nonpositive,dim_h0\n";
        for (const auto& slot : slots) {
            const ScanRow& row = *slot;
            if (idom_only && !row.idominant) continue;
            out << "\"" << lambda_text(row.lambda) << "\"," << p << "," << to_string(mode) << ","
                << (row.in_gs ? 1 : 0) << "," << (row.in_appro ? 1 : 0) << ",";
            if (row.in_zip3) out << (*row.in_zip3 ? 1 : 0);
            out << "," << (row.verdict.found ? "IN" : "NOT_FOUND") << ",";
            if (row.verdict.found) out << row.verdict.witness_d;
            out << "," << skipped_join(row.verdict.skipped_d) << ",";
            if (row.verdict.witness_report) {
                const auto& rep = *row.verdict.witness_report;
                out << rep.dim_module << "," << rep.dim_invariants << "," << rep.dim_nonpositive
                    << "," << rep.dim_h0;
            } else {
                out << ",,,";
            }
            out << "\n";
        }
    } else {
        json arr = json::array();
        for (const auto& slot : slots) {
            const ScanRow& row = *slot;
            if (idom_only && !row.idominant) continue;
            json j;
            j["lambda"] = lambda_json(row.lambda);
            j["p"] = p;
            j["mode"] = to_string(mode);
            j["in_gs"] = row.in_gs;
            j["in_appro"] = row.in_appro;
            j["in_zip3"] = row.in_zip3 ? json(*row.in_zip3) : json(nullptr);
            j["verdict"] = row.verdict.found ? "IN" : "NOT_FOUND";
            j["witness_d"] = row.verdict.found ? json(row.verdict.witness_d) : json(nullptr);
            j["skipped_d"] = row.verdict.skipped_d;
            j["advisory_bound"] = row.verdict.advisory_bound;
            if (row.verdict.witness_report) {
                const auto& rep = *row.verdict.witness_report;
                j["dim_module"] = rep.dim_module;
                j["dim_invariants"] = rep.dim_invariants;
                j["dim_nonpositive"] = rep.dim_nonpositive;
                j["dim_h0"] = rep.dim_h0;
            }
            arr.push_back(std::move(j));
        }
        out << arr.dump(2) << "\n";
    }
    write_output(out_path, out.str());
    return 0;
}

int cmd_strata(std::size_t n, const std::string& format, const std::string& out_path) {
    StrataPoset poset = build_poset(n);
    if (format == "dot") write_output(out_path, export_dot(poset));
    else write_output(out_path, export_json(poset) + "\n");
    return 0;
}

int cmd_cones(std::size_t n, uint32_t p, const std::string& lambda_text_arg,
              const std::string& out_path) {
    std::vector<ConeDescription> cones{gs_cone(n), appro_cone(n)};
    if (n == 3) cones.push_back(zip3_explicit_cone());
    json out;
    out["n"] = n;
    out["p"] = p;
    json list = json::array();
    std::optional<Character> lambda;
    if (!lambda_text_arg.empty()) {
        lambda = parse_character(lambda_text_arg);
        if (lambda->rank() != n) throw std::invalid_argument("lambda rank does not match --n");
    }
    for (const auto& cone : cones) {
        json c;
        c["name"] = cone.name;
        json ineqs = json::array();
        for (const auto& ineq : cone.inequalities) ineqs.push_back(ineq.to_string());
        c["inequalities"] = ineqs;
        if (lambda) c["contains_lambda"] = cone.contains(*lambda, p);
        list.push_back(std::move(c));
    }
    if (lambda) out["lambda"] = lambda_json(*lambda);
    out["cones"] = std::move(list);
    write_output(out_path, out.dump(2) + "\n");
    return 0;
}

int cmd_hilbert(uint32_t p, const std::string& k_text, long long l, int d_max,
                const std::string& out_path) {
    std::vector<long long> k;
    std::istringstream in(k_text);
    std::string tok;
    while (std::getline(in, tok, ',')) k.push_back(std::stoll(tok));
    if (k.empty()) throw std::invalid_argument("--k needs at least one entry");
    HilbertWeight w{k, l};
    HZipVerdict verdict = hzip_cone_check(w, p, d_max);
    json out;
    out["k"] = w.k;
    out["l"] = w.l;
    out["p"] = p;
    out["d_max"] = d_max;
    out["witness_d"] = verdict.found ? json(verdict.witness_d) : json(nullptr);
    out["verdict"] = verdict.found ? "IN" : "NOT_FOUND";
    out["saturated"] = verdict.saturated_in ? "in" : "out";
    write_output(out_path, out.dump(2) + "\n");
    return 0;
}

int cmd_symtrans_demo(uint64_t seed, const std::string& out_path) {
    json out;
    // Orbit transforms of the sign group on the plane over F_7.
    {
        const uint32_t p = 7;
        MatrixFp minus = MatrixFp::identity(p, 2);
        minus.scale(p - 1);
        FiniteAction pm(p, 2, {MatrixFp::identity(p, 2), minus});
        std::vector<uint32_t> e1{1, 0};
        json demo;
        demo["group"] = "{I, -I} on F_7^2";
        demo["s1(e1)"] = sym_transform(pm, e1, 1).poly.to_string("y");
        demo["s2(e1)"] = sym_transform(pm, e1, 2).poly.to_string("y");
        demo["annihilation"] = annihilation_check(pm, e1);
        out["sign_group"] = std::move(demo);
    }
    // GL_2(F_2) acting on the module of the Hodge-bundle weight.
    {
        DualWeylModule m = build_module(lambda_Omega(2), 2);
        std::vector<MatrixFp> mats;
        for (const auto& g : enumerate_gl(2, 2)) mats.push_back(m.act(g, 1));
        FiniteAction h(2, m.dim(), std::move(mats));
        std::mt19937_64 rng(seed);
        std::vector<uint32_t> x(m.dim());
        for (auto& xi : x) xi = static_cast<uint32_t>(rng() % 2);
        json demo;
        demo["group"] = "GL_2(F_2) on V_I(0,-1;1), |H| = " + std::to_string(h.order());
        demo["x"] = x;
        demo["s1(x)"] = sym_transform(h, x, 1).poly.to_string("y");
        demo["norm(x)"] = orbit_norm(h, x).poly.to_string("y");
        demo["annihilation"] = annihilation_check(h, x);
        out["module_action"] = std::move(demo);
    }
    write_output(out_path, out.dump(2) + "\n");
    return 0;
}

int cmd_selftest(uint64_t seed, const std::string& only) {
    std::ostringstream report;
    bool all_pass = true;
    auto names = selftest::suite_names();
    if (!only.empty() && std::find(names.begin(), names.end(), only) == names.end())
        throw std::invalid_argument("unknown selftest suite '" + only + "'");
    for (const auto& name : names) {
        if (!only.empty() && name != only) continue;
        selftest::SuiteResult result = selftest::run_suite(name, seed);
        std::cerr << "suite " << name << ": " << result.elapsed_ms << " ms\n";
        report << "suite " << result.name << ": " << (result.pass() ? "PASS" : "FAIL") << " ("
               << result.checks.size() << " checks";
        if (!result.pass()) report << ", " << result.failures() << " failed";
        report << ")\n";
        for (const auto& check : result.checks)
            if (!check.pass) {
                report << "  FAIL " << check.name;
                if (!check.detail.empty()) report << ": " << check.detail;
                report << "\n";
            }
        all_pass = all_pass && result.pass();
    }
    report << "selftest: " << (all_pass ? "PASS" : "FAIL") << "\n";
    std::cout << report.str();
    return all_pass ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact zip-cone computations for GSp_2n over F_p"};
    app.require_subcommand(1);

    std::size_t n = 3;
    uint32_t p = 2;
    std::string lambda_arg, mode_arg = "GLn_only", out_path;
    long long budget = 0;  // 0: resolve from env/default at dispatch

    auto* h0 = app.add_subcommand("h0", "Zip-level H^0 dimensions for one weight");
    h0->add_option("--n", n, "rank")->required();
    h0->add_option("--p", p, "prime")->required();
    h0->add_option("--lambda", lambda_arg, "weight a_1,...,a_n,b")->required();
    h0->add_option("--mode", mode_arg, "GLn_only or full_L");
    h0->add_option("--budget", budget, "monomial budget");
    h0->add_option("-o,--output", out_path, "output file");

    std::string box_arg, b_policy = "parity", format_arg = "csv";
    int d_max = 4;
    bool idom_only = false;
    unsigned jobs = std::thread::hardware_concurrency();
    auto* scan = app.add_subcommand("scan", "Membership scan over a box of weights");
    scan->add_option("--n", n, "rank")->required();
    scan->add_option("--p", p, "prime")->required();
    scan->add_option("--box", box_arg, "per-coordinate ranges lo:hi,lo:hi,...")->required();
    scan->add_option("--b", b_policy, "'parity' or a fixed integer value");
    scan->add_option("--dmax", d_max, "largest multiple to try");
    scan->add_option("--mode", mode_arg, "GLn_only or full_L");
    scan->add_option("--budget", budget, "monomial budget");
    scan->add_flag("--idom-only", idom_only, "only I-dominant weights");
    scan->add_option("--format", format_arg, "csv or json");
    scan->add_option("--jobs", jobs, "worker threads");
    scan->add_option("-o,--output", out_path, "output file");

    std::string strata_format = "dot";
    auto* strata = app.add_subcommand("strata", "Ekedahl-Oort strata poset");
    strata->add_option("--n", n, "rank")->required();
    strata->add_option("--format", strata_format, "dot or json");
    strata->add_option("-o,--output", out_path, "output file");

    auto* cones = app.add_subcommand("cones", "Print cone inequalities and memberships");
    cones->add_option("--n", n, "rank")->required();
    cones->add_option("--p", p, "prime")->required();
    cones->add_option("--lambda", lambda_arg, "optional weight a_1,...,a_n,b");
    cones->add_option("-o,--output", out_path, "output file");

    std::string k_arg;
    long long l_arg = 0;
    auto* hilbert = app.add_subcommand("hilbert", "Split Hilbert zip-cone check");
    hilbert->add_option("--p", p, "prime")->required();
    hilbert->add_option("--k", k_arg, "weights k_1,...,k_n")->required();
    hilbert->add_option("--l", l_arg, "similitude exponent");
    hilbert->add_option("--dmax", d_max, "largest multiple to try");
    hilbert->add_option("-o,--output", out_path, "output file");

    uint64_t seed = 42;
    auto* demo = app.add_subcommand("symtrans-demo", "Symmetric transform demonstration");
    demo->add_option("--seed", seed, "random seed");
    demo->add_option("-o,--output", out_path, "output file");

    std::string only;
    auto* selftest_cmd = app.add_subcommand("selftest", "Run the invariant suites");
    selftest_cmd->add_option("--seed", seed, "random seed");
    selftest_cmd->add_option("--only", only, "run a single suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);  // prints the usage message
        return 1;
    }

    try {
        if (budget == 0) budget = default_budget();
        if (h0->parsed()) return cmd_h0(n, p, lambda_arg, mode_arg, budget, out_path);
        if (scan->parsed())
            return cmd_scan(n, p, box_arg, b_policy, d_max, mode_arg, budget, idom_only,
                            format_arg, jobs, out_path);
        if (strata->parsed()) return cmd_strata(n, strata_format, out_path);
        if (cones->parsed()) return cmd_cones(n, p, lambda_arg, out_path);
        if (hilbert->parsed()) return cmd_hilbert(p, k_arg, l_arg, d_max, out_path);
        if (demo->parsed()) return cmd_symtrans_demo(seed, out_path);
        if (selftest_cmd->parsed()) return cmd_selftest(seed, only);
    } catch (const budget_error& e) {
        std::cerr << "resource refusal: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
