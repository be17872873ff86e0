#include "zipcone/selftest.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "zipcone/characters.hpp"
#include "zipcone/fp_linalg.hpp"
#include "zipcone/hilbert.hpp"
#include "zipcone/strata.hpp"
#include "zipcone/symtrans.hpp"
#include "zipcone/weyl.hpp"
#include "zipcone/weylmod.hpp"
#include "zipcone/zip_cone.hpp"

namespace zipcone::selftest {

bool SuiteResult::pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

std::size_t SuiteResult::failures() const {
    std::size_t k = 0;
    for (const auto& c : checks)
        if (!c.pass) ++k;
    return k;
}

namespace {

class Suite {
  public:
    explicit Suite(uint64_t seed) : rng_(seed) {}

    void check(const std::string& name, bool cond, const std::string& detail = "") {
        checks_.push_back(CheckResult{name, cond, cond ? "" : detail});
    }

    std::mt19937_64& rng() { return rng_; }

    uint64_t below(uint64_t m) { return rng_() % m; }
    long long range(long long lo, long long hi) {  // inclusive
        return lo + static_cast<long long>(below(static_cast<uint64_t>(hi - lo + 1)));
    }

    MatrixFp random_matrix(uint32_t p, std::size_t rows, std::size_t cols) {
        MatrixFp m(p, rows, cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = static_cast<uint32_t>(below(p));
        return m;
    }

    MatrixFp random_invertible(uint32_t p, std::size_t n) {
        while (true) {
            MatrixFp m = random_matrix(p, n, n);
            if (m.det() != 0) return m;
        }
    }

    Character random_character(std::size_t n, long long lo, long long hi) {
        std::vector<long long> a(n);
        for (auto& ai : a) ai = range(lo, hi);
        long long asum = 0;
        for (long long ai : a) asum += ai;
        long long b = ((asum % 2) + 2) % 2 + 2 * range(-2, 2);
        return Character(std::move(a), b);
    }

    std::vector<CheckResult> take() { return std::move(checks_); }

  private:
    std::mt19937_64 rng_;
    std::vector<CheckResult> checks_;
};

// ---------------------------------------------------------------- weyl

void suite_weyl(Suite& s) {
    for (std::size_t n = 1; n <= 6; ++n) {
        auto iw = enumerate_IW(n);
        s.check("IW cardinality n=" + std::to_string(n), iw.size() == (1u << n));
        bool min_reps = true;
        for (const auto& w : iw) {
            std::size_t lw = weyl_length(w);
            for (std::size_t i = 1; i < n; ++i)
                if (weyl_length(WeylElement::simple_reflection(n, i) * w) <= lw) min_reps = false;
        }
        s.check("IW left-descent property n=" + std::to_string(n), min_reps);
        s.check("frame element length n=" + std::to_string(n),
                weyl_length(frame_element(n)) == n * (n + 1) / 2);
        s.check("longest element length n=" + std::to_string(n),
                weyl_length(WeylElement::longest(n)) == n * n);
        s.check("levi longest length n=" + std::to_string(n),
                weyl_length(WeylElement::longest_levi(n)) == n * (n - 1) / 2);
    }

    {
        auto iw = enumerate_IW(3);
        std::multiset<std::size_t> lengths;
        for (const auto& w : iw) lengths.insert(weyl_length(w));
        s.check("IW length multiset n=3",
                lengths == std::multiset<std::size_t>{0, 1, 2, 3, 3, 4, 5, 6});
    }

    // preceq is a partial order on ^I W, exhaustively for n <= 4.
    for (std::size_t n = 1; n <= 4; ++n) {
        auto iw = enumerate_IW(n);
        bool refl = true, antisym = true, trans = true;
        std::vector<std::vector<bool>> rel(iw.size(), std::vector<bool>(iw.size()));
        for (std::size_t i = 0; i < iw.size(); ++i)
            for (std::size_t j = 0; j < iw.size(); ++j) rel[i][j] = preceq(iw[i], iw[j]);
        for (std::size_t i = 0; i < iw.size(); ++i) {
            if (!rel[i][i]) refl = false;
            for (std::size_t j = 0; j < iw.size(); ++j) {
                if (i != j && rel[i][j] && rel[j][i]) antisym = false;
                for (std::size_t k = 0; k < iw.size(); ++k)
                    if (rel[i][j] && rel[j][k] && !rel[i][k]) trans = false;
            }
        }
        s.check("preceq partial order n=" + std::to_string(n), refl && antisym && trans);
    }

    // Bruhat order vs the exhaustive subword criterion for n <= 3.
    for (std::size_t n = 1; n <= 3; ++n) {
        bool agree = true;
        auto all = enumerate_weyl(n);
        for (const auto& w2 : all) {
            auto word = reduced_word(w2);
            std::set<WeylElement> below;
            for (std::size_t mask = 0; mask < (1u << word.size()); ++mask) {
                WeylElement prod = WeylElement::identity(n);
                for (std::size_t i = 0; i < word.size(); ++i)
                    if (mask >> i & 1) prod = prod * WeylElement::simple_reflection(n, word[i]);
                below.insert(prod);
            }
            for (const auto& w1 : all)
                if (bruhat_leq(w1, w2) != (below.count(w1) > 0)) agree = false;
        }
        s.check("bruhat vs subword oracle n=" + std::to_string(n), agree);
    }

    // Reduced words and length subadditivity.
    {
        bool words_ok = true, subadd = true;
        auto all = enumerate_weyl(3);
        for (const auto& w : all) {
            auto word = reduced_word(w);
            if (word.size() != weyl_length(w)) words_ok = false;
            WeylElement prod = WeylElement::identity(3);
            for (std::size_t i : word) prod = prod * WeylElement::simple_reflection(3, i);
            if (!(prod == w)) words_ok = false;
        }
        for (int trial = 0; trial < 300; ++trial) {
            const auto& w1 = all[s.below(all.size())];
            const auto& w2 = all[s.below(all.size())];
            if (weyl_length(w1 * w2) > weyl_length(w1) + weyl_length(w2)) subadd = false;
        }
        s.check("greedy reduced words n=3", words_ok);
        s.check("length subadditivity n=3", subadd);
    }
}

// ---------------------------------------------------------- characters

void suite_characters(Suite& s) {
    // zip3 containment in appro, exhaustively on a box.
    {
        bool ok = true;
        for (uint32_t p : {2u, 3u, 5u})
            for (long long a1 = -4; a1 <= 4; ++a1)
                for (long long a2 = -4; a2 <= a1; ++a2)
                    for (long long a3 = -4; a3 <= a2; ++a3) {
                        Character chi({a1, a2, a3}, ((a1 + a2 + a3) % 2 + 2) % 2);
                        if (in_zip3_explicit(chi, p) && !in_appro_cone(chi, p)) ok = false;
                    }
        s.check("zip3 implies appro", ok);
    }

    // W-equivariance of the pairing, all of W for n <= 3.
    for (std::size_t n = 1; n <= 3; ++n) {
        bool ok = true;
        RootDatum datum(n);
        for (int trial = 0; trial < 5; ++trial) {
            Character chi = s.random_character(n, -3, 3);
            for (const auto& w : enumerate_weyl(n))
                for (const auto& cv : datum.positive_coroots) {
                    Character wchi = chi.acted_by(w);
                    std::vector<long long> wcv = w.act(cv);
                    if (pair(wchi, wcv) != pair(chi, cv)) ok = false;
                }
        }
        s.check("pairing W-equivariance n=" + std::to_string(n), ok);
    }

    // Parity survives scaling and Levi permutation of the a-coordinates.
    {
        bool ok = true;
        for (int trial = 0; trial < 50; ++trial) {
            Character chi = s.random_character(3, -4, 4);
            long long d = s.range(0, 5);
            if (!parity_ok((chi * d).a, (chi * d).b)) ok = false;
            auto levi = enumerate_levi(3);
            const auto& v = levi[s.below(levi.size())];
            if (!parity_ok(chi.acted_by(v).a, chi.acted_by(v).b)) ok = false;
        }
        s.check("parity preserved by scaling and W_I", ok);
    }

    // The explicit GS chain equals the root-theoretic description.
    for (std::size_t n = 1; n <= 3; ++n) {
        bool ok = true;
        RootDatum datum(n);
        std::vector<long long> a(n, -3);
        while (true) {
            Character chi(a, ((std::accumulate(a.begin(), a.end(), 0LL)) % 2 + 2) % 2);
            bool via_pair = true;
            for (std::size_t r = 0; r < datum.positive_roots.size(); ++r) {
                bool levi_root = false;
                for (const auto& lr : datum.levi_positive_roots)
                    if (lr == datum.positive_roots[r]) levi_root = true;
                long long v = pair(chi, datum.positive_coroots[r]);
                if (levi_root ? v < 0 : v > 0) via_pair = false;
            }
            if (via_pair != in_gs_cone(chi)) ok = false;
            std::size_t i = 0;
            while (i < n && ++a[i] > 3) a[i++] = -3;
            if (i == n) break;
        }
        s.check("gs cone matches root form n=" + std::to_string(n), ok);
    }
}

// ----------------------------------------------------------- fp_linalg

void suite_fp_linalg(Suite& s) {
    bool canonical = true, ranknull = true, inter = true, solve = true;
    for (uint32_t p : {2u, 3u, 5u}) {
        for (int trial = 0; trial < 20; ++trial) {
            // Echelon canonicity: mixing rows by an invertible matrix does
            // not change the canonical basis.
            std::size_t d = 6, k = 1 + s.below(4);
            MatrixFp gen = s.random_matrix(p, k, d);
            MatrixFp mix = s.random_invertible(p, k);
            if (!(SubspaceFp::span(gen) == SubspaceFp::span(mix * gen))) canonical = false;

            MatrixFp m = s.random_matrix(p, 2 + s.below(5), 2 + s.below(5));
            if (rank(m) + nullspace(m).dim() != m.cols()) ranknull = false;

            SubspaceFp u = SubspaceFp::span(s.random_matrix(p, 1 + s.below(3), d));
            SubspaceFp v = SubspaceFp::span(s.random_matrix(p, 1 + s.below(3), d));
            SubspaceFp w = SubspaceFp::span(s.random_matrix(p, 1 + s.below(3), d));
            if (!(intersect(u, v) == intersect(v, u))) inter = false;
            if (!(intersect(intersect(u, v), w) == intersect(u, intersect(v, w)))) inter = false;
            if (!(intersect(u, SubspaceFp::full(p, d)) == u)) inter = false;
            if (!(intersect(u, u) == u)) inter = false;
            if (intersect(u, v).dim() + subspace_sum(u, v).dim() != u.dim() + v.dim())
                inter = false;

            // solve_in_span roundtrip on an independent basis.
            SubspaceFp basis = SubspaceFp::span(s.random_matrix(p, 3, d));
            if (basis.dim() > 0) {
                std::vector<uint32_t> coords(basis.dim());
                for (auto& c : coords) c = static_cast<uint32_t>(s.below(p));
                std::vector<uint32_t> vec(d, 0);
                for (std::size_t i = 0; i < basis.dim(); ++i)
                    for (std::size_t j = 0; j < d; ++j)
                        vec[j] = fp::add(vec[j], fp::mul(coords[i], basis.basis().at(i, j), p), p);
                auto back = solve_in_span(basis.basis(), vec);
                if (!back || *back != coords) solve = false;
            }
        }
    }
    s.check("echelon canonicity", canonical);
    s.check("rank plus nullity", ranknull);
    s.check("intersection algebra", inter);
    s.check("solve_in_span roundtrip", solve);
}

// ------------------------------------------------------------- weylmod

void all_partitions(std::size_t max_parts, long long max_size, Partition& cur,
                    std::vector<Partition>& out) {
    if (cur.size() == max_parts) {
        out.push_back(cur);
        return;
    }
    long long cap = cur.empty() ? max_size : std::min<long long>(cur.back(), max_size - partition_size(cur));
    for (long long next = 0; next <= cap; ++next) {
        cur.push_back(next);
        all_partitions(max_parts, max_size, cur, out);
        cur.pop_back();
    }
}

// Independent SSYT oracle: enumerate every filling and test the defining
// inequalities directly.
unsigned long long brute_force_ssyt_count(const Partition& mu, std::size_t n,
                                          std::map<std::vector<long long>, unsigned long long>* kostka) {
    std::vector<std::pair<std::size_t, std::size_t>> cells;
    for (std::size_t i = 0; i < mu.size(); ++i)
        for (long long j = 0; j < mu[i]; ++j) cells.emplace_back(i, static_cast<std::size_t>(j));
    std::vector<uint8_t> fill(cells.size(), 1);
    unsigned long long count = 0;
    while (true) {
        auto entry = [&](std::size_t r, std::size_t c) -> int {
            for (std::size_t t = 0; t < cells.size(); ++t)
                if (cells[t].first == r && cells[t].second == c) return fill[t];
            return -1;
        };
        bool ok = true;
        for (std::size_t t = 0; t < cells.size() && ok; ++t) {
            auto [r, c] = cells[t];
            if (c > 0 && entry(r, c - 1) > fill[t]) ok = false;
            if (r > 0 && entry(r - 1, c) >= fill[t]) ok = false;
        }
        if (ok) {
            ++count;
            if (kostka) {
                std::vector<long long> content(n, 0);
                for (std::size_t t = 0; t < cells.size(); ++t) ++content[fill[t] - 1];
                ++(*kostka)[content];
            }
        }
        std::size_t i = 0;
        while (i < fill.size() && ++fill[i] > n) fill[i++] = 1;
        if (i == fill.size()) break;
        if (fill.empty()) break;
    }
    if (cells.empty()) return 1;
    return count;
}

void suite_weylmod(Suite& s) {
    // Dimension oracle: module dim = hook content = brute-force fillings,
    // and weight multiplicities are the Kostka numbers.
    {
        bool dims = true, kostka_ok = true;
        for (std::size_t n = 1; n <= 3; ++n) {
            std::vector<Partition> mus;
            Partition cur;
            all_partitions(n, 8, cur, mus);
            for (const auto& mu : mus) {
                std::map<std::vector<long long>, unsigned long long> kostka;
                unsigned long long brute = brute_force_ssyt_count(mu, n, &kostka);
                unsigned long long hooks = hook_content_count(mu, n);
                for (uint32_t p : {2u, 3u}) {
                    std::vector<long long> a(mu.begin(), mu.end());
                    Character lambda(a, partition_size(mu));
                    DualWeylModule m = build_module(lambda, p);
                    if (m.dim() != brute || m.dim() != hooks) dims = false;
                    std::map<std::vector<long long>, unsigned long long> mults;
                    for (std::size_t i = 0; i < m.dim(); ++i) ++mults[m.weight_of(i).a];
                    if (mults != kostka) kostka_ok = false;
                }
            }
        }
        s.check("dimension oracle |mu| <= 8", dims);
        s.check("weight multiplicities are Kostka numbers", kostka_ok);
    }

    // Highest-weight line: one-dimensional and fixed by the upper
    // unipotent subgroup over F_p.
    {
        bool ok = true;
        for (uint32_t p : {2u, 3u}) {
            for (const Character& lambda :
                 {lambda_Omega(3), Character({2, 1, 0}, 3), Character({3, 1, -1}, 3)}) {
                DualWeylModule m = build_module(lambda, p);
                auto spaces = weight_spaces(m);
                auto it = spaces.find(lambda);
                if (it == spaces.end() || it->second.dim() != 1) { ok = false; continue; }
                std::size_t hw_index = m.dim();
                for (std::size_t i = 0; i < m.dim(); ++i)
                    if (m.weight_of(i) == lambda) hw_index = i;
                for (uint32_t u12 = 0; u12 < p; ++u12)
                    for (uint32_t u13 = 0; u13 < p; ++u13)
                        for (uint32_t u23 = 0; u23 < p; ++u23) {
                            MatrixFp g = MatrixFp::identity(p, 3);
                            g.at(0, 1) = u12;
                            g.at(0, 2) = u13;
                            g.at(1, 2) = u23;
                            MatrixFp a = m.act(g, 1);
                            std::vector<uint32_t> e(m.dim(), 0);
                            e[hw_index] = 1;
                            if (a.apply(e) != e) ok = false;
                        }
            }
        }
        s.check("highest-weight line fixed by upper unipotents", ok);
    }

    // Bideterminant independence: the carrier matrix has full rank.
    {
        bool ok = true;
        for (const Character& lambda : {Character({2, 1, 0}, 3), Character({2, 0, -1}, 1)}) {
            DualWeylModule m = build_module(lambda, 2);
            std::map<Monomial, std::size_t> cols;
            for (const auto& poly : m.carrier())
                for (const auto& [mono, c] : poly.terms()) cols.emplace(mono, cols.size());
            MatrixFp mat(m.p(), m.dim(), cols.size());
            for (std::size_t i = 0; i < m.dim(); ++i)
                for (const auto& [mono, c] : m.carrier()[i].terms()) mat.at(i, cols[mono]) = c;
            if (rank(mat) != m.dim()) ok = false;
        }
        s.check("bideterminant basis independence", ok);
    }

    // Homomorphism property on seeded random pairs.
    {
        bool ok = true;
        struct Config { std::size_t n; uint32_t p; Character lambda; };
        std::vector<Config> configs{{2, 2, Character({1, 0}, 1)},
                                    {2, 3, Character({1, 0}, 1)},
                                    {2, 3, lambda_Omega(2)},
                                    {3, 2, Character({1, 0, -1}, 2)}};
        for (const auto& cfg : configs) {
            DualWeylModule m = build_module(cfg.lambda, cfg.p);
            for (int trial = 0; trial < 20; ++trial) {
                MatrixFp g = s.random_invertible(cfg.p, cfg.n);
                MatrixFp h = s.random_invertible(cfg.p, cfg.n);
                uint32_t c1 = 1 + static_cast<uint32_t>(s.below(cfg.p - 1));
                uint32_t c2 = 1 + static_cast<uint32_t>(s.below(cfg.p - 1));
                if (!(m.act(g * h, fp::mul(c1, c2, cfg.p)) == m.act(g, c1) * m.act(h, c2)))
                    ok = false;
            }
        }
        s.check("action is a homomorphism", ok);
    }

    // Torus elements act diagonally by the weight.
    {
        bool ok = true;
        for (uint32_t p : {3u, 5u}) {
            DualWeylModule m = build_module(Character({2, 0, -1}, 1), p);
            for (int trial = 0; trial < 10; ++trial) {
                std::vector<uint32_t> t(3);
                for (auto& ti : t) ti = 1 + static_cast<uint32_t>(s.below(p - 1));
                uint32_t c = 1 + static_cast<uint32_t>(s.below(p - 1));
                MatrixFp g(p, 3, 3);
                for (std::size_t i = 0; i < 3; ++i) g.at(i, i) = t[i];
                MatrixFp a = m.act(g, c);
                for (std::size_t i = 0; i < m.dim(); ++i) {
                    const Character& chi = m.weight_of(i);
                    long long asum = 0;
                    for (long long ai : chi.a) asum += ai;
                    uint32_t expect = fp::pow_signed(c, (chi.b - asum) / 2, p);
                    for (std::size_t j = 0; j < 3; ++j)
                        expect = fp::mul(expect, fp::pow_signed(t[j], chi.a[j], p), p);
                    for (std::size_t r = 0; r < m.dim(); ++r)
                        if (a.at(r, i) != (r == i ? expect : 0)) ok = false;
                }
            }
        }
        s.check("torus acts by the weight", ok);
    }

    // Weights are combinatorial: identical for p = 2 and p = 3.
    {
        bool ok = true;
        for (const Character& lambda : {Character({2, 1, 0}, 3), lambda_Omega(3)}) {
            auto w2 = weight_spaces(build_module(lambda, 2));
            auto w3 = weight_spaces(build_module(lambda, 3));
            if (w2.size() != w3.size()) ok = false;
            auto it2 = w2.begin();
            auto it3 = w3.begin();
            for (; it2 != w2.end() && it3 != w3.end(); ++it2, ++it3)
                if (!(it2->first == it3->first) || it2->second.dim() != it3->second.dim())
                    ok = false;
        }
        s.check("weights independent of p", ok);
    }
}

// ------------------------------------------------------------- zipcone

void suite_zipcone(Suite& s) {
    {
        bool ok = true;
        for (auto [n, p] : std::vector<std::pair<std::size_t, uint32_t>>{
                 {1, 2}, {1, 3}, {2, 2}, {2, 3}, {3, 2}, {3, 3}})
            if (!verify_generators(n, p)) ok = false;
        s.check("generator certification", ok);
    }

    // Kernel identity and W_L-stability on a sampled family of modules.
    {
        bool kernel = true, stability = true, containment = true;
        std::vector<std::pair<Character, uint32_t>> samples;
        for (uint32_t p : {2u, 3u})
            for (long long a1 = -2; a1 <= 1; ++a1)
                for (long long a2 = -2; a2 <= a1; ++a2)
                    samples.emplace_back(Character({a1, a2}, ((a1 + a2) % 2 + 2) % 2), p);
        samples.emplace_back(lambda_Omega(3), 2);
        samples.emplace_back(Character({1, 0, 0}, 1), 2);
        for (const auto& [lambda, p] : samples) {
            DualWeylModule m = build_module(lambda, p);
            SubspaceFp inv = invariants(m, InvarianceMode::GLnOnly);
            SubspaceFp nonpos = nonpositive_part(m);
            SubspaceFp h0 = intersect(inv, nonpos);
            AutVanSplit split = aut_van_split(m);
            // kernel of pr_van restricted to the invariants: coordinates c
            // with pr_van (B^T c) = 0 for B the invariant basis rows
            SubspaceFp ker_coords = nullspace(split.pr_van * inv.basis().transpose());
            MatrixFp ker_ambient(p, ker_coords.dim(), m.dim());
            for (std::size_t r = 0; r < ker_coords.dim(); ++r)
                for (std::size_t j = 0; j < m.dim(); ++j) {
                    uint32_t acc = 0;
                    for (std::size_t i = 0; i < inv.dim(); ++i)
                        acc = fp::add(acc, fp::mul(ker_coords.basis().at(r, i),
                                                   inv.basis().at(i, j), p), p);
                    ker_ambient.at(r, j) = acc;
                }
            if (!(h0 == SubspaceFp::span(std::move(ker_ambient)))) kernel = false;
            if (!(h0 == intersect(inv, split.aut))) stability = false;
            if (h0.dim() > 0 && !in_appro_cone(lambda, p)) containment = false;
        }
        s.check("kernel identity for pr_van", kernel);
        s.check("invariants meet nonpositive within aut part", stability);
        s.check("h0 nonzero only inside appro cone", containment);
    }

    // Mode consistency under saturation.
    {
        bool ok = true;
        for (uint32_t p : {2u, 3u}) {
            std::vector<Character> lams{lambda_omega(2), Character({0, -2}, 2),
                                        Character({-1, -1}, 0)};
            for (const auto& lambda : lams) {
                auto full = czip_membership_scan(lambda, p, InvarianceMode::FullL, 2 * (p - 1));
                auto gl = czip_membership_scan(lambda, p, InvarianceMode::GLnOnly, 2 * (p - 1));
                if (full.found && (!gl.found || gl.witness_d > full.witness_d)) ok = false;
                if (gl.found) {
                    auto rep = h0_gzip(lambda * (gl.witness_d * (p - 1)), p, InvarianceMode::FullL);
                    if (rep.dim_h0 == 0) ok = false;
                }
            }
        }
        s.check("mode consistency under saturation", ok);
    }

    // Light n=3 vanishing box (the acceptance suite runs the full box).
    {
        bool ok = true;
        const uint32_t p = 2;
        for (long long a1 = -1; a1 <= 1; ++a1)
            for (long long a2 = -1; a2 <= a1; ++a2)
                for (long long a3 = -1; a3 <= a2; ++a3) {
                    Character lambda({a1, a2, a3}, ((a1 + a2 + a3) % 2 + 2) % 2);
                    if (in_zip3_explicit(lambda, p)) continue;
                    for (int d = 1; d <= 2; ++d)
                        if (h0_gzip(lambda * d, p, InvarianceMode::GLnOnly).dim_h0 != 0) ok = false;
                }
        s.check("n=3 vanishing outside explicit cone (small box)", ok);
    }
}

// -------------------------------------------------------------- strata

void suite_strata(Suite& s) {
    for (std::size_t n = 1; n <= 4; ++n) {
        StrataPoset poset = build_poset(n);
        const std::size_t count = poset.elements.size();
        const std::size_t top = count - 1;

        bool order_ok = true;
        for (std::size_t i = 0; i < count; ++i) {
            if (!poset.closure[i][i]) order_ok = false;
            for (std::size_t j = 0; j < count; ++j) {
                if (i != j && poset.closure[i][j] && poset.closure[j][i]) order_ok = false;
                for (std::size_t k = 0; k < count; ++k)
                    if (poset.closure[i][j] && poset.closure[j][k] && !poset.closure[i][k])
                        order_ok = false;
            }
        }
        s.check("closure is a partial order n=" + std::to_string(n), order_ok);

        bool extremes = true;
        for (std::size_t i = 0; i < count; ++i) {
            if (!poset.closure[i][top]) extremes = false;  // unique maximal element
            if (!poset.closure[0][i]) extremes = false;    // identity is minimal
        }
        if (!(poset.elements[top] == frame_element(n))) extremes = false;
        if (poset.dim[top] != poset.dim_G) extremes = false;
        if (poset.dim[0] != poset.dim_P) extremes = false;
        s.check("extreme strata n=" + std::to_string(n), extremes);

        bool codim = true;
        for (std::size_t i = 0; i < count; ++i)
            if (poset.dim_G - poset.dim[i] !=
                static_cast<long long>(n * (n + 1) / 2 - poset.length[i]))
                codim = false;
        s.check("codimension formula n=" + std::to_string(n), codim);

        // The top stratum covers only codimension-one strata.
        bool boundary = true;
        for (const auto& [below, above] : covering_relations(poset))
            if (above == top && poset.length[below] != n * (n + 1) / 2 - 1) boundary = false;
        s.check("non-ordinary boundary has codimension one n=" + std::to_string(n), boundary);

        // Bruhat order refines into the twisted order.
        bool refine = true, monotone = true;
        for (std::size_t i = 0; i < count; ++i)
            for (std::size_t j = 0; j < count; ++j) {
                if (bruhat_leq(poset.elements[i], poset.elements[j]) && !poset.closure[i][j])
                    refine = false;
                if (i != j && poset.closure[i][j] && poset.length[i] >= poset.length[j])
                    monotone = false;
            }
        s.check("bruhat implies preceq n=" + std::to_string(n), refine);
        s.check("length strictly increases along preceq n=" + std::to_string(n), monotone);
    }

    {
        StrataPoset poset = build_poset(2);
        bool chain = poset.elements.size() == 4;
        for (std::size_t i = 0; i < 4 && chain; ++i)
            for (std::size_t j = 0; j < 4; ++j)
                if ((i <= j) != static_cast<bool>(poset.closure[i][j])) chain = false;
        s.check("n=2 poset is a 4-chain", chain);
    }
}

// ------------------------------------------------------------ symtrans

FiniteAction cyclic_closure(const MatrixFp& g) {
    std::vector<MatrixFp> elems{MatrixFp::identity(g.p(), g.rows())};
    MatrixFp cur = g;
    while (!(cur == elems[0])) {
        elems.push_back(cur);
        cur = cur * g;
    }
    return FiniteAction(g.p(), g.rows(), std::move(elems));
}

void suite_symtrans(Suite& s) {
    // Trivial group identities.
    {
        FiniteAction trivial(5, 2, {MatrixFp::identity(5, 2)});
        std::vector<uint32_t> x{2, 3};
        SymElement s1 = sym_transform(trivial, x, 1);
        bool ok = s1.poly == Polynomial::linear(5, x).scaled(fp::neg(1, 5));
        ok = ok && orbit_norm(trivial, x).poly == Polynomial::linear(5, x);
        ok = ok && orbit_trace(trivial, x) == x;
        ok = ok && annihilation_check(trivial, x);
        s.check("trivial group identities", ok);
    }

    // The group {I, -I} in odd characteristic.
    {
        const uint32_t p = 7;
        MatrixFp minus = MatrixFp::identity(p, 2);
        minus.scale(p - 1);
        FiniteAction pm(p, 2, {MatrixFp::identity(p, 2), minus});
        std::vector<uint32_t> e1{1, 0};
        bool ok = sym_transform(pm, e1, 1).is_zero();
        Polynomial e1sq = Polynomial::variable(p, 2, 0) * Polynomial::variable(p, 2, 0);
        ok = ok && sym_transform(pm, e1, 2).poly == e1sq.scaled(fp::neg(1, p));
        ok = ok && orbit_trace(pm, e1) == std::vector<uint32_t>{0, 0};
        ok = ok && orbit_norm(pm, e1).poly == e1sq.scaled(fp::neg(1, p));
        ok = ok && annihilation_check(pm, e1);
        std::vector<uint32_t> zero{0, 0};
        for (std::size_t d = 1; d <= 2; ++d)
            ok = ok && sym_transform(pm, zero, d).is_zero();
        s.check("plus-minus identity group", ok);
    }

    // Cyclic group of order 3 in GL_2(F_7).
    {
        MatrixFp a(7, 2, 2);
        a.set(0, 0, 0); a.set(0, 1, -1);
        a.set(1, 0, 1); a.set(1, 1, -1);
        FiniteAction cyc = cyclic_closure(a);
        bool ok = cyc.order() == 3;
        for (int trial = 0; trial < 10; ++trial) {
            std::vector<uint32_t> x{static_cast<uint32_t>(s.below(7)),
                                    static_cast<uint32_t>(s.below(7))};
            ok = ok && annihilation_check(cyc, x);
        }
        s.check("order-3 cyclic group in GL_2(F_7)", ok);
    }

    // Random instances: annihilation, orbit invariance of the values,
    // invariance as elements of Sym^d, and the norm/trace relations.
    {
        bool annihilation = true, value_inv = true, elem_inv = true, relations = true,
             norm_nonzero = true;
        int instances = 0;
        while (instances < 110) {
            uint32_t p = std::vector<uint32_t>{2, 3, 5, 7}[s.below(4)];
            std::size_t dim = 2 + s.below(3);
            MatrixFp g = s.random_invertible(p, dim);
            // keep |H| <= 12 by rejecting large cyclic closures
            std::size_t order = 1;
            MatrixFp cur = g;
            const MatrixFp id = MatrixFp::identity(p, dim);
            while (!(cur == id) && order <= 12) {
                cur = cur * g;
                ++order;
            }
            if (order > 12) continue;
            FiniteAction h = cyclic_closure(g);
            ++instances;
            std::vector<uint32_t> x(dim);
            for (auto& xi : x) xi = static_cast<uint32_t>(s.below(p));
            if (!annihilation_check(h, x)) annihilation = false;

            std::size_t d = 1 + s.below(h.order());
            SymElement val = sym_transform(h, x, d);
            for (std::size_t idx = 0; idx < h.order(); ++idx) {
                if (!(sym_transform(h, h.elements()[idx].apply(x), d) == val)) value_inv = false;
                if (!(apply_to_sym(h, idx, val) == val)) elem_inv = false;
            }

            SymElement norm = orbit_norm(h, x);
            SymElement sN = sym_transform(h, x, h.order());
            uint32_t sign = (h.order() % 2 == 0) ? 1 : fp::neg(1, p);
            if (!(norm.poly == sN.poly.scaled(sign))) relations = false;
            if (!(Polynomial::linear(p, orbit_trace(h, x)) ==
                  sym_transform(h, x, 1).poly.scaled(fp::neg(1, p))))
                relations = false;
            bool xzero = std::all_of(x.begin(), x.end(), [](uint32_t v) { return v == 0; });
            if (!xzero && norm.is_zero()) norm_nonzero = false;
        }
        s.check("annihilation on random instances", annihilation);
        s.check("transform values are orbit invariants", value_inv);
        s.check("transform values are fixed in Sym(V)", elem_inv);
        s.check("norm and trace relations", relations);
        s.check("norm of nonzero vector is nonzero", norm_nonzero);
    }

    // The full groups GL_2(F_2) and GL_2(F_3) acting on the module of the
    // Hodge-bundle weight.
    {
        bool ok = true;
        for (uint32_t p : {2u, 3u}) {
            DualWeylModule m = build_module(lambda_Omega(2), p);
            std::vector<MatrixFp> mats;
            for (const auto& g : enumerate_gl(2, p)) mats.push_back(m.act(g, 1));
            FiniteAction h(p, m.dim(), std::move(mats));
            if (h.order() != gl_order(2, p)) ok = false;
            for (int trial = 0; trial < 5; ++trial) {
                std::vector<uint32_t> x(m.dim());
                for (auto& xi : x) xi = static_cast<uint32_t>(s.below(p));
                if (!annihilation_check(h, x)) ok = false;
                SymElement val = sym_transform(h, x, 1 + s.below(4));
                for (std::size_t idx = 0; idx < h.order(); ++idx)
                    if (!(sym_transform(h, h.elements()[idx].apply(x), val.degree) == val))
                        ok = false;
            }
        }
        s.check("module actions of GL_2(F_2) and GL_2(F_3)", ok);
    }
}

// ------------------------------------------------------------- hilbert

void suite_hilbert(Suite& s) {
    // Exhaustive n=1 over F_2, then random larger cases: the embedding is
    // a group map into the similitude group.
    {
        bool ok = true;
        for (const auto& g : enumerate_gl(2, 2)) {
            HilbertTuple t(2, {g});
            MatrixFp e = embed_split(t);
            MatrixFp psi = symplectic_gram(1, 2);
            MatrixFp lhs = e.transpose() * psi * e;
            MatrixFp rhs = psi;
            rhs.scale(t.common_det);
            if (!(lhs == rhs)) ok = false;
            if (!(e == g)) ok = false;  // GSp_2 = GL_2
        }
        s.check("embedding exhaustive n=1 p=2", ok);
    }
    {
        bool ok = true;
        for (auto [n, p] : std::vector<std::pair<std::size_t, uint32_t>>{{2, 3}, {3, 2}, {3, 5}}) {
            MatrixFp psi = symplectic_gram(n, p);
            for (int trial = 0; trial < 50; ++trial) {
                auto random_tuple = [&]() {
                    std::vector<MatrixFp> blocks{s.random_invertible(p, 2)};
                    uint32_t det = blocks[0].det();
                    while (blocks.size() < n) {
                        MatrixFp blk = s.random_invertible(p, 2);
                        // rescale one column so determinants agree
                        uint32_t fix = fp::mul(det, fp::inv(blk.det(), p), p);
                        blk.at(0, 1) = fp::mul(blk.at(0, 1), fix, p);
                        blk.at(1, 1) = fp::mul(blk.at(1, 1), fix, p);
                        blocks.push_back(blk);
                    }
                    return HilbertTuple(p, std::move(blocks));
                };
                HilbertTuple t1 = random_tuple();
                HilbertTuple t2 = random_tuple();
                MatrixFp e1 = embed_split(t1);
                MatrixFp lhs = e1.transpose() * psi * e1;
                MatrixFp rhs = psi;
                rhs.scale(t1.common_det);
                if (!(lhs == rhs)) ok = false;
                if (!(embed_split(t1 * t2) == e1 * embed_split(t2))) ok = false;
            }
        }
        s.check("embedding random tuples", ok);
    }

    // Additivity of the weight restriction.
    {
        bool ok = true;
        for (int trial = 0; trial < 30; ++trial) {
            Character l1 = s.random_character(3, -3, 3);
            Character l2 = s.random_character(3, -3, 3);
            if (!(restrict_weight(l1 + l2) == restrict_weight(l1) + restrict_weight(l2)))
                ok = false;
        }
        s.check("weight restriction is additive", ok);
    }

    // Saturated split cone: verdict found iff every k_i <= 0.
    {
        bool ok = true;
        for (uint32_t p : {2u, 3u})
            for (long long k1 = -3; k1 <= 3; ++k1)
                for (long long k2 = -3; k2 <= 3; ++k2)
                    for (long long l = -2; l <= 2; ++l) {
                        HilbertWeight w{{k1, k2}, l};
                        HZipVerdict verdict = hzip_cone_check(w, p, 2 * (p - 1));
                        bool neg = k1 <= 0 && k2 <= 0;
                        if (verdict.found != neg || verdict.saturated_in != neg) ok = false;
                        if (verdict.found && verdict.witness_d > static_cast<int>(p - 1) &&
                            (w.k[0] % (p - 1) == 0 && w.k[1] % (p - 1) == 0 && w.l % (p - 1) == 0))
                            ok = false;
                    }
        s.check("saturated split cone is the negative orthant", ok);
    }

    // The two torus-triviality routes agree.
    {
        bool ok = true;
        for (int trial = 0; trial < 200; ++trial) {
            uint32_t p = std::vector<uint32_t>{2, 3, 5}[s.below(3)];
            std::size_t n = 1 + s.below(3);
            HilbertWeight w;
            for (std::size_t i = 0; i < n; ++i) w.k.push_back(s.range(-4, 4));
            w.l = s.range(-4, 4);
            long long d = 1 + s.below(6);
            if (torus_trivial_bruteforce(w, p, d) != torus_trivial_congruence(w, p, d)) ok = false;
        }
        s.check("torus triviality brute force matches congruence", ok);
    }
}

using SuiteFn = void (*)(Suite&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
    static const std::vector<std::pair<std::string, SuiteFn>> suites{
        {"weyl", suite_weyl},          {"characters", suite_characters},
        {"fp_linalg", suite_fp_linalg}, {"weylmod", suite_weylmod},
        {"zipcone", suite_zipcone},    {"strata", suite_strata},
        {"symtrans", suite_symtrans},  {"hilbert", suite_hilbert},
    };
    return suites;
}

}  // namespace

std::vector<std::string> suite_names() {
    std::vector<std::string> names;
    for (const auto& [name, fn] : registry()) names.push_back(name);
    return names;
}

SuiteResult run_suite(const std::string& name, uint64_t seed) {
    for (const auto& [suite_name, fn] : registry()) {
        if (suite_name != name) continue;
        SuiteResult result;
        result.name = name;
        // distinct deterministic stream per suite
        uint64_t mixed = seed;
        for (char c : name) mixed = mixed * 1099511628211ULL + static_cast<unsigned char>(c);
        Suite s(mixed);
        auto start = std::chrono::steady_clock::now();
        try {
            fn(s);
            result.checks = s.take();
        } catch (const std::exception& e) {
            result.checks = s.take();
            result.checks.push_back(CheckResult{"suite aborted", false, e.what()});
        }
        result.elapsed_ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
                .count();
        return result;
    }
    throw std::invalid_argument("run_suite: unknown suite '" + name + "'");
}

}  // namespace zipcone::selftest
