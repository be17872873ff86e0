#include "zipcone/zip_cone.hpp"

#include <deque>
#include <stdexcept>
#include <unordered_set>

namespace zipcone {

std::string to_string(InvarianceMode mode) {
    return mode == InvarianceMode::GLnOnly ? "GLn_only" : "full_L";
}

InvarianceMode parse_mode(const std::string& text) {
    if (text == "GLn_only" || text == "gl") return InvarianceMode::GLnOnly;
    if (text == "full_L" || text == "full") return InvarianceMode::FullL;
    throw std::invalid_argument("parse_mode: expected 'GLn_only' or 'full_L'");
}

std::vector<MatrixFp> gl_generators(std::size_t n, uint32_t p) {
    if (n < 1) throw std::invalid_argument("gl_generators: rank must be >= 1");
    if (!fp::is_prime(p)) throw std::invalid_argument("gl_generators: p must be prime");
    std::vector<MatrixFp> gens;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        MatrixFp up = MatrixFp::identity(p, n);
        up.at(i, i + 1) = 1 % p;
        gens.push_back(up);
        MatrixFp lo = MatrixFp::identity(p, n);
        lo.at(i + 1, i) = 1 % p;
        gens.push_back(lo);
    }
    MatrixFp d = MatrixFp::identity(p, n);
    d.at(0, 0) = fp::primitive_root(p) % p;
    gens.push_back(d);
    return gens;
}

unsigned long long gl_order(std::size_t n, uint32_t p) {
    unsigned long long pn = 1;
    for (std::size_t i = 0; i < n; ++i) pn *= p;
    unsigned long long order = 1, pk = 1;
    for (std::size_t k = 0; k < n; ++k) {
        order *= pn - pk;
        pk *= p;
    }
    return order;
}

unsigned long long levi_group_order(std::size_t n, uint32_t p) {
    return gl_order(n, p) * (p - 1);
}

namespace {

uint64_t pack_matrix(const MatrixFp& m) {
    uint64_t key = 0;
    for (uint32_t v : m.data()) key = key * m.p() + v;
    return key;
}

void check_bfs_guard(std::size_t n, uint32_t p) {
    if (n > 3 || p > 5)
        throw std::invalid_argument("group enumeration guarded to n <= 3, p <= 5");
}

}  // namespace

std::vector<MatrixFp> enumerate_gl(std::size_t n, uint32_t p) {
    check_bfs_guard(n, p);
    auto gens = gl_generators(n, p);
    std::vector<MatrixFp> elements{MatrixFp::identity(p, n)};
    std::unordered_set<uint64_t> seen{pack_matrix(elements[0])};
    std::deque<std::size_t> frontier{0};
    while (!frontier.empty()) {
        std::size_t cur = frontier.front();
        frontier.pop_front();
        for (const auto& g : gens) {
            MatrixFp next = elements[cur] * g;
            uint64_t key = pack_matrix(next);
            if (seen.insert(key).second) {
                elements.push_back(std::move(next));
                frontier.push_back(elements.size() - 1);
            }
        }
    }
    return elements;
}

bool verify_generators(std::size_t n, uint32_t p) {
    return enumerate_gl(n, p).size() == gl_order(n, p);
}

SubspaceFp nonpositive_part(const DualWeylModule& m) {
    RootDatum datum(m.gl_rank());
    std::vector<std::size_t> idxs;
    for (std::size_t i = 0; i < m.dim(); ++i)
        if (pair(m.weight_of(i), datum.delta_p_coroot) <= 0) idxs.push_back(i);
    MatrixFp rows(m.p(), idxs.size(), m.dim());
    for (std::size_t r = 0; r < idxs.size(); ++r) rows.at(r, idxs[r]) = 1;
    return SubspaceFp::span(std::move(rows));
}

SubspaceFp invariants(const DualWeylModule& m, InvarianceMode mode) {
    if (mode == InvarianceMode::FullL && m.sim_exp() % (m.p() - 1) != 0)
        return SubspaceFp::zero(m.p(), m.dim());
    auto gens = gl_generators(m.gl_rank(), m.p());
    MatrixFp stacked(m.p(), 0, m.dim());
    const MatrixFp id = MatrixFp::identity(m.p(), m.dim());
    for (const auto& g : gens) stacked = stacked.stacked(m.act(g, 1) - id);
    return nullspace(stacked);
}

AutVanSplit aut_van_split(const DualWeylModule& m) {
    std::vector<bool> in_van(m.dim(), false);
    for (std::size_t i = 0; i < m.dim(); ++i)
        for (long long ai : m.weight_of(i).a)
            if (ai > 0) { in_van[i] = true; break; }
    std::size_t nv = 0;
    for (bool b : in_van) nv += b;
    MatrixFp aut_rows(m.p(), m.dim() - nv, m.dim());
    MatrixFp van_rows(m.p(), nv, m.dim());
    MatrixFp pr(m.p(), m.dim(), m.dim());
    std::size_t ra = 0, rv = 0;
    for (std::size_t i = 0; i < m.dim(); ++i) {
        if (in_van[i]) {
            van_rows.at(rv++, i) = 1;
            pr.at(i, i) = 1;
        } else {
            aut_rows.at(ra++, i) = 1;
        }
    }
    return AutVanSplit{SubspaceFp::span(std::move(aut_rows)),
                       SubspaceFp::span(std::move(van_rows)), std::move(pr)};
}

namespace {

std::string generators_description(std::size_t n, uint32_t p) {
    return "adjacent transvections and diag(" + std::to_string(fp::primitive_root(p)) +
           ",1,...) generating GL_" + std::to_string(n) + "(F_" + std::to_string(p) + ")";
}

}  // namespace

H0Report h0_gzip(const Character& lambda, uint32_t p, InvarianceMode mode,
                 long long monomial_budget) {
    H0Report rep{lambda, p, mode, 0, 0, 0, 0, generators_description(lambda.rank(), p)};
    if (!is_I_dominant(lambda)) return rep;  // the module vanishes
    DualWeylModule m = build_module(lambda, p, monomial_budget);
    rep.dim_module = m.dim();
    SubspaceFp inv = invariants(m, mode);
    SubspaceFp nonpos = nonpositive_part(m);
    rep.dim_invariants = inv.dim();
    rep.dim_nonpositive = nonpos.dim();
    rep.dim_h0 = intersect(inv, nonpos).dim();
    return rep;
}

ScanVerdict czip_membership_scan(const Character& lambda, uint32_t p, InvarianceMode mode,
                                 int d_max, long long monomial_budget) {
    if (d_max < 1) throw std::invalid_argument("czip_membership_scan: d_max must be >= 1");
    ScanVerdict verdict;
    verdict.advisory_bound = levi_group_order(lambda.rank(), p);
    for (int d = 1; d <= d_max; ++d) {
        std::optional<H0Report> rep;
        try {
            rep = h0_gzip(lambda * d, p, mode, monomial_budget);
        } catch (const budget_error&) {
            verdict.skipped_d.push_back(d);
            continue;
        }
        if (rep->dim_h0 > 0) {
            verdict.found = true;
            verdict.witness_d = d;
            verdict.witness_report = std::move(rep);
            return verdict;
        }
    }
    return verdict;
}

}  // namespace zipcone
