#include "zipcone/weylmod.hpp"

#include <algorithm>
#include <limits>
#include <memory>
#include <stdexcept>

namespace zipcone {

long long monomial_space_size(long long degree, std::size_t nvars) {
    if (degree < 0) return 0;
    if (nvars == 0) return degree == 0 ? 1 : 0;
    // C(degree + nvars - 1, nvars - 1)
    __int128 acc = 1;
    const long long k = static_cast<long long>(nvars) - 1;
    for (long long i = 1; i <= k; ++i) {
        acc = acc * (degree + i) / i;
        if (acc > std::numeric_limits<long long>::max() / 4)
            return std::numeric_limits<long long>::max();
    }
    return static_cast<long long>(acc);
}

namespace {

// det(X[{0..h-1}, cols]) expanded by Leibniz; cols is 0-based strictly
// increasing, variables are x_{i,j} = index i*n + j.
Polynomial minor_polynomial(uint32_t p, std::size_t n, const std::vector<uint8_t>& cols) {
    const std::size_t h = cols.size();
    Polynomial out(p, n * n);
    std::vector<uint8_t> perm(h);
    for (std::size_t i = 0; i < h; ++i) perm[i] = static_cast<uint8_t>(i);
    do {
        int sign = 1;
        for (std::size_t i = 0; i < h; ++i)
            for (std::size_t j = i + 1; j < h; ++j)
                if (perm[i] > perm[j]) sign = -sign;
        Monomial m(n * n, 0);
        for (std::size_t i = 0; i < h; ++i) ++m[i * n + cols[perm[i]]];
        out.add_term(m, sign > 0 ? 1u : fp::neg(1u, p));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

uint32_t submatrix_det(const MatrixFp& g, const std::vector<uint8_t>& rows,
                       const std::vector<uint8_t>& cols) {
    MatrixFp sub(g.p(), rows.size(), cols.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j) sub.at(i, j) = g.at(rows[i], cols[j]);
    return sub.det();
}

void subsets_of_size(std::size_t n, std::size_t h, std::vector<std::vector<uint8_t>>& out) {
    // iterative combinations in lexicographic order
    std::vector<uint8_t> idx(h);
    for (std::size_t i = 0; i < h; ++i) idx[i] = static_cast<uint8_t>(i);
    if (h > n) return;
    while (true) {
        out.push_back(idx);
        std::size_t i = h;
        while (i > 0 && idx[i - 1] == n - h + i - 1) --i;
        if (i == 0) break;
        ++idx[i - 1];
        for (std::size_t j = i; j < h; ++j) idx[j] = static_cast<uint8_t>(idx[j - 1] + 1);
    }
}

uint32_t subset_mask(const std::vector<uint8_t>& s) {
    uint32_t m = 0;
    for (uint8_t v : s) m |= (1u << v);
    return m;
}

}  // namespace

DualWeylModule::DualWeylModule(Character lambda, uint32_t p, long long monomial_budget)
    : lambda_(std::move(lambda)), p_(p) {
    if (!fp::is_prime(p)) throw std::invalid_argument("DualWeylModule: p must be prime");
    if (!is_I_dominant(lambda_))
        throw std::invalid_argument(
            "DualWeylModule: lambda is not I-dominant (the induced module vanishes)");
    const std::size_t n = lambda_.rank();
    twist_m_ = std::max(0LL, -lambda_.a[n - 1]);
    long long asum = 0;
    for (long long ai : lambda_.a) asum += ai;
    sim_exp_ = (lambda_.b - asum) / 2;

    mu_.resize(n);
    for (std::size_t i = 0; i < n; ++i) mu_[i] = lambda_.a[i] + twist_m_;
    const long long degree = partition_size(mu_);
    const long long space = monomial_space_size(degree, n * n);
    if (space > monomial_budget)
        throw budget_error("DualWeylModule: monomial space of degree " + std::to_string(degree) +
                           " in " + std::to_string(n * n) + " variables has " +
                           std::to_string(space) + " monomials, over budget " +
                           std::to_string(monomial_budget));

    basis_ = enumerate_ssyt(mu_, n);

    Partition conj = conjugate(mu_);
    std::vector<bool> height_done(n + 1, false);
    for (long long h : conj) {
        if (height_done[static_cast<std::size_t>(h)]) continue;
        height_done[static_cast<std::size_t>(h)] = true;
        std::vector<std::vector<uint8_t>> subs;
        subsets_of_size(n, static_cast<std::size_t>(h), subs);
        for (const auto& s : subs)
            minors_.emplace(std::make_pair(static_cast<std::size_t>(h), subset_mask(s)),
                            minor_polynomial(p_, n, s));
    }

    for (const auto& tab : basis_) {
        Polynomial poly = Polynomial::one(p_, n * n);
        for (std::size_t c = 0; c < conj.size(); ++c) {
            std::vector<uint8_t> col = tab.column(c);
            std::vector<uint8_t> cols0(col.size());
            for (std::size_t i = 0; i < col.size(); ++i) cols0[i] = static_cast<uint8_t>(col[i] - 1);
            poly = poly * minors_.at({col.size(), subset_mask(cols0)});
        }
        carrier_.push_back(std::move(poly));

        std::vector<long long> wt = tab.content(n);
        for (auto& x : wt) x -= twist_m_;
        weights_.emplace_back(std::move(wt), lambda_.b);
    }

    for (const auto& poly : carrier_)
        for (const auto& [mono, coef] : poly.terms()) mono_index_.emplace(mono, 0);
    monomials_.reserve(mono_index_.size());
    for (auto& [mono, idx] : mono_index_) {
        idx = monomials_.size();
        monomials_.push_back(mono);
    }

    MatrixFp basis_matrix(p_, basis_.size(), monomials_.size());
    for (std::size_t i = 0; i < carrier_.size(); ++i)
        for (const auto& [mono, coef] : carrier_[i].terms())
            basis_matrix.at(i, mono_index_.at(mono)) = coef;
    // Throws if the bideterminants were dependent, which would mean the
    // construction itself is broken.
    solver_ = std::make_unique<EchelonSolver>(basis_matrix);
}

Polynomial DualWeylModule::image_polynomial(std::size_t basis_index, const MatrixFp& g) const {
    const std::size_t n = gl_rank();
    const Tableau& tab = basis_[basis_index];
    Polynomial out = Polynomial::one(p_, n * n);
    Partition conj = conjugate(mu_);
    for (std::size_t c = 0; c < conj.size(); ++c) {
        std::vector<uint8_t> col = tab.column(c);
        std::vector<uint8_t> cols0(col.size());
        for (std::size_t i = 0; i < col.size(); ++i) cols0[i] = static_cast<uint8_t>(col[i] - 1);
        // Cauchy-Binet: det((Xg)[R,J]) = sum_K det(X[R,K]) det(g[K,J]).
        Polynomial factor(p_, n * n);
        std::vector<std::vector<uint8_t>> subs;
        subsets_of_size(n, col.size(), subs);
        for (const auto& k_set : subs) {
            uint32_t d = submatrix_det(g, k_set, cols0);
            if (!d) continue;
            factor = factor + minors_.at({col.size(), subset_mask(k_set)}).scaled(d);
        }
        out = out * factor;
    }
    return out;
}

std::vector<uint32_t> DualWeylModule::coords_of(const Polynomial& poly) const {
    std::vector<uint32_t> v(monomials_.size(), 0);
    for (const auto& [mono, coef] : poly.terms()) {
        auto it = mono_index_.find(mono);
        if (it == mono_index_.end())
            throw std::logic_error("DualWeylModule: image leaves the carrier span");
        v[it->second] = coef;
    }
    auto c = solver_->solve(v);
    if (!c) throw std::logic_error("DualWeylModule: image not in basis span");
    return *c;
}

MatrixFp DualWeylModule::act(const MatrixFp& g, uint32_t c) const {
    const std::size_t n = gl_rank();
    if (g.rows() != n || g.cols() != n || g.p() != p_)
        throw std::invalid_argument("DualWeylModule::act: matrix shape or modulus mismatch");
    uint32_t det = g.det();
    if (det == 0) throw std::invalid_argument("DualWeylModule::act: singular matrix");
    if (c % p_ == 0) throw std::invalid_argument("DualWeylModule::act: similitude scalar is zero");
    uint32_t scalar = fp::mul(fp::pow_signed(det, -twist_m_, p_),
                              fp::pow_signed(c % p_, sim_exp_, p_), p_);
    MatrixFp out(p_, dim(), dim());
    for (std::size_t j = 0; j < dim(); ++j) {
        auto coords = coords_of(image_polynomial(j, g));
        for (std::size_t i = 0; i < dim(); ++i)
            out.at(i, j) = fp::mul(coords[i], scalar, p_);
    }
    return out;
}

DualWeylModule build_module(const Character& lambda, uint32_t p, long long monomial_budget) {
    return DualWeylModule(lambda, p, monomial_budget);
}

std::map<Character, SubspaceFp> weight_spaces(const DualWeylModule& m) {
    std::map<Character, std::vector<std::size_t>> groups;
    for (std::size_t i = 0; i < m.dim(); ++i) groups[m.weight_of(i)].push_back(i);
    std::map<Character, SubspaceFp> out;
    for (const auto& [chi, idxs] : groups) {
        MatrixFp rows(m.p(), idxs.size(), m.dim());
        for (std::size_t r = 0; r < idxs.size(); ++r) rows.at(r, idxs[r]) = 1;
        out.emplace(chi, SubspaceFp::span(std::move(rows)));
    }
    return out;
}

}  // namespace zipcone
