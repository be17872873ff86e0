#include "zipcone/symtrans.hpp"

#include <map>
#include <stdexcept>

namespace zipcone {

namespace {

std::vector<uint32_t> matrix_key(const MatrixFp& m) { return m.data(); }

// Coefficients of prod_{h in H}(t - (h x)) by t-degree: coeffs[j] is the
// degree-j polynomial multiplying t^{N-j}.
std::vector<Polynomial> char_poly_coefficients(const FiniteAction& action,
                                               const std::vector<uint32_t>& x) {
    const uint32_t p = action.p();
    const std::size_t nv = action.dim();
    std::vector<Polynomial> coeffs{Polynomial::one(p, nv)};
    for (const auto& h : action.elements()) {
        Polynomial lin = Polynomial::linear(p, h.apply(x));
        std::vector<Polynomial> next(coeffs.size() + 1, Polynomial(p, nv));
        for (std::size_t j = 0; j < coeffs.size(); ++j) {
            next[j] = next[j] + coeffs[j];
            next[j + 1] = next[j + 1] - coeffs[j] * lin;
        }
        coeffs = std::move(next);
    }
    return coeffs;
}

}  // namespace

FiniteAction::FiniteAction(uint32_t p, std::size_t dim, std::vector<MatrixFp> elements)
    : p_(p), dim_(dim), elements_(std::move(elements)) {
    if (elements_.empty()) throw std::invalid_argument("FiniteAction: empty element list");
    std::map<std::vector<uint32_t>, std::size_t> index;
    const MatrixFp id = MatrixFp::identity(p_, dim_);
    bool has_id = false;
    for (std::size_t i = 0; i < elements_.size(); ++i) {
        const auto& m = elements_[i];
        if (m.p() != p_ || m.rows() != dim_ || m.cols() != dim_)
            throw std::invalid_argument("FiniteAction: element shape or modulus mismatch");
        if (!index.emplace(matrix_key(m), i).second)
            throw std::invalid_argument("FiniteAction: duplicate element");
        if (m == id) has_id = true;
    }
    if (!has_id) throw std::invalid_argument("FiniteAction: identity missing");
    for (const auto& a : elements_) {
        bool has_inverse = false;
        for (const auto& b : elements_) {
            if (!index.count(matrix_key(a * b)))
                throw std::invalid_argument("FiniteAction: not closed under products");
            if (a * b == id) has_inverse = true;
        }
        if (!has_inverse) throw std::invalid_argument("FiniteAction: inverse missing");
    }
}

SymElement sym_transform(const FiniteAction& action, const std::vector<uint32_t>& x,
                         std::size_t d) {
    if (d < 1 || d > action.order())
        throw std::invalid_argument("sym_transform: require 1 <= d <= |H|");
    auto coeffs = char_poly_coefficients(action, x);
    return SymElement{d, coeffs[d]};
}

SymElement orbit_norm(const FiniteAction& action, const std::vector<uint32_t>& x) {
    Polynomial prod = Polynomial::one(action.p(), action.dim());
    for (const auto& h : action.elements()) prod = prod * Polynomial::linear(action.p(), h.apply(x));
    return SymElement{action.order(), prod};
}

std::vector<uint32_t> orbit_trace(const FiniteAction& action, const std::vector<uint32_t>& x) {
    std::vector<uint32_t> sum(action.dim(), 0);
    for (const auto& h : action.elements()) {
        auto hx = h.apply(x);
        for (std::size_t i = 0; i < sum.size(); ++i) sum[i] = fp::add(sum[i], hx[i], action.p());
    }
    return sum;
}

bool annihilation_check(const FiniteAction& action, const std::vector<uint32_t>& x) {
    const uint32_t p = action.p();
    const std::size_t nv = action.dim();
    const std::size_t order = action.order();
    auto coeffs = char_poly_coefficients(action, x);
    Polynomial xlin = Polynomial::linear(p, x);
    Polynomial acc(p, nv);
    Polynomial xpow = Polynomial::one(p, nv);  // x^{N-d} built from d = N down
    for (std::size_t d = order + 1; d-- > 0;) {
        acc = acc + coeffs[d] * xpow;
        if (d > 0) xpow = xpow * xlin;
    }
    return acc.is_zero();
}

SymElement apply_to_sym(const FiniteAction& action, std::size_t idx, const SymElement& elem) {
    if (idx >= action.order()) throw std::invalid_argument("apply_to_sym: index out of range");
    const MatrixFp& h = action.elements()[idx];
    const uint32_t p = action.p();
    const std::size_t nv = action.dim();
    // Basis symbol y_i maps to the linear form with the coordinates of
    // h e_i, i.e. column i of h.
    std::vector<Polynomial> subs;
    for (std::size_t i = 0; i < nv; ++i) {
        std::vector<uint32_t> col(nv);
        for (std::size_t r = 0; r < nv; ++r) col[r] = h.at(r, i);
        subs.push_back(Polynomial::linear(p, col));
    }
    return SymElement{elem.degree, elem.poly.substitute_linear(subs)};
}

}  // namespace zipcone
