#include "zipcone/polynomial.hpp"

#include <sstream>
#include <stdexcept>

namespace zipcone {

Polynomial Polynomial::one(uint32_t p, std::size_t nvars) {
    Polynomial out(p, nvars);
    out.add_term(Monomial(nvars, 0), 1 % p);
    return out;
}

Polynomial Polynomial::variable(uint32_t p, std::size_t nvars, std::size_t idx) {
    Polynomial out(p, nvars);
    Monomial m(nvars, 0);
    m[idx] = 1;
    out.add_term(m, 1 % p);
    return out;
}

Polynomial Polynomial::linear(uint32_t p, const std::vector<uint32_t>& coords) {
    Polynomial out(p, coords.size());
    for (std::size_t i = 0; i < coords.size(); ++i) {
        if (coords[i] % p == 0) continue;
        Monomial m(coords.size(), 0);
        m[i] = 1;
        out.add_term(m, coords[i] % p);
    }
    return out;
}

void Polynomial::add_term(const Monomial& m, uint32_t c) {
    if (m.size() != nvars_) throw std::invalid_argument("Polynomial::add_term: arity mismatch");
    c %= p_;
    if (!c) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
        return;
    }
    it->second = fp::add(it->second, c, p_);
    if (!it->second) terms_.erase(it);
}

Polynomial Polynomial::operator+(const Polynomial& rhs) const {
    if (p_ != rhs.p_ || nvars_ != rhs.nvars_)
        throw std::invalid_argument("Polynomial::operator+: incompatible");
    Polynomial out = *this;
    for (const auto& [m, c] : rhs.terms_) out.add_term(m, c);
    return out;
}

Polynomial Polynomial::operator-(const Polynomial& rhs) const {
    if (p_ != rhs.p_ || nvars_ != rhs.nvars_)
        throw std::invalid_argument("Polynomial::operator-: incompatible");
    Polynomial out = *this;
    for (const auto& [m, c] : rhs.terms_) out.add_term(m, fp::neg(c, p_));
    return out;
}

Polynomial Polynomial::operator*(const Polynomial& rhs) const {
    if (p_ != rhs.p_ || nvars_ != rhs.nvars_)
        throw std::invalid_argument("Polynomial::operator*: incompatible");
    Polynomial out(p_, nvars_);
    Monomial prod(nvars_);
    for (const auto& [m1, c1] : terms_)
        for (const auto& [m2, c2] : rhs.terms_) {
            for (std::size_t i = 0; i < nvars_; ++i)
                prod[i] = static_cast<uint8_t>(m1[i] + m2[i]);
            out.add_term(prod, fp::mul(c1, c2, p_));
        }
    return out;
}

Polynomial Polynomial::scaled(uint32_t c) const {
    Polynomial out(p_, nvars_);
    c %= p_;
    if (!c) return out;
    for (const auto& [m, coef] : terms_) out.terms_.emplace(m, fp::mul(coef, c, p_));
    return out;
}

Polynomial Polynomial::pow(std::size_t e) const {
    Polynomial acc = Polynomial::one(p_, nvars_);
    for (std::size_t i = 0; i < e; ++i) acc = acc * *this;
    return acc;
}

Polynomial Polynomial::substitute_linear(const std::vector<Polynomial>& subs) const {
    if (subs.size() != nvars_)
        throw std::invalid_argument("Polynomial::substitute_linear: arity mismatch");
    Polynomial out(p_, nvars_);
    for (const auto& [m, c] : terms_) {
        Polynomial term = Polynomial::one(p_, nvars_).scaled(c);
        for (std::size_t i = 0; i < nvars_; ++i)
            for (uint8_t k = 0; k < m[i]; ++k) term = term * subs[i];
        out = out + term;
    }
    return out;
}

std::string Polynomial::to_string(const std::string& var_prefix) const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) out << " + ";
        first = false;
        out << c;
        for (std::size_t i = 0; i < nvars_; ++i) {
            if (!m[i]) continue;
            out << "*" << var_prefix << i;
            if (m[i] > 1) out << "^" << static_cast<int>(m[i]);
        }
    }
    return out.str();
}

}  // namespace zipcone
