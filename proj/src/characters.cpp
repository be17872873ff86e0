#include "zipcone/characters.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace zipcone {

bool parity_ok(const std::vector<long long>& a, long long b) {
    long long s = b;
    for (long long x : a) s += x;
    return s % 2 == 0;
}

Character::Character(std::vector<long long> a_coords, long long b_coord)
    : a(std::move(a_coords)), b(b_coord) {
    if (a.empty()) throw std::invalid_argument("Character: rank must be >= 1");
    if (!parity_ok(a, b))
        throw std::invalid_argument(
            "Character: parity constraint violated, require Σ a_i ≡ b (mod 2)");
}

Character Character::operator+(const Character& rhs) const {
    if (a.size() != rhs.a.size()) throw std::invalid_argument("Character::operator+: rank mismatch");
    std::vector<long long> s(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) s[i] = a[i] + rhs.a[i];
    return Character(std::move(s), b + rhs.b);
}

Character Character::operator*(long long d) const {
    std::vector<long long> s(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) s[i] = d * a[i];
    return Character(std::move(s), d * b);
}

bool Character::operator<(const Character& rhs) const {
    if (a != rhs.a) return a < rhs.a;
    return b < rhs.b;
}

Character Character::acted_by(const WeylElement& w) const {
    return Character(w.act(a), b);
}

std::string Character::to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(a[i]);
    }
    s += ";" + std::to_string(b) + ")";
    return s;
}

Character lambda_Omega(std::size_t n) {
    std::vector<long long> a(n, 0);
    a[n - 1] = -1;
    return Character(std::move(a), 1);
}

Character lambda_omega(std::size_t n) {
    return Character(std::vector<long long>(n, -1), static_cast<long long>(n));
}

long long pair(const Character& chi, const Coroot& cv) {
    if (chi.a.size() != cv.size()) throw std::invalid_argument("pair: rank mismatch");
    long long s = 0;
    for (std::size_t i = 0; i < cv.size(); ++i) s += chi.a[i] * cv[i];
    return s;
}

RootDatum::RootDatum(std::size_t rank) : n(rank) {
    if (n < 1) throw std::invalid_argument("RootDatum: rank must be >= 1");
    auto unit = [&](std::size_t i) {
        std::vector<long long> v(n, 0);
        v[i] = 1;
        return v;
    };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            std::vector<long long> r = unit(i);
            r[j] = -1;
            positive_roots.push_back(r);
            positive_coroots.push_back(r);  // (e_i - e_j)^v
            levi_positive_roots.push_back(r);
            levi_positive_coroots.push_back(r);
            r[j] = 1;
            positive_roots.push_back(r);
            positive_coroots.push_back(r);  // (e_i + e_j)^v
        }
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<long long> r = unit(i);
        r[i] = 2;
        positive_roots.push_back(r);
        positive_coroots.push_back(unit(i));  // (2 e_i)^v = e_i^v
    }
    for (std::size_t i = 0; i + 1 < n; ++i) {
        std::vector<long long> c = unit(i);
        c[i + 1] = -1;
        simple_coroots.push_back(c);
    }
    simple_coroots.push_back(unit(n - 1));
    delta_p_coroot = unit(n - 1);
}

bool is_I_dominant(const Character& chi) {
    for (std::size_t i = 0; i + 1 < chi.a.size(); ++i)
        if (chi.a[i] < chi.a[i + 1]) return false;
    return true;
}

long long ConeInequality::evaluate(const Character& chi, uint32_t p) const {
    if (coeff_in_p.size() != chi.a.size())
        throw std::invalid_argument("ConeInequality::evaluate: rank mismatch");
    long long total = 0;
    for (std::size_t i = 0; i < coeff_in_p.size(); ++i) {
        long long c = 0, pk = 1;
        for (long long ck : coeff_in_p[i]) {
            c += ck * pk;
            pk *= p;
        }
        total += c * chi.a[i];
    }
    return total;
}

std::string ConeInequality::to_string() const {
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = 0; i < coeff_in_p.size(); ++i) {
        for (std::size_t k = 0; k < coeff_in_p[i].size(); ++k) {
            long long c = coeff_in_p[i][k];
            if (c == 0) continue;
            if (!first) out << (c > 0 ? " + " : " - ");
            else if (c < 0) out << "-";
            first = false;
            long long m = c > 0 ? c : -c;
            if (m != 1) out << m << "*";
            if (k == 1) out << "p*";
            else if (k > 1) out << "p^" << k << "*";
            out << "a" << (i + 1);
        }
    }
    if (first) out << "0";
    out << " <= 0";
    return out.str();
}

bool ConeDescription::contains(const Character& chi, uint32_t p) const {
    for (const auto& ineq : inequalities)
        if (ineq.evaluate(chi, p) > 0) return false;
    return true;
}

namespace {

std::vector<std::vector<long long>> zero_coeffs(std::size_t n) {
    return std::vector<std::vector<long long>>(n, std::vector<long long>{0});
}

}  // namespace

ConeDescription gs_cone(std::size_t n) {
    ConeDescription cone{"GS", {}};
    ConeInequality first{zero_coeffs(n)};
    first.coeff_in_p[0] = {1};  // a_1 <= 0
    cone.inequalities.push_back(first);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        ConeInequality step{zero_coeffs(n)};
        step.coeff_in_p[i] = {-1};
        step.coeff_in_p[i + 1] = {1};  // a_{i+1} - a_i <= 0
        cone.inequalities.push_back(step);
    }
    return cone;
}

ConeDescription appro_cone(std::size_t n) {
    ConeDescription cone{"appro", {}};
    for (std::size_t j = 1; j <= n; ++j) {
        ConeInequality ineq{zero_coeffs(n)};
        for (std::size_t i = 0; i < n; ++i)
            ineq.coeff_in_p[i] = (i < j) ? std::vector<long long>{0, 1}   // p
                                         : std::vector<long long>{1};    // 1
        cone.inequalities.push_back(ineq);
    }
    return cone;
}

ConeDescription zip3_explicit_cone() {
    ConeDescription cone{"zip3", {}};
    ConeInequality dom1{zero_coeffs(3)};
    dom1.coeff_in_p[0] = {-1};
    dom1.coeff_in_p[1] = {1};  // a_2 - a_1 <= 0
    ConeInequality dom2{zero_coeffs(3)};
    dom2.coeff_in_p[1] = {-1};
    dom2.coeff_in_p[2] = {1};  // a_3 - a_2 <= 0
    ConeInequality main1{{{0, 0, 1}, {1}, {0, 1}}};  // p^2 a_1 + a_2 + p a_3
    ConeInequality main2{{{0, 1}, {0, 0, 1}, {1}}};  // p a_1 + p^2 a_2 + a_3
    cone.inequalities = {dom1, dom2, main1, main2};
    return cone;
}

bool in_gs_cone(const Character& chi) {
    // Explicit chain 0 >= a_1 >= ... >= a_n; the equivalent root-theoretic
    // form through pair() is exercised by the test suite.
    return gs_cone(chi.rank()).contains(chi, 2);
}

bool in_appro_cone(const Character& chi, uint32_t p) {
    return appro_cone(chi.rank()).contains(chi, p);
}

bool in_zip3_explicit(const Character& chi, uint32_t p) {
    if (chi.rank() != 3)
        throw std::invalid_argument("in_zip3_explicit: defined for rank 3 only");
    return zip3_explicit_cone().contains(chi, p);
}

Character parse_character(const std::string& text) {
    std::vector<long long> vals;
    std::string tok;
    std::istringstream in(text);
    while (std::getline(in, tok, ',')) {
        std::size_t pos = 0;
        long long v;
        try {
            v = std::stoll(tok, &pos);
        } catch (const std::exception&) {
            throw std::invalid_argument("parse_character: not an integer: '" + tok + "'");
        }
        while (pos < tok.size() && std::isspace(static_cast<unsigned char>(tok[pos]))) ++pos;
        if (pos != tok.size())
            throw std::invalid_argument("parse_character: not an integer: '" + tok + "'");
        vals.push_back(v);
    }
    if (vals.size() < 2)
        throw std::invalid_argument("parse_character: need 'a_1,...,a_n,b' with n >= 1");
    long long b = vals.back();
    vals.pop_back();
    if (!parity_ok(vals, b))
        throw std::invalid_argument(
            "parse_character: parity constraint violated, require Σ a_i ≡ b (mod 2)");
    return Character(std::move(vals), b);
}

}  // namespace zipcone
