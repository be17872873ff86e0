#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "zipcone/fp.hpp"

namespace zipcone {

// Exponent vector, one entry per variable.
using Monomial = std::vector<uint8_t>;

// Sparse multivariate polynomial over F_p with a canonical (ordered) term
// map; zero coefficients are never stored.
class Polynomial {
  public:
    Polynomial() : p_(2), nvars_(0) {}
    Polynomial(uint32_t p, std::size_t nvars) : p_(p), nvars_(nvars) {}

    static Polynomial one(uint32_t p, std::size_t nvars);
    static Polynomial variable(uint32_t p, std::size_t nvars, std::size_t idx);
    // Degree-1 element with the given coordinates.
    static Polynomial linear(uint32_t p, const std::vector<uint32_t>& coords);

    uint32_t p() const { return p_; }
    std::size_t nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::map<Monomial, uint32_t>& terms() const { return terms_; }

    void add_term(const Monomial& m, uint32_t c);

    Polynomial operator+(const Polynomial& rhs) const;
    Polynomial operator-(const Polynomial& rhs) const;
    Polynomial operator*(const Polynomial& rhs) const;
    Polynomial scaled(uint32_t c) const;
    Polynomial pow(std::size_t e) const;

    bool operator==(const Polynomial& rhs) const = default;

    // Substitute variable i by the degree-1 form subs[i] and expand.
    Polynomial substitute_linear(const std::vector<Polynomial>& subs) const;

    std::string to_string(const std::string& var_prefix = "x") const;

  private:
    uint32_t p_;
    std::size_t nvars_;
    std::map<Monomial, uint32_t> terms_;
};

}  // namespace zipcone
