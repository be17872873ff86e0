#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "zipcone/weyl.hpp"

namespace zipcone {

// Character of the diagonal torus of GSp_2n: coordinates (a_1..a_n, b)
// subject to sum(a_i) == b (mod 2). Immutable value type.
struct Character {
    Character(std::vector<long long> a_coords, long long b_coord);

    std::size_t rank() const { return a.size(); }

    Character operator+(const Character& rhs) const;
    Character operator*(long long d) const;  // d >= 0 scaling
    bool operator==(const Character& rhs) const = default;
    bool operator<(const Character& rhs) const;  // lexicographic on (a, b)

    Character acted_by(const WeylElement& w) const;  // b fixed

    std::string to_string() const;  // "(a1,...,an;b)"

    std::vector<long long> a;
    long long b;
};

bool parity_ok(const std::vector<long long>& a, long long b);

// Named weights: the Hodge-bundle weight and the Hodge-line weight.
Character lambda_Omega(std::size_t n);  // (0,...,0,-1; 1)
Character lambda_omega(std::size_t n);  // (-1,...,-1; n)

// Coroot in pairing coordinates: <chi, cv> = sum cv_i * a_i (b never
// contributes since every root kills the similitude factor).
using Coroot = std::vector<long long>;

long long pair(const Character& chi, const Coroot& cv);

// Root/coroot data of GSp_2n: type C_n roots on the a-coordinates.
struct RootDatum {
    explicit RootDatum(std::size_t n);

    std::size_t n;
    std::vector<std::vector<long long>> positive_roots;   // n^2 of them
    std::vector<Coroot> positive_coroots;                 // matched order
    std::vector<std::vector<long long>> levi_positive_roots;  // e_i - e_j
    std::vector<Coroot> levi_positive_coroots;
    std::vector<Coroot> simple_coroots;       // alpha_1^v .. alpha_n^v
    Coroot delta_p_coroot;                    // the single long simple coroot
};

bool is_I_dominant(const Character& chi);

// Linear form sum_i c_i(p) a_i with coefficients polynomial in p;
// the cone condition is value <= 0.
struct ConeInequality {
    // coeff_in_p[i] lists the coefficients of p^0, p^1, ... multiplying a_{i+1}.
    std::vector<std::vector<long long>> coeff_in_p;

    long long evaluate(const Character& chi, uint32_t p) const;
    std::string to_string() const;  // e.g. "p^2*a1 + a2 + p*a3 <= 0"
};

// A cone cut out by finitely many p-parametric inequalities on the
// a-coordinates (the similitude coordinate is never constrained).
struct ConeDescription {
    std::string name;
    std::vector<ConeInequality> inequalities;

    bool contains(const Character& chi, uint32_t p) const;
};

ConeDescription gs_cone(std::size_t n);          // 0 >= a_1 >= ... >= a_n
ConeDescription appro_cone(std::size_t n);       // p-weighted partial sums
ConeDescription zip3_explicit_cone();            // n = 3 only

bool in_gs_cone(const Character& chi);
bool in_appro_cone(const Character& chi, uint32_t p);
bool in_zip3_explicit(const Character& chi, uint32_t p);  // requires rank 3

// CLI-facing parse of "a1,...,an,b"; throws std::invalid_argument with a
// message citing the parity constraint when it fails.
Character parse_character(const std::string& text);

}  // namespace zipcone
