#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <vector>

#include "zipcone/characters.hpp"
#include "zipcone/fp_linalg.hpp"
#include "zipcone/polynomial.hpp"
#include "zipcone/tableaux.hpp"

namespace zipcone {

inline constexpr long long kDefaultMonomialBudget = 2'000'000;

// Explicit model of the induced module V_I(lambda) over F_p for the Levi
// GL_n x GL_1 of the Siegel parabolic.
//
// Realization: write lambda = (a_1..a_n; b), m = max(0, -a_n) and
// mu = (a_1+m, ..., a_n+m). The GL_n part is the span of bideterminants
// inside the polynomial ring on an n x n matrix of variables X: the basis
// vector of a semistandard tableau T of shape mu is the product over the
// columns of T of the minor of X with row set {1..height} and column set
// the column entries. A group element g acts by right translation of the
// argument, f |-> f(X g), twisted by the scalar det(g)^{-m}; the
// similitude factor c acts by c^{(b - sum a_i)/2}. Under this convention
// the diagonal torus scales the basis vector of T by its content shifted
// by -m, the canonical tableau spans the highest-weight line of weight
// lambda, and that line is fixed by upper-triangular unipotent matrices.
class DualWeylModule {
  public:
    DualWeylModule(Character lambda, uint32_t p, long long monomial_budget);

    const Character& lambda() const { return lambda_; }
    uint32_t p() const { return p_; }
    std::size_t gl_rank() const { return lambda_.rank(); }
    long long twist() const { return twist_m_; }
    long long sim_exp() const { return sim_exp_; }
    const Partition& shape() const { return mu_; }

    std::size_t dim() const { return basis_.size(); }
    const std::vector<Tableau>& basis() const { return basis_; }
    const std::vector<Polynomial>& carrier() const { return carrier_; }
    const Character& weight_of(std::size_t i) const { return weights_[i]; }
    const std::vector<Character>& weights() const { return weights_; }

    // Matrix of (g, c) acting on the basis; column j holds the image of
    // basis vector j, so matrices compose covariantly:
    // act(g h, c c') = act(g, c) * act(h, c').
    MatrixFp act(const MatrixFp& g, uint32_t c) const;

  private:
    Polynomial image_polynomial(std::size_t basis_index, const MatrixFp& g) const;
    std::vector<uint32_t> coords_of(const Polynomial& poly) const;

    Character lambda_;
    uint32_t p_;
    long long twist_m_;
    long long sim_exp_;
    Partition mu_;
    std::vector<Tableau> basis_;
    std::vector<Polynomial> carrier_;
    std::vector<Character> weights_;
    std::vector<Monomial> monomials_;           // support of the carrier, sorted
    std::map<Monomial, std::size_t> mono_index_;
    std::unique_ptr<EchelonSolver> solver_;
    // Minor polynomials det(X[{1..h}, K]) keyed by (h, bitmask of K).
    std::map<std::pair<std::size_t, uint32_t>, Polynomial> minors_;
};

DualWeylModule build_module(const Character& lambda, uint32_t p,
                            long long monomial_budget = kDefaultMonomialBudget);

// Number of monomials of the given degree in nvars variables, saturating
// instead of overflowing.
long long monomial_space_size(long long degree, std::size_t nvars);

// Weight decomposition: every weight space is spanned by basis vectors.
std::map<Character, SubspaceFp> weight_spaces(const DualWeylModule& m);

}  // namespace zipcone
