#pragma once

#include <cstdint>
#include <vector>

#include "zipcone/fp_linalg.hpp"
#include "zipcone/polynomial.hpp"

namespace zipcone {

// A finite matrix group acting on F_p^dim, given by its full element list.
// Construction checks that the list contains the identity and is closed
// under products and inverses.
class FiniteAction {
  public:
    FiniteAction(uint32_t p, std::size_t dim, std::vector<MatrixFp> elements);

    uint32_t p() const { return p_; }
    std::size_t dim() const { return dim_; }
    std::size_t order() const { return elements_.size(); }
    const std::vector<MatrixFp>& elements() const { return elements_; }

  private:
    uint32_t p_;
    std::size_t dim_;
    std::vector<MatrixFp> elements_;
};

// Homogeneous element of Sym^d(V) in the basis symbols of V.
struct SymElement {
    std::size_t degree = 0;
    Polynomial poly;

    bool operator==(const SymElement& rhs) const = default;
    bool is_zero() const { return poly.is_zero(); }
};

// The degree-(N-d) coefficient of prod_{h in H} (t - h x) in Sym(V)[t],
// i.e. (-1)^d e_d of the orbit multiset {h x}. Requires 1 <= d <= N.
SymElement sym_transform(const FiniteAction& action, const std::vector<uint32_t>& x,
                         std::size_t d);

// prod_{h in H} (h x) as an element of Sym^N(V); equals (-1)^N s^(N)(x).
SymElement orbit_norm(const FiniteAction& action, const std::vector<uint32_t>& x);

// sum_{h in H} h x as a vector; equals -s^(1)(x) in degree 1.
std::vector<uint32_t> orbit_trace(const FiniteAction& action, const std::vector<uint32_t>& x);

// Evaluates sum_{d=0}^{N} s^(d)(x) x^{N-d} in Sym^N(V) (with s^(0) = 1)
// and reports whether it vanishes identically. It always does: the factor
// of the identity element kills the product.
bool annihilation_check(const FiniteAction& action, const std::vector<uint32_t>& x);

// Induced action of the group element with index `idx` on Sym(V).
SymElement apply_to_sym(const FiniteAction& action, std::size_t idx, const SymElement& elem);

}  // namespace zipcone
