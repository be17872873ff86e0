#pragma once

#include <cstdint>
#include <vector>

#include "zipcone/characters.hpp"
#include "zipcone/fp_linalg.hpp"

namespace zipcone {

// Point of the split Hilbert group H(F_p): n invertible 2x2 blocks over
// F_p sharing a common determinant.
struct HilbertTuple {
    HilbertTuple(uint32_t p, std::vector<MatrixFp> blocks);

    uint32_t p;
    std::vector<MatrixFp> blocks;
    uint32_t common_det;

    std::size_t rank() const { return blocks.size(); }
    HilbertTuple operator*(const HilbertTuple& rhs) const;  // blockwise
};

// Character of the Hilbert torus T_H: value on the point with diagonal
// entries x_1..x_n and common determinant delta is prod x_i^{k_i} delta^l.
struct HilbertWeight {
    std::vector<long long> k;
    long long l = 0;

    HilbertWeight operator+(const HilbertWeight& rhs) const;
    HilbertWeight operator*(long long d) const;
    bool operator==(const HilbertWeight& rhs) const = default;
};

// Gram matrix of the symplectic pairing: antidiagonal J_0 block top right,
// -J_0 bottom left.
MatrixFp symplectic_gram(std::size_t n, uint32_t p);

// Interleaved block embedding H -> GSp_2n: block i lands on rows/columns
// {i, 2n+1-i}. The result g satisfies g^T Psi g = det * Psi.
MatrixFp embed_split(const HilbertTuple& t);

// Weight restriction along the torus isomorphism induced by the
// embedding: k_i = a_i, l = (b - sum a_i)/2.
HilbertWeight restrict_weight(const Character& lambda);

// Torus triviality of d*w on T_H(F_p), by explicit evaluation at all
// (p-1)^{n+1} torus points.
bool torus_trivial_bruteforce(const HilbertWeight& w, uint32_t p, long long d);

// Same condition via the congruences (p-1) | d k_i and (p-1) | d l.
bool torus_trivial_congruence(const HilbertWeight& w, uint32_t p, long long d);

struct HZipVerdict {
    bool found = false;
    int witness_d = 0;
    bool saturated_in = false;  // all k_i <= 0
};

// Least d <= d_max such that d*w is a nonzero zip-level section for the
// Hilbert group: all d k_i <= 0 and d*w trivial on T_H(F_p).
HZipVerdict hzip_cone_check(const HilbertWeight& w, uint32_t p, int d_max);

}  // namespace zipcone
