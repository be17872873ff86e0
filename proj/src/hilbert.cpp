#include "zipcone/hilbert.hpp"

#include <stdexcept>

namespace zipcone {

HilbertTuple::HilbertTuple(uint32_t modulus, std::vector<MatrixFp> blks)
    : p(modulus), blocks(std::move(blks)), common_det(0) {
    if (blocks.empty()) throw std::invalid_argument("HilbertTuple: need at least one block");
    for (const auto& blk : blocks) {
        if (blk.rows() != 2 || blk.cols() != 2 || blk.p() != p)
            throw std::invalid_argument("HilbertTuple: blocks must be 2x2 over F_p");
        uint32_t d = blk.det();
        if (d == 0) throw std::invalid_argument("HilbertTuple: singular block");
        if (common_det == 0) common_det = d;
        else if (common_det != d)
            throw std::invalid_argument("HilbertTuple: determinant mismatch among blocks");
    }
}

HilbertTuple HilbertTuple::operator*(const HilbertTuple& rhs) const {
    if (p != rhs.p || rank() != rhs.rank())
        throw std::invalid_argument("HilbertTuple::operator*: incompatible tuples");
    std::vector<MatrixFp> prod;
    for (std::size_t i = 0; i < rank(); ++i) prod.push_back(blocks[i] * rhs.blocks[i]);
    return HilbertTuple(p, std::move(prod));
}

HilbertWeight HilbertWeight::operator+(const HilbertWeight& rhs) const {
    if (k.size() != rhs.k.size()) throw std::invalid_argument("HilbertWeight::operator+: rank mismatch");
    HilbertWeight out{k, l + rhs.l};
    for (std::size_t i = 0; i < k.size(); ++i) out.k[i] += rhs.k[i];
    return out;
}

HilbertWeight HilbertWeight::operator*(long long d) const {
    HilbertWeight out{k, l * d};
    for (auto& ki : out.k) ki *= d;
    return out;
}

MatrixFp symplectic_gram(std::size_t n, uint32_t p) {
    MatrixFp psi(p, 2 * n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        psi.at(i, 2 * n - 1 - i) = 1 % p;
        psi.at(2 * n - 1 - i, i) = fp::neg(1 % p, p);
    }
    return psi;
}

MatrixFp embed_split(const HilbertTuple& t) {
    const std::size_t n = t.rank();
    MatrixFp g(t.p, 2 * n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        const MatrixFp& blk = t.blocks[i];
        g.at(i, i) = blk.at(0, 0);
        g.at(i, 2 * n - 1 - i) = blk.at(0, 1);
        g.at(2 * n - 1 - i, i) = blk.at(1, 0);
        g.at(2 * n - 1 - i, 2 * n - 1 - i) = blk.at(1, 1);
    }
    return g;
}

HilbertWeight restrict_weight(const Character& lambda) {
    long long asum = 0;
    for (long long ai : lambda.a) asum += ai;
    return HilbertWeight{lambda.a, (lambda.b - asum) / 2};
}

bool torus_trivial_bruteforce(const HilbertWeight& w, uint32_t p, long long d) {
    const std::size_t n = w.k.size();
    std::vector<uint32_t> x(n + 1, 1);  // x_1..x_n, delta
    while (true) {
        uint32_t val = fp::pow_signed(x[n], d * w.l, p);
        for (std::size_t i = 0; i < n; ++i)
            val = fp::mul(val, fp::pow_signed(x[i], d * w.k[i], p), p);
        if (val != 1 % p) return false;
        std::size_t i = 0;
        while (i <= n && ++x[i] == p) x[i++] = 1;
        if (i > n) break;
    }
    return true;
}

bool torus_trivial_congruence(const HilbertWeight& w, uint32_t p, long long d) {
    const long long m = static_cast<long long>(p) - 1;
    for (long long ki : w.k)
        if ((d * ki) % m != 0) return false;
    return (d * w.l) % m == 0;
}

HZipVerdict hzip_cone_check(const HilbertWeight& w, uint32_t p, int d_max) {
    if (d_max < 1) throw std::invalid_argument("hzip_cone_check: d_max must be >= 1");
    if (!fp::is_prime(p)) throw std::invalid_argument("hzip_cone_check: p must be prime");
    HZipVerdict verdict;
    verdict.saturated_in = true;
    for (long long ki : w.k)
        if (ki > 0) verdict.saturated_in = false;
    if (!verdict.saturated_in) return verdict;  // some d k_i > 0 for every d
    for (int d = 1; d <= d_max; ++d) {
        if (!torus_trivial_bruteforce(w, p, d)) continue;
        verdict.found = true;
        verdict.witness_d = d;
        break;
    }
    return verdict;
}

}  // namespace zipcone
