#include "zipcone/fp_linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace zipcone {

MatrixFp MatrixFp::identity(uint32_t p, std::size_t n) {
    MatrixFp m(p, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1 % p;
    return m;
}

std::vector<uint32_t> MatrixFp::row(std::size_t i) const {
    return std::vector<uint32_t>(a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_);
}

MatrixFp MatrixFp::transpose() const {
    MatrixFp t(p_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

MatrixFp MatrixFp::operator*(const MatrixFp& rhs) const {
    if (cols_ != rhs.rows_ || p_ != rhs.p_)
        throw std::invalid_argument("MatrixFp::operator*: shape or modulus mismatch");
    MatrixFp out(p_, rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            uint32_t v = at(i, k);
            if (!v) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j)
                out.at(i, j) = fp::add(out.at(i, j), fp::mul(v, rhs.at(k, j), p_), p_);
        }
    return out;
}

MatrixFp MatrixFp::operator+(const MatrixFp& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_ || p_ != rhs.p_)
        throw std::invalid_argument("MatrixFp::operator+: shape or modulus mismatch");
    MatrixFp out(p_, rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = fp::add(a_[i], rhs.a_[i], p_);
    return out;
}

MatrixFp MatrixFp::operator-(const MatrixFp& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_ || p_ != rhs.p_)
        throw std::invalid_argument("MatrixFp::operator-: shape or modulus mismatch");
    MatrixFp out(p_, rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = fp::sub(a_[i], rhs.a_[i], p_);
    return out;
}

std::vector<uint32_t> MatrixFp::apply(const std::vector<uint32_t>& v) const {
    if (v.size() != cols_) throw std::invalid_argument("MatrixFp::apply: size mismatch");
    std::vector<uint32_t> out(rows_, 0);
    for (std::size_t i = 0; i < rows_; ++i) {
        uint64_t acc = 0;
        for (std::size_t j = 0; j < cols_; ++j) acc += static_cast<uint64_t>(at(i, j)) * v[j];
        out[i] = static_cast<uint32_t>(acc % p_);
    }
    return out;
}

void MatrixFp::scale(uint32_t c) {
    for (auto& x : a_) x = fp::mul(x, c, p_);
}

uint32_t MatrixFp::det() const {
    if (rows_ != cols_) throw std::invalid_argument("MatrixFp::det: not square");
    MatrixFp m = *this;
    uint32_t d = 1 % p_;
    for (std::size_t col = 0, row = 0; col < m.cols_ && row < m.rows_; ++col, ++row) {
        std::size_t piv = row;
        while (piv < m.rows_ && m.at(piv, col) == 0) ++piv;
        if (piv == m.rows_) return 0;
        if (piv != row) {
            for (std::size_t j = 0; j < m.cols_; ++j) std::swap(m.at(piv, j), m.at(row, j));
            d = fp::neg(d, p_);
        }
        d = fp::mul(d, m.at(row, col), p_);
        uint32_t pinv = fp::inv(m.at(row, col), p_);
        for (std::size_t i = row + 1; i < m.rows_; ++i) {
            uint32_t f = fp::mul(m.at(i, col), pinv, p_);
            if (!f) continue;
            for (std::size_t j = col; j < m.cols_; ++j)
                m.at(i, j) = fp::sub(m.at(i, j), fp::mul(f, m.at(row, j), p_), p_);
        }
    }
    return d;
}

MatrixFp MatrixFp::inverse() const {
    if (rows_ != cols_) throw std::invalid_argument("MatrixFp::inverse: not square");
    MatrixFp aug(p_, rows_, 2 * cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
        aug.at(i, cols_ + i) = 1 % p_;
    }
    auto pivots = rref(aug);
    if (pivots.size() != rows_ || (rows_ && pivots.back() >= cols_))
        throw std::domain_error("MatrixFp::inverse: singular matrix");
    MatrixFp out(p_, rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out.at(i, j) = aug.at(i, cols_ + j);
    return out;
}

MatrixFp MatrixFp::stacked(const MatrixFp& other) const {
    if (cols_ != other.cols_ || p_ != other.p_)
        throw std::invalid_argument("MatrixFp::stacked: shape or modulus mismatch");
    MatrixFp out(p_, rows_ + other.rows_, cols_);
    std::copy(a_.begin(), a_.end(), out.a_.begin());
    std::copy(other.a_.begin(), other.a_.end(), out.a_.begin() + a_.size());
    return out;
}

std::vector<std::size_t> rref(MatrixFp& m) {
    const uint32_t p = m.p();
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t piv = row;
        while (piv < m.rows() && m.at(piv, col) == 0) ++piv;
        if (piv == m.rows()) continue;
        if (piv != row)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(piv, j), m.at(row, j));
        uint32_t inv = fp::inv(m.at(row, col), p);
        for (std::size_t j = col; j < m.cols(); ++j) m.at(row, j) = fp::mul(m.at(row, j), inv, p);
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == row) continue;
            uint32_t f = m.at(i, col);
            if (!f) continue;
            for (std::size_t j = col; j < m.cols(); ++j)
                m.at(i, j) = fp::sub(m.at(i, j), fp::mul(f, m.at(row, j), p), p);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

std::size_t rank(MatrixFp m) { return rref(m).size(); }

SubspaceFp SubspaceFp::span(MatrixFp vectors) {
    SubspaceFp s;
    s.p_ = vectors.p();
    s.ambient_ = vectors.cols();
    s.pivots_ = rref(vectors);
    MatrixFp basis(vectors.p(), s.pivots_.size(), vectors.cols());
    for (std::size_t i = 0; i < s.pivots_.size(); ++i)
        for (std::size_t j = 0; j < vectors.cols(); ++j) basis.at(i, j) = vectors.at(i, j);
    s.basis_ = std::move(basis);
    return s;
}

SubspaceFp SubspaceFp::zero(uint32_t p, std::size_t ambient) {
    return span(MatrixFp(p, 0, ambient));
}

SubspaceFp SubspaceFp::full(uint32_t p, std::size_t ambient) {
    return span(MatrixFp::identity(p, ambient));
}

bool SubspaceFp::contains(const std::vector<uint32_t>& v) const {
    if (v.size() != ambient_) throw std::invalid_argument("SubspaceFp::contains: size mismatch");
    std::vector<uint32_t> r = v;
    for (std::size_t i = 0; i < basis_.rows(); ++i) {
        uint32_t c = r[pivots_[i]];
        if (!c) continue;
        for (std::size_t j = 0; j < ambient_; ++j)
            r[j] = fp::sub(r[j], fp::mul(c, basis_.at(i, j), p_), p_);
    }
    return std::all_of(r.begin(), r.end(), [](uint32_t x) { return x == 0; });
}

SubspaceFp nullspace(const MatrixFp& m) {
    MatrixFp r = m;
    auto pivots = rref(r);
    const std::size_t n = m.cols();
    std::vector<bool> is_pivot(n, false);
    for (auto c : pivots) is_pivot[c] = true;
    MatrixFp gens(m.p(), n - pivots.size(), n);
    std::size_t g = 0;
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        gens.at(g, f) = 1 % m.p();
        for (std::size_t i = 0; i < pivots.size(); ++i)
            gens.at(g, pivots[i]) = fp::neg(r.at(i, f), m.p());
        ++g;
    }
    return SubspaceFp::span(std::move(gens));
}

SubspaceFp intersect(const SubspaceFp& u, const SubspaceFp& v) {
    if (u.p() != v.p() || u.ambient() != v.ambient())
        throw std::invalid_argument("intersect: modulus or ambient mismatch");
    const std::size_t d = u.ambient();
    const uint32_t p = u.p();
    // Zassenhaus: rows [U | U] and [V | 0]; reduced rows with zero left
    // half carry a basis of U cap V in their right half.
    MatrixFp blk(p, u.dim() + v.dim(), 2 * d);
    for (std::size_t i = 0; i < u.dim(); ++i)
        for (std::size_t j = 0; j < d; ++j) {
            blk.at(i, j) = u.basis().at(i, j);
            blk.at(i, d + j) = u.basis().at(i, j);
        }
    for (std::size_t i = 0; i < v.dim(); ++i)
        for (std::size_t j = 0; j < d; ++j) blk.at(u.dim() + i, j) = v.basis().at(i, j);
    auto pivots = rref(blk);
    std::size_t count = 0;
    for (std::size_t i = 0; i < pivots.size(); ++i)
        if (pivots[i] >= d) ++count;
    MatrixFp out(p, count, d);
    std::size_t g = 0;
    for (std::size_t i = 0; i < pivots.size(); ++i) {
        if (pivots[i] < d) continue;
        for (std::size_t j = 0; j < d; ++j) out.at(g, j) = blk.at(i, d + j);
        ++g;
    }
    return SubspaceFp::span(std::move(out));
}

SubspaceFp subspace_sum(const SubspaceFp& u, const SubspaceFp& v) {
    if (u.p() != v.p() || u.ambient() != v.ambient())
        throw std::invalid_argument("subspace_sum: modulus or ambient mismatch");
    return SubspaceFp::span(u.basis().stacked(v.basis()));
}

EchelonSolver::EchelonSolver(const MatrixFp& b) : nrows_(b.rows()) {
    const uint32_t p = b.p();
    MatrixFp aug(p, b.rows(), b.cols() + b.rows());
    for (std::size_t i = 0; i < b.rows(); ++i) {
        for (std::size_t j = 0; j < b.cols(); ++j) aug.at(i, j) = b.at(i, j);
        aug.at(i, b.cols() + i) = 1 % p;
    }
    // RREF restricted to the first cols(b) columns so the transform block
    // records S with R = S B.
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < b.cols() && row < aug.rows(); ++col) {
        std::size_t piv = row;
        while (piv < aug.rows() && aug.at(piv, col) == 0) ++piv;
        if (piv == aug.rows()) continue;
        if (piv != row)
            for (std::size_t j = 0; j < aug.cols(); ++j) std::swap(aug.at(piv, j), aug.at(row, j));
        uint32_t inv = fp::inv(aug.at(row, col), p);
        for (std::size_t j = 0; j < aug.cols(); ++j) aug.at(row, j) = fp::mul(aug.at(row, j), inv, p);
        for (std::size_t i = 0; i < aug.rows(); ++i) {
            if (i == row) continue;
            uint32_t f = aug.at(i, col);
            if (!f) continue;
            for (std::size_t j = 0; j < aug.cols(); ++j)
                aug.at(i, j) = fp::sub(aug.at(i, j), fp::mul(f, aug.at(row, j), p), p);
        }
        pivots.push_back(col);
        ++row;
    }
    if (pivots.size() != b.rows())
        throw std::invalid_argument("EchelonSolver: rows not linearly independent");
    pivots_ = std::move(pivots);
    r_ = MatrixFp(p, b.rows(), b.cols());
    s_ = MatrixFp(p, b.rows(), b.rows());
    for (std::size_t i = 0; i < b.rows(); ++i) {
        for (std::size_t j = 0; j < b.cols(); ++j) r_.at(i, j) = aug.at(i, j);
        for (std::size_t j = 0; j < b.rows(); ++j) s_.at(i, j) = aug.at(i, b.cols() + j);
    }
}

std::optional<std::vector<uint32_t>> EchelonSolver::solve(const std::vector<uint32_t>& v) const {
    const uint32_t p = r_.p();
    if (v.size() != r_.cols()) throw std::invalid_argument("EchelonSolver::solve: size mismatch");
    std::vector<uint32_t> rem = v;
    std::vector<uint32_t> d(nrows_, 0);
    for (std::size_t i = 0; i < nrows_; ++i) {
        uint32_t c = rem[pivots_[i]];
        d[i] = c;
        if (!c) continue;
        for (std::size_t j = 0; j < r_.cols(); ++j)
            rem[j] = fp::sub(rem[j], fp::mul(c, r_.at(i, j), p), p);
    }
    for (uint32_t x : rem)
        if (x) return std::nullopt;
    // v = d^T R = d^T S B, so c = S^T d.
    std::vector<uint32_t> c(nrows_, 0);
    for (std::size_t j = 0; j < nrows_; ++j) {
        uint64_t acc = 0;
        for (std::size_t i = 0; i < nrows_; ++i)
            acc += static_cast<uint64_t>(s_.at(i, j)) * d[i];
        c[j] = static_cast<uint32_t>(acc % p);
    }
    return c;
}

std::optional<std::vector<uint32_t>> solve_in_span(const MatrixFp& b,
                                                   const std::vector<uint32_t>& v) {
    return EchelonSolver(b).solve(v);
}

}  // namespace zipcone
