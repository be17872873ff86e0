#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "zipcone/fp.hpp"

namespace zipcone {

// Dense matrix over F_p, row-major, entries reduced in [0, p).
class MatrixFp {
  public:
    MatrixFp() : p_(2), rows_(0), cols_(0) {}
    MatrixFp(uint32_t p, std::size_t rows, std::size_t cols)
        : p_(p), rows_(rows), cols_(cols), a_(rows * cols, 0) {}

    static MatrixFp identity(uint32_t p, std::size_t n);

    uint32_t p() const { return p_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    uint32_t& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    uint32_t at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    void set(std::size_t i, std::size_t j, long long v) { at(i, j) = fp::reduce(v, p_); }

    const std::vector<uint32_t>& data() const { return a_; }

    std::vector<uint32_t> row(std::size_t i) const;
    MatrixFp transpose() const;

    MatrixFp operator*(const MatrixFp& rhs) const;
    MatrixFp operator+(const MatrixFp& rhs) const;
    MatrixFp operator-(const MatrixFp& rhs) const;
    bool operator==(const MatrixFp& rhs) const = default;

    std::vector<uint32_t> apply(const std::vector<uint32_t>& v) const;  // M v
    void scale(uint32_t c);

    uint32_t det() const;      // square only
    bool invertible() const { return rows_ == cols_ && det() != 0; }
    MatrixFp inverse() const;  // square, invertible

    // Rows of `other` appended below.
    MatrixFp stacked(const MatrixFp& other) const;

  private:
    uint32_t p_;
    std::size_t rows_, cols_;
    std::vector<uint32_t> a_;
};

// In-place reduced row echelon form; returns the pivot column of each
// nonzero row, in order. Zero rows are moved to the bottom.
std::vector<std::size_t> rref(MatrixFp& m);

std::size_t rank(MatrixFp m);

// A subspace of F_p^ambient, held as a canonical RREF basis matrix
// (one basis vector per row, strictly increasing pivot columns). Two
// subspaces are equal iff their basis matrices are identical.
class SubspaceFp {
  public:
    SubspaceFp() : p_(2), ambient_(0) {}

    // Canonicalizes the span of the rows of `vectors`.
    static SubspaceFp span(MatrixFp vectors);
    static SubspaceFp zero(uint32_t p, std::size_t ambient);
    static SubspaceFp full(uint32_t p, std::size_t ambient);

    uint32_t p() const { return p_; }
    std::size_t ambient() const { return ambient_; }
    std::size_t dim() const { return basis_.rows(); }
    const MatrixFp& basis() const { return basis_; }

    bool contains(const std::vector<uint32_t>& v) const;
    bool operator==(const SubspaceFp& rhs) const = default;

  private:
    uint32_t p_;
    std::size_t ambient_;
    MatrixFp basis_;
    std::vector<std::size_t> pivots_;
};

// {v : M v = 0}, canonical basis.
SubspaceFp nullspace(const MatrixFp& m);

// U `cap` V via the Zassenhaus block trick; same p and ambient required.
SubspaceFp intersect(const SubspaceFp& u, const SubspaceFp& v);

SubspaceFp subspace_sum(const SubspaceFp& u, const SubspaceFp& v);

// Repeated-solve helper: given B with independent rows, factors B once so
// that coordinate vectors c with c^T B = v can be read off per query.
class EchelonSolver {
  public:
    explicit EchelonSolver(const MatrixFp& b);

    // Coordinates of v in the row space of B, or nullopt if not in span.
    std::optional<std::vector<uint32_t>> solve(const std::vector<uint32_t>& v) const;

  private:
    MatrixFp r_;                        // RREF of B
    MatrixFp s_;                        // transform with R = S B
    std::vector<std::size_t> pivots_;
    std::size_t nrows_;
};

// One-shot form of the above.
std::optional<std::vector<uint32_t>> solve_in_span(const MatrixFp& b,
                                                   const std::vector<uint32_t>& v);

}  // namespace zipcone
