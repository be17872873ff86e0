#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "zipcone/fp_linalg.hpp"
#include "zipcone/weylmod.hpp"

namespace zipcone {

// GLn_only: invariance under GL_n(F_p) alone. FullL: additionally the
// similitude factor F_p^x must act trivially, i.e. (p-1) | sim_exp.
// Saturated cone membership does not depend on the mode.
enum class InvarianceMode { GLnOnly, FullL };

std::string to_string(InvarianceMode mode);
InvarianceMode parse_mode(const std::string& text);

struct H0Report {
    Character lambda;
    uint32_t p;
    InvarianceMode mode;
    std::size_t dim_module = 0;
    std::size_t dim_invariants = 0;
    std::size_t dim_nonpositive = 0;
    std::size_t dim_h0 = 0;
    std::string generators_checked;
};

// Generating set of GL_n(F_p): the adjacent transvections I + E_{i,i+1},
// I + E_{i+1,i} and diag(zeta, 1, .., 1) for the smallest primitive root
// zeta mod p. At most 2n-1 matrices.
std::vector<MatrixFp> gl_generators(std::size_t n, uint32_t p);

// |GL_n(F_p)| = prod_{k<n} (p^n - p^k).
unsigned long long gl_order(std::size_t n, uint32_t p);

// |L(F_p)| = |GL_n(F_p)| * (p-1).
unsigned long long levi_group_order(std::size_t n, uint32_t p);

// BFS closure of gl_generators; guarded to n <= 3, p <= 5.
std::vector<MatrixFp> enumerate_gl(std::size_t n, uint32_t p);

// Certifies that the BFS closure of the generating set has exactly
// |GL_n(F_p)| elements. Guarded to n <= 3, p <= 5.
bool verify_generators(std::size_t n, uint32_t p);

// Span of the weight spaces with a_n <= 0 (pairing <= 0 against the one
// coroot of Delta^P), as a subspace in the tableau basis.
SubspaceFp nonpositive_part(const DualWeylModule& m);

// Invariant vectors under the chosen finite group, via the stacked
// nullspace of (act(g) - id) over the generating set.
SubspaceFp invariants(const DualWeylModule& m, InvarianceMode mode);

struct AutVanSplit {
    SubspaceFp aut;   // all weight coordinates <= 0
    SubspaceFp van;   // some weight coordinate > 0
    MatrixFp pr_van;  // projection onto van along aut (diagonal 0/1)
};

AutVanSplit aut_van_split(const DualWeylModule& m);

H0Report h0_gzip(const Character& lambda, uint32_t p, InvarianceMode mode,
                 long long monomial_budget = kDefaultMonomialBudget);

// IN with the least witness d, or NOT_FOUND up to d_max. Never claims
// non-membership of the saturated cone: the advisory bound d <= |L(F_p)|
// is informational only.
struct ScanVerdict {
    bool found = false;
    int witness_d = 0;
    std::vector<int> skipped_d;            // budget skips, ascending
    std::optional<H0Report> witness_report;
    unsigned long long advisory_bound = 0;  // |L(F_p)|
};

ScanVerdict czip_membership_scan(const Character& lambda, uint32_t p, InvarianceMode mode,
                                 int d_max, long long monomial_budget = kDefaultMonomialBudget);

}  // namespace zipcone
