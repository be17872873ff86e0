#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "zipcone/weyl.hpp"

namespace zipcone {

// Ekedahl-Oort stratification data for GSp_2n: one stratum per element of
// ^I W, dim = length + dim P, partially ordered by the twisted order.
struct StrataPoset {
    std::size_t n = 0;
    std::vector<WeylElement> elements;          // ^I W, sorted (length, lex)
    std::vector<std::size_t> length;
    std::vector<long long> dim;
    std::vector<std::vector<bool>> closure;     // closure[i][j]: i preceq j
    long long dim_P = 0;
    long long dim_G = 0;
};

// Guarded to 1 <= n <= 6 (2^n strata).
StrataPoset build_poset(std::size_t n);

// Covering relations of the closure order (transitive reduction).
std::vector<std::pair<std::size_t, std::size_t>> covering_relations(const StrataPoset& poset);

// Hasse diagram in DOT syntax; edges point from a stratum to the strata
// in its closure boundary. Node labels are "perm:length:dim".
std::string export_dot(const StrataPoset& poset);

// {"elements": [{"perm": [...], "length": l, "dim": d}, ...],
//  "relation": [[i, j], ...]} listing all strict pairs i preceq j.
std::string export_json(const StrataPoset& poset);

}  // namespace zipcone
