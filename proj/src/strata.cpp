#include "zipcone/strata.hpp"

#include <sstream>
#include <stdexcept>

#include "zipcone/characters.hpp"

namespace zipcone {

StrataPoset build_poset(std::size_t n) {
    if (n < 1 || n > 6) throw std::invalid_argument("build_poset: rank guarded to 1 <= n <= 6");
    StrataPoset poset;
    poset.n = n;
    poset.elements = enumerate_IW(n);
    const std::size_t count = poset.elements.size();

    // dim G = |Phi| + rank(T), dim P = dim L + |Phi^+ \ Phi_L^+|, both read
    // off the root datum rather than hardcoded.
    RootDatum datum(n);
    const long long rank_T = static_cast<long long>(n) + 1;
    poset.dim_G = 2 * static_cast<long long>(datum.positive_roots.size()) + rank_T;
    const long long dim_L =
        2 * static_cast<long long>(datum.levi_positive_roots.size()) + rank_T;
    poset.dim_P = dim_L + static_cast<long long>(datum.positive_roots.size() -
                                                 datum.levi_positive_roots.size());

    for (const auto& w : poset.elements) {
        poset.length.push_back(weyl_length(w));
        poset.dim.push_back(static_cast<long long>(poset.length.back()) + poset.dim_P);
    }
    poset.closure.assign(count, std::vector<bool>(count, false));
    for (std::size_t i = 0; i < count; ++i)
        for (std::size_t j = 0; j < count; ++j)
            poset.closure[i][j] = preceq(poset.elements[i], poset.elements[j]);
    return poset;
}

std::vector<std::pair<std::size_t, std::size_t>> covering_relations(const StrataPoset& poset) {
    const std::size_t count = poset.elements.size();
    std::vector<std::pair<std::size_t, std::size_t>> covers;
    for (std::size_t i = 0; i < count; ++i)
        for (std::size_t j = 0; j < count; ++j) {
            if (i == j || !poset.closure[i][j]) continue;
            bool direct = true;
            for (std::size_t k = 0; k < count && direct; ++k)
                if (k != i && k != j && poset.closure[i][k] && poset.closure[k][j])
                    direct = false;
            if (direct) covers.emplace_back(i, j);
        }
    return covers;
}

namespace {

std::string node_label(const StrataPoset& poset, std::size_t i) {
    return poset.elements[i].to_string() + ":" + std::to_string(poset.length[i]) + ":" +
           std::to_string(poset.dim[i]);
}

}  // namespace

std::string export_dot(const StrataPoset& poset) {
    std::ostringstream out;
    out << "digraph strata {\n";
    for (std::size_t i = 0; i < poset.elements.size(); ++i)
        out << "  n" << i << " [label=\"" << node_label(poset, i) << "\"];\n";
    for (const auto& [below, above] : covering_relations(poset))
        out << "  n" << above << " -> n" << below << ";\n";
    out << "}\n";
    return out.str();
}

std::string export_json(const StrataPoset& poset) {
    std::ostringstream out;
    out << "{\"elements\":[";
    for (std::size_t i = 0; i < poset.elements.size(); ++i) {
        if (i) out << ",";
        out << "{\"perm\":[";
        auto perm = poset.elements[i].perm_one_based();
        for (std::size_t j = 0; j < perm.size(); ++j) {
            if (j) out << ",";
            out << static_cast<int>(perm[j]);
        }
        out << "],\"length\":" << poset.length[i] << ",\"dim\":" << poset.dim[i] << "}";
    }
    out << "],\"relation\":[";
    bool first = true;
    for (std::size_t i = 0; i < poset.elements.size(); ++i)
        for (std::size_t j = 0; j < poset.elements.size(); ++j) {
            if (i == j || !poset.closure[i][j]) continue;
            if (!first) out << ",";
            first = false;
            out << "[" << i << "," << j << "]";
        }
    out << "]}";
    return out.str();
}

}  // namespace zipcone
