#include "zipcone/tableaux.hpp"

#include <numeric>
#include <stdexcept>

namespace zipcone {

bool is_partition(const Partition& mu) {
    for (std::size_t i = 0; i < mu.size(); ++i) {
        if (mu[i] < 0) return false;
        if (i && mu[i] > mu[i - 1]) return false;
    }
    return true;
}

long long partition_size(const Partition& mu) {
    return std::accumulate(mu.begin(), mu.end(), 0LL);
}

Partition conjugate(const Partition& mu) {
    Partition out;
    if (mu.empty() || mu[0] == 0) return out;
    for (long long c = 0; c < mu[0]; ++c) {
        long long h = 0;
        for (long long part : mu)
            if (part > c) ++h;
        out.push_back(h);
    }
    return out;
}

std::vector<long long> Tableau::content(std::size_t n) const {
    std::vector<long long> cnt(n, 0);
    for (const auto& row : rows)
        for (uint8_t v : row) {
            if (v < 1 || v > n) throw std::invalid_argument("Tableau::content: entry out of range");
            ++cnt[v - 1];
        }
    return cnt;
}

std::vector<uint8_t> Tableau::column(std::size_t c) const {
    std::vector<uint8_t> out;
    for (const auto& row : rows)
        if (c < row.size()) out.push_back(row[c]);
    return out;
}

bool Tableau::is_semistandard() const {
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (static_cast<long long>(rows[i].size()) != (i < shape.size() ? shape[i] : 0)) return false;
        for (std::size_t j = 0; j + 1 < rows[i].size(); ++j)
            if (rows[i][j] > rows[i][j + 1]) return false;
        if (i) {
            for (std::size_t j = 0; j < rows[i].size(); ++j)
                if (j >= rows[i - 1].size() || rows[i - 1][j] >= rows[i][j]) return false;
        }
    }
    return true;
}

std::string Tableau::to_string() const {
    std::string s;
    for (const auto& row : rows) {
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (j) s += " ";
            s += std::to_string(row[j]);
        }
        s += "\n";
    }
    return s;
}

namespace {

void fill_cells(const Partition& mu, std::size_t n, std::vector<std::vector<uint8_t>>& rows,
                std::size_t r, std::size_t c, std::vector<Tableau>& out) {
    if (r == rows.size()) {
        out.push_back(Tableau{mu, rows});
        return;
    }
    std::size_t nr = r, nc = c + 1;
    if (nc >= rows[r].size()) {
        nr = r + 1;
        nc = 0;
    }
    uint8_t lo = 1;
    if (c > 0) lo = rows[r][c - 1];                            // weak along rows
    if (r > 0) lo = std::max<uint8_t>(lo, rows[r - 1][c] + 1);  // strict down columns
    for (uint8_t v = lo; v <= n; ++v) {
        rows[r][c] = v;
        fill_cells(mu, n, rows, nr, nc, out);
    }
}

}  // namespace

std::vector<Tableau> enumerate_ssyt(const Partition& mu, std::size_t n) {
    if (!is_partition(mu)) throw std::invalid_argument("enumerate_ssyt: not a partition");
    std::vector<Tableau> out;
    std::vector<std::vector<uint8_t>> rows;
    for (long long part : mu)
        if (part > 0) rows.emplace_back(part, 0);
    if (rows.size() > n) return out;  // column strictness has no room
    if (rows.empty()) {
        out.push_back(Tableau{mu, {}});
        return out;
    }
    fill_cells(mu, n, rows, 0, 0, out);
    return out;
}

unsigned long long hook_content_count(const Partition& mu, std::size_t n) {
    if (!is_partition(mu)) throw std::invalid_argument("hook_content_count: not a partition");
    Partition conj = conjugate(mu);
    if (!conj.empty() && conj[0] > static_cast<long long>(n)) return 0;
    // prod over cells (i,j) of (n + j - i) / hook(i,j); evaluate as an exact
    // integer by cancelling one cell at a time against a running product.
    unsigned long long num = 1, den = 1;
    for (std::size_t i = 0; i < mu.size(); ++i) {
        for (long long j = 0; j < mu[i]; ++j) {
            long long arm = mu[i] - j - 1;
            long long leg = conj[j] - static_cast<long long>(i) - 1;
            long long hook = arm + leg + 1;
            long long cont = static_cast<long long>(n) + j - static_cast<long long>(i);
            num *= static_cast<unsigned long long>(cont);
            den *= static_cast<unsigned long long>(hook);
            unsigned long long g = std::gcd(num, den);
            num /= g;
            den /= g;
        }
    }
    if (den != 1) throw std::logic_error("hook_content_count: non-integral product");
    return num;
}

}  // namespace zipcone
