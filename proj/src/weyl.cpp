#include "zipcone/weyl.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace zipcone {

namespace {

// Positive roots of C_n in a-coordinates: e_i - e_j (i<j), e_i + e_j (i<j),
// 2 e_i. A vector is a positive root iff its first nonzero entry is > 0.
std::vector<std::vector<long long>> positive_roots(std::size_t n) {
    std::vector<std::vector<long long>> roots;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            std::vector<long long> r(n, 0);
            r[i] = 1;
            r[j] = -1;
            roots.push_back(r);
            r[j] = 1;
            roots.push_back(r);
        }
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<long long> r(n, 0);
        r[i] = 2;
        roots.push_back(r);
    }
    return roots;
}

bool first_nonzero_negative(const std::vector<long long>& v) {
    for (long long x : v) {
        if (x > 0) return false;
        if (x < 0) return true;
    }
    return false;
}

std::vector<long long> simple_root(std::size_t n, std::size_t i) {
    std::vector<long long> r(n, 0);
    if (i < n) {
        r[i - 1] = 1;
        r[i] = -1;
    } else {
        r[n - 1] = 2;
    }
    return r;
}

// l(w s_i) < l(w) iff w(alpha_i) < 0.
bool right_descent(const WeylElement& w, std::size_t i) {
    return first_nonzero_negative(w.act(simple_root(w.rank(), i)));
}

}  // namespace

WeylElement::WeylElement(std::vector<uint8_t> perm1) {
    const std::size_t m = perm1.size();
    if (m == 0 || m % 2 != 0) throw std::invalid_argument("WeylElement: length must be 2n > 0");
    std::vector<bool> seen(m, false);
    perm_.resize(m);
    for (std::size_t i = 0; i < m; ++i) {
        if (perm1[i] < 1 || perm1[i] > m || seen[perm1[i] - 1])
            throw std::invalid_argument("WeylElement: not a permutation of 1..2n");
        seen[perm1[i] - 1] = true;
        perm_[i] = static_cast<uint8_t>(perm1[i] - 1);
    }
    for (std::size_t i = 0; i < m; ++i)
        if (static_cast<std::size_t>(perm_[i]) + perm_[m - 1 - i] != m - 1)
            throw std::invalid_argument("WeylElement: symplectic symmetry violated");
}

WeylElement WeylElement::identity(std::size_t n) {
    std::vector<uint8_t> p(2 * n);
    std::iota(p.begin(), p.end(), 1);
    return WeylElement(std::move(p));
}

WeylElement WeylElement::simple_reflection(std::size_t n, std::size_t i) {
    if (i < 1 || i > n) throw std::invalid_argument("simple_reflection: index out of range");
    std::vector<uint8_t> p(2 * n);
    std::iota(p.begin(), p.end(), 1);
    const std::size_t m = 2 * n;
    if (i < n) {
        std::swap(p[i - 1], p[i]);
        std::swap(p[m - i - 1], p[m - i]);
    } else {
        std::swap(p[n - 1], p[n]);
    }
    return WeylElement(std::move(p));
}

WeylElement WeylElement::longest(std::size_t n) {
    std::vector<uint8_t> p(2 * n);
    for (std::size_t i = 0; i < 2 * n; ++i) p[i] = static_cast<uint8_t>(2 * n - i);
    return WeylElement(std::move(p));
}

WeylElement WeylElement::longest_levi(std::size_t n) {
    std::vector<uint8_t> p(2 * n);
    for (std::size_t i = 1; i <= n; ++i) {
        p[i - 1] = static_cast<uint8_t>(n + 1 - i);
        p[2 * n - i] = static_cast<uint8_t>(n + i);
    }
    return WeylElement(std::move(p));
}

std::vector<uint8_t> WeylElement::perm_one_based() const {
    std::vector<uint8_t> out(perm_.size());
    for (std::size_t i = 0; i < perm_.size(); ++i) out[i] = static_cast<uint8_t>(perm_[i] + 1);
    return out;
}

WeylElement WeylElement::operator*(const WeylElement& rhs) const {
    if (perm_.size() != rhs.perm_.size())
        throw std::invalid_argument("WeylElement::operator*: rank mismatch");
    std::vector<uint8_t> p(perm_.size());
    for (std::size_t i = 0; i < perm_.size(); ++i) p[i] = perm_[rhs.perm_[i]];
    return WeylElement(std::move(p), unchecked_t{});
}

WeylElement WeylElement::inverse() const {
    std::vector<uint8_t> p(perm_.size());
    for (std::size_t i = 0; i < perm_.size(); ++i) p[perm_[i]] = static_cast<uint8_t>(i);
    return WeylElement(std::move(p), unchecked_t{});
}

bool WeylElement::is_identity() const {
    for (std::size_t i = 0; i < perm_.size(); ++i)
        if (perm_[i] != i) return false;
    return true;
}

std::vector<long long> WeylElement::act(const std::vector<long long>& v) const {
    const std::size_t n = rank();
    if (v.size() != n) throw std::invalid_argument("WeylElement::act: size mismatch");
    // Extend to 2n coordinates (a, -reverse(a)), permute, read back:
    // (w v)_i = v_{w^{-1}(i)} in the 2n picture.
    uint8_t inv[256];
    for (std::size_t i = 0; i < perm_.size(); ++i) inv[perm_[i]] = static_cast<uint8_t>(i);
    std::vector<long long> out(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t j = inv[i];
        out[i] = (j < n) ? v[j] : -v[2 * n - 1 - j];
    }
    return out;
}

std::string WeylElement::to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < perm_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(perm_[i] + 1);
    }
    s += "]";
    return s;
}

SimpleReflectionSet::SimpleReflectionSet(std::size_t rank) : n(rank) {
    if (n < 1) throw std::invalid_argument("SimpleReflectionSet: rank must be >= 1");
    for (std::size_t i = 1; i <= n; ++i) s.push_back(WeylElement::simple_reflection(n, i));
    for (std::size_t i = 1; i < n; ++i) levi.push_back(s[i - 1]);
}

std::size_t weyl_length(const WeylElement& w) {
    std::size_t len = 0;
    for (const auto& root : positive_roots(w.rank()))
        if (first_nonzero_negative(w.act(root))) ++len;
    return len;
}

std::vector<std::size_t> reduced_word(const WeylElement& w) {
    std::vector<std::size_t> strips;
    WeylElement cur = w;
    const std::size_t n = w.rank();
    while (!cur.is_identity()) {
        std::size_t desc = 0;
        for (std::size_t i = 1; i <= n; ++i)
            if (right_descent(cur, i)) { desc = i; break; }
        strips.push_back(desc);
        cur = cur * WeylElement::simple_reflection(n, desc);
    }
    // stripping from the right reverses the word
    return std::vector<std::size_t>(strips.rbegin(), strips.rend());
}

bool bruhat_leq(const WeylElement& w1, const WeylElement& w2) {
    if (w1.rank() != w2.rank()) throw std::invalid_argument("bruhat_leq: rank mismatch");
    WeylElement a = w1, b = w2;
    const std::size_t n = a.rank();
    while (true) {
        if (b.is_identity()) return a.is_identity();
        std::size_t desc = 0;
        for (std::size_t i = 1; i <= n; ++i)
            if (right_descent(b, i)) { desc = i; break; }
        WeylElement s = WeylElement::simple_reflection(n, desc);
        if (right_descent(a, desc)) a = a * s;
        b = b * s;
    }
}

bool is_min_coset_rep(const WeylElement& w) {
    // l(s_i w) > l(w) iff w^{-1}(alpha_i) > 0, for i in I.
    const WeylElement winv = w.inverse();
    for (std::size_t i = 1; i < w.rank(); ++i)
        if (first_nonzero_negative(winv.act(simple_root(w.rank(), i)))) return false;
    return true;
}

std::vector<WeylElement> enumerate_weyl(std::size_t n) {
    std::vector<WeylElement> out;
    std::vector<uint8_t> sigma(n);
    std::iota(sigma.begin(), sigma.end(), 1);
    do {
        for (std::size_t mask = 0; mask < (1u << n); ++mask) {
            std::vector<uint8_t> p(2 * n);
            for (std::size_t i = 0; i < n; ++i) {
                uint8_t tgt = (mask >> i & 1) ? static_cast<uint8_t>(2 * n + 1 - sigma[i])
                                              : sigma[i];
                p[i] = tgt;
                p[2 * n - 1 - i] = static_cast<uint8_t>(2 * n + 1 - tgt);
            }
            out.emplace_back(std::move(p));
        }
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return out;
}

std::vector<WeylElement> enumerate_levi(std::size_t n) {
    std::vector<WeylElement> out;
    std::vector<uint8_t> sigma(n);
    std::iota(sigma.begin(), sigma.end(), 1);
    do {
        std::vector<uint8_t> p(2 * n);
        for (std::size_t i = 0; i < n; ++i) {
            p[i] = sigma[i];
            p[2 * n - 1 - i] = static_cast<uint8_t>(2 * n + 1 - sigma[i]);
        }
        out.emplace_back(std::move(p));
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return out;
}

std::vector<WeylElement> enumerate_IW(std::size_t n) {
    std::vector<WeylElement> out;
    for (auto& w : enumerate_weyl(n))
        if (is_min_coset_rep(w)) out.push_back(w);
    std::sort(out.begin(), out.end(), [](const WeylElement& a, const WeylElement& b) {
        std::size_t la = weyl_length(a), lb = weyl_length(b);
        if (la != lb) return la < lb;
        return a < b;
    });
    return out;
}

bool preceq(const WeylElement& w1, const WeylElement& w2) {
    if (w1.rank() != w2.rank()) throw std::invalid_argument("preceq: rank mismatch");
    if (!is_min_coset_rep(w1) || !is_min_coset_rep(w2))
        throw std::invalid_argument("preceq: arguments must lie in ^I W");
    // Closure order of the orbit stratification: some W_I-conjugate of the
    // smaller element sits below the larger one in Bruhat order. (The
    // Frobenius twist on the conjugating element is trivial here.)
    const std::size_t l2 = weyl_length(w2);
    for (const auto& v : enumerate_levi(w1.rank())) {
        WeylElement c = v * w1 * v.inverse();
        if (weyl_length(c) > l2) continue;
        if (bruhat_leq(c, w2)) return true;
    }
    return false;
}

WeylElement frame_element(std::size_t n) {
    return WeylElement::longest_levi(n) * WeylElement::longest(n);
}

}  // namespace zipcone
