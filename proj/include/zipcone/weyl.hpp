#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace zipcone {

// Element of the Weyl group of GSp_2n (type C_n), stored as a permutation
// w of {1..2n} (0-based internally) subject to the symplectic symmetry
// w(i) + w(2n+1-i) = 2n+1. Immutable after construction.
class WeylElement {
  public:
    // perm1[i] is the 1-based image of i+1.
    explicit WeylElement(std::vector<uint8_t> perm1);

    static WeylElement identity(std::size_t n);
    static WeylElement simple_reflection(std::size_t n, std::size_t i);  // i in 1..n
    static WeylElement longest(std::size_t n);                           // w_0
    static WeylElement longest_levi(std::size_t n);                      // w_{0,I}

    std::size_t rank() const { return perm_.size() / 2; }

    // 1-based image of the 1-based index i.
    std::size_t image(std::size_t i) const { return perm_[i - 1] + 1; }
    std::vector<uint8_t> perm_one_based() const;

    WeylElement operator*(const WeylElement& rhs) const;  // (w1*w2)(i) = w1(w2(i))
    WeylElement inverse() const;
    bool operator==(const WeylElement& rhs) const = default;
    bool operator<(const WeylElement& rhs) const { return perm_ < rhs.perm_; }

    bool is_identity() const;

    // Natural action on Z^n vectors (characters/roots in a-coordinates).
    std::vector<long long> act(const std::vector<long long>& v) const;

    std::string to_string() const;  // "[2,1,4,3]"

  private:
    struct unchecked_t {};
    WeylElement(std::vector<uint8_t> perm0, unchecked_t) : perm_(std::move(perm0)) {}

    std::vector<uint8_t> perm_;  // 0-based images
};

// The C_n simple reflections s_1..s_{n-1} (type A, permuting adjacent
// a-coordinates) plus the long reflection s_n (sign flip of a_n), with
// I = {s_1..s_{n-1}} marking the Levi.
struct SimpleReflectionSet {
    explicit SimpleReflectionSet(std::size_t n);

    std::size_t n;
    std::vector<WeylElement> s;      // s[0] = s_1, ..., s[n-1] = s_n
    std::vector<WeylElement> levi;   // the subset I
};

std::size_t weyl_length(const WeylElement& w);

// Reduced word by greedy right descents: w = s_{word[0]} ... s_{word.back()}
// with word.size() == weyl_length(w); indices are 1-based.
std::vector<std::size_t> reduced_word(const WeylElement& w);

// Bruhat order by the descent recursion; both elements must share a rank.
bool bruhat_leq(const WeylElement& w1, const WeylElement& w2);

// True iff l(s_i w) > l(w) for every i in I, i.e. w is the minimal-length
// representative of W_I w.
bool is_min_coset_rep(const WeylElement& w);

// All of W(C_n), unsorted canonical generation order (n! 2^n elements).
std::vector<WeylElement> enumerate_weyl(std::size_t n);

// The Levi Weyl group W_I (isomorphic to S_n).
std::vector<WeylElement> enumerate_levi(std::size_t n);

// ^I W sorted by (length, lexicographic permutation); 2^n elements.
std::vector<WeylElement> enumerate_IW(std::size_t n);

// Twisted order on ^I W: w1 preceq w2 iff w1 <= v w2 v^{-1} for some v in
// W_I (the Frobenius twist is trivial for the split group).
bool preceq(const WeylElement& w1, const WeylElement& w2);

// The frame element z = w_{0,I} w_0.
WeylElement frame_element(std::size_t n);

}  // namespace zipcone
