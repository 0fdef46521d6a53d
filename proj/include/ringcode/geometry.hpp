#pragma once

// Words, codes, and balls in R^n. The overweight sphere/ball sizes come from
// the generating function (1 + u z + v z^2)^n; ball_enumerate is the
// brute-force oracle the closed form is checked against.

#include <algorithm>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "rational.hpp"
#include "ring.hpp"
#include "weights.hpp"

namespace ringcode {

using Word = std::vector<std::uint16_t>;

inline constexpr std::uint64_t kDefaultEnumCap = 10'000'000;

struct CapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline BigInt space_size(const FiniteRing& ring, std::size_t n) {
    return int_pow(BigInt(ring.order()), n);
}

/// Throws unless |R|^n <= cap; returns |R|^n as a plain integer.
inline std::uint64_t checked_space_size(const FiniteRing& ring, std::size_t n,
                                        std::uint64_t cap = kDefaultEnumCap) {
    BigInt s = space_size(ring, n);
    if (s > cap)
        throw CapExceeded("word space of size " + s.str() + " exceeds enumeration cap " +
                          std::to_string(cap));
    return s.convert_to<std::uint64_t>();
}

/// Lexicographic odometer step; returns false after the last word wraps to 0.
inline bool next_word(Word& w, std::size_t order) {
    for (std::size_t i = w.size(); i-- > 0;) {
        if (w[i] + 1u < order) {
            ++w[i];
            std::fill(w.begin() + static_cast<std::ptrdiff_t>(i) + 1, w.end(), 0);
            return true;
        }
    }
    std::fill(w.begin(), w.end(), 0);
    return false;
}

/// A length-n block code over a ring: a deduplicated word set, stored in
/// lexicographic order. Not necessarily linear.
struct Code {
    const FiniteRing* ring = nullptr;
    std::size_t n = 0;
    std::vector<Word> words;

    static Code make(const FiniteRing& ring, std::size_t n, std::vector<Word> words,
                     bool* had_duplicates = nullptr) {
        for (const Word& w : words) {
            if (w.size() != n) throw std::invalid_argument("code word has wrong length");
            for (std::uint16_t x : w)
                if (x >= ring.order()) throw std::invalid_argument("code word index out of range");
        }
        std::sort(words.begin(), words.end());
        auto last = std::unique(words.begin(), words.end());
        if (had_duplicates) *had_duplicates = last != words.end();
        words.erase(last, words.end());
        if (words.empty()) throw std::invalid_argument("code must contain at least one word");
        return Code{&ring, n, std::move(words)};
    }

    std::size_t size() const { return words.size(); }
};

/// Number of words in R^n of overweight exactly t, from the coefficient
/// formula sum_l C(n, t-2l) C(n-t+2l, l) u^{t-2l} v^l.
inline BigInt sphere_size_overweight(const FiniteRing& ring, std::size_t n, long long t) {
    if (t < 0 || t > 2 * static_cast<long long>(n))
        throw std::domain_error("sphere radius t outside [0, 2n]");
    const BigInt u(ring.unit_count());
    const BigInt v(ring.nonzero_nonunit_count());
    BigInt total = 0;
    for (long long l = 0; l <= t / 2; ++l) {
        const long long units = t - 2 * l;
        BigInt term = binomial(static_cast<long long>(n), units) *
                      binomial(static_cast<long long>(n) - units, l);
        if (term == 0) continue;
        total += term * int_pow(u, static_cast<std::size_t>(units)) *
                 int_pow(v, static_cast<std::size_t>(l));
    }
    return total;
}

/// Volume of the overweight ball of radius e around any word of R^n.
/// e >= 2n gives the whole space.
inline BigInt ball_volume_overweight(const FiniteRing& ring, std::size_t n, long long e) {
    if (e < 0) throw std::domain_error("ball radius must be nonnegative");
    const long long top = std::min<long long>(e, 2 * static_cast<long long>(n));
    BigInt total = 0;
    for (long long t = 0; t <= top; ++t) total += sphere_size_overweight(ring, n, t);
    return total;
}

struct BallQuery {
    Word center;
    Rat radius;  // exact; homogeneous weights give rational distances
    const WeightFunction* weight = nullptr;
};

/// Exact members of the ball by full scan of R^n (the enumeration oracle).
inline std::vector<Word> ball_enumerate(const BallQuery& query,
                                        std::uint64_t cap = kDefaultEnumCap) {
    if (query.radius < 0) throw std::invalid_argument("ball radius must be nonnegative");
    const WeightFunction& w = *query.weight;
    const FiniteRing& ring = w.ring();
    const std::size_t n = query.center.size();
    checked_space_size(ring, n, cap);
    std::vector<Word> members;
    Word word(n, 0);
    do {
        if (w.word_distance(word, query.center) <= query.radius) members.push_back(word);
    } while (next_word(word, ring.order()));
    return members;
}

/// Minimum distance over all unordered pairs; nullopt for singleton codes.
inline std::optional<Rat> min_distance(const Code& code, const WeightFunction& w) {
    if (code.size() < 2) return std::nullopt;
    std::optional<Rat> best;
    for (std::size_t i = 0; i < code.words.size(); ++i)
        for (std::size_t j = i + 1; j < code.words.size(); ++j) {
            Rat d = w.word_distance(code.words[i], code.words[j]);
            if (!best || d < *best) best = std::move(d);
        }
    return best;
}

/// Sum of d(x,y) over ordered pairs (x = y contributes 0).
inline Rat pairwise_distance_sum(const Code& code, const WeightFunction& w) {
    Rat total = 0;
    for (std::size_t i = 0; i < code.words.size(); ++i)
        for (std::size_t j = i + 1; j < code.words.size(); ++j)
            total += w.word_distance(code.words[i], code.words[j]) +
                     w.word_distance(code.words[j], code.words[i]);
    return total;
}

}  // namespace ringcode
