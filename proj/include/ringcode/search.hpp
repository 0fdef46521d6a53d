#pragma once

// Code search: the greedy construction behind the Gilbert-Varshamov proof,
// a branch-and-bound maximum-code finder (max clique on the "distance >= d"
// graph), and the exact list-decoding profiler.
//
// Determinism: all orderings are fixed, budgets are node counts, and results
// carry the ordering they used, so reruns are byte-for-byte reproducible.

#include <chrono>
#include <optional>
#include <string>
#include <vector>

#include "geometry.hpp"
#include "rational.hpp"
#include "ring.hpp"
#include "weights.hpp"

namespace ringcode {

inline constexpr std::uint64_t kDefaultSearchCap = 4096;   // vertices = |R|^n
inline constexpr std::uint64_t kDefaultNodeBudget = 10'000'000;

enum class WordOrdering { Lex, WeightLex };

inline std::string ordering_name(WordOrdering o) {
    return o == WordOrdering::Lex ? "lex" : "weight-lex";
}

struct SearchResult {
    Code code;
    bool certified_optimal = false;
    std::size_t max_size_found = 0;  // A_w(n, d) when certified
    std::uint64_t nodes_explored = 0;
    std::string ordering;
    double wall_seconds = 0.0;  // informational only; never serialized
    // GV certificate (greedy only): ceil(|R|^n / |{x : w(x) < d}|)
    std::optional<BigInt> gv_guarantee;
};

struct ListProfile {
    Rat radius;
    std::size_t max_list_size = 0;
    Word witness;  // first center (lexicographically) attaining the maximum
};

namespace detail {

inline std::vector<Word> enumerate_words(const FiniteRing& ring, std::size_t n,
                                         std::uint64_t cap) {
    const std::uint64_t total = checked_space_size(ring, n, cap);
    std::vector<Word> words;
    words.reserve(total);
    Word w(n, 0);
    do {
        words.push_back(w);
    } while (next_word(w, ring.order()));
    return words;
}

inline void validate_seed_words(const std::vector<Word>& seeds, const FiniteRing& ring,
                                std::size_t n, const WeightFunction& w, const Rat& d) {
    for (const Word& s : seeds) {
        if (s.size() != n) throw std::invalid_argument("seed word has wrong length");
        for (std::uint16_t x : s)
            if (x >= ring.order()) throw std::invalid_argument("seed word index out of range");
    }
    for (std::size_t i = 0; i < seeds.size(); ++i)
        for (std::size_t j = i + 1; j < seeds.size(); ++j)
            if (w.word_distance(seeds[i], seeds[j]) < d)
                throw std::invalid_argument("seed words violate the requested minimum distance");
}

}  // namespace detail

/// Greedy maximal code with minimum distance >= d: scan the word space in
/// the given order and keep every word at distance >= d from all kept words.
/// The result is maximal, hence its balls of radius < d cover R^n, which
/// yields |C| >= |R|^n / |{x : w(x) < d}|. For the overweight with integer d
/// that denominator is exactly the radius-(d-1) ball.
inline SearchResult greedy_gv(const FiniteRing& ring, std::size_t n, const Rat& d,
                              const WeightFunction& w, WordOrdering ordering = WordOrdering::Lex,
                              std::vector<Word> seed_words = {},
                              std::uint64_t cap = kDefaultEnumCap) {
    const auto started = std::chrono::steady_clock::now();
    detail::validate_seed_words(seed_words, ring, n, w, d);
    std::vector<Word> words = detail::enumerate_words(ring, n, cap);
    if (ordering == WordOrdering::WeightLex) {
        std::stable_sort(words.begin(), words.end(), [&](const Word& a, const Word& b) {
            return w.word_weight(a) < w.word_weight(b);
        });
    }

    BigInt strict_ball = 0;  // |{x : w(x) < d}|
    for (const Word& word : words)
        if (w.word_weight(word) < d) ++strict_ball;

    std::vector<Word> chosen = std::move(seed_words);
    std::uint64_t scanned = 0;
    for (const Word& word : words) {
        ++scanned;
        bool ok = true;
        for (const Word& c : chosen) {
            if (w.word_distance(word, c) < d) {
                ok = false;
                break;
            }
        }
        if (ok) chosen.push_back(word);
    }

    SearchResult result;
    result.code = Code::make(ring, n, std::move(chosen));
    result.max_size_found = result.code.size();
    result.nodes_explored = scanned;
    result.ordering = ordering_name(ordering);
    if (d > 0) {
        result.gv_guarantee = rat_ceil(Rat(space_size(ring, n), strict_ball));
        if (BigInt(result.code.size()) < *result.gv_guarantee)
            throw std::logic_error("internal error: greedy code misses the GV guarantee");
    } else {
        result.gv_guarantee = BigInt(result.code.size());  // d <= 0: whole space, trivially met
    }
    result.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    return result;
}

namespace detail {

// Tomita-style max clique over bitset candidate sets: candidates greedily
// colored, highest color expanded first, pruned when |clique| + color <=
// best. A plain greedy clique seeds the incumbent before branching.
class MaxCliqueSearch {
public:
    using Bits = std::vector<std::uint64_t>;

    MaxCliqueSearch(const std::vector<Bits>& adj, std::size_t v_count, std::uint64_t budget)
        : adj_(adj),
          v_count_(v_count),
          row_words_((v_count + 63) / 64),
          budget_(budget == 0 ? UINT64_MAX : budget) {}

    void run(std::vector<std::uint32_t> clique, const std::vector<std::uint32_t>& candidates) {
        Bits cand(row_words_, 0);
        for (std::uint32_t v : candidates) cand[v >> 6] |= 1ULL << (v & 63);
        best_ = clique;
        seed_greedy(clique, cand);
        expand(clique, cand);
    }

    const std::vector<std::uint32_t>& best() const { return best_; }
    std::uint64_t nodes() const { return nodes_; }
    bool completed() const { return !exhausted_; }

private:
    bool adjacent(std::uint32_t a, std::uint32_t b) const {
        return (adj_[a][b >> 6] >> (b & 63)) & 1;
    }

    void seed_greedy(const std::vector<std::uint32_t>& clique, const Bits& candidates) {
        std::vector<std::uint32_t> grown = clique;
        Bits avail = candidates;
        for (std::uint32_t v = 0; v < v_count_; ++v) {
            if ((avail[v >> 6] >> (v & 63)) & 1) {
                grown.push_back(v);
                for (std::size_t w = 0; w < row_words_; ++w) avail[w] &= adj_[v][w];
            }
        }
        if (grown.size() > best_.size()) best_ = std::move(grown);
    }

    void expand(std::vector<std::uint32_t>& clique, const Bits& candidates) {
        if (++nodes_ > budget_) {
            exhausted_ = true;
            return;
        }
        // greedy coloring into independent-set classes (in the candidate graph)
        std::vector<std::uint32_t> ordered;
        std::vector<std::uint32_t> color;
        std::vector<Bits> classes;
        for (std::uint32_t v = 0; v < v_count_; ++v) {
            if (!((candidates[v >> 6] >> (v & 63)) & 1)) continue;
            std::size_t cls = 0;
            for (; cls < classes.size(); ++cls) {
                bool conflict = false;
                for (std::size_t w = 0; w < row_words_; ++w)
                    if (classes[cls][w] & adj_[v][w]) {
                        conflict = true;
                        break;
                    }
                if (!conflict) break;
            }
            if (cls == classes.size()) classes.emplace_back(row_words_, 0);
            classes[cls][v >> 6] |= 1ULL << (v & 63);
        }
        for (std::size_t c = 0; c < classes.size(); ++c)
            for (std::uint32_t v = 0; v < v_count_; ++v)
                if ((classes[c][v >> 6] >> (v & 63)) & 1) {
                    ordered.push_back(v);
                    color.push_back(static_cast<std::uint32_t>(c + 1));
                }

        Bits remaining = candidates;
        Bits child(row_words_);
        for (std::size_t i = ordered.size(); i-- > 0;) {
            if (exhausted_) return;
            if (clique.size() + color[i] <= best_.size()) return;
            const std::uint32_t v = ordered[i];
            remaining[v >> 6] &= ~(1ULL << (v & 63));
            bool empty = true;
            for (std::size_t w = 0; w < row_words_; ++w) {
                child[w] = remaining[w] & adj_[v][w];
                if (child[w]) empty = false;
            }
            clique.push_back(v);
            if (clique.size() > best_.size()) best_ = clique;
            if (!empty) {
                expand(clique, child);
            } else if (++nodes_ > budget_) {
                exhausted_ = true;
            }
            clique.pop_back();
        }
    }

    const std::vector<Bits>& adj_;
    std::size_t v_count_;
    std::size_t row_words_;
    std::uint64_t budget_;
    std::uint64_t nodes_ = 0;
    bool exhausted_ = false;
    std::vector<std::uint32_t> best_;
};

}  // namespace detail

/// Exact maximum-code search: branch-and-bound maximum clique on the graph
/// with vertex set R^n and edges {x,y} iff d_w(x,y) >= d. Translation
/// invariance lets the zero word be fixed in the code (fix_zero, ignored
/// when seed words are given). Vertices are ordered by weight, then
/// lexicographically. certified_optimal is true iff the search completed
/// within the node budget.
inline SearchResult max_code(const FiniteRing& ring, std::size_t n, const Rat& d,
                             const WeightFunction& w,
                             std::uint64_t node_budget = kDefaultNodeBudget,
                             bool fix_zero = true, std::vector<Word> seed_words = {},
                             std::uint64_t cap = kDefaultSearchCap) {
    const auto started = std::chrono::steady_clock::now();
    detail::validate_seed_words(seed_words, ring, n, w, d);
    std::vector<Word> words = detail::enumerate_words(ring, n, cap);
    std::stable_sort(words.begin(), words.end(), [&](const Word& a, const Word& b) {
        return w.word_weight(a) < w.word_weight(b);
    });

    SearchResult result;
    result.ordering = "weight-lex";

    // Distinct words differ in some coordinate, so every pairwise distance
    // is at least the minimum nonzero-element weight (which can be 0: the
    // homogeneous weight is not positive definite on every ring). For d
    // below that the graph is complete and the maximum code is R^n.
    Rat min_nonzero = w.max_element_weight();
    for (std::size_t x = 0; x < ring.order(); ++x) {
        const Rat& wx = w.weight(static_cast<std::uint16_t>(x));
        if (x != ring.zero() && wx < min_nonzero) min_nonzero = wx;
    }
    if (d <= min_nonzero) {
        result.code = Code::make(ring, n, std::move(words));
        result.max_size_found = result.code.size();
        result.certified_optimal = true;
        result.nodes_explored = 0;
        result.wall_seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
        return result;
    }

    const std::size_t v_count = words.size();
    const std::size_t words_per_row = (v_count + 63) / 64;
    std::vector<std::vector<std::uint64_t>> adj(v_count,
                                                std::vector<std::uint64_t>(words_per_row, 0));
    for (std::size_t i = 0; i < v_count; ++i)
        for (std::size_t j = i + 1; j < v_count; ++j)
            if (w.word_distance(words[i], words[j]) >= d) {
                adj[i][j >> 6] |= 1ULL << (j & 63);
                adj[j][i >> 6] |= 1ULL << (i & 63);
            }

    std::vector<std::uint32_t> initial;
    if (!seed_words.empty()) {
        for (const Word& s : seed_words) {
            auto it = std::find(words.begin(), words.end(), s);
            initial.push_back(static_cast<std::uint32_t>(it - words.begin()));
        }
    } else if (fix_zero) {
        const Word zero_word(n, ring.zero());
        auto it = std::find(words.begin(), words.end(), zero_word);
        initial.push_back(static_cast<std::uint32_t>(it - words.begin()));
    }
    std::vector<std::uint32_t> candidates;
    for (std::uint32_t v = 0; v < v_count; ++v) {
        if (std::find(initial.begin(), initial.end(), v) != initial.end()) continue;
        bool ok = true;
        for (std::uint32_t s : initial)
            if (!((adj[s][v >> 6] >> (v & 63)) & 1)) {
                ok = false;
                break;
            }
        if (ok) candidates.push_back(v);
    }

    detail::MaxCliqueSearch search(adj, v_count, node_budget);
    search.run(initial, candidates);

    std::vector<Word> best_words;
    for (std::uint32_t v : search.best()) best_words.push_back(words[v]);
    result.code = Code::make(ring, n, std::move(best_words));
    result.max_size_found = result.code.size();
    result.certified_optimal = search.completed();
    result.nodes_explored = search.nodes();
    result.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    return result;
}

/// Exact maximum of |B_radius(y) ∩ C| over all centers y in R^n, with the
/// first maximizing center as witness.
inline ListProfile list_profile(const Code& code, const WeightFunction& w, const Rat& radius,
                                std::uint64_t cap = kDefaultEnumCap) {
    if (radius < 0) throw std::invalid_argument("list profile radius must be nonnegative");
    const FiniteRing& ring = *code.ring;
    checked_space_size(ring, code.n, cap);
    ListProfile profile;
    profile.radius = radius;
    Word center(code.n, 0);
    do {
        std::size_t hits = 0;
        for (const Word& c : code.words)
            if (w.word_distance(c, center) <= radius) ++hits;
        if (hits > profile.max_list_size) {
            profile.max_list_size = hits;
            profile.witness = center;
        }
    } while (next_word(center, ring.order()));
    return profile;
}

}  // namespace ringcode
