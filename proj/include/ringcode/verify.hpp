#pragma once

// Direct checkers for the inequalities the bounds rest on, so each can be
// falsified independently. All arithmetic is exact; random inputs are
// normalized integer vectors, so the randomized suites are exact too.
// Per-trial seeds derive from one master seed, making the suites
// reproducible for any worker count.

#include <optional>
#include <random>
#include <span>
#include <string>
#include <thread>
#include <vector>

#include "bounds.hpp"
#include "geometry.hpp"
#include "prng.hpp"
#include "rational.hpp"
#include "ring.hpp"
#include "search.hpp"
#include "weights.hpp"

namespace ringcode {

/// Exact probability distribution on ring elements.
struct Distribution {
    const FiniteRing* ring = nullptr;
    std::vector<Rat> p;

    void validate() const {
        Rat sum = 0;
        for (const Rat& x : p) {
            if (x < 0) throw std::invalid_argument("negative probability");
            sum += x;
        }
        if (sum != 1) throw std::invalid_argument("probabilities must sum to 1");
    }

    static Distribution uniform(const FiniteRing& ring, std::span<const std::uint16_t> support) {
        if (support.empty()) throw std::invalid_argument("empty support");
        Distribution d{&ring, std::vector<Rat>(ring.order(), Rat(0))};
        for (std::uint16_t x : support) d.p[x] = Rat(BigInt(1), BigInt(support.size()));
        return d;
    }

    static Distribution point_mass(const FiniteRing& ring, std::uint16_t x) {
        Distribution d{&ring, std::vector<Rat>(ring.order(), Rat(0))};
        d.p[x] = 1;
        return d;
    }

    /// Normalized random integer vector on the given support.
    static Distribution random_on(const FiniteRing& ring, std::span<const std::uint16_t> support,
                                  std::mt19937_64& rng) {
        if (support.empty()) throw std::invalid_argument("empty support");
        std::vector<std::uint64_t> raw(support.size());
        std::uint64_t total = 0;
        while (total == 0) {
            for (auto& r : raw) {
                r = rng_below(rng, 100);
                total += r;
            }
        }
        Distribution d{&ring, std::vector<Rat>(ring.order(), Rat(0))};
        for (std::size_t i = 0; i < support.size(); ++i)
            d.p[support[i]] = Rat(BigInt(raw[i]), BigInt(total));
        return d;
    }
};

struct CheckReport {
    std::string name;
    bool applicable = true;
    std::string reason;  // set when not applicable
    Rat lhs;
    std::optional<Rat> mid;  // present for the three-way inequalities
    Rat rhs;
    bool pass = false;  // meaningful when applicable
    std::vector<std::pair<std::string, std::string>> params;

    void param(std::string key, std::string val) {
        params.emplace_back(std::move(key), std::move(val));
    }

    std::string summary() const {
        if (!applicable) return name + ": n/a (" + reason + ")";
        std::string s = name + ": " + rat_to_string(lhs);
        if (mid) s += " <= " + rat_to_string(*mid);
        s += " <= " + rat_to_string(rhs);
        s += pass ? "  [pass]" : "  [VIOLATED]";
        return s;
    }
};

/// sum_{x,y in I} w_H(x-y) P(x) P(y) <= 1 - 1/|I| for P supported on I.
inline CheckReport check_hamming_average(const FiniteRing& ring,
                                         std::span<const std::uint16_t> subset,
                                         const Distribution& dist) {
    dist.validate();
    std::vector<char> in(ring.order(), 0);
    for (std::uint16_t x : subset) in[x] = 1;
    for (std::size_t x = 0; x < ring.order(); ++x)
        if (dist.p[x] > 0 && !in[x])
            throw std::invalid_argument("distribution support escapes the subset");
    CheckReport r;
    r.name = "hamming_average";
    r.param("|I|", std::to_string(subset.size()));
    Rat lhs = 0;
    for (std::uint16_t x : subset)
        for (std::uint16_t y : subset)
            if (ring.sub(x, y) != ring.zero()) lhs += dist.p[x] * dist.p[y];
    r.lhs = std::move(lhs);
    r.rhs = Rat(1) - Rat(BigInt(1), BigInt(subset.size()));
    r.pass = r.lhs <= r.rhs;
    return r;
}

/// sum_{x,y in R} W(x-y) P(x) P(y) <= eta, over a local ring with |J| >= 2.
inline CheckReport check_probineq(const FiniteRing& ring, const Distribution& dist) {
    if (!ring.locality().is_local || ring.locality().maximal_ideal.size() < 2)
        throw std::domain_error("check_probineq requires a local ring with |J| >= 2");
    dist.validate();
    const WeightFunction w = WeightFunction::overweight(ring);
    CheckReport r;
    r.name = "probineq";
    r.param("ring", ring.spec_text());
    Rat lhs = 0;
    for (std::uint16_t x = 0; x < ring.order(); ++x) {
        if (dist.p[x] == 0) continue;
        for (std::uint16_t y = 0; y < ring.order(); ++y) {
            if (dist.p[y] == 0) continue;
            lhs += w.weight(ring.sub(x, y)) * dist.p[x] * dist.p[y];
        }
    }
    r.lhs = std::move(lhs);
    r.rhs = eta(ring);
    r.pass = r.lhs <= r.rhs;
    return r;
}

/// |C|(|C|-1) d <= sum_{x,y in C} D(x,y) <= |C|^2 n eta  (overweight).
inline CheckReport check_pair_sum(const Code& code) {
    const FiniteRing& ring = *code.ring;
    if (!ring.locality().is_local || ring.locality().maximal_ideal.size() < 2)
        throw std::domain_error("check_pair_sum requires a local ring with |J| >= 2");
    if (code.size() < 2) throw std::domain_error("check_pair_sum requires |C| >= 2");
    const WeightFunction w = WeightFunction::overweight(ring);
    const Rat m(code.size());
    CheckReport r;
    r.name = "pair_sum";
    r.param("ring", ring.spec_text());
    r.param("n", std::to_string(code.n));
    r.param("M", std::to_string(code.size()));
    r.lhs = m * (m - 1) * *min_distance(code, w);
    r.mid = pairwise_distance_sum(code, w);
    r.rhs = m * m * Rat(code.n) * eta(ring);
    r.pass = r.lhs <= *r.mid && *r.mid <= r.rhs;
    return r;
}

/// |C|(|C|-1) d <= sum wt(x-y) <= 2|C|^2 w - |C|^2 w^2/(gamma n) for a
/// homogeneous weight, when the maximum codeword weight w is <= gamma*n.
inline CheckReport check_maxwt(const Code& code, const WeightFunction& w, const Rat& gamma) {
    CheckReport r;
    r.name = "maxwt";
    r.param("ring", code.ring->spec_text());
    r.param("n", std::to_string(code.n));
    r.param("M", std::to_string(code.size()));
    if (w.name() != "homogeneous" || !w.unique_homogeneous()) {
        r.applicable = false;
        r.reason = "homogeneous weight unavailable";
        return r;
    }
    if (code.size() < 2) {
        r.applicable = false;
        r.reason = "singleton code (minimum distance undefined)";
        return r;
    }
    Rat omega = 0;
    for (const Word& c : code.words) {
        Rat wt = w.word_weight(c);
        if (wt > omega) omega = std::move(wt);
    }
    r.param("omega", rat_to_string(omega));
    const Rat gn = gamma * Rat(code.n);
    if (omega > gn) {
        r.applicable = false;
        r.reason = "omega > gamma*n";
        return r;
    }
    const Rat m(code.size());
    r.lhs = m * (m - 1) * *min_distance(code, w);
    r.mid = pairwise_distance_sum(code, w);
    r.rhs = Rat(2) * m * m * omega - m * m * omega * omega / gn;
    r.pass = r.lhs <= *r.mid && *r.mid <= r.rhs;
    return r;
}

struct JohnsonVerifyReport {
    BoundReport bound;              // johnson_homogeneous at (n, d, gamma, rho)
    std::optional<Rat> min_dist;
    std::size_t profile_max = 0;    // exact list profile at radius rho*n
    Word witness;
    bool applicable = false;
    bool pass = false;

    std::string summary() const {
        if (!applicable) return "johnson: n/a (" + (bound.reason.empty() ? "singleton code" : bound.reason) + ")";
        std::string s = "johnson: profile " + std::to_string(profile_max) + " <= bound " +
                        (bound.integer_bound ? bound.integer_bound->str() : "?");
        s += pass ? "  [pass]" : "  [VIOLATED]";
        return s;
    }
};

/// Cross-checks the Johnson theorem's conclusion against the exact list
/// profile at radius rho*n; asserted only when the hypotheses hold.
inline JohnsonVerifyReport verify_johnson(const Code& code, const WeightFunction& w,
                                          const Rat& gamma, const Rat& rho,
                                          std::uint64_t cap = kDefaultEnumCap) {
    JohnsonVerifyReport report;
    if (w.name() != "homogeneous" || !w.unique_homogeneous()) {
        report.bound.reason = "homogeneous weight unavailable";
        return report;
    }
    if (code.size() < 2) {
        report.bound.reason = "singleton code (minimum distance undefined)";
        return report;
    }
    report.min_dist = min_distance(code, w);
    report.bound = johnson_homogeneous(code.n, *report.min_dist, gamma, rho);
    if (!report.bound.applicable) return report;
    report.applicable = true;
    ListProfile profile = list_profile(code, w, rho * Rat(code.n), cap);
    report.profile_max = profile.max_list_size;
    report.witness = std::move(profile.witness);
    report.pass = BigInt(report.profile_max) <= *report.bound.integer_bound;
    return report;
}

// ---- randomized suites ----

struct TrialSummary {
    std::string name;
    std::size_t trials = 0;
    std::size_t checked = 0;     // trials where the hypothesis applied
    std::size_t passed = 0;
    std::size_t violations = 0;
    std::size_t skipped = 0;     // hypothesis failed or degenerate draw
    std::optional<std::size_t> first_violation;  // trial index

    bool all_pass() const { return violations == 0; }
};

namespace detail {

enum class TrialOutcome : std::uint8_t { Pass, Violation, Skip };

/// Runs trials [0, n) split across workers; outcome of trial i depends only
/// on derive_seed(master, i), so the summary is worker-count independent.
template <typename TrialFn>
TrialSummary run_trials(std::string name, std::size_t trials, std::uint64_t master_seed,
                        unsigned workers, TrialFn&& fn) {
    std::vector<TrialOutcome> outcomes(trials, TrialOutcome::Skip);
    if (workers <= 1) {
        for (std::size_t i = 0; i < trials; ++i)
            outcomes[i] = fn(derive_seed(master_seed, i));
    } else {
        std::vector<std::thread> pool;
        const std::size_t chunk = (trials + workers - 1) / workers;
        for (unsigned wi = 0; wi < workers; ++wi) {
            const std::size_t lo = std::min<std::size_t>(wi * chunk, trials);
            const std::size_t hi = std::min<std::size_t>(lo + chunk, trials);
            if (lo >= hi) break;
            pool.emplace_back([&, lo, hi] {
                for (std::size_t i = lo; i < hi; ++i)
                    outcomes[i] = fn(derive_seed(master_seed, i));
            });
        }
        for (auto& t : pool) t.join();
    }
    TrialSummary s;
    s.name = std::move(name);
    s.trials = trials;
    for (std::size_t i = 0; i < trials; ++i) {
        switch (outcomes[i]) {
            case TrialOutcome::Pass:
                ++s.checked;
                ++s.passed;
                break;
            case TrialOutcome::Violation:
                ++s.checked;
                ++s.violations;
                if (!s.first_violation) s.first_violation = i;
                break;
            case TrialOutcome::Skip:
                ++s.skipped;
                break;
        }
    }
    return s;
}

inline Code random_code(const FiniteRing& ring, std::mt19937_64& rng, std::size_t max_n,
                        std::size_t max_m, bool favor_low_weight) {
    const std::size_t n = 1 + rng_below(rng, max_n);
    const std::size_t target = 2 + rng_below(rng, max_m - 1);
    std::vector<Word> words;
    for (std::size_t i = 0; i < target; ++i) {
        Word w(n);
        for (auto& x : w) {
            if (favor_low_weight) {
                // zero drawn with extra mass so the max-weight hypothesis fires
                std::uint64_t r = rng_below(rng, ring.order() + 3);
                x = r >= ring.order() ? ring.zero() : static_cast<std::uint16_t>(r);
            } else {
                x = static_cast<std::uint16_t>(rng_below(rng, ring.order()));
            }
        }
        words.push_back(std::move(w));
    }
    return Code::make(ring, n, std::move(words));
}

}  // namespace detail

inline TrialSummary probineq_trials(const FiniteRing& ring, std::size_t trials,
                                    std::uint64_t master_seed, unsigned workers = 1) {
    std::vector<std::uint16_t> all(ring.order());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<std::uint16_t>(i);
    return detail::run_trials("probineq", trials, master_seed, workers,
                              [&](std::uint64_t seed) {
                                  std::mt19937_64 rng(seed);
                                  Distribution d = Distribution::random_on(ring, all, rng);
                                  return check_probineq(ring, d).pass
                                             ? detail::TrialOutcome::Pass
                                             : detail::TrialOutcome::Violation;
                              });
}

inline TrialSummary pair_sum_trials(const FiniteRing& ring, std::size_t max_n, std::size_t max_m,
                                    std::size_t trials, std::uint64_t master_seed,
                                    unsigned workers = 1) {
    return detail::run_trials(
        "pair_sum", trials, master_seed, workers, [&](std::uint64_t seed) {
            std::mt19937_64 rng(seed);
            Code code = detail::random_code(ring, rng, max_n, max_m, false);
            if (code.size() < 2) return detail::TrialOutcome::Skip;
            return check_pair_sum(code).pass ? detail::TrialOutcome::Pass
                                             : detail::TrialOutcome::Violation;
        });
}

inline TrialSummary maxwt_trials(const FiniteRing& ring, const Rat& gamma, std::size_t max_n,
                                 std::size_t max_m, std::size_t trials, std::uint64_t master_seed,
                                 unsigned workers = 1) {
    HomogeneousSolution hom = solve_homogeneous(ring, gamma);
    if (hom.status != HomStatus::Unique) {
        TrialSummary s;
        s.name = "maxwt";
        s.trials = trials;
        s.skipped = trials;
        return s;
    }
    const WeightFunction& w = *hom.weight;
    return detail::run_trials(
        "maxwt", trials, master_seed, workers, [&](std::uint64_t seed) {
            std::mt19937_64 rng(seed);
            Code code = detail::random_code(ring, rng, max_n, max_m, true);
            if (code.size() < 2) return detail::TrialOutcome::Skip;
            CheckReport r = check_maxwt(code, w, gamma);
            if (!r.applicable) return detail::TrialOutcome::Skip;
            return r.pass ? detail::TrialOutcome::Pass : detail::TrialOutcome::Violation;
        });
}

}  // namespace ringcode
