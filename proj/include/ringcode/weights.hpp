#pragma once

// Weight functions over a finite ring: Hamming, Lee (residue rings),
// overweight (0 at 0, 1 on units, 2 on nonzero nonunits) and homogeneous
// weights of a prescribed average value, obtained by an exact linear solve.
// All tables are exact rationals, extended additively to words.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rational.hpp"
#include "ring.hpp"

namespace ringcode {

class WeightFunction {
public:
    static WeightFunction hamming(const FiniteRing& ring) {
        std::vector<Rat> t(ring.order(), Rat(1));
        t[ring.zero()] = 0;
        return WeightFunction(ring, "hamming", std::move(t));
    }

    /// Lee weight min(x, m-x); defined on residue rings Z_m only.
    static WeightFunction lee(const FiniteRing& ring) {
        if (ring.kind() != RingKind::Residue || !ring.residue_modulus())
            throw std::domain_error("Lee weight is defined on residue rings Z_m only");
        const std::size_t m = *ring.residue_modulus();
        std::vector<Rat> t(m);
        for (std::size_t x = 0; x < m; ++x) t[x] = Rat(std::min(x, m - x));
        return WeightFunction(ring, "lee", std::move(t));
    }

    static WeightFunction overweight(const FiniteRing& ring) {
        std::vector<Rat> t(ring.order());
        for (std::size_t x = 0; x < ring.order(); ++x)
            t[x] = ring.is_unit(static_cast<std::uint16_t>(x)) ? Rat(1) : Rat(2);
        t[ring.zero()] = 0;
        return WeightFunction(ring, "overweight", std::move(t));
    }

    /// Arbitrary table; w(0) must be 0 and all entries nonnegative.
    static WeightFunction custom(const FiniteRing& ring, std::string name, std::vector<Rat> table) {
        if (table.size() != ring.order())
            throw std::invalid_argument("weight table size does not match ring order");
        if (table[ring.zero()] != 0) throw std::invalid_argument("weight table must have w(0) = 0");
        for (const Rat& w : table)
            if (w < 0) throw std::invalid_argument("weight table entries must be nonnegative");
        return WeightFunction(ring, std::move(name), std::move(table));
    }

    const FiniteRing& ring() const { return *ring_; }
    const std::string& name() const { return name_; }
    const std::vector<Rat>& table() const { return table_; }
    const Rat& weight(std::uint16_t x) const { return table_[x]; }
    const Rat& operator()(std::uint16_t x) const { return table_[x]; }

    /// Average value over the whole ring (the gamma of a homogeneous weight).
    const Rat& gamma() const { return gamma_; }
    const Rat& max_element_weight() const { return max_weight_; }

    /// True when the table came out of a uniquely solvable homogeneous system.
    bool unique_homogeneous() const { return unique_homogeneous_; }

    Rat word_weight(std::span<const std::uint16_t> word) const {
        Rat s = 0;
        for (std::uint16_t x : word) s += table_[x];
        return s;
    }

    Rat distance(std::uint16_t a, std::uint16_t b) const { return table_[ring_->sub(a, b)]; }

    Rat word_distance(std::span<const std::uint16_t> a, std::span<const std::uint16_t> b) const {
        if (a.size() != b.size()) throw std::invalid_argument("word lengths differ");
        Rat s = 0;
        for (std::size_t i = 0; i < a.size(); ++i) s += table_[ring_->sub(a[i], b[i])];
        return s;
    }

private:
    friend struct HomogeneousSolution;
    WeightFunction(const FiniteRing& ring, std::string name, std::vector<Rat> table)
        : ring_(&ring), name_(std::move(name)), table_(std::move(table)) {
        for (const Rat& w : table_) {
            gamma_ += w;
            if (w > max_weight_) max_weight_ = w;
        }
        gamma_ /= Rat(ring.order());
    }

    const FiniteRing* ring_;
    std::string name_;
    std::vector<Rat> table_;
    Rat gamma_ = 0;
    Rat max_weight_ = 0;
    bool unique_homogeneous_ = false;
};

/// Induced distance d(x,y) = w(x-y), on elements and on words.
struct DistanceOracle {
    const WeightFunction* weight;
    Rat operator()(std::uint16_t a, std::uint16_t b) const { return weight->distance(a, b); }
    Rat operator()(std::span<const std::uint16_t> a, std::span<const std::uint16_t> b) const {
        return weight->word_distance(a, b);
    }
};

enum class HomStatus { Unique, NoSolution, Underdetermined };

struct HomogeneousSolution {
    HomStatus status = HomStatus::NoSolution;
    std::size_t solution_dim = 0;  // when underdetermined
    bool principal_only = false;
    bool nonnegative = true;  // meaningful when unique
    std::optional<WeightFunction> weight;
    std::string detail;

    static HomogeneousSolution unique(const FiniteRing& ring, std::vector<Rat> table,
                                      bool principal_only) {
        HomogeneousSolution s;
        s.status = HomStatus::Unique;
        s.principal_only = principal_only;
        for (const Rat& w : table)
            if (w < 0) s.nonnegative = false;
        WeightFunction wf(ring, "homogeneous", std::move(table));
        wf.unique_homogeneous_ = true;
        s.weight = std::move(wf);
        s.detail = std::string("unique solution (constraints: ") +
                   (principal_only ? "principal left ideals)" : "all left ideals)");
        if (!s.nonnegative) s.detail += "; solution has negative entries";
        return s;
    }
};

/// Solves, exactly over the rationals, the defining system of a (left)
/// homogeneous weight of average value gamma: w(0) = 0, w constant on
/// associate classes, and sum_{x in I} w(x) = gamma * |I| for every nonzero
/// left ideal I (or only the principal ones, with principal_only).
inline HomogeneousSolution solve_homogeneous(const FiniteRing& ring, const Rat& gamma,
                                             bool principal_only = false) {
    if (gamma <= 0) throw std::invalid_argument("homogeneous average value must be positive");

    const auto& classes = ring.associate_classes();
    // one unknown per nonzero associate class
    std::vector<std::size_t> class_of(ring.order());
    std::vector<std::size_t> unknown_of_class(classes.size(), SIZE_MAX);
    std::size_t k = 0;
    for (std::size_t c = 0; c < classes.size(); ++c) {
        for (std::uint16_t x : classes[c]) class_of[x] = c;
        if (!(classes[c].size() == 1 && classes[c][0] == ring.zero())) unknown_of_class[c] = k++;
    }

    std::vector<std::vector<Rat>> rows;  // augmented [A | b]
    for (const auto& ideal : ring.left_ideals()) {
        if (ideal.size() == 1) continue;  // {0}
        bool use = true;
        if (principal_only) {
            use = false;
            for (std::uint16_t x : ideal)
                if (ring.principal_left_ideal(x) == ideal) {
                    use = true;
                    break;
                }
        }
        if (!use) continue;
        std::vector<Rat> row(k + 1, Rat(0));
        for (std::uint16_t x : ideal) {
            std::size_t u = unknown_of_class[class_of[x]];
            if (u != SIZE_MAX) row[u] += 1;
        }
        row[k] = gamma * Rat(ideal.size());
        rows.push_back(std::move(row));
    }

    // exact Gaussian elimination
    std::size_t rank = 0;
    for (std::size_t col = 0; col < k && rank < rows.size(); ++col) {
        std::size_t pivot = SIZE_MAX;
        for (std::size_t r = rank; r < rows.size(); ++r)
            if (rows[r][col] != 0) {
                pivot = r;
                break;
            }
        if (pivot == SIZE_MAX) continue;
        std::swap(rows[rank], rows[pivot]);
        const Rat p = rows[rank][col];
        for (std::size_t j = col; j <= k; ++j) rows[rank][j] /= p;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == rank || rows[r][col] == 0) continue;
            const Rat f = rows[r][col];
            for (std::size_t j = col; j <= k; ++j) rows[r][j] -= f * rows[rank][j];
        }
        ++rank;
    }
    for (std::size_t r = rank; r < rows.size(); ++r) {
        if (rows[r][k] != 0) {
            HomogeneousSolution s;
            s.status = HomStatus::NoSolution;
            s.principal_only = principal_only;
            s.detail = std::string("no solution (constraints: ") +
                       (principal_only ? "principal left ideals)" : "all left ideals)");
            return s;
        }
    }
    if (rank < k) {
        HomogeneousSolution s;
        s.status = HomStatus::Underdetermined;
        s.principal_only = principal_only;
        s.solution_dim = k - rank;
        s.detail = "solution space of dimension " + std::to_string(k - rank);
        return s;
    }

    // read off the unique solution: row r has leading 1 in some column
    std::vector<Rat> value(k, Rat(0));
    for (std::size_t r = 0; r < rank; ++r) {
        std::size_t lead = SIZE_MAX;
        for (std::size_t j = 0; j < k; ++j)
            if (rows[r][j] != 0) {
                lead = j;
                break;
            }
        if (lead != SIZE_MAX) value[lead] = rows[r][k];
    }
    std::vector<Rat> table(ring.order(), Rat(0));
    for (std::size_t c = 0; c < classes.size(); ++c) {
        std::size_t u = unknown_of_class[c];
        if (u == SIZE_MAX) continue;
        for (std::uint16_t x : classes[c]) table[x] = value[u];
    }
    return HomogeneousSolution::unique(ring, std::move(table), principal_only);
}

/// Exact average weight of a nonempty subset of ring elements.
inline Rat average_weight(const WeightFunction& w, std::span<const std::uint16_t> subset) {
    if (subset.empty()) throw std::invalid_argument("average over empty set");
    Rat s = 0;
    for (std::uint16_t x : subset) s += w.weight(x);
    return s / Rat(subset.size());
}

/// Closed-form average overweight of an ideal of a local ring:
/// (|R|+|J|-2)/|R| for I = R, 2(1 - 1/|I|) for proper nonzero I, 0 for {0}.
inline Rat ideal_average_formula(const FiniteRing& ring, std::span<const std::uint16_t> ideal) {
    if (!ring.locality().is_local)
        throw std::domain_error("ideal average formula requires a local ring");
    const std::size_t n = ring.order();
    if (ideal.size() == n)
        return Rat(BigInt(n) + BigInt(ring.locality().maximal_ideal.size()) - 2, BigInt(n));
    if (ideal.size() <= 1) return Rat(0);
    return Rat(2) * (Rat(1) - Rat(BigInt(1), BigInt(ideal.size())));
}

/// eta = average overweight of the maximal ideal, 2(1 - 1/|J|).
/// Requires a local ring with |J| >= 2 (on a field the overweight distance
/// is the Hamming distance; use the Hamming-metric bounds there).
inline Rat eta(const FiniteRing& ring) {
    const auto& loc = ring.locality();
    if (!loc.is_local) throw std::domain_error("eta requires a local ring");
    if (loc.maximal_ideal.size() < 2)
        throw std::domain_error("eta requires |J| >= 2 (ring is a field; use Hamming bounds)");
    return Rat(2) * (Rat(1) - Rat(BigInt(1), BigInt(loc.maximal_ideal.size())));
}

/// Exhaustive check of w(x+y) <= w(x) + w(y) over all element pairs.
/// Returns the first violating pair in canonical order, or nullopt.
inline std::optional<std::pair<std::uint16_t, std::uint16_t>> triangle_violation(
    const WeightFunction& w) {
    const FiniteRing& ring = w.ring();
    const std::size_t n = ring.order();
    for (std::uint16_t x = 0; x < n; ++x)
        for (std::uint16_t y = 0; y < n; ++y)
            if (w.weight(ring.add(x, y)) > w.weight(x) + w.weight(y)) return std::make_pair(x, y);
    return std::nullopt;
}

}  // namespace ringcode
