#pragma once

// Exact-rational evaluation of the code bounds with explicit applicability.
// A bound outside its hypothesis is reported as hypothesis-failed, never as
// a silent zero; the value field is present iff the bound applies.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "geometry.hpp"
#include "rational.hpp"
#include "ring.hpp"
#include "weights.hpp"

namespace ringcode {

struct BoundReport {
    std::string name;
    std::vector<std::pair<std::string, std::string>> params;
    bool applicable = false;
    std::string reason;  // why the hypothesis failed, when it did
    std::optional<Rat> value;
    std::optional<BigInt> integer_bound;
    std::string note;  // e.g. which Johnson condition fired

    void param(std::string key, std::string val) {
        params.emplace_back(std::move(key), std::move(val));
    }
};

inline bool is_prime_power(std::size_t q) {
    if (q < 2) return false;
    std::size_t p = 0;
    for (std::size_t d = 2; d * d <= q; ++d)
        if (q % d == 0) {
            p = d;
            break;
        }
    if (p == 0) return true;
    while (q % p == 0) q /= p;
    return q == 1;
}

/// Classical Plotkin bound over F_q with the Hamming metric:
/// if d > (q-1)n/q then M <= d / (d - (q-1)n/q).
inline BoundReport plotkin_field(std::size_t q, std::size_t n, std::size_t d) {
    if (!is_prime_power(q)) throw std::invalid_argument("plotkin_field: q must be a prime power");
    if (n == 0) throw std::invalid_argument("plotkin_field: n must be positive");
    BoundReport r;
    r.name = "plotkin_field";
    r.param("q", std::to_string(q));
    r.param("n", std::to_string(n));
    r.param("d", std::to_string(d));
    const Rat threshold = Rat(BigInt(q - 1) * BigInt(n), BigInt(q));
    if (Rat(d) <= threshold) {
        r.applicable = false;
        r.reason = "d <= (q-1)n/q";
        return r;
    }
    r.applicable = true;
    r.value = Rat(d) / (Rat(d) - threshold);
    r.integer_bound = rat_floor(*r.value);
    return r;
}

/// Plotkin bound for a homogeneous weight of average value gamma:
/// if d > gamma*n then M <= d / (d - gamma*n).
inline BoundReport plotkin_homogeneous(const Rat& gamma, std::size_t n, const Rat& d) {
    if (gamma <= 0) throw std::invalid_argument("plotkin_homogeneous: gamma must be positive");
    BoundReport r;
    r.name = "plotkin_homogeneous";
    r.param("gamma", rat_to_string(gamma));
    r.param("n", std::to_string(n));
    r.param("d", rat_to_string(d));
    const Rat threshold = gamma * Rat(n);
    if (d <= threshold) {
        r.applicable = false;
        r.reason = "d <= gamma*n";
        return r;
    }
    r.applicable = true;
    r.value = d / (d - threshold);
    r.integer_bound = rat_floor(*r.value);
    return r;
}

/// Plotkin bound for the overweight distance over a local ring with
/// |J| >= 2: if d > n*eta then M <= d / (d - n*eta).
inline BoundReport plotkin_overweight(const FiniteRing& ring, std::size_t n, std::size_t d) {
    BoundReport r;
    r.name = "plotkin_overweight";
    r.param("ring", ring.spec_text());
    r.param("n", std::to_string(n));
    r.param("d", std::to_string(d));
    if (!ring.locality().is_local) {
        r.applicable = false;
        r.reason = "ring is not local";
        return r;
    }
    if (ring.locality().maximal_ideal.size() < 2) {
        r.applicable = false;
        r.reason = "|J| = 1 (field); use plotkin_field with the Hamming metric";
        return r;
    }
    const Rat et = eta(ring);
    r.param("eta", rat_to_string(et));
    const Rat threshold = et * Rat(n);
    if (Rat(d) <= threshold) {
        r.applicable = false;
        r.reason = "d <= n*eta";
        return r;
    }
    r.applicable = true;
    r.value = Rat(d) / (Rat(d) - threshold);
    r.integer_bound = rat_floor(*r.value);
    return r;
}

/// Rearranged Plotkin bound without a hypothesis on d:
/// any code of size M >= 2 has d <= M*n*eta / (M-1).
inline BoundReport plotkin_distance_corollary(const FiniteRing& ring, std::size_t n,
                                              std::size_t m) {
    BoundReport r;
    r.name = "plotkin_distance_corollary";
    r.param("ring", ring.spec_text());
    r.param("n", std::to_string(n));
    r.param("M", std::to_string(m));
    if (!ring.locality().is_local) {
        r.applicable = false;
        r.reason = "ring is not local";
        return r;
    }
    if (ring.locality().maximal_ideal.size() < 2) {
        r.applicable = false;
        r.reason = "|J| = 1 (field); use plotkin_field with the Hamming metric";
        return r;
    }
    if (m < 2) {
        r.applicable = false;
        r.reason = "M < 2 (minimum distance undefined)";
        return r;
    }
    const Rat et = eta(ring);
    r.param("eta", rat_to_string(et));
    r.applicable = true;
    r.value = Rat(m) * Rat(n) * et / Rat(m - 1);
    r.integer_bound = rat_floor(*r.value);
    return r;
}

/// Sphere-packing bound in the overweight distance: with e = floor((d-1)/2),
/// |C| <= |R|^n / |B_e(0)|. The paper states d = 2e+1; for even d the same
/// packing radius keeps the balls disjoint, which the report notes.
inline BoundReport sphere_packing_overweight(const FiniteRing& ring, std::size_t n,
                                             std::size_t d) {
    if (d < 1) throw std::invalid_argument("sphere_packing_overweight: d must be >= 1");
    BoundReport r;
    r.name = "sphere_packing_overweight";
    r.param("ring", ring.spec_text());
    r.param("n", std::to_string(n));
    r.param("d", std::to_string(d));
    const long long e = static_cast<long long>((d - 1) / 2);
    r.param("e", std::to_string(e));
    if (d % 2 == 0) r.note = "even d: packing radius e = floor((d-1)/2)";
    r.applicable = true;
    r.value = Rat(space_size(ring, n), ball_volume_overweight(ring, n, e));
    r.integer_bound = rat_floor(*r.value);
    return r;
}

/// Gilbert-Varshamov bound in the overweight distance, d in [0, 2n]:
/// some code of minimum distance >= d has |C| >= |R|^n / |B_{d-1}(0)|.
inline BoundReport gilbert_varshamov_overweight(const FiniteRing& ring, std::size_t n,
                                                std::size_t d) {
    if (d > 2 * n) throw std::domain_error("gilbert_varshamov_overweight: d outside [0, 2n]");
    BoundReport r;
    r.name = "gilbert_varshamov_overweight";
    r.param("ring", ring.spec_text());
    r.param("n", std::to_string(n));
    r.param("d", std::to_string(d));
    r.applicable = true;
    if (d == 0) {
        // degenerate reading: distance >= 0 admits the whole space
        r.value = Rat(space_size(ring, n));
    } else {
        r.value = Rat(space_size(ring, n),
                      ball_volume_overweight(ring, n, static_cast<long long>(d) - 1));
    }
    r.integer_bound = rat_ceil(*r.value);
    return r;
}

/// Johnson bound for a homogeneous weight: a code of minimum distance d is
/// (rho, d*gamma*n) list-decodable when rho <= gamma and either
///   (i)  gamma*n*(d - gamma*n) >= 1, or
///   (ii) rho <= gamma - sqrt((gamma - d/n)*gamma + 1/n^2).
/// Condition (ii) is decided square-root-free: with A = (gamma - d/n)*gamma
/// + 1/n^2, it holds iff A >= 0 and (gamma - rho)^2 >= A.
inline BoundReport johnson_homogeneous(std::size_t n, const Rat& d, const Rat& gamma,
                                       const Rat& rho) {
    if (n == 0) throw std::invalid_argument("johnson_homogeneous: n must be positive");
    if (gamma <= 0) throw std::invalid_argument("johnson_homogeneous: gamma must be positive");
    if (rho < 0) throw std::invalid_argument("johnson_homogeneous: rho must be nonnegative");
    if (rho > gamma)
        throw std::domain_error("johnson_homogeneous: rho > gamma is outside the theorem");
    BoundReport r;
    r.name = "johnson_homogeneous";
    r.param("n", std::to_string(n));
    r.param("d", rat_to_string(d));
    r.param("gamma", rat_to_string(gamma));
    r.param("rho", rat_to_string(rho));

    const Rat gn = gamma * Rat(n);
    const bool cond_i = gn * (d - gn) >= 1;
    const Rat a = (gamma - d / Rat(n)) * gamma + Rat(BigInt(1), BigInt(n) * BigInt(n));
    const bool cond_ii = a >= 0 && (gamma - rho) * (gamma - rho) >= a;
    r.param("A", rat_to_string(a));
    if (!cond_i && !cond_ii) {
        r.applicable = false;
        r.reason = "neither condition (i) nor condition (ii) holds";
        return r;
    }
    r.applicable = true;
    if (cond_i && cond_ii)
        r.note = "conditions (i) and (ii) both hold";
    else if (cond_i)
        r.note = "condition (i) holds";
    else
        r.note = "condition (ii) holds";
    r.value = d * gn;  // list size bound d*gamma*n
    r.integer_bound = rat_floor(*r.value);
    return r;
}

}  // namespace ringcode
