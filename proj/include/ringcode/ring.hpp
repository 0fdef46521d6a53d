#pragma once

// Small finite rings as explicit operation tables. Every structural query
// (units, ideals, associate classes, locality) is answered by exhaustive
// scan over the tables, which is exact and fast at the supported orders.
//
// Ring-spec mini-language:
//   spec := atom | atom "x" spec
//   atom := "Z" int | "GF(" int ")" | "Z" int "[x]/(" poly ")"
//   poly := monic polynomial in x with integer coefficients, e.g. "x^2+x+1"
// Whitespace-insensitive; case-sensitive on Z/GF/x.
//
// Canonical element orders: residues ascending for Z_m; coefficient vectors
// for quotients and GF, encoded low-coefficient-first as Σ c_i m^i;
// lexicographic tuples (first factor major) for products.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ringcode {

inline constexpr std::size_t kDefaultOrderCap = 512;

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct OrderCapError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct LocalityRecord {
    bool is_local = false;
    std::vector<std::uint16_t> maximal_ideal;  // the nonunits, when local
    std::size_t residue_field_order = 0;       // q = |R| / |J|, when local
};

enum class RingKind { Residue, GaloisField, Quotient, Product, Custom };

class FiniteRing;

namespace detail {

struct RawRing {
    std::size_t order = 0;
    std::vector<std::string> labels;
    std::vector<std::uint16_t> add;
    std::vector<std::uint16_t> mul;
    RingKind kind = RingKind::Custom;
    std::optional<std::size_t> residue_modulus;
};

inline void check_cap(std::size_t order, std::size_t cap) {
    if (order > cap)
        throw OrderCapError("ring order " + std::to_string(order) + " exceeds cap " +
                            std::to_string(cap));
}

inline RawRing build_residue(std::size_t m, std::size_t cap) {
    if (m < 2) throw ParseError("ring order must be at least 2");
    check_cap(m, cap);
    RawRing r;
    r.order = m;
    r.kind = RingKind::Residue;
    r.residue_modulus = m;
    r.labels.resize(m);
    r.add.resize(m * m);
    r.mul.resize(m * m);
    for (std::size_t i = 0; i < m; ++i) {
        r.labels[i] = std::to_string(i);
        for (std::size_t j = 0; j < m; ++j) {
            r.add[i * m + j] = static_cast<std::uint16_t>((i + j) % m);
            r.mul[i * m + j] = static_cast<std::uint16_t>((i * j) % m);
        }
    }
    return r;
}

inline std::string poly_label(const std::vector<std::uint16_t>& coeffs) {
    std::string out;
    for (std::size_t e = coeffs.size(); e-- > 0;) {
        unsigned c = coeffs[e];
        if (c == 0) continue;
        if (!out.empty()) out += '+';
        if (e == 0) {
            out += std::to_string(c);
        } else {
            if (c != 1) out += std::to_string(c);
            out += 'x';
            if (e >= 2) out += '^' + std::to_string(e);
        }
    }
    return out.empty() ? "0" : out;
}

/// Z_m[x]/(f) for monic f of degree k >= 1. Coefficients of f are given
/// low-to-high and already reduced mod m; f[k] == 1.
inline RawRing build_quotient(std::size_t m, const std::vector<std::uint16_t>& f, std::size_t cap,
                              RingKind kind) {
    if (m < 2) throw ParseError("quotient base modulus must be at least 2");
    const std::size_t k = f.size() - 1;
    std::size_t order = 1;
    for (std::size_t i = 0; i < k; ++i) {
        order *= m;
        check_cap(order, cap);
    }
    if (order < 2) throw ParseError("ring order must be at least 2");

    // x^j mod (f, m) for j in [k, 2k-2], low-to-high coefficients.
    std::vector<std::vector<std::uint16_t>> xpow(std::max<std::size_t>(2 * k - 1, k));
    if (k >= 1) {
        std::vector<std::uint16_t> cur(k);
        for (std::size_t i = 0; i < k; ++i) cur[i] = static_cast<std::uint16_t>((m - f[i]) % m);
        for (std::size_t j = k; j + 1 <= 2 * k - 1; ++j) {
            xpow[j] = cur;
            // multiply by x: shift up; fold the spilled top coefficient
            std::vector<std::uint16_t> next(k, 0);
            for (std::size_t i = 0; i + 1 < k; ++i) next[i + 1] = cur[i];
            unsigned top = cur[k - 1];
            for (std::size_t i = 0; i < k; ++i)
                next[i] = static_cast<std::uint16_t>((next[i] + top * xpow[k][i]) % m);
            cur = std::move(next);
        }
    }

    auto decode = [&](std::size_t idx) {
        std::vector<std::uint16_t> c(k);
        for (std::size_t i = 0; i < k; ++i) {
            c[i] = static_cast<std::uint16_t>(idx % m);
            idx /= m;
        }
        return c;
    };
    auto encode = [&](const std::vector<std::uint16_t>& c) {
        std::size_t idx = 0;
        for (std::size_t i = k; i-- > 0;) idx = idx * m + c[i];
        return idx;
    };

    RawRing r;
    r.order = order;
    r.kind = kind;
    r.labels.resize(order);
    r.add.resize(order * order);
    r.mul.resize(order * order);

    std::vector<std::vector<std::uint16_t>> elems(order);
    for (std::size_t i = 0; i < order; ++i) {
        elems[i] = decode(i);
        r.labels[i] = poly_label(elems[i]);
    }
    for (std::size_t a = 0; a < order; ++a) {
        for (std::size_t b = 0; b < order; ++b) {
            std::vector<std::uint16_t> s(k);
            for (std::size_t i = 0; i < k; ++i)
                s[i] = static_cast<std::uint16_t>((elems[a][i] + elems[b][i]) % m);
            r.add[a * order + b] = static_cast<std::uint16_t>(encode(s));

            std::vector<unsigned> conv(2 * k - 1, 0);
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t j = 0; j < k; ++j)
                    conv[i + j] = (conv[i + j] + elems[a][i] * elems[b][j]) % m;
            std::vector<std::uint16_t> p(k);
            for (std::size_t i = 0; i < k; ++i) p[i] = static_cast<std::uint16_t>(conv[i]);
            for (std::size_t j = k; j < conv.size(); ++j)
                for (std::size_t i = 0; i < k; ++i)
                    p[i] = static_cast<std::uint16_t>((p[i] + conv[j] * xpow[j][i]) % m);
            r.mul[a * order + b] = static_cast<std::uint16_t>(encode(p));
        }
    }
    return r;
}

// Polynomial arithmetic over Z_p used only by the GF irreducibility search.
inline bool divides_mod_p(const std::vector<std::uint16_t>& g, std::vector<std::uint16_t> rem,
                          std::size_t p) {
    auto degree = [](const std::vector<std::uint16_t>& v) -> long long {
        for (std::size_t i = v.size(); i-- > 0;)
            if (v[i] != 0) return static_cast<long long>(i);
        return -1;
    };
    const long long dg = degree(g);  // g is monic
    long long dr = degree(rem);
    while (dr >= dg) {
        unsigned lead = rem[static_cast<std::size_t>(dr)];
        for (long long i = 0; i <= dg; ++i) {
            auto& c = rem[static_cast<std::size_t>(dr - dg + i)];
            c = static_cast<std::uint16_t>((c + p - lead * g[static_cast<std::size_t>(i)] % p) % p);
        }
        dr = degree(rem);
    }
    return dr < 0;
}

inline bool is_irreducible_mod_p(const std::vector<std::uint16_t>& f, std::size_t p) {
    const std::size_t k = f.size() - 1;
    for (std::size_t dg = 1; dg <= k / 2; ++dg) {
        std::size_t count = 1;
        for (std::size_t i = 0; i < dg; ++i) count *= p;
        for (std::size_t code = 0; code < count; ++code) {
            std::vector<std::uint16_t> g(dg + 1, 0);
            std::size_t c = code;
            for (std::size_t i = 0; i < dg; ++i) {
                g[i] = static_cast<std::uint16_t>(c % p);
                c /= p;
            }
            g[dg] = 1;
            if (divides_mod_p(g, f, p)) return false;
        }
    }
    return true;
}

inline RawRing build_gf(std::size_t q, std::size_t cap) {
    if (q < 2) throw ParseError("GF order must be at least 2");
    check_cap(q, cap);
    std::size_t p = 0;
    for (std::size_t d = 2; d * d <= q; ++d) {
        if (q % d == 0) {
            p = d;
            break;
        }
    }
    if (p == 0) p = q;  // q itself prime
    std::size_t k = 0, t = q;
    while (t % p == 0) {
        t /= p;
        ++k;
    }
    if (t != 1) throw ParseError("GF order " + std::to_string(q) + " is not a prime power");
    if (k == 1) {
        RawRing r = build_residue(p, cap);
        r.kind = RingKind::GaloisField;
        r.residue_modulus.reset();
        return r;
    }
    // smallest monic irreducible of degree k, by the coefficient encoding
    std::size_t count = 1;
    for (std::size_t i = 0; i < k; ++i) count *= p;
    for (std::size_t code = 0; code < count; ++code) {
        std::vector<std::uint16_t> f(k + 1, 0);
        std::size_t c = code;
        for (std::size_t i = 0; i < k; ++i) {
            f[i] = static_cast<std::uint16_t>(c % p);
            c /= p;
        }
        f[k] = 1;
        if (is_irreducible_mod_p(f, p))
            return build_quotient(p, f, cap, RingKind::GaloisField);
    }
    throw ParseError("no irreducible polynomial found for GF(" + std::to_string(q) + ")");
}

inline RawRing build_product(const std::vector<RawRing>& factors, std::size_t cap) {
    std::size_t order = 1;
    for (const auto& f : factors) {
        order *= f.order;
        check_cap(order, cap);
    }
    RawRing r;
    r.order = order;
    r.kind = RingKind::Product;
    r.labels.resize(order);
    r.add.resize(order * order);
    r.mul.resize(order * order);

    const std::size_t nf = factors.size();
    auto decode = [&](std::size_t idx) {
        std::vector<std::size_t> t(nf);
        for (std::size_t i = nf; i-- > 0;) {
            t[i] = idx % factors[i].order;
            idx /= factors[i].order;
        }
        return t;
    };
    auto encode = [&](const std::vector<std::size_t>& t) {
        std::size_t idx = 0;
        for (std::size_t i = 0; i < nf; ++i) idx = idx * factors[i].order + t[i];
        return idx;
    };

    std::vector<std::vector<std::size_t>> tup(order);
    for (std::size_t i = 0; i < order; ++i) {
        tup[i] = decode(i);
        std::string label = "(";
        for (std::size_t f = 0; f < nf; ++f) {
            if (f) label += ',';
            label += factors[f].labels[tup[i][f]];
        }
        label += ')';
        r.labels[i] = label;
    }
    std::vector<std::size_t> t(nf);
    for (std::size_t a = 0; a < order; ++a) {
        for (std::size_t b = 0; b < order; ++b) {
            for (std::size_t f = 0; f < nf; ++f) {
                const auto& F = factors[f];
                t[f] = F.add[tup[a][f] * F.order + tup[b][f]];
            }
            r.add[a * order + b] = static_cast<std::uint16_t>(encode(t));
            for (std::size_t f = 0; f < nf; ++f) {
                const auto& F = factors[f];
                t[f] = F.mul[tup[a][f] * F.order + tup[b][f]];
            }
            r.mul[a * order + b] = static_cast<std::uint16_t>(encode(t));
        }
    }
    return r;
}

// ---- spec parser ----

class SpecParser {
public:
    SpecParser(std::string_view text, std::size_t cap) : cap_(cap) {
        for (char ch : text)
            if (!std::isspace(static_cast<unsigned char>(ch))) s_ += ch;
        if (s_.empty()) throw ParseError("empty ring spec");
    }

    RawRing parse() {
        std::vector<RawRing> factors;
        factors.push_back(parse_atom());
        while (pos_ < s_.size()) {
            if (s_[pos_] != 'x')
                throw ParseError("unexpected '" + std::string(1, s_[pos_]) + "' in ring spec");
            ++pos_;
            factors.push_back(parse_atom());
        }
        if (factors.size() == 1) return std::move(factors.front());
        return build_product(factors, cap_);
    }

    const std::string& normalized() const { return s_; }

private:
    std::string s_;
    std::size_t pos_ = 0;
    std::size_t cap_;

    [[noreturn]] void fail(const std::string& what) {
        throw ParseError(what + " at position " + std::to_string(pos_) + " in '" + s_ + "'");
    }

    std::size_t parse_int() {
        std::size_t start = pos_;
        std::size_t value = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            value = value * 10 + static_cast<std::size_t>(s_[pos_] - '0');
            if (value > 1000000) fail("integer too large");
            ++pos_;
        }
        if (pos_ == start) fail("expected integer");
        return value;
    }

    void expect(std::string_view tok) {
        if (s_.compare(pos_, tok.size(), tok) != 0) fail("expected '" + std::string(tok) + "'");
        pos_ += tok.size();
    }

    RawRing parse_atom() {
        if (s_.compare(pos_, 3, "GF(") == 0) {
            pos_ += 3;
            std::size_t q = parse_int();
            expect(")");
            return build_gf(q, cap_);
        }
        if (pos_ < s_.size() && s_[pos_] == 'Z') {
            ++pos_;
            std::size_t m = parse_int();
            if (pos_ < s_.size() && s_[pos_] == '[') {
                expect("[x]/(");
                std::size_t close = s_.find(')', pos_);
                if (close == std::string::npos) fail("unterminated polynomial");
                std::string body = s_.substr(pos_, close - pos_);
                pos_ = close + 1;
                return build_quotient(m, parse_poly(body, m), cap_, RingKind::Quotient);
            }
            return build_residue(m, cap_);
        }
        fail("expected ring atom");
    }

    /// Returns the monic modulus reduced mod m, low-to-high coefficients.
    std::vector<std::uint16_t> parse_poly(const std::string& body, std::size_t m) {
        if (body.empty()) throw ParseError("empty polynomial");
        std::map<std::size_t, long long> terms;
        std::size_t i = 0;
        long long sign = 1;
        if (body[i] == '+' || body[i] == '-') {
            sign = body[i] == '-' ? -1 : 1;
            ++i;
        }
        while (i < body.size()) {
            std::string digits;
            while (i < body.size() && std::isdigit(static_cast<unsigned char>(body[i])))
                digits += body[i++];
            if (digits.size() > 9) throw ParseError("polynomial coefficient too large");
            long long coeff = digits.empty() ? 1 : std::stoll(digits);
            std::size_t exp = 0;
            bool has_x = i < body.size() && body[i] == 'x';
            if (has_x) {
                ++i;
                exp = 1;
                if (i < body.size() && body[i] == '^') {
                    ++i;
                    std::string ed;
                    while (i < body.size() && std::isdigit(static_cast<unsigned char>(body[i])))
                        ed += body[i++];
                    if (ed.empty() || ed.size() > 4)
                        throw ParseError("missing or oversized exponent in '" + body + "'");
                    exp = static_cast<std::size_t>(std::stoll(ed));
                    if (exp > 64) throw ParseError("polynomial degree too large");
                }
            }
            if (!has_x && digits.empty()) throw ParseError("bad polynomial term in '" + body + "'");
            terms[exp] += sign * coeff;
            if (i == body.size()) break;
            if (body[i] == '+')
                sign = 1;
            else if (body[i] == '-')
                sign = -1;
            else
                throw ParseError("bad polynomial syntax in '" + body + "'");
            ++i;
        }
        std::size_t deg = 0;
        for (const auto& [e, c] : terms)
            if (c != 0) deg = std::max(deg, e);
        if (deg < 1) throw ParseError("quotient modulus must have degree >= 1");
        if (terms[deg] != 1) throw ParseError("quotient modulus must be monic: '" + body + "'");
        std::vector<std::uint16_t> f(deg + 1, 0);
        for (const auto& [e, c] : terms) {
            long long red = c % static_cast<long long>(m);
            if (red < 0) red += static_cast<long long>(m);
            f[e] = static_cast<std::uint16_t>(red);
        }
        f[deg] = 1;
        return f;
    }
};

}  // namespace detail

class FiniteRing {
public:
    static FiniteRing from_spec(std::string_view text, std::size_t order_cap = kDefaultOrderCap) {
        detail::SpecParser parser(text, order_cap);
        detail::RawRing raw = parser.parse();
        return FiniteRing(std::move(raw), parser.normalized());
    }

    /// Builds a ring from explicit tables (used for rings outside the
    /// mini-language). Tables are validated like any constructed ring.
    static FiniteRing from_tables(std::string name, std::vector<std::string> labels,
                                  std::vector<std::uint16_t> add_table,
                                  std::vector<std::uint16_t> mul_table) {
        detail::RawRing raw;
        raw.order = labels.size();
        raw.labels = std::move(labels);
        raw.add = std::move(add_table);
        raw.mul = std::move(mul_table);
        raw.kind = RingKind::Custom;
        return FiniteRing(std::move(raw), std::move(name));
    }

    std::size_t order() const { return order_; }
    std::uint16_t add(std::uint16_t a, std::uint16_t b) const { return add_[idx(a, b)]; }
    std::uint16_t mul(std::uint16_t a, std::uint16_t b) const { return mul_[idx(a, b)]; }
    std::uint16_t neg(std::uint16_t a) const { return neg_[a]; }
    std::uint16_t sub(std::uint16_t a, std::uint16_t b) const { return add_[idx(a, neg_[b])]; }
    std::uint16_t zero() const { return zero_; }
    std::uint16_t one() const { return one_; }

    bool is_unit(std::uint16_t x) const { return unit_mask_[x]; }
    const std::vector<std::uint16_t>& units() const { return units_; }
    std::size_t unit_count() const { return units_.size(); }                        // u
    std::size_t nonzero_nonunit_count() const { return order_ - 1 - units_.size(); }  // v

    std::vector<std::uint16_t> principal_left_ideal(std::uint16_t x) const {
        std::vector<char> in(order_, 0);
        for (std::size_t r = 0; r < order_; ++r) in[mul_[r * order_ + x]] = 1;
        std::vector<std::uint16_t> out;
        for (std::size_t e = 0; e < order_; ++e)
            if (in[e]) out.push_back(static_cast<std::uint16_t>(e));
        return out;
    }

    const std::vector<std::vector<std::uint16_t>>& left_ideals() const { return left_ideals_; }
    const std::vector<std::vector<std::uint16_t>>& associate_classes() const { return classes_; }
    const LocalityRecord& locality() const { return locality_; }

    const std::string& label(std::uint16_t x) const { return labels_[x]; }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& spec_text() const { return spec_text_; }
    RingKind kind() const { return kind_; }
    std::optional<std::size_t> residue_modulus() const { return residue_modulus_; }

private:
    FiniteRing(detail::RawRing raw, std::string spec_text)
        : order_(raw.order),
          labels_(std::move(raw.labels)),
          add_(std::move(raw.add)),
          mul_(std::move(raw.mul)),
          kind_(raw.kind),
          residue_modulus_(raw.residue_modulus),
          spec_text_(std::move(spec_text)) {
        finalize();
    }

    std::size_t idx(std::uint16_t a, std::uint16_t b) const { return a * order_ + b; }

    void finalize() {
        const std::size_t n = order_;
        if (n < 2) throw ParseError("ring order must be at least 2");
        if (n > 0xFFFF) throw OrderCapError("ring order exceeds table index range");
        if (labels_.size() != n || add_.size() != n * n || mul_.size() != n * n)
            throw std::invalid_argument("ring table sizes do not match order");
        for (std::uint16_t v : add_)
            if (v >= n) throw std::invalid_argument("addition table entry out of range");
        for (std::uint16_t v : mul_)
            if (v >= n) throw std::invalid_argument("multiplication table entry out of range");

        find_identities();
        build_negation();
        validate_axioms();
        scan_units();
        build_left_ideals();
        build_associate_classes();
        detect_locality();
    }

    void find_identities() {
        const std::size_t n = order_;
        bool found_zero = false, found_one = false;
        for (std::size_t e = 0; e < n; ++e) {
            bool is_zero = true, is_one = true;
            for (std::size_t a = 0; a < n; ++a) {
                if (add_[e * n + a] != a || add_[a * n + e] != a) is_zero = false;
                if (mul_[e * n + a] != a || mul_[a * n + e] != a) is_one = false;
                if (!is_zero && !is_one) break;
            }
            if (is_zero) {
                zero_ = static_cast<std::uint16_t>(e);
                found_zero = true;
            }
            if (is_one) {
                one_ = static_cast<std::uint16_t>(e);
                found_one = true;
            }
        }
        if (!found_zero) throw std::invalid_argument("no additive identity in tables");
        if (!found_one) throw std::invalid_argument("no multiplicative identity in tables");
        if (zero_ == one_) throw std::invalid_argument("0 = 1: not a ring of order >= 2");
    }

    void build_negation() {
        const std::size_t n = order_;
        neg_.assign(n, 0);
        for (std::size_t a = 0; a < n; ++a) {
            bool found = false;
            for (std::size_t b = 0; b < n; ++b) {
                if (add_[a * n + b] == zero_) {
                    neg_[a] = static_cast<std::uint16_t>(b);
                    found = true;
                    break;
                }
            }
            if (!found) throw std::invalid_argument("element without additive inverse");
        }
    }

    // Exhaustive for |R| <= 64, otherwise >= 1e5 sampled triples (fixed seed).
    void validate_axioms() const {
        const std::size_t n = order_;
        auto check_triple = [&](std::size_t a, std::size_t b, std::size_t c) {
            if (add_[add_[a * n + b] * n + c] != add_[a * n + add_[b * n + c]])
                throw std::invalid_argument("addition is not associative");
            if (mul_[mul_[a * n + b] * n + c] != mul_[a * n + mul_[b * n + c]])
                throw std::invalid_argument("multiplication is not associative");
            if (mul_[a * n + add_[b * n + c]] != add_[mul_[a * n + b] * n + mul_[a * n + c]])
                throw std::invalid_argument("left distributivity fails");
            if (mul_[add_[a * n + b] * n + c] != add_[mul_[a * n + c] * n + mul_[b * n + c]])
                throw std::invalid_argument("right distributivity fails");
        };
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b)
                if (add_[a * n + b] != add_[b * n + a])
                    throw std::invalid_argument("addition is not commutative");
        if (n <= 64) {
            for (std::size_t a = 0; a < n; ++a)
                for (std::size_t b = 0; b < n; ++b)
                    for (std::size_t c = 0; c < n; ++c) check_triple(a, b, c);
        } else {
            std::mt19937_64 rng(0x52494e47ULL);
            for (int trial = 0; trial < 100000; ++trial)
                check_triple(rng() % n, rng() % n, rng() % n);
        }
    }

    void scan_units() {
        const std::size_t n = order_;
        unit_mask_.assign(n, 0);
        for (std::size_t a = 0; a < n; ++a) {
            for (std::size_t b = 0; b < n; ++b) {
                if (mul_[a * n + b] == one_ && mul_[b * n + a] == one_) {
                    unit_mask_[a] = 1;
                    units_.push_back(static_cast<std::uint16_t>(a));
                    break;
                }
            }
        }
    }

    // All left ideals: closure of the principal left ideals under pairwise
    // ideal sums (I + J = {a + b} is again a left ideal).
    void build_left_ideals() {
        const std::size_t n = order_;
        std::set<std::vector<std::uint16_t>> seen;
        std::vector<std::vector<std::uint16_t>> list;
        for (std::size_t x = 0; x < n; ++x) {
            auto p = principal_left_ideal(static_cast<std::uint16_t>(x));
            if (seen.insert(p).second) list.push_back(std::move(p));
        }
        for (std::size_t i = 0; i < list.size(); ++i) {
            for (std::size_t j = 0; j < i; ++j) {
                std::vector<char> in(n, 0);
                for (std::uint16_t a : list[i])
                    for (std::uint16_t b : list[j]) in[add_[a * n + b]] = 1;
                std::vector<std::uint16_t> s;
                for (std::size_t e = 0; e < n; ++e)
                    if (in[e]) s.push_back(static_cast<std::uint16_t>(e));
                if (seen.insert(s).second) list.push_back(std::move(s));
            }
        }
        std::sort(list.begin(), list.end(), [](const auto& a, const auto& b) {
            if (a.size() != b.size()) return a.size() < b.size();
            return a < b;
        });
        left_ideals_ = std::move(list);
    }

    void build_associate_classes() {
        const std::size_t n = order_;
        std::map<std::vector<std::uint16_t>, std::vector<std::uint16_t>> groups;
        for (std::size_t x = 0; x < n; ++x) {
            auto p = principal_left_ideal(static_cast<std::uint16_t>(x));
            groups[std::move(p)].push_back(static_cast<std::uint16_t>(x));
        }
        // classes ordered by smallest member
        std::vector<std::vector<std::uint16_t>> classes;
        for (auto& [ideal, members] : groups) classes.push_back(members);
        std::sort(classes.begin(), classes.end(),
                  [](const auto& a, const auto& b) { return a.front() < b.front(); });
        classes_ = std::move(classes);
    }

    // A finite ring is local iff its nonunits are closed under addition;
    // the nonunits are then the unique maximal (two-sided) ideal.
    void detect_locality() {
        const std::size_t n = order_;
        std::vector<std::uint16_t> nonunits;
        for (std::size_t x = 0; x < n; ++x)
            if (!unit_mask_[x]) nonunits.push_back(static_cast<std::uint16_t>(x));
        for (std::uint16_t a : nonunits)
            for (std::uint16_t b : nonunits)
                if (unit_mask_[add_[a * n + b]]) return;  // not local
        locality_.is_local = true;
        locality_.maximal_ideal = std::move(nonunits);
        locality_.residue_field_order = n / locality_.maximal_ideal.size();
    }

    std::size_t order_ = 0;
    std::vector<std::string> labels_;
    std::vector<std::uint16_t> add_;
    std::vector<std::uint16_t> mul_;
    std::vector<std::uint16_t> neg_;
    std::uint16_t zero_ = 0;
    std::uint16_t one_ = 0;
    std::vector<char> unit_mask_;
    std::vector<std::uint16_t> units_;
    std::vector<std::vector<std::uint16_t>> left_ideals_;
    std::vector<std::vector<std::uint16_t>> classes_;
    LocalityRecord locality_;
    RingKind kind_;
    std::optional<std::size_t> residue_modulus_;
    std::string spec_text_;
};

}  // namespace ringcode
