#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "errors.hpp"
#include "exponent.hpp"
#include "graph.hpp"

// Brute-force monomial ideal arithmetic used as ground truth for the
// graph-theoretic criteria. Nothing here knows about matchings.

namespace edgeideal::oracle {

inline constexpr int kMaxVariables = 8;
inline constexpr int kMaxExponent = 127;

/// Monomial packed one byte per variable, variable 0 in the most significant
/// byte, so integer order on packed words is lexicographic order on
/// exponent vectors. Exponents stay <= 127 so byte-parallel arithmetic never
/// carries across lanes.
using Packed = std::uint64_t;

namespace packed {

inline constexpr std::uint64_t kHigh = 0x8080808080808080ULL;
inline constexpr std::uint64_t kLow7 = ~kHigh;

constexpr int shift_of(int var) { return 8 * (kMaxVariables - 1 - var); }

constexpr int exponent(Packed m, int var) { return static_cast<int>((m >> shift_of(var)) & 0xFF); }

constexpr Packed unit(int var) { return Packed{1} << shift_of(var); }

/// a | b, i.e. a <= b in every lane
constexpr bool divides(Packed a, Packed b) { return (((b | kHigh) - a) & kHigh) == kHigh; }

constexpr Packed lane_mask_ge(Packed a, Packed b) {
    Packed ge = ((a | kHigh) - b) & kHigh; // high bit where a >= b
    return (ge >> 7) * 0xFF;
}

constexpr Packed lcm(Packed a, Packed b) {
    Packed m = lane_mask_ge(a, b);
    return (a & m) | (b & ~m);
}

/// lane-wise max(a − b, 0)
constexpr Packed monus(Packed a, Packed b) {
    Packed diff = ((a | kHigh) - b) & kLow7;
    return diff & lane_mask_ge(a, b);
}

/// high bit set in every non-zero lane
constexpr Packed nonzero_lanes(Packed m) { return (m | ((m & kLow7) + kLow7)) & kHigh; }

constexpr int degree(Packed m) {
    int d = 0;
    for (; m != 0; m >>= 8) d += static_cast<int>(m & 0xFF);
    return d;
}

/// Exactly one variable with exponent one.
constexpr bool is_variable(Packed m) { return m != 0 && (m & (m - 1)) == 0 && std::countr_zero(m) % 8 == 0; }

inline Packed pack(const std::vector<int>& values) {
    if (values.size() > static_cast<std::size_t>(kMaxVariables)) throw OversizeError("oracle handles at most 8 variables");
    Packed m = 0;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (values[i] < 0 || values[i] > kMaxExponent) throw OversizeError("oracle exponents must lie in 0..127");
        m |= static_cast<Packed>(values[i]) << shift_of(static_cast<int>(i));
    }
    return m;
}

inline std::vector<int> unpack(Packed m, int nvars) {
    std::vector<int> out(static_cast<std::size_t>(nvars));
    for (int i = 0; i < nvars; ++i) out[static_cast<std::size_t>(i)] = exponent(m, i);
    return out;
}

/// Drop every generator divisible by another; result in ascending order.
inline std::vector<Packed> minimalize(std::vector<Packed> gens) {
    std::sort(gens.begin(), gens.end(), [](Packed a, Packed b) {
        int da = degree(a), db = degree(b);
        return da != db ? da < db : a < b;
    });
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<Packed> kept;
    for (Packed g : gens) {
        bool redundant = false;
        for (Packed k : kept) {
            if (divides(k, g)) {
                redundant = true;
                break;
            }
        }
        if (!redundant) kept.push_back(g);
    }
    std::sort(kept.begin(), kept.end());
    return kept;
}

} // namespace packed

/// Monomial ideal in n <= 8 variables held by its minimal generators.
class MonomialIdeal {
public:
    MonomialIdeal() = default;

    MonomialIdeal(int nvars, std::vector<Packed> gens) : nvars_(nvars), gens_(packed::minimalize(std::move(gens))) {
        if (nvars < 0 || nvars > kMaxVariables) throw OversizeError("oracle handles at most 8 variables");
    }

    static MonomialIdeal from_exponents(int nvars, const std::vector<ExponentVector>& gens) {
        std::vector<Packed> packed_gens;
        for (const auto& g : gens) {
            if (g.size() != nvars) throw InvalidInput("generator length differs from variable count");
            packed_gens.push_back(packed::pack(g.values()));
        }
        return MonomialIdeal(nvars, std::move(packed_gens));
    }

    /// P_F = (x_i : i ∈ F)
    static MonomialIdeal prime(int nvars, VertexSet f) {
        std::vector<Packed> gens;
        for (int i : f) gens.push_back(packed::unit(i));
        return MonomialIdeal(nvars, std::move(gens));
    }

    static MonomialIdeal unit(int nvars) { return MonomialIdeal(nvars, {Packed{0}}); }

    int variable_count() const { return nvars_; }
    const std::vector<Packed>& packed_generators() const { return gens_; }
    std::size_t generator_count() const { return gens_.size(); }
    bool is_zero() const { return gens_.empty(); }
    bool is_unit() const { return gens_.size() == 1 && gens_.front() == 0; }

    /// Minimal generators, lexicographically ascending.
    std::vector<ExponentVector> generators() const {
        std::vector<ExponentVector> out;
        out.reserve(gens_.size());
        for (Packed g : gens_) out.emplace_back(packed::unpack(g, nvars_));
        return out;
    }

    /// No generator divides another (always true after construction).
    bool is_antichain() const {
        for (std::size_t i = 0; i < gens_.size(); ++i) {
            for (std::size_t j = 0; j < gens_.size(); ++j) {
                if (i != j && packed::divides(gens_[i], gens_[j])) return false;
            }
        }
        return true;
    }

    /// Every generator of `other` lies in this ideal.
    bool contains(const MonomialIdeal& other) const {
        for (Packed g : other.gens_) {
            if (!contains_packed(g)) return false;
        }
        return true;
    }

    bool contains_packed(Packed m) const {
        for (Packed g : gens_) {
            if (packed::divides(g, m)) return true;
        }
        return false;
    }

    bool operator==(const MonomialIdeal&) const = default;

private:
    int nvars_ = 0;
    std::vector<Packed> gens_;
};

namespace detail {

inline Packed pack_clipped(const ExponentVector& a) {
    std::vector<int> v = a.values();
    // generator exponents never exceed 127, so clipping keeps divisibility
    for (int& x : v) x = std::min(x, kMaxExponent);
    return packed::pack(v);
}

} // namespace detail

/// I(Γ): one generator x_u x_v per edge.
inline MonomialIdeal edge_ideal(const SimpleGraph& g) {
    if (g.vertex_count() > kMaxVariables) throw OversizeError("oracle handles graphs on at most 8 vertices");
    std::vector<Packed> gens;
    for (auto [u, v] : g.edges()) gens.push_back(packed::unit(u) | packed::unit(v));
    return MonomialIdeal(g.vertex_count(), std::move(gens));
}

/// J^t from all multisets of t generators.
inline MonomialIdeal power(const MonomialIdeal& j, int t) {
    if (t < 1) throw InvalidInput("power t must be >= 1");
    const auto& gens = j.packed_generators();
    for (Packed g : gens) {
        for (int i = 0; i < j.variable_count(); ++i) {
            if (packed::exponent(g, i) * t > kMaxExponent) throw OversizeError("power exceeds oracle exponent range");
        }
    }
    std::vector<Packed> products;
    auto choose = [&](auto&& self, std::size_t from, int left, Packed acc) -> void {
        if (left == 0) {
            products.push_back(acc);
            return;
        }
        for (std::size_t k = from; k < gens.size(); ++k) self(self, k, left - 1, acc + gens[k]);
    };
    choose(choose, 0, t, Packed{0});
    return MonomialIdeal(j.variable_count(), std::move(products));
}

inline bool membership(const MonomialIdeal& j, const ExponentVector& a) {
    if (a.size() != j.variable_count()) throw InvalidInput("exponent vector length differs from variable count");
    return j.contains_packed(detail::pack_clipped(a));
}

/// J : x^w
inline MonomialIdeal colon_monomial(const MonomialIdeal& j, const ExponentVector& w) {
    if (w.size() != j.variable_count()) throw InvalidInput("exponent vector length differs from variable count");
    Packed pw = detail::pack_clipped(w);
    std::vector<Packed> gens;
    for (Packed g : j.packed_generators()) gens.push_back(packed::monus(g, pw));
    return MonomialIdeal(j.variable_count(), std::move(gens));
}

inline MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
    std::vector<Packed> gens;
    gens.reserve(a.generator_count() * b.generator_count());
    for (Packed x : a.packed_generators()) {
        for (Packed y : b.packed_generators()) gens.push_back(packed::lcm(x, y));
    }
    return MonomialIdeal(a.variable_count(), std::move(gens));
}

/// J : m = ∩_i J : x_i
inline MonomialIdeal colon_maximal(const MonomialIdeal& j) {
    const int n = j.variable_count();
    if (n == 0) return j;
    std::optional<MonomialIdeal> acc;
    for (int i = 0; i < n; ++i) {
        ExponentVector xi(n);
        xi[i] = 1;
        MonomialIdeal part = colon_monomial(j, xi);
        acc = acc ? intersect(*acc, part) : part;
    }
    return *acc;
}

/// sat(J) as the fixpoint of K ↦ K : m. Each step only grows K, and the
/// chain stops since all generators divide lcm(gens of J).
inline MonomialIdeal saturate(const MonomialIdeal& j) {
    MonomialIdeal current = j;
    for (;;) {
        MonomialIdeal next = colon_maximal(current);
        if (next == current) return current;
        current = std::move(next);
    }
}

/// ∩_{i ∈ vars} (J : x_i^∞): the saturation with respect to the ideal of the
/// variables in `vars`. With vars = all variables this equals saturate(j).
inline MonomialIdeal saturate_variablewise(const MonomialIdeal& j, VertexSet vars) {
    std::optional<MonomialIdeal> acc;
    for (int i : vars) {
        if (i >= j.variable_count()) throw InvalidInput("variable index out of range");
        std::vector<Packed> gens;
        for (Packed g : j.packed_generators()) gens.push_back(g & ~(Packed{0xFF} << packed::shift_of(i)));
        MonomialIdeal part(j.variable_count(), std::move(gens));
        acc = acc ? intersect(*acc, part) : part;
    }
    return acc ? *acc : MonomialIdeal::unit(j.variable_count());
}

/// If J : x^w is a prime P_F, return F. Uses the identity
/// F = {i : x_i x^w ∈ J}; J : x^w = P_F iff x^w ∉ J and every quotient
/// generator is divisible by some x_i, i ∈ F.
inline std::optional<VertexSet> prime_colon(const MonomialIdeal& j, Packed w) {
    Packed f_lanes = 0;
    for (Packed g : j.packed_generators()) {
        Packed q = packed::monus(g, w);
        if (q == 0) return std::nullopt;
        if (packed::is_variable(q)) f_lanes |= q << 7;
    }
    if (f_lanes == 0) return std::nullopt;
    for (Packed g : j.packed_generators()) {
        if ((packed::nonzero_lanes(packed::monus(g, w)) & f_lanes) == 0) return std::nullopt;
    }
    VertexSet f;
    for (int i = 0; i < j.variable_count(); ++i) {
        if ((f_lanes >> packed::shift_of(i)) & 0x80) f.insert(i);
    }
    return f;
}

/// Associated primes with the first divisor w (in odometer order) whose colon
/// J : x^w produces each of them.
inline std::map<VertexSet, ExponentVector, CanonicalLess> ass_primes_oracle_with_witness(const MonomialIdeal& j) {
    if (j.is_zero()) throw InvalidInput("zero ideal has no finite divisor sweep");
    const int n = j.variable_count();
    Packed lcm_all = 0;
    for (Packed g : j.packed_generators()) lcm_all = packed::lcm(lcm_all, g);
    std::vector<int> top = packed::unpack(lcm_all, n);
    std::vector<int> w(static_cast<std::size_t>(n), 0);
    std::map<VertexSet, ExponentVector, CanonicalLess> found;
    for (;;) {
        if (auto f = prime_colon(j, packed::pack(w))) found.try_emplace(*f, ExponentVector(w));
        int i = n - 1;
        while (i >= 0 && w[static_cast<std::size_t>(i)] == top[static_cast<std::size_t>(i)]) {
            w[static_cast<std::size_t>(i)] = 0;
            --i;
        }
        if (i < 0) break;
        ++w[static_cast<std::size_t>(i)];
    }
    return found;
}

/// Ass(R/J): every P_F arising as J : x^w for a divisor w of lcm(gens).
inline std::vector<VertexSet> ass_primes_oracle(const MonomialIdeal& j) {
    std::vector<VertexSet> out;
    for (const auto& [f, w] : ass_primes_oracle_with_witness(j)) out.push_back(f);
    return out;
}

/// lcm of the generators of I^t has exponent t at every non-isolated vertex
/// (t copies of an incident edge) and 0 elsewhere.
inline bool power_lcm_as_expected(const SimpleGraph& g, const MonomialIdeal& power_ideal, int t) {
    Packed lcm_all = 0;
    for (Packed m : power_ideal.packed_generators()) lcm_all = packed::lcm(lcm_all, m);
    for (int v = 0; v < g.vertex_count(); ++v) {
        int expected = g.degree(v) > 0 ? t : 0;
        if (packed::exponent(lcm_all, v) != expected) return false;
    }
    return true;
}

} // namespace edgeideal::oracle
