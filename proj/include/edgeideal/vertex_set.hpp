#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "errors.hpp"

namespace edgeideal {

inline constexpr int kMaxVertices = 64;

/// Subset of {0, ..., 63}, stored as a 64-bit mask. Vertices are 0-based here;
/// the CLI and text formats add one on the way out.
class VertexSet {
public:
    constexpr VertexSet() = default;
    constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}

    VertexSet(std::initializer_list<int> vertices) {
        for (int v : vertices) insert(v);
    }

    static VertexSet from_list(const std::vector<int>& vertices) {
        VertexSet s;
        for (int v : vertices) s.insert(v);
        return s;
    }

    /// {0, ..., n-1}
    static constexpr VertexSet range(int n) {
        return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
    }

    static constexpr VertexSet singleton(int v) { return VertexSet(std::uint64_t{1} << v); }

    constexpr std::uint64_t bits() const { return bits_; }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr int size() const { return std::popcount(bits_); }
    constexpr bool contains(int v) const { return (bits_ >> v) & 1U; }
    constexpr bool subset_of(VertexSet other) const { return (bits_ & ~other.bits_) == 0; }
    constexpr bool intersects(VertexSet other) const { return (bits_ & other.bits_) != 0; }

    /// Smallest element; undefined on the empty set.
    constexpr int first() const { return std::countr_zero(bits_); }

    void insert(int v) {
        if (v < 0 || v >= kMaxVertices) {
            throw InvalidInput("vertex index " + std::to_string(v) + " outside 0..63");
        }
        bits_ |= std::uint64_t{1} << v;
    }
    constexpr void erase(int v) { bits_ &= ~(std::uint64_t{1} << v); }

    constexpr VertexSet operator|(VertexSet o) const { return VertexSet(bits_ | o.bits_); }
    constexpr VertexSet operator&(VertexSet o) const { return VertexSet(bits_ & o.bits_); }
    constexpr VertexSet operator-(VertexSet o) const { return VertexSet(bits_ & ~o.bits_); }
    constexpr VertexSet& operator|=(VertexSet o) { bits_ |= o.bits_; return *this; }
    constexpr VertexSet& operator&=(VertexSet o) { bits_ &= o.bits_; return *this; }
    constexpr VertexSet& operator-=(VertexSet o) { bits_ &= ~o.bits_; return *this; }

    constexpr bool operator==(const VertexSet&) const = default;

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(size()));
        for (int v : *this) out.push_back(v);
        return out;
    }

    class iterator {
    public:
        using value_type = int;
        using difference_type = std::ptrdiff_t;

        constexpr iterator() = default;
        constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}
        constexpr int operator*() const { return std::countr_zero(rest_); }
        constexpr iterator& operator++() { rest_ &= rest_ - 1; return *this; }
        constexpr iterator operator++(int) { iterator tmp = *this; ++*this; return tmp; }
        constexpr bool operator==(const iterator&) const = default;

    private:
        std::uint64_t rest_ = 0;
    };

    constexpr iterator begin() const { return iterator(bits_); }
    constexpr iterator end() const { return iterator(0); }

private:
    std::uint64_t bits_ = 0;
};

/// Lexicographic order on the sorted element lists: {1,2} < {1,2,3} < {1,3} < {2}.
/// This is the canonical order used for every reported list of sets.
struct CanonicalLess {
    bool operator()(VertexSet a, VertexSet b) const {
        std::uint64_t diff = a.bits() ^ b.bits();
        if (diff == 0) return false;
        int x = std::countr_zero(diff);
        bool a_has = a.contains(x);
        VertexSet other = a_has ? b : a;
        // the set without x either has a larger element at this position
        // (so the set holding x is smaller) or stops here (so it is a prefix)
        bool other_continues = (other.bits() >> x) != 0;
        return a_has ? other_continues : !other_continues;
    }
};

/// 1-based rendering, e.g. "{1,2,4}".
inline std::string format_set(VertexSet s) {
    std::string out = "{";
    bool first = true;
    for (int v : s) {
        if (!first) out += ',';
        out += std::to_string(v + 1);
        first = false;
    }
    return out + "}";
}

} // namespace edgeideal
