#pragma once

#include <charconv>
#include <compare>
#include <numeric>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"
#include "graph.hpp"
#include "matching.hpp"

namespace edgeideal {

/// Exponent vector a ∈ N^n of the monomial x^a.
class ExponentVector {
public:
    ExponentVector() = default;
    explicit ExponentVector(int n) : values_(static_cast<std::size_t>(n), 0) {}
    explicit ExponentVector(std::vector<int> values) : values_(std::move(values)) {
        for (int v : values_) {
            if (v < 0) throw InvalidInput("exponent vectors are non-negative");
        }
    }
    ExponentVector(std::initializer_list<int> values) : ExponentVector(std::vector<int>(values)) {}

    /// Indicator vector of s in N^n.
    static ExponentVector indicator(int n, VertexSet s) {
        ExponentVector a(n);
        for (int v : s) a.values_[static_cast<std::size_t>(v)] = 1;
        return a;
    }

    int size() const { return static_cast<int>(values_.size()); }
    int operator[](int i) const { return values_[static_cast<std::size_t>(i)]; }
    int& operator[](int i) { return values_[static_cast<std::size_t>(i)]; }
    const std::vector<int>& values() const { return values_; }

    /// V_a
    VertexSet support() const {
        VertexSet s;
        for (int i = 0; i < size(); ++i) {
            if (values_[static_cast<std::size_t>(i)] > 0) s.insert(i);
        }
        return s;
    }

    int degree() const { return std::accumulate(values_.begin(), values_.end(), 0); }

    auto operator<=>(const ExponentVector&) const = default;

private:
    std::vector<int> values_;
};

/// a ∈ Z^n; negative entries mark the set G_a.
class SignedExponentVector {
public:
    SignedExponentVector() = default;
    explicit SignedExponentVector(std::vector<int> values) : values_(std::move(values)) {}
    SignedExponentVector(std::initializer_list<int> values) : values_(values) {}

    int size() const { return static_cast<int>(values_.size()); }
    int operator[](int i) const { return values_[static_cast<std::size_t>(i)]; }
    const std::vector<int>& values() const { return values_; }

    /// G_a = {i : a_i < 0}
    VertexSet negative_set() const {
        VertexSet s;
        for (int i = 0; i < size(); ++i) {
            if (values_[static_cast<std::size_t>(i)] < 0) s.insert(i);
        }
        return s;
    }

    /// a_G: entries indexed by G set to zero. Requires G ⊇ G_a.
    ExponentVector truncate(VertexSet g) const {
        if (!negative_set().subset_of(g)) throw InvalidInput("truncation set must contain every negative entry");
        std::vector<int> out = values_;
        for (int i : g) out[static_cast<std::size_t>(i)] = 0;
        return ExponentVector(std::move(out));
    }

    bool operator==(const SignedExponentVector&) const = default;

private:
    std::vector<int> values_;
};

namespace detail {

inline std::vector<int> parse_int_list(std::string_view text, bool allow_negative) {
    std::vector<int> out;
    if (text.empty()) throw ParseError("empty exponent list");
    std::size_t pos = 0;
    for (;;) {
        std::size_t comma = text.find(',', pos);
        std::string_view item = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
        int value = 0;
        auto [p, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
        if (item.empty() || ec != std::errc{} || p != item.data() + item.size()) {
            throw ParseError("bad exponent '" + std::string(item) + "'");
        }
        if (value < 0 && !allow_negative) throw ParseError("negative exponent '" + std::string(item) + "'");
        out.push_back(value);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return out;
}

inline std::string join_ints(const std::vector<int>& values) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(values[i]);
    }
    return out;
}

} // namespace detail

/// "1,1,0,2"
inline ExponentVector parse_exponents(std::string_view text) {
    return ExponentVector(detail::parse_int_list(text, false));
}

/// "1,1,1,0,-1"
inline SignedExponentVector parse_signed_exponents(std::string_view text) {
    return SignedExponentVector(detail::parse_int_list(text, true));
}

inline std::string format_exponents(const ExponentVector& a) { return detail::join_ints(a.values()); }
inline std::string format_exponents(const SignedExponentVector& a) { return detail::join_ints(a.values()); }

/// Γ_a: the graph induced on V_a with vertex i weighted by a_i.
inline WeightedGraph weighted_graph(const SimpleGraph& g, const ExponentVector& a) {
    if (a.size() != g.vertex_count()) throw InvalidInput("exponent vector length differs from vertex count");
    auto sub = induced_subgraph(g, a.support());
    std::vector<int> weights;
    weights.reserve(sub.ambient.size());
    for (int v : sub.ambient) weights.push_back(a[v]);
    return WeightedGraph(std::move(sub.graph), std::move(weights), std::move(sub.ambient));
}

/// Exponent vector of a weighted graph in its ambient index space.
inline ExponentVector to_exponents(const WeightedGraph& h, int ambient_size) {
    ExponentVector a(ambient_size);
    for (int i = 0; i < h.vertex_count(); ++i) a[h.ambient[static_cast<std::size_t>(i)]] = h.weight[static_cast<std::size_t>(i)];
    return a;
}

} // namespace edgeideal
