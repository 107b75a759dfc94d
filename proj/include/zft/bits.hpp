#pragma once

#include <bit>
#include <cstdint>
#include <iterator>
#include <string>

namespace zft {

/// Vertex subset of a graph with at most 32 vertices; bit v set iff v is in the set.
using VertexSet = std::uint32_t;

inline constexpr VertexSet bit(int v) noexcept { return VertexSet{1} << v; }

inline constexpr VertexSet all_vertices(int n) noexcept {
    return n >= 32 ? ~VertexSet{0} : (VertexSet{1} << n) - 1;
}

inline constexpr bool contains(VertexSet s, int v) noexcept { return (s >> v) & 1u; }

inline constexpr bool is_subset(VertexSet a, VertexSet b) noexcept { return (a & ~b) == 0; }

inline constexpr int popcount(VertexSet s) noexcept { return std::popcount(s); }

inline constexpr int lowest(VertexSet s) noexcept { return std::countr_zero(s); }

/// Iterates the members of a vertex set in increasing order.
class Bits {
public:
    class iterator {
    public:
        using iterator_category = std::forward_iterator_tag;
        using value_type = int;
        using difference_type = std::ptrdiff_t;
        using pointer = void;
        using reference = int;

        constexpr iterator() = default;
        constexpr explicit iterator(VertexSet rest) : rest_(rest) {}
        constexpr int operator*() const { return std::countr_zero(rest_); }
        constexpr iterator& operator++() {
            rest_ &= rest_ - 1;
            return *this;
        }
        constexpr iterator operator++(int) {
            auto copy = *this;
            ++*this;
            return copy;
        }
        constexpr bool operator==(const iterator&) const = default;

    private:
        VertexSet rest_ = 0;
    };

    constexpr explicit Bits(VertexSet s) : s_(s) {}
    constexpr iterator begin() const { return iterator(s_); }
    constexpr iterator end() const { return iterator(0); }

private:
    VertexSet s_;
};

inline constexpr Bits members(VertexSet s) { return Bits(s); }

/// "{0,2,5}"
inline std::string format_set(VertexSet s) {
    std::string out = "{";
    bool first = true;
    for (int v : members(s)) {
        if (!first) out += ',';
        out += std::to_string(v);
        first = false;
    }
    return out + "}";
}

namespace detail {

/// Calls visit(mask) for every subset of {0..n-1} of the given size, in
/// increasing numeric order.
template <class Visit>
void for_each_subset_of_size(int n, int size, Visit&& visit) {
    if (size == 0) {
        visit(VertexSet{0});
        return;
    }
    const std::uint64_t limit = std::uint64_t{1} << n;
    for (std::uint64_t x = (std::uint64_t{1} << size) - 1; x < limit;) {
        visit(static_cast<VertexSet>(x));
        const std::uint64_t c = x & (~x + 1);
        const std::uint64_t r = x + c;
        x = (((r ^ x) >> 2) / c) | r;
    }
}

} // namespace detail

} // namespace zft
