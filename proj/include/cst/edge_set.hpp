#pragma once

#include <bit>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <vector>

namespace cst {

/// Largest edge count a drawing may have; edge sets are single machine words.
inline constexpr int kMaxEdges = 64;

/// A set of edge ids of one drawing, stored as a bitmask. Iteration and
/// `ids()` yield ids in increasing order, which is the canonical form.
class EdgeSet {
public:
    constexpr EdgeSet() = default;
    constexpr explicit EdgeSet(std::uint64_t bits) : bits_(bits) {}
    EdgeSet(std::initializer_list<int> ids) {
        for (int id : ids) insert(id);
    }
    static EdgeSet from_ids(const std::vector<int>& ids) {
        EdgeSet s;
        for (int id : ids) s.insert(id);
        return s;
    }
    static constexpr EdgeSet single(int id) { return EdgeSet(std::uint64_t{1} << id); }

    constexpr std::uint64_t bits() const { return bits_; }
    constexpr bool contains(int id) const { return (bits_ >> id) & 1U; }
    constexpr void insert(int id) { bits_ |= std::uint64_t{1} << id; }
    constexpr void erase(int id) { bits_ &= ~(std::uint64_t{1} << id); }
    constexpr int size() const { return std::popcount(bits_); }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr bool intersects(EdgeSet o) const { return (bits_ & o.bits_) != 0; }
    /// Largest member; the set must be non-empty.
    constexpr int max_id() const { return 63 - std::countl_zero(bits_); }
    constexpr int min_id() const { return std::countr_zero(bits_); }

    std::vector<int> ids() const {
        std::vector<int> out;
        out.reserve(size());
        for (int id : *this) out.push_back(id);
        return out;
    }

    friend constexpr EdgeSet operator|(EdgeSet a, EdgeSet b) { return EdgeSet(a.bits_ | b.bits_); }
    friend constexpr EdgeSet operator&(EdgeSet a, EdgeSet b) { return EdgeSet(a.bits_ & b.bits_); }
    friend constexpr EdgeSet operator-(EdgeSet a, EdgeSet b) { return EdgeSet(a.bits_ & ~b.bits_); }
    EdgeSet& operator|=(EdgeSet o) { bits_ |= o.bits_; return *this; }
    EdgeSet& operator&=(EdgeSet o) { bits_ &= o.bits_; return *this; }
    EdgeSet& operator-=(EdgeSet o) { bits_ &= ~o.bits_; return *this; }
    friend constexpr bool operator==(EdgeSet a, EdgeSet b) = default;

    /// Lexicographic order of the sorted id lists.
    friend bool operator<(EdgeSet a, EdgeSet b) {
        const std::uint64_t diff = a.bits_ ^ b.bits_;
        if (diff == 0) return false;
        const int first = std::countr_zero(diff);
        const std::uint64_t above = ~((std::uint64_t{2} << first) - 1);
        // The side holding `first` is smaller unless the other side is a prefix of it.
        if (a.contains(first)) return (b.bits_ & above) != 0;
        return (a.bits_ & above) == 0;
    }

    class iterator {
    public:
        constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}
        constexpr int operator*() const { return std::countr_zero(rest_); }
        constexpr iterator& operator++() { rest_ &= rest_ - 1; return *this; }
        constexpr bool operator!=(const iterator& o) const { return rest_ != o.rest_; }
        constexpr bool operator==(const iterator& o) const { return rest_ == o.rest_; }

    private:
        std::uint64_t rest_;
    };
    constexpr iterator begin() const { return iterator(bits_); }
    constexpr iterator end() const { return iterator(0); }

private:
    std::uint64_t bits_ = 0;
};

struct EdgeSetHash {
    std::size_t operator()(EdgeSet s) const noexcept { return std::hash<std::uint64_t>{}(s.bits()); }
};

}  // namespace cst
