#pragma once

#include <bit>
#include <cassert>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "error.hpp"

namespace fintop {

inline constexpr int max_points = 16;

/// A subset of the ground set {0, ..., n-1}, stored as a bit mask.
///
/// Every set carries its universe size so complements are relative to the
/// ground set. Mixing sets over different universes is a programming error.
class PointSet {
public:
    using Word = std::uint32_t;

    constexpr PointSet() = default;

    constexpr PointSet(int n, Word bits) : bits_(bits), n_(static_cast<std::uint8_t>(n)) {
        if (n < 0 || n > max_points)
            throw Error(Errc::size_out_of_range, "point count " + std::to_string(n) + " not in [0, 16]");
        if ((bits & ~full_mask(n)) != 0)
            throw Error(Errc::size_out_of_range, "bit set beyond point count " + std::to_string(n));
    }

    static constexpr PointSet none(int n) { return PointSet(n, 0); }
    static constexpr PointSet all(int n) { return PointSet(n, full_mask(n)); }
    static constexpr PointSet single(int n, int x) {
        if (x < 0 || x >= n)
            throw Error(Errc::size_out_of_range, "point " + std::to_string(x) + " outside 0.." + std::to_string(n - 1));
        return PointSet(n, Word{1} << x);
    }
    static PointSet of(int n, std::span<const int> xs) {
        Word bits = 0;
        for (int x : xs) {
            if (x < 0 || x >= n)
                throw Error(Errc::size_out_of_range, "point " + std::to_string(x) + " outside 0.." + std::to_string(n - 1));
            bits |= Word{1} << x;
        }
        return PointSet(n, bits);
    }
    static PointSet of(int n, std::initializer_list<int> xs) {
        return of(n, std::span<const int>(xs.begin(), xs.size()));
    }

    static constexpr Word full_mask(int n) { return n >= 32 ? ~Word{0} : (Word{1} << n) - 1; }

    constexpr int universe() const { return n_; }
    constexpr Word bits() const { return bits_; }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr bool is_full() const { return bits_ == full_mask(n_); }
    constexpr int size() const { return std::popcount(bits_); }
    constexpr bool contains(int x) const { return x >= 0 && x < n_ && ((bits_ >> x) & 1U) != 0; }
    constexpr bool subset_of(PointSet o) const { return (bits_ & ~o.bits_) == 0; }
    constexpr bool intersects(PointSet o) const { return (bits_ & o.bits_) != 0; }
    constexpr int first() const { return bits_ == 0 ? -1 : std::countr_zero(bits_); }

    constexpr PointSet with(int x) const { return PointSet(n_, bits_ | (Word{1} << x), unchecked{}); }
    constexpr PointSet without(int x) const { return PointSet(n_, bits_ & ~(Word{1} << x), unchecked{}); }
    constexpr PointSet complement() const { return PointSet(n_, ~bits_ & full_mask(n_), unchecked{}); }

    friend constexpr PointSet operator|(PointSet a, PointSet b) {
        assert(a.n_ == b.n_);
        return PointSet(a.n_, a.bits_ | b.bits_, unchecked{});
    }
    friend constexpr PointSet operator&(PointSet a, PointSet b) {
        assert(a.n_ == b.n_);
        return PointSet(a.n_, a.bits_ & b.bits_, unchecked{});
    }
    friend constexpr PointSet operator-(PointSet a, PointSet b) {
        assert(a.n_ == b.n_);
        return PointSet(a.n_, a.bits_ & ~b.bits_, unchecked{});
    }
    constexpr PointSet& operator|=(PointSet o) { return *this = *this | o; }
    constexpr PointSet& operator&=(PointSet o) { return *this = *this & o; }

    friend constexpr bool operator==(PointSet, PointSet) = default;
    // Orders by bit pattern first, which is the canonical order used for open-set lists.
    friend constexpr std::strong_ordering operator<=>(PointSet a, PointSet b) {
        if (auto c = a.bits_ <=> b.bits_; c != 0)
            return c;
        return a.n_ <=> b.n_;
    }

    std::vector<int> indices() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(size()));
        for (Word w = bits_; w != 0; w &= w - 1)
            out.push_back(std::countr_zero(w));
        return out;
    }

    template <class F>
    constexpr void for_each(F&& f) const {
        for (Word w = bits_; w != 0; w &= w - 1)
            f(std::countr_zero(w));
    }

    /// "{0,2,3}" form used in messages and plain CLI output.
    std::string str() const {
        std::string s = "{";
        bool first_item = true;
        for_each([&](int x) {
            if (!first_item)
                s += ',';
            s += std::to_string(x);
            first_item = false;
        });
        return s + "}";
    }

private:
    struct unchecked {};
    constexpr PointSet(int n, Word bits, unchecked) : bits_(bits), n_(static_cast<std::uint8_t>(n)) {}

    Word bits_ = 0;
    std::uint8_t n_ = 0;
};

/// Visits every subset of `s` (including the empty set and `s` itself) in increasing bit order.
template <class F>
void for_each_subset(PointSet s, F&& f) {
    const PointSet::Word mask = s.bits();
    PointSet::Word sub = 0;
    while (true) {
        f(PointSet(s.universe(), sub));
        if (sub == mask)
            break;
        sub = (sub - mask) & mask;
    }
}

} // namespace fintop
