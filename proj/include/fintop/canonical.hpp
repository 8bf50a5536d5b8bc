#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include "space.hpp"

namespace fintop {

inline constexpr int canonical_max_points = 8;

/// Relabeling-invariant fingerprint of a finite space: the lexicographically
/// least membership matrix of the min-nbhd table over all n! point orders.
/// Row i is one byte whose bit j says "point j lies in N(i)".
struct CanonicalCode {
    int n = 0;
    std::vector<std::uint8_t> rows;

    friend bool operator==(const CanonicalCode&, const CanonicalCode&) = default;
    friend auto operator<=>(const CanonicalCode& a, const CanonicalCode& b) {
        if (auto c = a.n <=> b.n; c != 0)
            return c;
        return std::lexicographical_compare_three_way(a.rows.begin(), a.rows.end(), b.rows.begin(), b.rows.end());
    }

    /// "n:hexrows", e.g. "2:0103" for the Sierpiński space.
    std::string str() const {
        static constexpr char digits[] = "0123456789abcdef";
        std::string s = std::to_string(n) + ":";
        for (auto r : rows) {
            s += digits[r >> 4];
            s += digits[r & 0xF];
        }
        return s;
    }

    static CanonicalCode parse(const std::string& text) {
        const auto colon = text.find(':');
        if (colon == std::string::npos)
            throw Error(Errc::parse_error, "canonical code '" + text + "' lacks ':'");
        CanonicalCode c;
        try {
            c.n = std::stoi(text.substr(0, colon));
        } catch (const std::exception&) {
            throw Error(Errc::parse_error, "canonical code '" + text + "' has a bad point count");
        }
        const std::string hex = text.substr(colon + 1);
        if (c.n < 0 || c.n > canonical_max_points || hex.size() != static_cast<std::size_t>(2 * c.n))
            throw Error(Errc::parse_error, "canonical code '" + text + "' has the wrong length");
        for (int i = 0; i < c.n; ++i) {
            unsigned v = 0;
            for (int k = 0; k < 2; ++k) {
                const char ch = hex[static_cast<std::size_t>(2 * i + k)];
                unsigned d = 0;
                if (ch >= '0' && ch <= '9')
                    d = static_cast<unsigned>(ch - '0');
                else if (ch >= 'a' && ch <= 'f')
                    d = static_cast<unsigned>(ch - 'a' + 10);
                else
                    throw Error(Errc::parse_error, "canonical code '" + text + "' has a non-hex digit");
                v = v * 16 + d;
            }
            c.rows.push_back(static_cast<std::uint8_t>(v));
        }
        return c;
    }

    /// Reconstructs the representative space; validates the table.
    FiniteSpace decode() const {
        std::vector<PointSet> t;
        for (auto r : rows)
            t.emplace_back(n, r);
        return FiniteSpace::from_min_nbhds(n, std::move(t));
    }
};

struct CanonicalCodeHash {
    std::size_t operator()(const CanonicalCode& c) const noexcept {
        std::uint64_t h = 1469598103934665603ULL ^ static_cast<std::uint64_t>(c.n);
        for (auto r : c.rows) {
            h ^= r;
            h *= 1099511628211ULL;
        }
        return static_cast<std::size_t>(h);
    }
};

/// Brute force over all n! relabelings.
inline CanonicalCode canonical_code(const FiniteSpace& x) {
    const int n = x.size();
    if (n > canonical_max_points)
        throw Error(Errc::size_guard_exceeded, "canonical_code on " + std::to_string(n) + " points exceeds guard of " +
                                                   std::to_string(canonical_max_points));
    std::array<int, canonical_max_points> perm{};
    std::iota(perm.begin(), perm.begin() + n, 0);
    std::array<std::uint8_t, canonical_max_points> best{};
    std::array<std::uint8_t, canonical_max_points> cur{};
    bool have = false;
    do {
        // New label i stands for old point perm[i]; inv maps old -> new.
        std::array<int, canonical_max_points> inv{};
        for (int i = 0; i < n; ++i)
            inv[perm[i]] = i;
        bool smaller = !have;
        bool decided = !have;
        for (int i = 0; i < n; ++i) {
            std::uint8_t row = 0;
            x.min_nbhd(perm[i]).for_each([&](int y) { row |= static_cast<std::uint8_t>(1U << inv[y]); });
            cur[i] = row;
            if (!decided && row != best[i]) {
                decided = true;
                smaller = row < best[i];
                if (!smaller)
                    break;
            }
        }
        if (smaller) {
            best = cur;
            have = true;
        }
    } while (std::next_permutation(perm.begin(), perm.begin() + n));
    return CanonicalCode{n, std::vector<std::uint8_t>(best.begin(), best.begin() + n)};
}

inline bool homeomorphic(const FiniteSpace& a, const FiniteSpace& b) {
    return a.size() == b.size() && canonical_code(a) == canonical_code(b);
}

} // namespace fintop
