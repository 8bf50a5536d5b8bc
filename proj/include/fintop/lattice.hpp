#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <type_traits>
#include <span>
#include <vector>

#include "space.hpp"

namespace fintop {

namespace detail {

inline void check_same_size(const FiniteSpace& a, const FiniteSpace& b) {
    if (a.size() != b.size())
        throw Error(Errc::size_mismatch,
                    "spaces have " + std::to_string(a.size()) + " and " + std::to_string(b.size()) + " points");
}

inline void check_family(std::span<const FiniteSpace> spaces) {
    if (spaces.empty())
        throw Error(Errc::empty_list, "meet/join of an empty list");
    for (const auto& s : spaces)
        check_same_size(spaces.front(), s);
}

} // namespace detail

/// μ extends τ when every τ-open set is μ-open; tested on the open families.
inline bool is_extension_by_opens(const FiniteSpace& tau, const FiniteSpace& mu) {
    detail::check_same_size(tau, mu);
    for (const auto& o : tau.opens())
        if (!mu.is_open(o))
            return false;
    return true;
}

/// Same relation via neighborhoods: N_mu(x) ⊆ N_tau(x) for all x.
inline bool is_extension_by_nbhds(const FiniteSpace& tau, const FiniteSpace& mu) {
    detail::check_same_size(tau, mu);
    for (int x = 0; x < tau.size(); ++x)
        if (!mu.min_nbhd(x).subset_of(tau.min_nbhd(x)))
            return false;
    return true;
}

inline bool is_extension(const FiniteSpace& tau, const FiniteSpace& mu) {
    const bool by_nbhds = is_extension_by_nbhds(tau, mu);
    assert(by_nbhds == is_extension_by_opens(tau, mu));
    return by_nbhds;
}

/// Intersection of the open families, rebuilt through the validating
/// opens-list constructor.
inline FiniteSpace meet(std::span<const FiniteSpace> spaces) {
    detail::check_family(spaces);
    std::vector<PointSet> common(spaces.front().opens().begin(), spaces.front().opens().end());
    for (const auto& s : spaces.subspan(1)) {
        std::vector<PointSet> next;
        const auto others = s.opens();
        std::set_intersection(common.begin(), common.end(), others.begin(), others.end(), std::back_inserter(next));
        common = std::move(next);
    }
    return FiniteSpace::from_opens(spaces.front().size(), std::move(common));
}

inline FiniteSpace meet(std::initializer_list<FiniteSpace> spaces) {
    return meet(std::span<const FiniteSpace>(spaces.begin(), spaces.size()));
}

/// Smallest topology containing every input: the union of the open families
/// is a subbasis; close under finite intersection, then under union.
inline FiniteSpace join(std::span<const FiniteSpace> spaces) {
    detail::check_family(spaces);
    const int n = spaces.front().size();
    std::vector<char> seen(std::size_t{1} << n, 0);
    std::vector<PointSet> basis;
    auto add = [&](PointSet s) {
        if (!seen[s.bits()]) {
            seen[s.bits()] = 1;
            basis.push_back(s);
        }
    };
    add(PointSet::all(n));
    for (const auto& s : spaces)
        for (const auto& o : s.opens())
            add(o);
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = 0; j < i; ++j)
            add(basis[i] & basis[j]);

    std::fill(seen.begin(), seen.end(), 0);
    std::vector<PointSet> opens;
    auto add_open = [&](PointSet s) {
        if (!seen[s.bits()]) {
            seen[s.bits()] = 1;
            opens.push_back(s);
        }
    };
    add_open(PointSet::none(n));
    for (const auto& b : basis) {
        const std::size_t current = opens.size();
        for (std::size_t i = 0; i < current; ++i)
            add_open(opens[i] | b);
    }
    return FiniteSpace::from_opens(n, std::move(opens));
}

inline FiniteSpace join(std::initializer_list<FiniteSpace> spaces) {
    return join(std::span<const FiniteSpace>(spaces.begin(), spaces.size()));
}

struct EnumerationGuard {
    int max_points = 5;
};

/// Σ(X, τ): every topology μ ⊇ τ, emitted once each in lexicographic order of
/// min-nbhd tables.
///
/// Backtracks over tables N' with x ∈ N'(x) ⊆ N_τ(x), keeping the
/// transitivity condition (y ∈ N'(x) ⇒ N'(y) ⊆ N'(x)) on every assigned pair.
class ExtensionEnumeration {
public:
    explicit ExtensionEnumeration(FiniteSpace base, EnumerationGuard guard = {}) : base_(std::move(base)) {
        if (base_.size() > guard.max_points)
            throw Error(Errc::size_guard_exceeded, "exhaustive extension enumeration on " +
                                                       std::to_string(base_.size()) + " points exceeds guard of " +
                                                       std::to_string(guard.max_points));
    }

    const FiniteSpace& base() const { return base_; }
    std::uint64_t count() const { return count_; }

    /// Streams every extension to `sink`; `sink` may return false to stop early.
    template <class Sink>
    void run(Sink&& sink) {
        const int n = base_.size();
        count_ = 0;
        if (n == 0) {
            ++count_;
            sink(base_);
            return;
        }
        std::vector<PointSet> table(static_cast<std::size_t>(n));
        bool stop = false;
        std::function<void(int)> place = [&](int x) {
            if (x == n) {
                ++count_;
                if (!emit(sink, FiniteSpace::from_min_nbhds(n, table)))
                    stop = true;
                return;
            }
            const PointSet point = PointSet::single(n, x);
            const PointSet rest = base_.min_nbhd(x).without(x);
            for_each_subset(rest, [&](PointSet extra) {
                if (stop)
                    return;
                const PointSet cand = extra | point;
                for (int y = 0; y < x; ++y) {
                    if (cand.contains(y) && !table[y].subset_of(cand))
                        return;
                    if (table[y].contains(x) && !cand.subset_of(table[y]))
                        return;
                }
                table[x] = cand;
                place(x + 1);
            });
        };
        place(0);
    }

    std::vector<FiniteSpace> collect() {
        std::vector<FiniteSpace> out;
        run([&](const FiniteSpace& s) { out.push_back(s); });
        return out;
    }

private:
    template <class Sink>
    static bool emit(Sink& sink, const FiniteSpace& s) {
        if constexpr (std::is_same_v<std::invoke_result_t<Sink&, const FiniteSpace&>, bool>)
            return sink(s);
        else {
            sink(s);
            return true;
        }
    }

    FiniteSpace base_;
    std::uint64_t count_ = 0;
};

inline ExtensionEnumeration enumerate_extensions(const FiniteSpace& tau, EnumerationGuard guard = {}) {
    return ExtensionEnumeration(tau, guard);
}

} // namespace fintop
