#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bing_hanner.hpp"
#include "canonical.hpp"
#include "dimension.hpp"
#include "lattice.hpp"
#include "parallel.hpp"
#include "separation.hpp"

namespace fintop {

/// Primitive membership tests a class predicate is built from.
enum class Atom : std::uint16_t {
    t0 = 1U << 0,
    t1 = 1U << 1,
    regular = 1U << 2,
    normal = 1U << 3,
    hereditarily_normal = 1U << 4,
    collectionwise_normal = 1U << 5,
    hereditarily_collectionwise_normal = 1U << 6,
    ind0 = 1U << 7,
    Ind0 = 1U << 8,
    dim0 = 1U << 9,
};

inline constexpr std::array<std::pair<Atom, std::string_view>, 10> atom_names{{
    {Atom::t0, "t0"},
    {Atom::t1, "t1"},
    {Atom::regular, "regular"},
    {Atom::normal, "normal"},
    {Atom::hereditarily_normal, "hn"},
    {Atom::collectionwise_normal, "cwn"},
    {Atom::hereditarily_collectionwise_normal, "hcn"},
    {Atom::ind0, "ind0"},
    {Atom::Ind0, "Ind0"},
    {Atom::dim0, "dim0"},
}};

constexpr std::uint16_t atom_bit(Atom a) { return static_cast<std::uint16_t>(a); }

inline bool eval_atom(const FiniteSpace& x, Atom a) {
    switch (a) {
    case Atom::t0: return is_t0(x);
    case Atom::t1: return is_t1(x);
    case Atom::regular: return is_regular(x);
    case Atom::normal: return is_normal(x);
    case Atom::hereditarily_normal: return is_hereditarily_normal(x);
    case Atom::collectionwise_normal: return is_collectionwise_normal(x);
    case Atom::hereditarily_collectionwise_normal:
        return is_hereditarily_normal(x) && is_hereditarily_collectionwise_normal(x);
    case Atom::ind0: return ind_boundary(x) <= DimValue::finite(0);
    case Atom::Ind0: return large_ind(x) <= DimValue::finite(0);
    case Atom::dim0: return cov_dim(x) <= DimValue::finite(0);
    }
    return false;
}

namespace detail {

struct AtomState {
    std::uint16_t known = 0;
    std::uint16_t value = 0;
};

inline Memo<CanonicalCode, AtomState, CanonicalCodeHash>& atom_memo() {
    static Memo<CanonicalCode, AtomState, CanonicalCodeHash> memo;
    return memo;
}

} // namespace detail

/// A class of spaces given as a conjunction of atoms. Atoms are evaluated
/// lazily and cached per canonical code.
struct ClassPredicate {
    std::string name;
    std::uint16_t atoms = 0;

    bool operator()(const FiniteSpace& x) const {
        if (x.size() > canonical_max_points) {
            for (const auto& [a, _] : atom_names)
                if ((atoms & atom_bit(a)) && !eval_atom(x, a))
                    return false;
            return true;
        }
        const CanonicalCode code = canonical_code(x);
        detail::AtomState st = detail::atom_memo().find(code).value_or(detail::AtomState{});
        if ((st.known & atoms) == atoms)
            return (st.value & atoms) == atoms;
        const FiniteSpace rep = code.decode();
        std::uint16_t add_known = 0;
        std::uint16_t add_value = 0;
        bool result = true;
        for (const auto& [a, _] : atom_names) {
            const std::uint16_t bit = atom_bit(a);
            if (!(atoms & bit))
                continue;
            bool v = false;
            if (st.known & bit) {
                v = (st.value & bit) != 0;
            } else {
                v = eval_atom(rep, a);
                add_known |= bit;
                add_value |= v ? bit : 0;
            }
            if (!v) {
                result = false;
                break;
            }
        }
        detail::atom_memo().update(code, [&](detail::AtomState& s) {
            s.known |= add_known;
            s.value |= add_value;
        });
        return result;
    }

    /// Class inclusion decided from atoms: more atoms, smaller class.
    bool subclass_of(const ClassPredicate& other) const { return (atoms & other.atoms) == other.atoms; }

    friend bool operator==(const ClassPredicate& a, const ClassPredicate& b) { return a.atoms == b.atoms; }
};

/// Named predicates exposed on the command line.
inline const std::vector<ClassPredicate>& named_classes() {
    static const std::vector<ClassPredicate> classes = [] {
        const auto hn = atom_bit(Atom::hereditarily_normal);
        const auto hcn = static_cast<std::uint16_t>(hn | atom_bit(Atom::hereditarily_collectionwise_normal));
        return std::vector<ClassPredicate>{
            {"ind0", atom_bit(Atom::ind0)},
            {"Ind0", atom_bit(Atom::Ind0)},
            {"dim0", atom_bit(Atom::dim0)},
            {"hn", hn},
            {"hn-ind0", static_cast<std::uint16_t>(hn | atom_bit(Atom::ind0))},
            {"hn-Ind0", static_cast<std::uint16_t>(hn | atom_bit(Atom::Ind0))},
            {"hn-dim0", static_cast<std::uint16_t>(hn | atom_bit(Atom::dim0))},
            {"hcn-ind0", static_cast<std::uint16_t>(hcn | atom_bit(Atom::ind0))},
            {"hcn-Ind0", static_cast<std::uint16_t>(hcn | atom_bit(Atom::Ind0))},
            {"hcn-dim0", static_cast<std::uint16_t>(hcn | atom_bit(Atom::dim0))},
        };
    }();
    return classes;
}

/// Resolves a named class, or a '+'-joined list of atom names ("hn+dim0").
inline ClassPredicate class_by_name(std::string_view name) {
    for (const auto& c : named_classes())
        if (c.name == name)
            return c;
    std::uint16_t atoms = 0;
    std::size_t start = 0;
    while (start <= name.size()) {
        const std::size_t plus = std::min(name.find('+', start), name.size());
        const std::string_view part = name.substr(start, plus - start);
        bool matched = false;
        for (const auto& [a, an] : atom_names)
            if (an == part) {
                atoms |= atom_bit(a);
                matched = true;
            }
        if (!matched)
            throw Error(Errc::parse_error, "unknown class '" + std::string(name) + "'");
        start = plus + 1;
    }
    return ClassPredicate{std::string(name), atoms};
}

/// Extensions μ ⊇ τ of the class, in enumeration order.
inline std::vector<FiniteSpace> a_extensions(const FiniteSpace& tau, const ClassPredicate& pred,
                                             EnumerationGuard guard = {}) {
    std::vector<FiniteSpace> out;
    enumerate_extensions(tau, guard).run([&](const FiniteSpace& mu) {
        if (pred(mu))
            out.push_back(mu);
    });
    return out;
}

/// Structural number: a finite minimum with its witness family, or ∞.
struct SnValue {
    enum class Kind { finite, infinite };

    Kind kind = Kind::infinite;
    int k = 0;
    std::vector<FiniteSpace> witness;
    /// For Bing–Hanner searches: the sets M_i with witness[i] = τ(M_i).
    std::vector<PointSet> witness_sets;
    /// For ∞: a non-open set of τ that no candidate omits. Empty when there
    /// are no candidates and τ is discrete.
    std::optional<PointSet> certificate;

    static SnValue finite(std::vector<FiniteSpace> w, std::vector<PointSet> sets = {}) {
        SnValue v;
        v.kind = Kind::finite;
        v.k = static_cast<int>(w.size());
        v.witness = std::move(w);
        v.witness_sets = std::move(sets);
        return v;
    }
    static SnValue infinite(std::optional<PointSet> cert) {
        SnValue v;
        v.certificate = cert;
        return v;
    }

    bool is_finite() const { return kind == Kind::finite; }
    std::string str() const { return is_finite() ? std::to_string(k) : "inf"; }

    /// Finite(j) ≤ Finite(k) iff j ≤ k; everything is ≤ ∞.
    friend bool operator<=(const SnValue& a, const SnValue& b) {
        if (!b.is_finite())
            return true;
        return a.is_finite() && a.k <= b.k;
    }
    friend bool same_value(const SnValue& a, const SnValue& b) { return a.kind == b.kind && a.k == b.k; }
};

namespace detail {

/// Fixed-length bit vector for hit-set fingerprints.
class Bits {
public:
    Bits() = default;
    explicit Bits(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

    void set(std::size_t i) { w_[i / 64] |= std::uint64_t{1} << (i % 64); }
    bool test(std::size_t i) const { return (w_[i / 64] >> (i % 64)) & 1U; }
    Bits& operator|=(const Bits& o) {
        for (std::size_t i = 0; i < w_.size(); ++i)
            w_[i] |= o.w_[i];
        return *this;
    }
    bool subset_of(const Bits& o) const {
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & ~o.w_[i])
                return false;
        return true;
    }
    bool all() const {
        for (std::size_t i = 0; i < n_; ++i)
            if (!test(i))
                return false;
        return true;
    }
    friend bool operator==(const Bits&, const Bits&) = default;

private:
    std::size_t n_ = 0;
    std::vector<std::uint64_t> w_;
};

struct HitSetSolution {
    std::optional<std::vector<std::size_t>> chosen; // candidate indices, ascending
    std::optional<PointSet> empty_hit;              // set S that no candidate omits
    bool certified_infinite = false;
};

/// meet(F) = τ iff every S ∉ τ is omitted by some member of F, so the smallest
/// family is a minimum hitting set over the sets hit(S) = {μ : S ∉ μ}.
/// Candidates with equal fingerprints are merged (first kept) and dominated
/// fingerprints dropped; iterative deepening returns a minimum, tie-broken by
/// the search order, which only depends on candidate order.
inline HitSetSolution min_hitting_family(const FiniteSpace& tau, const std::vector<FiniteSpace>& cands, int max_k) {
    const int n = tau.size();
    std::vector<PointSet> constraints;
    for_each_subset(tau.ground(), [&](PointSet s) {
        if (!tau.is_open(s))
            constraints.push_back(s);
    });
    HitSetSolution out;
    if (cands.empty()) {
        out.certified_infinite = true;
        if (!constraints.empty())
            out.empty_hit = constraints.front();
        return out;
    }
    const std::size_t nc = constraints.size();
    if (nc == 0) {
        out.chosen = std::vector<std::size_t>{0};
        return out;
    }
    std::vector<Bits> fp(cands.size(), Bits(nc));
    Bits any(nc);
    for (std::size_t i = 0; i < cands.size(); ++i) {
        for (std::size_t c = 0; c < nc; ++c)
            if (!cands[i].is_open(constraints[c]))
                fp[i].set(c);
        any |= fp[i];
    }
    for (std::size_t c = 0; c < nc; ++c)
        if (!any.test(c)) {
            out.certified_infinite = true;
            out.empty_hit = constraints[c];
            return out;
        }

    std::vector<std::size_t> reps;
    for (std::size_t i = 0; i < cands.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < cands.size() && !redundant; ++j) {
            if (i == j || !fp[i].subset_of(fp[j]))
                continue;
            // Strictly dominated, or an equal fingerprint seen earlier.
            redundant = !(fp[j] == fp[i]) || j < i;
        }
        if (!redundant)
            reps.push_back(i);
    }

    std::vector<std::vector<std::size_t>> hitters(nc);
    for (std::size_t c = 0; c < nc; ++c)
        for (std::size_t r : reps)
            if (fp[r].test(c))
                hitters[c].push_back(r);

    (void)n;
    std::vector<std::size_t> stack;
    std::vector<int> hit_count(nc, 0);
    auto dfs = [&](auto& self, int budget) -> bool {
        std::size_t pick = nc;
        std::size_t fewest = SIZE_MAX;
        for (std::size_t c = 0; c < nc; ++c)
            if (hit_count[c] == 0 && hitters[c].size() < fewest) {
                fewest = hitters[c].size();
                pick = c;
            }
        if (pick == nc)
            return true;
        if (budget == 0)
            return false;
        for (std::size_t r : hitters[pick]) {
            stack.push_back(r);
            for (std::size_t c = 0; c < nc; ++c)
                hit_count[c] += fp[r].test(c) ? 1 : 0;
            const bool ok = self(self, budget - 1);
            for (std::size_t c = 0; c < nc; ++c)
                hit_count[c] -= fp[r].test(c) ? 1 : 0;
            if (ok)
                return true;
            stack.pop_back();
        }
        return false;
    };
    for (int k = 1; k <= max_k; ++k) {
        if (dfs(dfs, k)) {
            std::sort(stack.begin(), stack.end());
            out.chosen = stack;
            return out;
        }
    }
    return out;
}

inline SnValue to_sn(const FiniteSpace& tau, const std::vector<FiniteSpace>& cands, const std::vector<PointSet>* sets,
                     int max_k, std::string_view what) {
    const auto sol = min_hitting_family(tau, cands, max_k);
    if (sol.certified_infinite)
        return SnValue::infinite(sol.empty_hit);
    if (!sol.chosen)
        throw Error(Errc::bound_exhausted,
                    std::string(what) + ": no family of size <= " + std::to_string(max_k) + " meets to the base");
    std::vector<FiniteSpace> w;
    std::vector<PointSet> ms;
    for (std::size_t i : *sol.chosen) {
        w.push_back(cands[i]);
        if (sets)
            ms.push_back((*sets)[i]);
    }
    return SnValue::finite(std::move(w), std::move(ms));
}

} // namespace detail

/// Sn of τ w.r.t. the class. `max_k` <= 0 means "number of candidates",
/// which makes the search complete; a smaller bound can end in
/// BoundExhausted, which is never reported as ∞.
inline SnValue sn(const FiniteSpace& tau, const ClassPredicate& pred, int max_k = 0, EnumerationGuard guard = {}) {
    const auto cands = a_extensions(tau, pred, guard);
    const int bound = max_k > 0 ? max_k : std::max<int>(1, static_cast<int>(cands.size()));
    return detail::to_sn(tau, cands, nullptr, bound, "sn");
}

/// Literal search over families of A-extensions by increasing size. Only
/// ever returns Finite or throws BoundExhausted.
inline SnValue sn_naive(const FiniteSpace& tau, const ClassPredicate& pred, int max_k, int max_points = 3,
                        std::size_t max_candidates = 64) {
    if (tau.size() > max_points)
        throw Error(Errc::size_guard_exceeded, "sn_naive on " + std::to_string(tau.size()) +
                                                   " points exceeds guard of " + std::to_string(max_points));
    const auto cands = a_extensions(tau, pred, EnumerationGuard{max_points});
    if (cands.size() > max_candidates)
        throw Error(Errc::size_guard_exceeded, "sn_naive: " + std::to_string(cands.size()) + " candidates");
    const int m = static_cast<int>(cands.size());
    for (int k = 1; k <= std::min(max_k, m); ++k) {
        std::vector<int> idx(static_cast<std::size_t>(k));
        for (int i = 0; i < k; ++i)
            idx[i] = i;
        while (true) {
            std::vector<FiniteSpace> fam;
            for (int i : idx)
                fam.push_back(cands[i]);
            if (meet(fam) == tau)
                return SnValue::finite(std::move(fam));
            int pos = k - 1;
            while (pos >= 0 && idx[pos] == m - k + pos)
                --pos;
            if (pos < 0)
                break;
            ++idx[pos];
            for (int i = pos + 1; i < k; ++i)
                idx[i] = idx[i - 1] + 1;
        }
    }
    throw Error(Errc::bound_exhausted, "sn_naive: no family of size <= " + std::to_string(max_k) + " meets to the base");
}

/// Sn restricted to Bing–Hanner families {τ(M_i)}. Candidates are the
/// distinct τ(M) in the class, first seen with M in ascending order. When τ has no
/// isolated points the cover condition ∪M_i = X is part of the constraint set
/// (S = {x} is non-open and omitted by τ(M) exactly when x ∈ M).
inline SnValue sn_bh(const FiniteSpace& tau, const ClassPredicate& pred, int max_k = 0, int max_points = 10) {
    const int n = tau.size();
    if (n > max_points)
        throw Error(Errc::size_guard_exceeded, "sn_bh on " + std::to_string(n) + " points exceeds guard of " +
                                                   std::to_string(max_points));
    std::vector<FiniteSpace> cands;
    std::vector<PointSet> sets;
    for_each_subset(tau.ground(), [&](PointSet m) {
        FiniteSpace mu = bing_hanner(tau, m);
        // Equal extensions keep the union of their sets: the largest M giving them.
        if (auto it = std::find(cands.begin(), cands.end(), mu); it != cands.end()) {
            sets[static_cast<std::size_t>(it - cands.begin())] |= m;
            return;
        }
        if (pred(mu)) {
            cands.push_back(std::move(mu));
            sets.push_back(m);
        }
    });
    const int bound = max_k > 0 ? max_k : std::max<int>(1, static_cast<int>(cands.size()));
    SnValue v = detail::to_sn(tau, cands, &sets, bound, "sn_bh");
    if (v.is_finite() && isolated_points(tau).empty()) {
        PointSet u = PointSet::none(n);
        for (auto m : v.witness_sets)
            u |= m;
        assert(u == tau.ground());
    }
    return v;
}

struct Decomposition {
    int k = 0;
    std::vector<PointSet> pieces;
};

/// Least number of (possibly overlapping) pieces covering X whose subspaces
/// have dimension ≤ 0. Only inclusion-maximal qualifying pieces are tried.
inline Decomposition decompose_zero_dim(const FiniteSpace& x, DimKind kind) {
    const int n = x.size();
    if (n == 0)
        throw Error(Errc::empty_carrier, "decompose_zero_dim of the empty space");
    std::vector<PointSet> ok;
    for_each_subset(x.ground(), [&](PointSet s) {
        if (!s.empty() && dimension(subspace(x, s).space, kind) <= DimValue::finite(0))
            ok.push_back(s);
    });
    std::vector<PointSet> maximal;
    for (const auto& s : ok) {
        bool dominated = false;
        for (const auto& t : ok)
            dominated = dominated || (s != t && s.subset_of(t));
        if (!dominated)
            maximal.push_back(s);
    }
    std::vector<PointSet> chosen;
    auto dfs = [&](auto& self, PointSet covered, int budget) -> bool {
        if (covered == x.ground())
            return true;
        if (budget == 0)
            return false;
        const int p = covered.complement().first();
        for (const auto& s : maximal) {
            if (!s.contains(p))
                continue;
            chosen.push_back(s);
            if (self(self, covered | s, budget - 1))
                return true;
            chosen.pop_back();
        }
        return false;
    };
    for (int k = 1; k <= n; ++k)
        if (dfs(dfs, PointSet::none(n), k))
            return Decomposition{k, chosen};
    // Singletons always qualify.
    assert(false);
    return {};
}

} // namespace fintop
