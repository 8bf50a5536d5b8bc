#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "bing_hanner.hpp"
#include "catalog.hpp"
#include "dimension.hpp"
#include "lattice.hpp"
#include "parallel.hpp"
#include "separation.hpp"
#include "space_io.hpp"
#include "structural.hpp"

namespace fintop {

/// Auxiliary inputs for one check: subsets (M's, covers, closed pairs, or a
/// min-nbhd table), an optional point, and optional class names.
struct CheckInputs {
    std::vector<PointSet> sets;
    int point = -1;
    std::vector<std::string> names;

    json to_json() const {
        json j = json::object();
        json s = json::array();
        for (auto p : sets)
            s.push_back(set_to_json(p));
        j["sets"] = s;
        if (point >= 0)
            j["point"] = point;
        if (!names.empty())
            j["names"] = names;
        return j;
    }

    static CheckInputs from_json(const json& j, int n) {
        CheckInputs in;
        try {
            for (const auto& s : j.at("sets"))
                in.sets.push_back(set_from_json(s, n));
            if (j.contains("point"))
                in.point = j["point"].get<int>();
            if (j.contains("names"))
                in.names = j["names"].get<std::vector<std::string>>();
        } catch (const json::exception& e) {
            throw Error(Errc::parse_error, std::string("check inputs: ") + e.what());
        }
        return in;
    }
};

struct CheckOutcome {
    bool hypothesis = false;
    bool holds = true;
    std::string expected;
    std::string observed;
};

struct Violation {
    std::string code;
    json inputs;
    std::string expected;
    std::string observed;

    friend bool operator==(const Violation&, const Violation&) = default;
};

enum class SuiteStatus { pass, findings, error };

inline std::string_view status_name(SuiteStatus s) {
    switch (s) {
    case SuiteStatus::pass: return "PASS";
    case SuiteStatus::findings: return "FINDINGS";
    case SuiteStatus::error: return "ERROR";
    }
    return "?";
}

inline SuiteStatus status_from_name(const std::string& s) {
    if (s == "PASS")
        return SuiteStatus::pass;
    if (s == "FINDINGS")
        return SuiteStatus::findings;
    if (s == "ERROR")
        return SuiteStatus::error;
    throw Error(Errc::parse_error, "unknown status '" + s + "'");
}

/// Outcome of one suite at one point count. PASS iff no violations; a hard
/// suite with violations (or an aborted run) is ERROR; an exploratory suite
/// with violations is FINDINGS.
struct VerificationReport {
    std::string suite;
    int n = 0;
    bool exploratory = false;
    std::uint64_t classes = 0;
    std::uint64_t instances_checked = 0;
    std::uint64_t hypothesis_satisfied = 0;
    std::vector<Violation> violations;
    SuiteStatus status = SuiteStatus::pass;
    std::uint64_t seed = 0;
    bool sampled = false;
    std::string error_message;

    json to_json() const {
        json v = json::array();
        for (const auto& x : violations)
            v.push_back(json{{"code", x.code}, {"inputs", x.inputs}, {"expected", x.expected}, {"observed", x.observed}});
        json j{{"suite", suite},
               {"n", n},
               {"exploratory", exploratory},
               {"classes", classes},
               {"instances_checked", instances_checked},
               {"hypothesis_satisfied", hypothesis_satisfied},
               {"violations", v},
               {"status", status_name(status)},
               {"seed", seed},
               {"sampled", sampled}};
        if (!error_message.empty())
            j["error"] = error_message;
        return j;
    }

    static VerificationReport from_json(const json& j) {
        VerificationReport r;
        try {
            r.suite = j.at("suite").get<std::string>();
            r.n = j.at("n").get<int>();
            r.exploratory = j.at("exploratory").get<bool>();
            r.classes = j.at("classes").get<std::uint64_t>();
            r.instances_checked = j.at("instances_checked").get<std::uint64_t>();
            r.hypothesis_satisfied = j.at("hypothesis_satisfied").get<std::uint64_t>();
            for (const auto& v : j.at("violations"))
                r.violations.push_back(Violation{v.at("code").get<std::string>(), v.at("inputs"),
                                                 v.at("expected").get<std::string>(),
                                                 v.at("observed").get<std::string>()});
            r.status = status_from_name(j.at("status").get<std::string>());
            r.seed = j.at("seed").get<std::uint64_t>();
            r.sampled = j.at("sampled").get<bool>();
            if (j.contains("error"))
                r.error_message = j["error"].get<std::string>();
        } catch (const json::exception& e) {
            throw Error(Errc::parse_error, std::string("report: ") + e.what());
        }
        return r;
    }

    friend bool operator==(const VerificationReport& a, const VerificationReport& b) {
        return a.to_json() == b.to_json();
    }
};

struct SuiteOptions {
    std::uint64_t seed = 0x5eed;
    /// Auxiliary inputs are enumerated exhaustively up to this point count and
    /// sampled above it.
    int exhaustive_max_n = 4;
    /// Inputs drawn per class when sampling.
    std::size_t samples_per_class = 64;
    unsigned threads = default_threads();
    /// Cap on logged violations per report (the counts stay exact).
    std::size_t max_logged = 1000;
};

/// Counter-based generator keyed by (seed, class code): the stream for a
/// class does not depend on which worker handles it.
class KeyedStream {
public:
    KeyedStream(std::uint64_t seed, const CanonicalCode& code)
        : key_(mix(seed ^ (static_cast<std::uint64_t>(CanonicalCodeHash{}(code)) * 0x9E3779B97F4A7C15ULL))) {}

    std::uint64_t next() { return mix(key_ + 0x9E3779B97F4A7C15ULL * ++counter_); }

    std::size_t below(std::size_t bound) { return static_cast<std::size_t>(next() % bound); }

private:
    static std::uint64_t mix(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }
    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

struct SuiteDef {
    std::string name;
    bool exploratory = false;
    /// Where the checked statement comes from, in words.
    std::string about;
    std::function<std::vector<CheckInputs>(const FiniteSpace&)> inputs;
    std::function<CheckOutcome(const FiniteSpace&, const CheckInputs&)> check;
};

namespace detail {

inline std::vector<PointSet> all_subsets(const FiniteSpace& x) {
    std::vector<PointSet> out;
    for_each_subset(x.ground(), [&](PointSet s) { out.push_back(s); });
    return out;
}

/// Families of 1..max_size distinct subsets, in lexicographic index order.
inline std::vector<CheckInputs> subset_families(const FiniteSpace& x, int max_size) {
    const auto subs = all_subsets(x);
    std::vector<CheckInputs> out;
    std::vector<PointSet> cur;
    auto rec = [&](auto& self, std::size_t from) -> void {
        if (!cur.empty())
            out.push_back(CheckInputs{cur, -1, {}});
        if (static_cast<int>(cur.size()) == max_size)
            return;
        for (std::size_t i = from; i < subs.size(); ++i) {
            cur.push_back(subs[i]);
            self(self, i + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

inline std::vector<CheckInputs> each_subset(const FiniteSpace& x) {
    std::vector<CheckInputs> out;
    for (auto s : all_subsets(x))
        out.push_back(CheckInputs{{s}, -1, {}});
    return out;
}

inline std::vector<CheckInputs> single_instance(const FiniteSpace&) { return {CheckInputs{}}; }

inline PointSet union_of(const FiniteSpace& x, const std::vector<PointSet>& sets) {
    PointSet u = PointSet::none(x.size());
    for (auto s : sets)
        u |= s;
    return u;
}

inline FiniteSpace meet_of_bh(const FiniteSpace& x, const std::vector<PointSet>& ms) {
    std::vector<FiniteSpace> spaces;
    for (auto m : ms)
        spaces.push_back(bing_hanner(x, m));
    return meet(spaces);
}

inline std::string sets_str(const std::vector<PointSet>& sets) {
    std::string s = "[";
    for (std::size_t i = 0; i < sets.size(); ++i)
        s += (i ? "," : "") + sets[i].str();
    return s + "]";
}

inline std::string opens_str(const FiniteSpace& x) {
    return sets_str(std::vector<PointSet>(x.opens().begin(), x.opens().end()));
}

inline std::string yes_no(bool b) { return b ? "true" : "false"; }

inline DimValue dim_of_subset(const FiniteSpace& x, PointSet m, DimKind kind) {
    return m.empty() ? DimValue::neg_one() : dimension(subspace(x, m).space, kind);
}

/// Inputs (M, A, B) for the partition-avoidance check: M with dim-0 subspace,
/// A and B disjoint closed.
inline std::vector<CheckInputs> m_and_closed_pairs(const FiniteSpace& x) {
    std::vector<CheckInputs> out;
    const auto closed = x.closed_sets();
    for (auto m : all_subsets(x)) {
        if (m.empty())
            continue;
        for (std::size_t i = 0; i < closed.size(); ++i)
            for (std::size_t j = i; j < closed.size(); ++j)
                if (!closed[i].intersects(closed[j]))
                    out.push_back(CheckInputs{{m, closed[i], closed[j]}, -1, {}});
    }
    return out;
}

/// Inputs (M, A) and a point x ∈ M \ A, A closed.
inline std::vector<CheckInputs> m_point_closed(const FiniteSpace& x) {
    std::vector<CheckInputs> out;
    const auto closed = x.closed_sets();
    for (auto m : all_subsets(x))
        for (auto a : closed)
            m.for_each([&](int p) {
                if (!a.contains(p))
                    out.push_back(CheckInputs{{m, a}, p, {}});
            });
    return out;
}

/// Irredundant covers of X by nonempty pieces with Dim-0 subspaces.
inline std::vector<PointSet> zero_dim_pieces(const FiniteSpace& x, DimKind kind) {
    std::vector<PointSet> out;
    for (auto s : all_subsets(x))
        if (!s.empty() && dim_of_subset(x, s, kind) == DimValue::finite(0))
            out.push_back(s);
    return out;
}

inline std::vector<std::vector<PointSet>> irredundant_covers(const FiniteSpace& x, const std::vector<PointSet>& pieces,
                                                             int max_size) {
    std::vector<std::vector<PointSet>> out;
    std::vector<PointSet> cur;
    auto irredundant = [&] {
        for (std::size_t i = 0; i < cur.size(); ++i) {
            PointSet u = PointSet::none(x.size());
            for (std::size_t j = 0; j < cur.size(); ++j)
                if (j != i)
                    u |= cur[j];
            if (u == x.ground())
                return false;
        }
        return true;
    };
    auto rec = [&](auto& self, std::size_t from, PointSet covered) -> void {
        if (covered == x.ground()) {
            if (irredundant())
                out.push_back(cur);
            return;
        }
        if (static_cast<int>(cur.size()) == max_size)
            return;
        for (std::size_t i = from; i < pieces.size(); ++i) {
            cur.push_back(pieces[i]);
            self(self, i + 1, covered | pieces[i]);
            cur.pop_back();
        }
    };
    rec(rec, 0, PointSet::none(x.size()));
    return out;
}

inline DimKind dim_kind_for_class(const std::string& cls) {
    if (cls.ends_with("Ind0"))
        return DimKind::Ind;
    if (cls.ends_with("ind0"))
        return DimKind::ind;
    return DimKind::dim;
}

inline std::vector<SuiteDef> build_suites() {
    std::vector<SuiteDef> s;

    // --- hard ---------------------------------------------------------------

    s.push_back({"prop-intersection-1", false, "X = ∪ M_i implies τ = ∩ τ(M_i)",
                 [](const FiniteSpace& x) { return subset_families(x, 3); },
                 [](const FiniteSpace& x, const CheckInputs& in) {
                     CheckOutcome o;
                     o.hypothesis = union_of(x, in.sets) == x.ground();
                     if (!o.hypothesis)
                         return o;
                     const FiniteSpace m = meet_of_bh(x, in.sets);
                     o.holds = m == x;
                     o.expected = opens_str(x);
                     o.observed = opens_str(m);
                     return o;
                 }});

    s.push_back({"prop-intersection-2", false, "no isolated points and τ = ∩ τ(M_i) imply X = ∪ M_i",
                 [](const FiniteSpace& x) { return subset_families(x, 3); },
                 [](const FiniteSpace& x, const CheckInputs& in) {
                     CheckOutcome o;
                     o.hypothesis = isolated_points(x).empty() && meet_of_bh(x, in.sets) == x;
                     if (!o.hypothesis)
                         return o;
                     const PointSet u = union_of(x, in.sets);
                     o.holds = u == x.ground();
                     o.expected = x.ground().str();
                     o.observed = u.str();
                     return o;
                 }});

    s.push_back({"bh-basics", false,
                 "τ ⊆ τ(M); points outside M open; M closed; subspace M of τ(M) agrees with τ",
                 each_subset, [](const FiniteSpace& x, const CheckInputs& in) {
                     CheckOutcome o;
                     o.hypothesis = true;
                     const PointSet m = in.sets.at(0);
                     const FiniteSpace b = bing_hanner(x, m);
                     bool outside_open = true;
                     m.complement().for_each(
                         [&](int p) { outside_open = outside_open && b.is_open(PointSet::single(x.size(), p)); });
                     const bool ext = is_extension(x, b);
                     const bool closed = b.is_closed(m);
                     const bool sub = m.empty() || subspace(b, m).space == subspace(x, m).space;
                     o.holds = ext && outside_open && closed && sub;
                     o.expected = "extension=true outside_open=true closed=true subspace=true";
                     o.observed = "extension=" + yes_no(ext) + " outside_open=" + yes_no(outside_open) +
                                  " closed=" + yes_no(closed) + " subspace=" + yes_no(sub);
                     return o;
                 }});

    s.push_back({"bh-preserve-t", false, "T0, T1, T2 pass from τ to τ(M)", each_subset,
                 [](const FiniteSpace& x, const CheckInputs& in) {
                     CheckOutcome o;
                     const SeparationProfile before{is_t0(x), is_t1(x), is_t2(x)};
                     o.hypothesis = before.t0 || before.t1 || before.t2;
                     if (!o.hypothesis)
                         return o;
                     const FiniteSpace b = bing_hanner(x, in.sets.at(0));
                     const bool t0 = !before.t0 || is_t0(b);
                     const bool t1 = !before.t1 || is_t1(b);
                     const bool t2 = !before.t2 || is_t2(b);
                     o.holds = t0 && t1 && t2;
                     o.expected = "t0=" + yes_no(before.t0) + " t1=" + yes_no(before.t1) + " t2=" + yes_no(before.t2);
                     o.observed = "t0=" + yes_no(is_t0(b)) + " t1=" + yes_no(is_t1(b)) + " t2=" + yes_no(is_t2(b));
                     return o;
                 }});

    s.push_back({"bh-preserve-hn", false, "hereditary (collectionwise) normality passes from τ to τ(M)", each_subset,
                 [](const FiniteSpace& x, const CheckInputs& in) {
                     CheckOutcome o;
                     const ClassPredicate hn = class_by_name("hn");
                     const ClassPredicate hcn = class_by_name("hn+hcn");
                     const bool hn_x = hn(x);
                     const bool hcn_x = hcn(x);
                     o.hypothesis = hn_x || hcn_x;
                     if (!o.hypothesis)
                         return o;
                     const FiniteSpace b = bing_hanner(x, in.sets.at(0));
                     const bool hn_b = hn(b);
                     const bool hcn_b = hcn(b);
                     o.holds = (!hn_x || hn_b) && (!hcn_x || hcn_b);
                     o.expected = "hn=" + yes_no(hn_x) + " hcn=" + yes_no(hcn_x);
                     o.observed = "hn=" + yes_no(hn_b) + " hcn=" + yes_no(hcn_b);
                     return o;
                 }});

    s.push_back({"partition-avoid-Ind0", false,
                 "hereditarily normal X, Ind M = 0, A and B disjoint closed: some partition misses M",
                 m_and_closed_pairs, [](const FiniteSpace& x, const CheckInputs& in) {
                     CheckOutcome o;
                     const PointSet m = in.sets.at(0);
                     o.hypothesis = class_by_name("hn")(x) && dim_of_subset(x, m, DimKind::Ind) == DimValue::finite(0);
                     if (!o.hypothesis)
                         return o;
                     const auto p = find_partition(x, in.sets.at(1), in.sets.at(2), m);
                     o.holds = p.has_value();
                     o.expected = "partition avoiding " + m.str();
                     o.observed = p ? "L=" + p->l.str() : "none";
                     return o;
                 }});

    auto partition_ind = [](bool need_regular) {
        return [need_regular](const FiniteSpace& x, const CheckInputs& in) {
            CheckOutcome o;
            const PointSet m = in.sets.at(0);
            o.hypothesis = class_by_name("hn")(x) && (!need_regular || is_regular(x)) &&
                           dim_of_subset(x, m, DimKind::ind) == DimValue::finite(0);
            if (!o.hypothesis)
                return o;
            const auto p = find_point_partition(x, in.point, in.sets.at(1), m);
            o.holds = p.has_value();
            o.expected = "partition avoiding " + m.str();
            o.observed = p ? "L=" + p->l.str() : "none";
            return o;
        };
    };
    s.push_back({"partition-avoid-ind0", false,
                 "hereditarily normal X, ind M = 0, x ∈ M, A closed, x ∉ A: some partition misses M",
                 m_point_closed, partition_ind(false)});
    s.push_back({"partition-avoid-ind0-regular", false,
                 "hereditarily normal regular X, ind M = 0, x ∈ M, A closed, x ∉ A: some partition misses M",
                 m_point_closed, partition_ind(true)});

    auto bh_zero = [](DimKind kind, bool need_closed_outside = false) {
        return [kind, need_closed_outside](const FiniteSpace& x, const CheckInputs& in) {
            CheckOutcome o;
            const PointSet m = in.sets.at(0);
            const ClassPredicate hn = class_by_name("hn");
            const ClassPredicate hcn = class_by_name("hn+hcn");
            const bool hn_x = hn(x);
            bool closed_outside = true;
            if (need_closed_outside)
                m.complement().for_each(
                    [&](int p) { closed_outside = closed_outside && x.is_closed(PointSet::single(x.size(), p)); });
            o.hypothesis = hn_x && closed_outside && dim_of_subset(x, m, kind) == DimValue::finite(0);
            if (!o.hypothesis)
                return o;
            const FiniteSpace b = bing_hanner(x, m);
            const DimValue d = dimension(b, kind);
            const bool hn_b = hn(b);
            const bool hcn_ok = !hcn(x) || hcn(b);
            o.holds = d == DimValue::finite(0) && hn_b && hcn_ok;
            o.expected = std::string(dim_kind_name(kind)) + "=0 hn=true hcn_preserved=true";
            o.observed = std::string(dim_kind_name(kind)) + "=" + d.str() + " hn=" + yes_no(hn_b) +
                         " hcn_preserved=" + yes_no(hcn_ok);
            return o;
        };
    };
    s.push_back({"bh-Ind0", false, "hereditarily normal X, Ind M = 0: Ind τ(M) = 0 and τ(M) hereditarily normal",
                 each_subset, bh_zero(DimKind::Ind)});
    s.push_back({"bh-ind0", false, "hereditarily normal X, ind M = 0: ind τ(M) = 0 and τ(M) hereditarily normal",
                 each_subset, bh_zero(DimKind::ind)});
    s.push_back({"bh-ind0-closed-outside", false,
                 "hereditarily normal X, ind M = 0, points outside M closed: ind τ(M) = 0 and τ(M) hereditarily normal",
                 each_subset, bh_zero(DimKind::ind, true)});

    s.push_back({"sn-monotone", false, "class A ⊆ class B implies Sn^B ≤ Sn^A",
                 [](const FiniteSpace&) {
                     std::vector<CheckInputs> out;
                     for (const auto& a : named_classes())
                         for (const auto& b : named_classes())
                             if (a.name != b.name && a.subclass_of(b))
                                 out.push_back(CheckInputs{{}, -1, {a.name, b.name}});
                     return out;
                 },
                 [](const FiniteSpace& x, const CheckInputs& in) {
                     CheckOutcome o;
                     o.hypothesis = true;
                     const SnValue sa = sn(x, class_by_name(in.names.at(0)), 0, EnumerationGuard{6});
                     const SnValue sb = sn(x, class_by_name(in.names.at(1)), 0, EnumerationGuard{6});
                     o.holds = sb <= sa;
                     o.expected = "Sn^" + in.names[1] + " <= Sn^" + in.names[0] + " = " + sa.str();
                     o.observed = "Sn^" + in.names[1] + " = " + sb.str();
                     return o;
                 }});

    s.push_back({"density-monotone", false, "τ ⊆ μ implies d(τ) ≤ d(μ)",
                 [](const FiniteSpace& x) {
                     std::vector<CheckInputs> out;
                     enumerate_extensions(x, EnumerationGuard{6}).run([&](const FiniteSpace& mu) {
                         out.push_back(CheckInputs{std::vector<PointSet>(mu.min_nbhds().begin(), mu.min_nbhds().end()),
                                                   -1,
                                                   {}});
                     });
                     return out;
                 },
                 [](const FiniteSpace& x, const CheckInputs& in) {
                     CheckOutcome o;
                     const FiniteSpace mu = FiniteSpace::from_min_nbhds(x.size(), in.sets);
                     o.hypothesis = is_extension(x, mu);
                     if (!o.hypothesis)
                         return o;
                     const int dt = density(x);
                     const int dm = density(mu);
                     o.holds = dt <= dm;
                     o.expected = "d(tau)=" + std::to_string(dt) + " <= d(mu)";
                     o.observed = "d(mu)=" + std::to_string(dm);
                     return o;
                 }});

    s.push_back({"sn-hn-upper", false,
                 "hereditarily normal X covered by Dim-0 pieces M_i: Sn_bh^{HN_Dim} ≤ number of pieces",
                 [](const FiniteSpace& x) {
                     std::vector<CheckInputs> out;
                     if (!class_by_name("hn")(x))
                         return out;
                     for (const char* cls : {"hn-ind0", "hn-Ind0", "hn-dim0"}) {
                         const auto pieces = zero_dim_pieces(x, dim_kind_for_class(cls));
                         for (auto& cover : irredundant_covers(x, pieces, x.size()))
                             out.push_back(CheckInputs{std::move(cover), -1, {cls}});
                     }
                     return out;
                 },
                 [](const FiniteSpace& x, const CheckInputs& in) {
                     CheckOutcome o;
                     const ClassPredicate pred = class_by_name(in.names.at(0));
                     const DimKind kind = dim_kind_for_class(in.names[0]);
                     bool pieces_ok = union_of(x, in.sets) == x.ground();
                     bool bh_ok = true;
                     for (auto m : in.sets) {
                         pieces_ok = pieces_ok && dim_of_subset(x, m, kind) == DimValue::finite(0);
                         bh_ok = bh_ok && pred(bing_hanner(x, m));
                     }
                     o.hypothesis = class_by_name("hn")(x) && pieces_ok && bh_ok;
                     if (!o.hypothesis)
                         return o;
                     const SnValue v = sn_bh(x, pred);
                     o.holds = v.is_finite() && v.k <= static_cast<int>(in.sets.size());
                     o.expected = "Sn_bh <= " + std::to_string(in.sets.size());
                     o.observed = "Sn_bh = " + v.str();
                     return o;
                 }});

    // --- exploratory ----------------------------------------------------------

    s.push_back({"ind-le-Ind", true, "ind X ≤ Ind X (stated for normal spaces)", single_instance,
                 [](const FiniteSpace& x, const CheckInputs&) {
                     CheckOutcome o;
                     o.hypothesis = is_normal(x);
                     if (!o.hypothesis)
                         return o;
                     const DimValue a = ind_boundary(x);
                     const DimValue b = large_ind(x);
                     o.holds = a <= b;
                     o.expected = "ind <= Ind = " + b.str();
                     o.observed = "ind = " + a.str();
                     return o;
                 }});

    s.push_back({"dim-le-Ind", true, "dim X ≤ Ind X (stated for normal T1 spaces)", single_instance,
                 [](const FiniteSpace& x, const CheckInputs&) {
                     CheckOutcome o;
                     o.hypothesis = is_normal(x);
                     if (!o.hypothesis)
                         return o;
                     const DimValue a = cov_dim(x);
                     const DimValue b = large_ind(x);
                     o.holds = a <= b;
                     o.expected = "dim <= Ind = " + b.str();
                     o.observed = "dim = " + a.str();
                     return o;
                 }});

    s.push_back({"Ind0-iff-dim0", true, "Ind X = 0 iff dim X = 0 (stated for normal T1 spaces)", single_instance,
                 [](const FiniteSpace& x, const CheckInputs&) {
                     CheckOutcome o;
                     o.hypothesis = is_normal(x);
                     if (!o.hypothesis)
                         return o;
                     const DimValue a = large_ind(x);
                     const DimValue b = cov_dim(x);
                     o.holds = (a == DimValue::finite(0)) == (b == DimValue::finite(0));
                     o.expected = "Ind = 0 iff dim = 0";
                     o.observed = "Ind = " + a.str() + ", dim = " + b.str();
                     return o;
                 }});

    s.push_back({"lower-bound-add", true,
                 "hereditarily normal, no isolated points, dim = d ≥ 1: no k ≤ d dim-0 sets M_i with τ = ∩ τ(M_i)",
                 [](const FiniteSpace& x) {
                     std::vector<CheckInputs> out;
                     const DimValue d = cov_dim(x);
                     if (!class_by_name("hn")(x) || !isolated_points(x).empty() || d < DimValue::finite(1))
                         return out;
                     std::vector<PointSet> pieces;
                     for (auto m : all_subsets(x))
                         if (dim_of_subset(x, m, DimKind::dim) <= DimValue::finite(0))
                             pieces.push_back(m);
                     std::vector<PointSet> cur;
                     auto rec = [&](auto& self, std::size_t from) -> void {
                         if (!cur.empty())
                             out.push_back(CheckInputs{cur, -1, {}});
                         if (static_cast<int>(cur.size()) == d.value())
                             return;
                         for (std::size_t i = from; i < pieces.size(); ++i) {
                             cur.push_back(pieces[i]);
                             self(self, i + 1);
                             cur.pop_back();
                         }
                     };
                     rec(rec, 0);
                     return out;
                 },
                 [](const FiniteSpace& x, const CheckInputs& in) {
                     CheckOutcome o;
                     const DimValue d = cov_dim(x);
                     bool pieces_ok = static_cast<int>(in.sets.size()) <= d.value();
                     for (auto m : in.sets)
                         pieces_ok = pieces_ok && dim_of_subset(x, m, DimKind::dim) <= DimValue::finite(0);
                     o.hypothesis = class_by_name("hn")(x) && isolated_points(x).empty() &&
                                    d >= DimValue::finite(1) && pieces_ok;
                     if (!o.hypothesis)
                         return o;
                     const FiniteSpace m = meet_of_bh(x, in.sets);
                     o.holds = !(m == x);
                     o.expected = "meet of tau(M_i) != tau (dim = " + d.str() + ")";
                     o.observed = "meet = tau with " + std::to_string(in.sets.size()) + " sets";
                     return o;
                 }});

    s.push_back({"ind-two-forms", true, "boundary-form and partition-form ind agree", single_instance,
                 [](const FiniteSpace& x, const CheckInputs&) {
                     CheckOutcome o;
                     o.hypothesis = true;
                     const DimValue a = ind_boundary(x);
                     const DimValue b = ind_partition(x);
                     o.holds = a == b;
                     o.expected = "ind_b = ind_p";
                     o.observed = "ind_b = " + a.str() + ", ind_p = " + b.str();
                     return o;
                 }});

    return s;
}

} // namespace detail

inline const std::vector<SuiteDef>& suites() {
    static const std::vector<SuiteDef> all = detail::build_suites();
    return all;
}

inline const SuiteDef& suite_by_name(const std::string& name) {
    for (const auto& s : suites())
        if (s.name == name)
            return s;
    throw Error(Errc::unknown_suite, "no suite named '" + name + "'");
}

inline std::vector<std::string> hard_suite_names() {
    std::vector<std::string> out;
    for (const auto& s : suites())
        if (!s.exploratory)
            out.push_back(s.name);
    return out;
}

/// Sweeps every homeomorphism class on n points. Auxiliary inputs are
/// exhaustive for n ≤ exhaustive_max_n and sampled (keyed by seed and class
/// code) above.
inline VerificationReport run_suite(const std::string& name, int n, const SuiteOptions& opt = {}) {
    const SuiteDef& def = suite_by_name(name);
    VerificationReport rep;
    rep.suite = name;
    rep.n = n;
    rep.exploratory = def.exploratory;
    rep.seed = opt.seed;
    rep.sampled = n > opt.exhaustive_max_n;
    try {
        const auto classes = enumerate_classes(n);
        rep.classes = classes.size();
        struct PerClass {
            std::uint64_t checked = 0;
            std::uint64_t hyp = 0;
            std::vector<Violation> bad;
        };
        std::vector<PerClass> results(classes.size());
        parallel_for(classes.size(), opt.threads, [&](std::size_t i) {
            const auto& cls = classes[i];
            auto inputs = def.inputs(cls.space);
            if (rep.sampled && inputs.size() > opt.samples_per_class) {
                KeyedStream rng(opt.seed, cls.code);
                std::vector<CheckInputs> picked;
                for (std::size_t k = 0; k < opt.samples_per_class; ++k)
                    picked.push_back(inputs[rng.below(inputs.size())]);
                inputs = std::move(picked);
            }
            PerClass& out = results[i];
            for (const auto& in : inputs) {
                ++out.checked;
                const CheckOutcome o = def.check(cls.space, in);
                if (!o.hypothesis)
                    continue;
                ++out.hyp;
                if (!o.holds)
                    out.bad.push_back(Violation{cls.code.str(), in.to_json(), o.expected, o.observed});
            }
        });
        std::uint64_t total_bad = 0;
        for (auto& r : results) {
            rep.instances_checked += r.checked;
            rep.hypothesis_satisfied += r.hyp;
            total_bad += r.bad.size();
            for (auto& v : r.bad)
                if (rep.violations.size() < opt.max_logged)
                    rep.violations.push_back(std::move(v));
        }
        if (total_bad == 0)
            rep.status = SuiteStatus::pass;
        else
            rep.status = def.exploratory ? SuiteStatus::findings : SuiteStatus::error;
        if (total_bad > rep.violations.size())
            rep.error_message = std::to_string(total_bad) + " violations, " + std::to_string(rep.violations.size()) +
                                " logged";
    } catch (const Error& e) {
        rep.status = SuiteStatus::error;
        rep.error_message = e.what();
    }
    return rep;
}

/// Re-runs one logged violation; true when it still fails.
inline bool reproduces(const std::string& suite, const Violation& v) {
    const SuiteDef& def = suite_by_name(suite);
    const CanonicalCode code = CanonicalCode::parse(v.code);
    const FiniteSpace x = code.decode();
    const CheckOutcome o = def.check(x, CheckInputs::from_json(v.inputs, x.size()));
    return o.hypothesis && !o.holds && o.observed == v.observed;
}

} // namespace fintop
