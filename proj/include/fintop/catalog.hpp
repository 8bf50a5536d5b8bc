#pragma once

#include <chrono>
#include <cstdint>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "canonical.hpp"
#include "dimension.hpp"
#include "lattice.hpp"
#include "parallel.hpp"
#include "separation.hpp"
#include "space_io.hpp"
#include "structural.hpp"

namespace fintop {

inline constexpr int catalog_format_version = 1;

/// One homeomorphism class with the number of labeled topologies in it.
struct TopologyClass {
    CanonicalCode code;
    FiniteSpace space; // decoded representative
    std::uint64_t labeled_count = 0;
};

namespace detail {
inline void check_enumeration_size(int n, bool allow_six) {
    const int limit = allow_six ? 6 : 5;
    if (n < 1 || n > limit)
        throw Error(Errc::size_guard_exceeded,
                    "exhaustive enumeration on " + std::to_string(n) + " points (limit " + std::to_string(limit) + ")");
}
} // namespace detail

/// All labeled topologies on n points, as extensions of the indiscrete one.
inline std::vector<FiniteSpace> enumerate_topologies(int n, bool allow_six = false) {
    detail::check_enumeration_size(n, allow_six);
    return enumerate_extensions(FiniteSpace::indiscrete(n), EnumerationGuard{allow_six ? 6 : 5}).collect();
}

/// One representative per homeomorphism class, ordered by canonical code.
inline std::vector<TopologyClass> enumerate_classes(int n, bool allow_six = false) {
    detail::check_enumeration_size(n, allow_six);
    std::map<CanonicalCode, std::uint64_t> counts;
    enumerate_extensions(FiniteSpace::indiscrete(n), EnumerationGuard{allow_six ? 6 : 5})
        .run([&](const FiniteSpace& s) { ++counts[canonical_code(s)]; });
    std::vector<TopologyClass> out;
    out.reserve(counts.size());
    for (const auto& [code, count] : counts)
        out.push_back(TopologyClass{code, code.decode(), count});
    return out;
}

/// Classes at every size 1..n in canonical order.
inline std::vector<TopologyClass> enumerate_classes_upto(int n) {
    std::vector<TopologyClass> out;
    for (int k = 1; k <= n; ++k) {
        auto c = enumerate_classes(k);
        out.insert(out.end(), c.begin(), c.end());
    }
    return out;
}

struct CatalogRecord {
    CanonicalCode code;
    std::uint64_t labeled_count = 0;
    SeparationProfile profile;
    DimValue ind_b;
    DimValue ind_p;
    DimValue Ind;
    DimValue dim;
    int isolated = 0;
    int density = 0;
    std::map<std::string, SnValue> sn_results;
};

/// Recomputes every field from the code alone.
inline CatalogRecord analyze_class(const CanonicalCode& code, std::uint64_t labeled_count,
                                   const std::vector<ClassPredicate>& preds) {
    const FiniteSpace x = code.decode();
    CatalogRecord r;
    r.code = code;
    r.labeled_count = labeled_count;
    r.profile = separation_profile(x);
    r.ind_b = ind_boundary(x);
    r.ind_p = ind_partition(x);
    r.Ind = large_ind(x);
    r.dim = cov_dim(x);
    r.isolated = isolated_points(x).size();
    r.density = density(x);
    for (const auto& p : preds)
        r.sn_results.emplace(p.name, sn(x, p, 0, EnumerationGuard{6}));
    return r;
}

inline json dim_to_json(DimValue d) { return d.is_infinite() ? json("inf") : json(d.value()); }

inline DimValue dim_from_json(const json& j) {
    if (j.is_string())
        return DimValue::parse(j.get<std::string>());
    if (j.is_number_integer())
        return DimValue::from_int(j.get<int>());
    throw Error(Errc::parse_error, "bad dimension value " + j.dump());
}

inline json profile_to_json(const SeparationProfile& p) {
    return json{{"t0", p.t0},
                {"t1", p.t1},
                {"t2", p.t2},
                {"regular", p.regular},
                {"normal", p.normal},
                {"hereditarily_normal", p.hereditarily_normal},
                {"collectionwise_normal", p.collectionwise_normal},
                {"hereditarily_collectionwise_normal", p.hereditarily_collectionwise_normal}};
}

inline SeparationProfile profile_from_json(const json& j) {
    SeparationProfile p;
    try {
        p.t0 = j.at("t0").get<bool>();
        p.t1 = j.at("t1").get<bool>();
        p.t2 = j.at("t2").get<bool>();
        p.regular = j.at("regular").get<bool>();
        p.normal = j.at("normal").get<bool>();
        p.hereditarily_normal = j.at("hereditarily_normal").get<bool>();
        p.collectionwise_normal = j.at("collectionwise_normal").get<bool>();
        p.hereditarily_collectionwise_normal = j.at("hereditarily_collectionwise_normal").get<bool>();
    } catch (const json::exception& e) {
        throw Error(Errc::parse_error, std::string("profile: ") + e.what());
    }
    return p;
}

inline json sn_to_json(const SnValue& v) {
    json j;
    if (v.is_finite()) {
        j["value"] = v.k;
        json w = json::array();
        for (const auto& s : v.witness)
            w.push_back(opens_to_json(s));
        j["witness"] = w;
        if (!v.witness_sets.empty()) {
            json ms = json::array();
            for (auto m : v.witness_sets)
                ms.push_back(set_to_json(m));
            j["witness_sets"] = ms;
        }
    } else {
        j["value"] = "inf";
        j["certificate"] = "empty-hit-set";
        j["certificate_set"] = v.certificate ? set_to_json(*v.certificate) : json(nullptr);
    }
    return j;
}

inline SnValue sn_from_json(const json& j, int n) {
    try {
        if (j.at("value").is_string()) {
            if (j.at("value").get<std::string>() != "inf")
                throw Error(Errc::parse_error, "bad Sn value " + j.dump());
            const json& c = j.at("certificate_set");
            return SnValue::infinite(c.is_null() ? std::nullopt : std::optional<PointSet>(set_from_json(c, n)));
        }
        std::vector<FiniteSpace> w;
        for (const auto& opens : j.at("witness")) {
            std::vector<PointSet> sets;
            for (const auto& s : opens)
                sets.push_back(set_from_json(s, n));
            w.push_back(FiniteSpace::from_opens(n, std::move(sets)));
        }
        std::vector<PointSet> ms;
        if (j.contains("witness_sets"))
            for (const auto& m : j["witness_sets"])
                ms.push_back(set_from_json(m, n));
        SnValue v = SnValue::finite(std::move(w), std::move(ms));
        if (v.k != j.at("value").get<int>())
            throw Error(Errc::parse_error, "Sn value disagrees with witness size in " + j.dump());
        return v;
    } catch (const json::exception& e) {
        throw Error(Errc::parse_error, std::string("sn: ") + e.what());
    }
}

inline json record_to_json(const CatalogRecord& r) {
    json sn_j = json::object();
    for (const auto& [name, v] : r.sn_results)
        sn_j[name] = sn_to_json(v);
    return json{{"code", r.code.str()},
                {"labeled_count", r.labeled_count},
                {"profile", profile_to_json(r.profile)},
                {"ind_b", dim_to_json(r.ind_b)},
                {"ind_p", dim_to_json(r.ind_p)},
                {"Ind", dim_to_json(r.Ind)},
                {"dim", dim_to_json(r.dim)},
                {"isolated", r.isolated},
                {"density", r.density},
                {"sn_results", sn_j}};
}

inline CatalogRecord record_from_json(const json& j) {
    CatalogRecord r;
    try {
        r.code = CanonicalCode::parse(j.at("code").get<std::string>());
        r.labeled_count = j.at("labeled_count").get<std::uint64_t>();
        r.profile = profile_from_json(j.at("profile"));
        r.ind_b = dim_from_json(j.at("ind_b"));
        r.ind_p = dim_from_json(j.at("ind_p"));
        r.Ind = dim_from_json(j.at("Ind"));
        r.dim = dim_from_json(j.at("dim"));
        r.isolated = j.at("isolated").get<int>();
        r.density = j.at("density").get<int>();
        for (const auto& [name, v] : j.at("sn_results").items())
            r.sn_results.emplace(name, sn_from_json(v, r.code.n));
    } catch (const json::exception& e) {
        throw Error(Errc::parse_error, std::string("record: ") + e.what());
    }
    return r;
}

/// FNV-1a over the given text.
inline std::uint64_t fnv1a64(std::string_view text, std::uint64_t h = 1469598103934665603ULL) {
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

inline std::string hex64(std::uint64_t v) {
    std::ostringstream os;
    os << std::hex;
    os.width(16);
    os.fill('0');
    os << v;
    return os.str();
}

struct CatalogSummary {
    int n = 0;
    std::size_t classes = 0;
    std::uint64_t labeled_total = 0;
    double seconds = 0.0;
    /// field -> value -> number of classes.
    std::map<std::string, std::map<std::string, int>> histograms;
};

/// Renders header, records, and checksum footer, one JSON object per line.
inline std::string render_catalog(int n, const std::vector<ClassPredicate>& preds,
                                  const std::vector<CatalogRecord>& records) {
    json names = json::array();
    for (const auto& p : preds)
        names.push_back(p.name);
    std::string body = json{{"format_version", catalog_format_version}, {"n", n}, {"predicates", names}}.dump() + "\n";
    for (const auto& r : records)
        body += record_to_json(r).dump() + "\n";
    const json footer{{"record_count", records.size()}, {"checksum", hex64(fnv1a64(body))}};
    return body + footer.dump() + "\n";
}

inline std::vector<CatalogRecord> analyze_classes(const std::vector<TopologyClass>& classes,
                                                  const std::vector<ClassPredicate>& preds,
                                                  unsigned threads = default_threads()) {
    std::vector<CatalogRecord> records(classes.size());
    parallel_for(classes.size(), threads, [&](std::size_t i) {
        records[i] = analyze_class(classes[i].code, classes[i].labeled_count, preds);
    });
    return records;
}

inline CatalogSummary catalog_build(int n, const std::vector<ClassPredicate>& preds, const std::string& out_path,
                                    unsigned threads = default_threads(), bool allow_six = false) {
    const auto start = std::chrono::steady_clock::now();
    const auto classes = enumerate_classes(n, allow_six);
    const auto records = analyze_classes(classes, preds, threads);
    const std::string text = render_catalog(n, preds, records);
    {
        std::ofstream out(out_path, std::ios::binary | std::ios::trunc);
        if (!out)
            throw Error(Errc::io_error, "cannot write " + out_path);
        out << text;
        if (!out)
            throw Error(Errc::io_error, "write failed for " + out_path);
    }
    CatalogSummary s;
    s.n = n;
    s.classes = records.size();
    for (const auto& r : records) {
        s.labeled_total += r.labeled_count;
        ++s.histograms["ind_b"][r.ind_b.str()];
        ++s.histograms["ind_p"][r.ind_p.str()];
        ++s.histograms["Ind"][r.Ind.str()];
        ++s.histograms["dim"][r.dim.str()];
    }
    s.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return s;
}

struct Catalog {
    int n = 0;
    std::vector<std::string> predicates;
    std::vector<CatalogRecord> records;
};

/// Parses a catalog file; a missing footer or a checksum mismatch is a
/// ParseError (an incomplete or corrupted build).
inline Catalog read_catalog(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error(Errc::io_error, "cannot open " + path);
    std::vector<std::string> lines;
    for (std::string line; std::getline(in, line);)
        lines.push_back(line);
    if (lines.size() < 2)
        throw Error(Errc::parse_error, path + ": truncated catalog");
    Catalog cat;
    try {
        const json header = json::parse(lines.front());
        if (header.at("format_version").get<int>() != catalog_format_version)
            throw Error(Errc::parse_error, path + ": unsupported format_version");
        cat.n = header.at("n").get<int>();
        cat.predicates = header.at("predicates").get<std::vector<std::string>>();
        const json footer = json::parse(lines.back());
        if (!footer.contains("checksum"))
            throw Error(Errc::parse_error, path + ": missing footer (incomplete build)");
        std::string body;
        for (std::size_t i = 0; i + 1 < lines.size(); ++i)
            body += lines[i] + "\n";
        if (footer.at("checksum").get<std::string>() != hex64(fnv1a64(body)))
            throw Error(Errc::parse_error, path + ": checksum mismatch");
        if (footer.at("record_count").get<std::size_t>() != lines.size() - 2)
            throw Error(Errc::parse_error, path + ": record_count mismatch");
        for (std::size_t i = 1; i + 1 < lines.size(); ++i)
            cat.records.push_back(record_from_json(json::parse(lines[i])));
    } catch (const json::exception& e) {
        throw Error(Errc::parse_error, path + ": " + e.what());
    }
    return cat;
}

/// Re-derives each record from its code; returns codes whose stored record differs.
inline std::vector<std::string> verify_catalog(const Catalog& cat, unsigned threads = default_threads()) {
    std::vector<ClassPredicate> preds;
    for (const auto& name : cat.predicates)
        preds.push_back(class_by_name(name));
    std::vector<char> bad(cat.records.size(), 0);
    parallel_for(cat.records.size(), threads, [&](std::size_t i) {
        const auto& r = cat.records[i];
        const auto fresh = analyze_class(r.code, r.labeled_count, preds);
        bad[i] = record_to_json(fresh) != record_to_json(r);
    });
    std::vector<std::string> out;
    for (std::size_t i = 0; i < bad.size(); ++i)
        if (bad[i])
            out.push_back(cat.records[i].code.str());
    return out;
}

// --- queries -------------------------------------------------------------

namespace detail {

struct Clause {
    std::string field;
    std::string op;
    std::string value;
};

inline std::string trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t");
    if (b == std::string_view::npos)
        return {};
    const auto e = s.find_last_not_of(" \t");
    return std::string(s.substr(b, e - b + 1));
}

inline std::vector<Clause> parse_filter(const std::string& expr) {
    // Conjunction separators: "∧", "&&", "&", ",".
    std::string norm;
    for (std::size_t i = 0; i < expr.size();) {
        if (expr.compare(i, 3, "∧") == 0) {
            norm += ',';
            i += 3;
        } else if (expr.compare(i, 2, "&&") == 0) {
            norm += ',';
            i += 2;
        } else if (expr[i] == '&') {
            norm += ',';
            ++i;
        } else {
            norm += expr[i++];
        }
    }
    std::vector<Clause> out;
    std::stringstream ss(norm);
    for (std::string part; std::getline(ss, part, ',');) {
        part = trim(part);
        if (part.empty())
            continue;
        static const char* ops[] = {"<=", ">=", "!=", "==", "=", "<", ">"};
        bool parsed = false;
        for (const char* op : ops) {
            const auto pos = part.find(op);
            if (pos == std::string::npos || pos == 0)
                continue;
            out.push_back(Clause{trim(part.substr(0, pos)), op == std::string("==") ? "=" : op,
                                 trim(part.substr(pos + std::char_traits<char>::length(op)))});
            parsed = true;
            break;
        }
        if (!parsed)
            throw Error(Errc::parse_error, "cannot parse filter clause '" + part + "'");
    }
    return out;
}

template <class T>
bool compare(const T& a, const std::string& op, const T& b) {
    if (op == "=")
        return a == b;
    if (op == "!=")
        return !(a == b);
    if (op == "<")
        return a < b;
    if (op == ">")
        return b < a;
    if (op == "<=")
        return !(b < a);
    return !(a < b); // ">="
}

inline bool parse_bool(const std::string& v) {
    if (v == "true" || v == "1")
        return true;
    if (v == "false" || v == "0")
        return false;
    throw Error(Errc::parse_error, "'" + v + "' is not a boolean");
}

inline long long parse_int(const std::string& v) {
    try {
        std::size_t used = 0;
        const long long x = std::stoll(v, &used);
        if (used == v.size())
            return x;
    } catch (const std::exception&) {
    }
    throw Error(Errc::parse_error, "'" + v + "' is not an integer");
}

/// Sn compared as an extended integer: Finite(k) ~ k, ∞ ~ DimValue::infinite.
inline DimValue sn_as_dim(const SnValue& v) { return v.is_finite() ? DimValue::finite(v.k) : DimValue::infinite(); }

inline bool matches(const CatalogRecord& r, const Clause& c, const std::vector<std::string>& preds) {
    const auto& p = r.profile;
    const std::map<std::string, bool> flags{{"t0", p.t0},
                                            {"t1", p.t1},
                                            {"t2", p.t2},
                                            {"regular", p.regular},
                                            {"normal", p.normal},
                                            {"hereditarily_normal", p.hereditarily_normal},
                                            {"hn", p.hereditarily_normal},
                                            {"collectionwise_normal", p.collectionwise_normal},
                                            {"cwn", p.collectionwise_normal},
                                            {"hereditarily_collectionwise_normal", p.hereditarily_collectionwise_normal},
                                            {"hcn", p.hereditarily_collectionwise_normal}};
    if (auto it = flags.find(c.field); it != flags.end()) {
        if (c.op != "=" && c.op != "!=")
            throw Error(Errc::parse_error, "boolean field '" + c.field + "' only supports = and !=");
        return compare(it->second, c.op, parse_bool(c.value));
    }
    const std::map<std::string, DimValue> dims{{"ind_b", r.ind_b}, {"ind", r.ind_b}, {"ind_p", r.ind_p},
                                               {"Ind", r.Ind},     {"dim", r.dim}};
    if (auto it = dims.find(c.field); it != dims.end())
        return compare(it->second, c.op, DimValue::parse(c.value));
    if (c.field == "labeled_count")
        return compare(static_cast<long long>(r.labeled_count), c.op, parse_int(c.value));
    if (c.field == "isolated")
        return compare(static_cast<long long>(r.isolated), c.op, parse_int(c.value));
    if (c.field == "density")
        return compare(static_cast<long long>(r.density), c.op, parse_int(c.value));
    if (c.field == "n")
        return compare(static_cast<long long>(r.code.n), c.op, parse_int(c.value));
    if (c.field == "code")
        return compare(r.code.str(), c.op, c.value);
    if (c.field.rfind("sn.", 0) == 0) {
        const std::string name = c.field.substr(3);
        if (std::find(preds.begin(), preds.end(), name) == preds.end())
            throw Error(Errc::unknown_field, "catalog has no Sn results for class '" + name + "'");
        const auto it = r.sn_results.find(name);
        const DimValue want = DimValue::parse(c.value);
        return it != r.sn_results.end() && compare(sn_as_dim(it->second), c.op, want);
    }
    throw Error(Errc::unknown_field, "unknown field '" + c.field + "'");
}

} // namespace detail

inline std::vector<CatalogRecord> catalog_query(const Catalog& cat, const std::string& filter) {
    const auto clauses = detail::parse_filter(filter);
    // Field and value errors surface even when no record reaches the clause.
    for (const auto& c : clauses)
        detail::matches(CatalogRecord{}, c, cat.predicates);
    std::vector<CatalogRecord> out;
    for (const auto& r : cat.records) {
        bool ok = true;
        for (const auto& c : clauses)
            ok = ok && detail::matches(r, c, cat.predicates);
        if (ok)
            out.push_back(r);
    }
    return out;
}

inline std::vector<CatalogRecord> catalog_query(const std::string& path, const std::string& filter) {
    return catalog_query(read_catalog(path), filter);
}

} // namespace fintop
