#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "space.hpp"

namespace fintop {

using json = nlohmann::json;

inline json set_to_json(PointSet s) { return s.indices(); }

inline PointSet set_from_json(const json& j, int n) {
    if (!j.is_array())
        throw Error(Errc::parse_error, "expected an array of point indices, got " + j.dump());
    std::vector<int> xs;
    for (const auto& v : j) {
        if (!v.is_number_integer())
            throw Error(Errc::parse_error, "non-integer index in " + j.dump());
        const int x = v.get<int>();
        if (!xs.empty() && x <= xs.back())
            throw Error(Errc::parse_error, "indices not strictly ascending in " + j.dump());
        if (x < 0 || x >= n)
            throw Error(Errc::parse_error, "index " + std::to_string(x) + " out of range in " + j.dump());
        xs.push_back(x);
    }
    return PointSet::of(n, xs);
}

/// Opens-list form: [[...], [...], ...] in canonical (ascending bit) order.
inline json opens_to_json(const FiniteSpace& x) {
    json a = json::array();
    for (const auto& o : x.opens())
        a.push_back(set_to_json(o));
    return a;
}

inline json nbhds_to_json(const FiniteSpace& x) {
    json a = json::array();
    for (const auto& s : x.min_nbhds())
        a.push_back(set_to_json(s));
    return a;
}

/// Space file object: {"points": n, "opens": [...]} or {"points": n, "min_nbhds": [...]}.
inline json space_to_json(const FiniteSpace& x, bool as_opens = true) {
    json j;
    j["points"] = x.size();
    if (as_opens)
        j["opens"] = opens_to_json(x);
    else
        j["min_nbhds"] = nbhds_to_json(x);
    return j;
}

inline FiniteSpace space_from_json(const json& j) {
    if (!j.is_object())
        throw Error(Errc::parse_error, "space must be a JSON object");
    if (!j.contains("points") || !j["points"].is_number_integer())
        throw Error(Errc::parse_error, "space lacks an integer \"points\" field");
    const int n = j["points"].get<int>();
    if (n < 1 || n > max_points)
        throw Error(Errc::size_out_of_range, "point count " + std::to_string(n) + " not in [1, 16]");
    const bool has_opens = j.contains("opens");
    const bool has_nbhds = j.contains("min_nbhds");
    if (has_opens == has_nbhds)
        throw Error(Errc::parse_error, "space needs exactly one of \"opens\" and \"min_nbhds\"");
    const json& list = has_opens ? j["opens"] : j["min_nbhds"];
    if (!list.is_array())
        throw Error(Errc::parse_error, "set list must be an array");
    std::vector<PointSet> sets;
    for (const auto& s : list)
        sets.push_back(set_from_json(s, n));
    return has_opens ? FiniteSpace::from_opens(n, std::move(sets)) : FiniteSpace::from_min_nbhds(n, std::move(sets));
}

inline FiniteSpace read_space_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw Error(Errc::io_error, "cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw Error(Errc::parse_error, path + ": " + e.what());
    }
    return space_from_json(j);
}

} // namespace fintop
