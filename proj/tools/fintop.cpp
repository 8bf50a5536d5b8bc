#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "fintop/fintop.hpp"

using namespace fintop;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_failed = 1;
constexpr int exit_usage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

PointSet parse_indices(const std::string& text, int n) {
    std::vector<int> xs;
    std::stringstream ss(text);
    for (std::string part; std::getline(ss, part, ',');) {
        if (part.empty())
            continue;
        try {
            std::size_t used = 0;
            const int x = std::stoi(part, &used);
            if (used != part.size())
                throw std::invalid_argument(part);
            xs.push_back(x);
        } catch (const std::exception&) {
            throw UsageError("bad point index '" + part + "'");
        }
    }
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    for (int x : xs)
        if (x < 0 || x >= n)
            throw Error(Errc::size_mismatch, "point " + std::to_string(x) + " is outside a " + std::to_string(n) +
                                                 "-point space");
    return PointSet::of(n, xs);
}

DimKind parse_dim_kind(const std::string& s) {
    if (s == "ind")
        return DimKind::ind;
    if (s == "Ind")
        return DimKind::Ind;
    if (s == "dim")
        return DimKind::dim;
    throw UsageError("--dim must be one of ind, Ind, dim");
}

std::vector<std::string> split_names(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    for (std::string part; std::getline(ss, part, ',');)
        if (!part.empty())
            out.push_back(part);
    return out;
}

json analysis_json(const FiniteSpace& x) {
    json j;
    j["points"] = x.size();
    if (x.size() <= canonical_max_points)
        j["code"] = canonical_code(x).str();
    j["opens"] = opens_to_json(x);
    j["min_nbhds"] = nbhds_to_json(x);
    j["profile"] = profile_to_json(separation_profile(x));
    j["ind_b"] = dim_to_json(ind_boundary(x));
    j["ind_p"] = dim_to_json(ind_partition(x));
    j["Ind"] = dim_to_json(large_ind(x));
    j["dim"] = dim_to_json(cov_dim(x));
    j["density"] = density(x);
    j["isolated"] = set_to_json(isolated_points(x));
    return j;
}

void print_analysis(const json& a, std::ostream& out) {
    out << "points: " << a["points"] << "\n";
    if (a.contains("code"))
        out << "code: " << a["code"].get<std::string>() << "\n";
    out << "opens: " << a["opens"].dump() << "\n";
    out << "profile:";
    for (const auto& [k, v] : a["profile"].items())
        out << " " << k << "=" << (v.get<bool>() ? "true" : "false");
    out << "\n";
    for (const char* k : {"ind_b", "ind_p", "Ind", "dim"}) {
        const json& v = a[k];
        out << k << "=" << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    }
    out << "density=" << a["density"] << "\n";
    out << "isolated=" << a["isolated"].dump() << "\n";
}

void print_sn(const std::string& cls, const SnValue& v, std::ostream& out) {
    if (!v.is_finite()) {
        out << "sn(" << cls << ") = inf (empty-hit-set";
        if (v.certificate)
            out << ": no candidate omits " << v.certificate->str();
        out << ")\n";
        return;
    }
    out << "sn(" << cls << ") = " << v.k << "\n";
    for (std::size_t i = 0; i < v.witness.size(); ++i) {
        out << "witness " << i + 1;
        if (i < v.witness_sets.size())
            out << " M=" << v.witness_sets[i].str();
        out << ": " << opens_to_json(v.witness[i]).dump() << "\n";
    }
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw Error(Errc::io_error, "cannot write " + path);
    out << text;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact workbench for finite topological spaces"};
    app.require_subcommand(1);
    unsigned threads = default_threads();
    app.add_option("--threads", threads, "Worker threads for catalog and verify")->check(CLI::PositiveNumber);

    std::string file;
    bool as_json = false;

    auto* analyze = app.add_subcommand("analyze", "Separation profile, dimensions, density, isolated points");
    analyze->add_option("file", file, "Space file")->required();
    analyze->add_flag("--json", as_json, "Machine-readable output");

    std::string m_text;
    auto* bh = app.add_subcommand("bh", "Bing-Hanner extension tau(M)");
    bh->add_option("file", file, "Space file")->required();
    bh->add_option("--m", m_text, "Comma-separated indices of M (may be empty)")->required();
    bh->add_flag("--json", as_json, "Machine-readable output");

    std::string cls;
    bool bh_only = false;
    int max_k = 0;
    auto* sn_cmd = app.add_subcommand("sn", "Structural number with witness family");
    sn_cmd->add_option("file", file, "Space file")->required();
    sn_cmd->add_option("--class", cls, "Class name, e.g. dim0 or hn-ind0")->required();
    sn_cmd->add_flag("--bh-only", bh_only, "Search Bing-Hanner families only");
    sn_cmd->add_option("--max-k", max_k, "Largest family size to search (default: complete)");

    bool count_only = false;
    auto* ext = app.add_subcommand("extensions", "Topologies finer than the given one");
    ext->add_option("file", file, "Space file")->required();
    ext->add_option("--class", cls, "Keep only extensions in this class");
    ext->add_flag("--count-only", count_only, "Print only the count");

    auto* catalog = app.add_subcommand("catalog", "Build or query catalogs of homeomorphism classes");
    catalog->require_subcommand(1);
    int n = 0;
    std::string classes_text;
    std::string path;
    auto* build = catalog->add_subcommand("build", "Analyze every class on n points");
    build->add_option("--n", n, "Point count")->required()->check(CLI::Range(1, 6));
    build->add_option("--classes", classes_text, "Comma-separated class names for Sn columns");
    build->add_option("--out", path, "Output file")->required();
    bool allow_six = false;
    build->add_flag("--allow-six", allow_six, "Permit the 209527-topology sweep at n = 6");
    std::string filter;
    auto* query = catalog->add_subcommand("query", "Filter catalog records");
    query->add_option("--in", path, "Catalog file")->required();
    query->add_option("--filter", filter, "Conjunction such as 'ind_b=1 ∧ dim=0'");
    auto* check = catalog->add_subcommand("verify", "Re-derive every record from its code");
    check->add_option("--in", path, "Catalog file")->required();

    std::string suite;
    std::uint64_t seed = SuiteOptions{}.seed;
    bool upto = false;
    std::string report_path;
    std::size_t samples = SuiteOptions{}.samples_per_class;
    auto* verify = app.add_subcommand("verify", "Run verification suites");
    verify->add_option("--suite", suite, "Suite name, 'hard', or 'all'")->required();
    verify->add_option("--n", n, "Point count")->required()->check(CLI::Range(1, 6));
    verify->add_flag("--upto", upto, "Sweep every point count from 1 to n");
    verify->add_option("--seed", seed, "Seed for sampled inputs above 4 points");
    verify->add_option("--samples", samples, "Sampled inputs per class above 4 points");
    verify->add_option("--report", report_path, "Write the reports as JSON");
    verify->add_flag("--json", as_json, "Print the reports as JSON");

    std::string dim_text;
    auto* decompose = app.add_subcommand("decompose", "Fewest pieces of dimension <= 0 covering the space");
    decompose->add_option("file", file, "Space file")->required();
    decompose->add_option("--dim", dim_text, "ind, Ind or dim")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    }

    std::ostream& out = std::cout;
    try {
        if (*analyze) {
            const json a = analysis_json(read_space_file(file));
            if (as_json)
                out << a.dump(2) << "\n";
            else
                print_analysis(a, out);
        } else if (*bh) {
            const FiniteSpace x = read_space_file(file);
            const PointSet m = parse_indices(m_text, x.size());
            const FiniteSpace b = bing_hanner(x, m);
            json a = analysis_json(b);
            a["M"] = set_to_json(m);
            if (as_json) {
                out << a.dump(2) << "\n";
            } else {
                out << "M: " << m.str() << "\n";
                print_analysis(a, out);
            }
        } else if (*sn_cmd) {
            const FiniteSpace x = read_space_file(file);
            const ClassPredicate pred = class_by_name(cls);
            try {
                const SnValue v = bh_only ? sn_bh(x, pred, max_k) : sn(x, pred, max_k);
                print_sn(cls, v, out);
            } catch (const Error& e) {
                if (e.code() != Errc::bound_exhausted)
                    throw;
                out << "sn(" << cls << ") > " << max_k << " (bound-exhausted: no family of size <= " << max_k
                    << ")\n";
            }
        } else if (*ext) {
            const FiniteSpace x = read_space_file(file);
            std::optional<ClassPredicate> pred;
            if (!cls.empty())
                pred = class_by_name(cls);
            std::uint64_t count = 0;
            enumerate_extensions(x).run([&](const FiniteSpace& mu) {
                if (pred && !(*pred)(mu))
                    return;
                ++count;
                if (!count_only)
                    out << opens_to_json(mu).dump() << "\n";
            });
            out << "count: " << count << "\n";
        } else if (*build) {
            std::vector<ClassPredicate> preds;
            for (const auto& name : split_names(classes_text))
                preds.push_back(class_by_name(name));
            const CatalogSummary s = catalog_build(n, preds, path, threads, allow_six);
            out << "n=" << s.n << " classes=" << s.classes << " labeled=" << s.labeled_total << "\n";
            for (const auto& [field, hist] : s.histograms) {
                out << field << ":";
                for (const auto& [value, count] : hist)
                    out << " " << value << "x" << count;
                out << "\n";
            }
            out << "wrote " << path << "\n";
        } else if (*query) {
            const auto hits = catalog_query(path, filter);
            for (const auto& r : hits)
                out << record_to_json(r).dump() << "\n";
            out << "matches: " << hits.size() << "\n";
        } else if (*check) {
            const auto bad = verify_catalog(read_catalog(path), threads);
            for (const auto& code : bad)
                out << "mismatch " << code << "\n";
            out << (bad.empty() ? "catalog verified" : "catalog has mismatches") << "\n";
            return bad.empty() ? exit_ok : exit_failed;
        } else if (*verify) {
            std::vector<std::string> names;
            if (suite == "all") {
                for (const auto& s : suites())
                    names.push_back(s.name);
            } else if (suite == "hard") {
                names = hard_suite_names();
            } else {
                names.push_back(suite_by_name(suite).name);
            }
            SuiteOptions opt;
            opt.seed = seed;
            opt.threads = threads;
            opt.samples_per_class = samples;
            json reports = json::array();
            bool hard_ok = true;
            for (const auto& name : names) {
                for (int k = upto ? 1 : n; k <= n; ++k) {
                    const VerificationReport r = run_suite(name, k, opt);
                    reports.push_back(r.to_json());
                    if (!r.exploratory && r.status != SuiteStatus::pass)
                        hard_ok = false;
                    if (as_json)
                        continue;
                    out << name << " n=" << k << " " << status_name(r.status) << " classes=" << r.classes
                        << " instances=" << r.instances_checked << " hypothesis=" << r.hypothesis_satisfied
                        << " violations=" << r.violations.size() << (r.sampled ? " sampled" : "") << "\n";
                    if (!r.error_message.empty())
                        out << "  note: " << r.error_message << "\n";
                    for (std::size_t i = 0; i < std::min<std::size_t>(r.violations.size(), 3); ++i) {
                        const auto& v = r.violations[i];
                        out << "  " << v.code << " " << v.inputs.dump() << " expected " << v.expected << "; observed "
                            << v.observed << "\n";
                    }
                }
            }
            if (as_json)
                out << reports.dump(2) << "\n";
            if (!report_path.empty())
                write_text(report_path, reports.dump(2) + "\n");
            return hard_ok ? exit_ok : exit_failed;
        } else if (*decompose) {
            const FiniteSpace x = read_space_file(file);
            const Decomposition d = decompose_zero_dim(x, parse_dim_kind(dim_text));
            out << "k=" << d.k << "\n";
            for (auto p : d.pieces)
                out << "piece " << p.str() << "\n";
        }
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return exit_usage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_failed;
    }
    return exit_ok;
}
