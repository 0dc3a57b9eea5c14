#include "gstir/verify.hpp"

#include "gstir/closed_forms.hpp"
#include "gstir/combinatorics.hpp"
#include "gstir/errors.hpp"
#include "gstir/graph.hpp"
#include "gstir/sequences.hpp"

#include "json.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <ostream>
#include <tuple>

namespace gstir {

PublishedValues PublishedValues::from_json(std::string_view text) try {
    const auto doc = nlohmann::json::parse(text);
    PublishedValues out;
    out.version_ = doc.at("version").get<int>();
    for (const auto& [name, table] : doc.at("tables").items()) {
        Table t{name, {}};
        for (const auto& [key, value] : table.at("values").items()) {
            t.values.emplace_back(std::stoul(key), BigCount::from_string(value.get<std::string>()));
        }
        out.tables_.push_back(std::move(t));
    }
    for (const auto& [name, tri] : doc.at("triangles").items()) {
        Triangle t{name, {}};
        for (const auto& [key, row] : tri.at("rows").items()) {
            std::vector<BigCount> entries;
            for (const auto& e : row) entries.push_back(BigCount::from_string(e.get<std::string>()));
            t.rows.emplace_back(std::stoul(key), std::move(entries));
        }
        out.triangles_.push_back(std::move(t));
    }
    return out;
} catch (const nlohmann::json::exception& e) {
    throw Error(std::string("published values: ") + e.what());
} catch (const std::logic_error& e) {
    throw Error(std::string("published values: bad index: ") + e.what());
}

const PublishedValues& PublishedValues::bundled() {
    static const PublishedValues values = from_json(bundled_published_json());
    return values;
}

std::optional<BigCount> PublishedValues::value(std::string_view table, std::size_t n) const {
    for (const auto& t : tables_) {
        if (t.name != table) continue;
        for (const auto& [key, v] : t.values) {
            if (key == n) return v;
        }
    }
    return std::nullopt;
}

std::optional<std::vector<BigCount>> PublishedValues::row(std::string_view triangle, std::size_t n) const {
    for (const auto& t : triangles_) {
        if (t.name != triangle) continue;
        for (const auto& [key, r] : t.rows) {
            if (key == n) return r;
        }
    }
    return std::nullopt;
}

std::string_view to_string(VerifyFamily f) {
    switch (f) {
        case VerifyFamily::multipartite: return "multipartite";
        case VerifyFamily::km: return "km";
        case VerifyFamily::myc_star: return "myc-star";
        case VerifyFamily::identities: return "identities";
    }
    return "?";
}

VerifyFamily parse_verify_family(std::string_view text) {
    for (auto f : {VerifyFamily::multipartite, VerifyFamily::km, VerifyFamily::myc_star, VerifyFamily::identities}) {
        if (to_string(f) == text) return f;
    }
    throw OutOfDomain("unknown verify family '" + std::string(text) +
                      "' (expected multipartite, km, myc-star or identities)");
}

std::optional<bool> VerifyCase::formula_vs_oracle() const {
    if (!formula_value || !oracle_value) return std::nullopt;
    return *formula_value == *oracle_value;
}

std::optional<bool> VerifyCase::vs_published() const {
    if (!published_value) return std::nullopt;
    if (formula_value) return *formula_value == *published_value;
    if (oracle_value) return *oracle_value == *published_value;
    return std::nullopt;
}

std::string VerifyCase::params() const {
    std::string out = quantity + "(";
    for (std::size_t i = 0; i < args.size(); ++i) out += (i ? "," : "") + std::to_string(args[i]);
    return out + ")";
}

bool VerifyReport::oracle_agrees() const { return oracle_mismatches() == 0; }

std::size_t VerifyReport::oracle_mismatches() const {
    return static_cast<std::size_t>(std::count_if(cases.begin(), cases.end(), [](const VerifyCase& c) {
        return c.formula_vs_oracle() == std::optional<bool>(false);
    }));
}

std::size_t VerifyReport::published_mismatches() const {
    return static_cast<std::size_t>(std::count_if(
        cases.begin(), cases.end(), [](const VerifyCase& c) { return c.vs_published() == std::optional<bool>(false); }));
}

std::size_t VerifyReport::oracle_absent() const {
    return static_cast<std::size_t>(
        std::count_if(cases.begin(), cases.end(), [](const VerifyCase& c) { return !c.oracle_value; }));
}

const VerifyCase* VerifyReport::find(std::string_view quantity, const std::vector<std::size_t>& args) const {
    for (const auto& c : cases) {
        if (c.quantity == quantity && c.args == args) return &c;
    }
    return nullptr;
}

namespace {

// Profiles are memoized per graph name so each graph is enumerated once.
class OracleRunner {
public:
    explicit OracleRunner(const VerifyOptions& options) : options_(options) {}

    // nullptr when the graph is over the cap or the budget.
    const CountProfile* profile(const Graph& g, const BigCount& expected_partitions) {
        if (g.order() > kOracleHardLimit) return nullptr;
        if (!options_.oracle.force) {
            if (g.order() > options_.oracle.max_order || expected_partitions > options_.oracle_budget) return nullptr;
        }
        auto it = cache_.find(g.name());
        if (it == cache_.end()) it = cache_.emplace(g.name(), stirling_profile(g, options_.oracle)).first;
        return &it->second;
    }

private:
    const VerifyOptions& options_;
    std::map<std::string, CountProfile> cache_;
};

std::optional<BigCount> count_of(const CountProfile* p, std::size_t k) {
    if (!p) return std::nullopt;
    return p->count(k);
}

std::optional<BigCount> bell_from(const CountProfile* p) {
    if (!p) return std::nullopt;
    return p->bell();
}

void for_each_size_multiset(std::size_t total, std::size_t largest, std::vector<std::size_t>& prefix,
                            const std::function<void(const std::vector<std::size_t>&)>& visit) {
    if (total == 0) {
        visit(prefix);
        return;
    }
    for (std::size_t s = std::min(total, largest); s >= 1; --s) {
        prefix.push_back(s);
        for_each_size_multiset(total - s, s, prefix, visit);
        prefix.pop_back();
    }
}

void verify_multipartite(std::size_t max_n, OracleRunner& oracle, std::vector<VerifyCase>& out) {
    const auto& published = PublishedValues::bundled();

    for (std::size_t total = 1; total <= max_n; ++total) {
        std::vector<std::size_t> prefix;
        for_each_size_multiset(total, total, prefix, [&](const std::vector<std::size_t>& sizes) {
            const MultipartiteSpec spec(sizes);
            const BigCount bell_formula = multipartite_bell(spec);
            const CountProfile* p = oracle.profile(complete_multipartite(sizes), bell_formula);
            for (std::size_t k = 1; k <= total; ++k) {
                auto args = sizes;
                args.push_back(k);
                out.push_back({"multipartite_stirling", args, multipartite_stirling(spec, k), count_of(p, k), {}});
            }
            out.push_back({"multipartite_bell", sizes, bell_formula, bell_from(p), {}});
        });
    }

    for (std::size_t n = 1; n <= max_n; ++n) {
        const MultipartiteSpec two({n, n});
        const std::vector<std::size_t> two_sizes{n, n};
        const CountProfile* p2 = oracle.profile(complete_multipartite(two_sizes), multipartite_bell(two));
        out.push_back({"knn_stirling4", {n}, knn_stirling4(n), count_of(p2, 4), published.value("a384980", n)});
        out.push_back({"knn_stirling5", {n}, knn_stirling5(n), count_of(p2, 5), published.value("a384981", n)});

        const MultipartiteSpec three({n, n, n});
        const std::vector<std::size_t> three_sizes{n, n, n};
        const CountProfile* p3 = oracle.profile(complete_multipartite(three_sizes), multipartite_bell(three));
        std::optional<BigCount> tripled;
        if (auto a = published.value("a384988", n)) tripled = BigCount(3) * *a;
        out.push_back({"knnn_stirling5", {n}, knnn_stirling5(n), count_of(p3, 5), tripled});

        std::optional<BigCount> oracle_third;
        if (p3) oracle_third = exact_div(p3->count(5), BigCount(3));
        const BigCount s2 = stirling2(n, 2);
        out.push_back({"a384988", {n}, s2 * s2 + stirling2(n, 3), oracle_third, published.value("a384988", n)});

        const auto row = triangle_row(SequenceId::A385432, n);
        const auto published_row = published.row("a385432", n);
        for (std::size_t i = 0; i < row.entries.size(); ++i) {
            const std::size_t k = row.k_min + i;
            std::optional<BigCount> pub;
            if (published_row && i < published_row->size()) pub = (*published_row)[i];
            out.push_back({"a385432", {n, k}, row.entries[i], count_of(p3, k), pub});
        }
    }
}

void verify_km(std::size_t max_n, OracleRunner& oracle, std::vector<VerifyCase>& out) {
    const auto& published = PublishedValues::bundled();
    for (std::size_t n = 1; n <= max_n; ++n) {
        const BigCount bell_formula = km_bell(n);
        const CountProfile* p = oracle.profile(bipartite_minus_matching(n), bell_formula);
        for (std::size_t k = 1; k <= 2 * n; ++k) {
            std::optional<BigCount> pub;
            if (k == 3) pub = published.value("km_stirling3", n);
            out.push_back({"km_stirling", {n, k}, km_stirling(n, k), count_of(p, k), pub});
        }
        if (auto listed = published.value("km_stirling3_listing", n)) {
            out.push_back({"km_stirling3_listing", {n}, km_stirling(n, 3), count_of(p, 3), listed});
        }
        out.push_back({"km_bell", {n}, bell_formula, bell_from(p), published.value("km_bell", n)});
    }
}

void verify_myc_star(std::size_t max_n, OracleRunner& oracle, std::vector<VerifyCase>& out) {
    const auto& published = PublishedValues::bundled();
    for (std::size_t n = 1; n <= max_n; ++n) {
        const Graph g = mycielskian(star(n));
        const BigCount bell_formula = myc_star_bell(n);
        const CountProfile* p = oracle.profile(g, bell_formula);

        out.push_back({"myc_star_bell", {n}, bell_formula, bell_from(p), published.value("myc_star_bell", n)});

        std::optional<BigCount> three;
        if (n >= 2) three = myc_star_stirling3(n);
        out.push_back({"myc_star_stirling3", {n}, three, count_of(p, 3), published.value("myc_star_stirling3", n)});

        out.push_back({"myc_star_stirling_2n", {n}, myc_star_stirling_2n(n), count_of(p, 2 * n),
                       published.value("myc_star_stirling_2n", n)});
        out.push_back({"nonadjacent_pairs", {n}, myc_star_stirling_2n(n), nonadjacent_pair_count(g), {}});

        out.push_back({"a000051", {n}, sequence_values(SequenceId::A000051, n, n).front().value, {},
                       published.value("a000051", n)});
        out.push_back({"a096376", {n}, sequence_values(SequenceId::A096376, n, n).front().value, {},
                       published.value("a096376", n)});
    }
}

void verify_identities(std::size_t max_n, OracleRunner& oracle, std::vector<VerifyCase>& out) {
    for (std::size_t n = 1; n <= max_n; ++n) {
        const CountProfile* e = oracle.profile(edgeless(n), bell(n));
        for (std::size_t k = 1; k <= n; ++k) out.push_back({"edgeless_stirling", {n, k}, stirling2(n, k), count_of(e, k), {}});

        out.push_back({"path_bell", {n}, bell(n - 1), bell_from(oracle.profile(path(n), bell(n - 1))), {}});
        out.push_back({"star_bell", {n}, bell(n - 1), bell_from(oracle.profile(star(n), bell(n - 1))), {}});

        std::vector<std::optional<std::size_t>> parents(n);
        for (std::size_t i = 1; i < n; ++i) parents[i] = (i - 1) / 2;
        out.push_back({"binary_tree_bell", {n}, bell(n - 1),
                       bell_from(oracle.profile(tree_from_parents(parents), bell(n - 1))), {}});

        if (n >= 4) {
            out.push_back({"path_complement_bell", {n}, fibonacci(n + 1),
                           bell_from(oracle.profile(complement(path(n)), fibonacci(n + 1))), {}});
            out.push_back({"cycle_complement_bell", {n}, lucas(n),
                           bell_from(oracle.profile(complement(cycle(n)), lucas(n))), {}});
        }
    }
}

}  // namespace

VerifyReport run_verify(VerifyFamily family, std::size_t max_n, const VerifyOptions& options) {
    VerifyReport report;
    report.family = std::string(to_string(family));
    report.max_n = max_n;
    OracleRunner oracle(options);
    switch (family) {
        case VerifyFamily::multipartite: verify_multipartite(max_n, oracle, report.cases); break;
        case VerifyFamily::km: verify_km(max_n, oracle, report.cases); break;
        case VerifyFamily::myc_star: verify_myc_star(max_n, oracle, report.cases); break;
        case VerifyFamily::identities: verify_identities(max_n, oracle, report.cases); break;
    }
    std::stable_sort(report.cases.begin(), report.cases.end(), [](const VerifyCase& a, const VerifyCase& b) {
        return std::tie(a.quantity, a.args) < std::tie(b.quantity, b.args);
    });
    return report;
}

namespace {

std::string flag(const std::optional<bool>& f) {
    if (!f) return "-";
    return *f ? "match" : "MISMATCH";
}

std::string value_or_dash(const std::optional<BigCount>& v) { return v ? v->to_string() : "-"; }

}  // namespace

void write_report_plain(const VerifyReport& report, std::ostream& out) {
    out << "family " << report.family << ", max_n " << report.max_n << "\n";
    out << "params | formula | oracle | published | formula_vs_oracle | vs_published\n";
    for (const auto& c : report.cases) {
        out << c.params() << " | " << value_or_dash(c.formula_value) << " | " << value_or_dash(c.oracle_value) << " | "
            << value_or_dash(c.published_value) << " | " << flag(c.formula_vs_oracle()) << " | "
            << flag(c.vs_published()) << "\n";
    }
    out << "cases " << report.cases.size() << ", oracle mismatches " << report.oracle_mismatches()
        << ", published mismatches " << report.published_mismatches() << ", oracle absent "
        << report.oracle_absent() << "\n";
}

void write_report_json(const VerifyReport& report, std::ostream& out) {
    nlohmann::ordered_json j;
    j["family"] = report.family;
    j["max_n"] = report.max_n;
    auto& cases = j["cases"] = nlohmann::ordered_json::array();
    for (const auto& c : report.cases) {
        nlohmann::ordered_json e;
        e["params"] = c.params();
        e["quantity"] = c.quantity;
        e["args"] = c.args;
        auto put = [&](const char* key, const std::optional<BigCount>& v) {
            e[key] = v ? nlohmann::ordered_json(v->to_string()) : nlohmann::ordered_json(nullptr);
        };
        put("formula_value", c.formula_value);
        put("oracle_value", c.oracle_value);
        put("published_value", c.published_value);
        auto put_flag = [&](const char* key, const std::optional<bool>& f) {
            e[key] = f ? nlohmann::ordered_json(*f) : nlohmann::ordered_json(nullptr);
        };
        put_flag("formula_vs_oracle", c.formula_vs_oracle());
        put_flag("vs_published", c.vs_published());
        cases.push_back(std::move(e));
    }
    j["summary"] = {{"cases", report.cases.size()},
                    {"oracle_mismatches", report.oracle_mismatches()},
                    {"published_mismatches", report.published_mismatches()},
                    {"oracle_absent", report.oracle_absent()}};
    out << j.dump(2) << '\n';
}

void write_report_csv(const VerifyReport& report, std::ostream& out) {
    auto opt = [](const std::optional<bool>& f) -> std::string {
        if (!f) return "";
        return *f ? "true" : "false";
    };
    auto val = [](const std::optional<BigCount>& v) { return v ? v->to_string() : std::string(); };
    out << "params,formula_value,oracle_value,published_value,formula_vs_oracle,vs_published\n";
    for (const auto& c : report.cases) {
        out << '"' << c.params() << "\"," << val(c.formula_value) << ',' << val(c.oracle_value) << ','
            << val(c.published_value) << ',' << opt(c.formula_vs_oracle()) << ',' << opt(c.vs_published()) << '\n';
    }
}

}  // namespace gstir
