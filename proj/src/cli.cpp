#include "gstir/cli.hpp"

#include "gstir/closed_forms.hpp"
#include "gstir/combinatorics.hpp"
#include "gstir/errors.hpp"
#include "gstir/sequences.hpp"
#include "gstir/verify.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <ostream>
#include <sstream>

namespace gstir {

namespace {

template <class... Fs>
struct Overloaded : Fs... {
    using Fs::operator()...;
};
template <class... Fs>
Overloaded(Fs...) -> Overloaded<Fs...>;

std::optional<std::size_t> star_inside_mycielskian(const GraphSpec& spec) {
    const auto* m = std::get_if<spec::Mycielskian>(&spec.node);
    if (!m) return std::nullopt;
    const auto* s = std::get_if<spec::Star>(&m->inner->node);
    if (!s) return std::nullopt;
    return s->n;
}

[[noreturn]] void no_formula(const GraphSpec& spec) {
    std::string hint;
    std::visit(Overloaded{
                   [&](const spec::Tree&) { hint = "B(tree on n vertices) = Bell(n-1)"; },
                   [&](const spec::Path&) { hint = "B(path on n vertices) = Bell(n-1)"; },
                   [&](const spec::Star&) { hint = "B(star on n vertices) = Bell(n-1)"; },
                   [&](const spec::Edgeless&) { hint = "S(E_n;k) is the classical Stirling number S2(n,k)"; },
                   [&](const spec::Complement& c) {
                       if (std::holds_alternative<spec::Path>(c.inner->node)) hint = "B(Comp(P(n))) = F(n+1)";
                       else if (std::holds_alternative<spec::Cycle>(c.inner->node)) hint = "B(Comp(C(n))) = L(n), n >= 4";
                   },
                   [](const auto&) {},
               },
               spec.node);
    std::string message = "no closed form for " + render(spec) + "; use --method oracle";
    if (!hint.empty()) message += " (" + hint + ")";
    throw NoFormula(message);
}

// Order computed from the description alone, so closed forms never need to
// build graphs beyond the supported vertex count.
std::size_t spec_order(const GraphSpec& spec) {
    return std::visit(Overloaded{
                          [](const spec::Edgeless& e) { return e.n; },
                          [](const spec::Path& p) { return p.n; },
                          [](const spec::Cycle& c) { return c.n; },
                          [](const spec::Star& s) { return s.n; },
                          [](const spec::BipartiteMinusMatching& km) { return 2 * km.n; },
                          [](const spec::Multipartite& m) {
                              std::size_t total = 0;
                              for (auto s : m.sizes) total += s;
                              return total;
                          },
                          [](const spec::Tree& t) { return t.parents.size(); },
                          [](const spec::Mycielskian& m) { return 2 * spec_order(*m.inner) + 1; },
                          [](const spec::Complement& c) { return spec_order(*c.inner); },
                      },
                      spec.node);
}

}  // namespace

CountProfile formula_profile(const GraphSpec& spec) {
    const std::size_t n = spec_order(spec);
    std::vector<BigCount> counts(n + 1);
    if (const auto* m = std::get_if<spec::Multipartite>(&spec.node)) {
        const MultipartiteSpec ms(m->sizes);
        for (std::size_t k = 1; k <= n; ++k) counts[k] = multipartite_stirling(ms, k);
        CountProfile p(n, std::move(counts));
        if (p.bell() != multipartite_bell(ms)) throw FormulaMismatch("multipartite profile does not sum to its Bell number");
        return p;
    }
    if (const auto* km = std::get_if<spec::BipartiteMinusMatching>(&spec.node)) {
        for (std::size_t k = 1; k <= n; ++k) counts[k] = km_stirling(km->n, k);
        CountProfile p(n, std::move(counts));
        if (p.bell() != km_bell(km->n)) throw FormulaMismatch("K_{n,n} - M profile does not sum to its Bell number");
        return p;
    }
    if (star_inside_mycielskian(spec)) {
        throw NoFormula("closed forms for " + render(spec) +
                        " cover only k = 3, k = 2n and the Bell number; pass -k or use --method oracle");
    }
    no_formula(spec);
}

BigCount formula_count(const GraphSpec& spec, std::size_t k) {
    if (const auto n = star_inside_mycielskian(spec)) {
        if (k == 2 * *n) return myc_star_stirling_2n(*n);
        if (k == 3) return myc_star_stirling3(*n);
        throw NoFormula("closed forms for " + render(spec) + " cover only k = 3 and k = 2n; use --method oracle");
    }
    return formula_profile(spec).count(k);
}

BigCount formula_bell(const GraphSpec& spec) {
    if (const auto n = star_inside_mycielskian(spec)) return myc_star_bell(*n);
    if (const auto* m = std::get_if<spec::Multipartite>(&spec.node)) return multipartite_bell(MultipartiteSpec(m->sizes));
    if (const auto* km = std::get_if<spec::BipartiteMinusMatching>(&spec.node)) return km_bell(km->n);
    no_formula(spec);
}

std::string to_json(const ProfileDocument& doc) {
    nlohmann::ordered_json j;
    j["graph"] = doc.graph;
    j["order"] = doc.profile.order();
    auto& s = j["stirling"] = nlohmann::ordered_json::object();
    for (std::size_t k = 1; k <= doc.profile.order(); ++k) s[std::to_string(k)] = doc.profile.count(k).to_string();
    j["bell"] = doc.profile.bell().to_string();
    j["method"] = doc.method;
    return j.dump();
}

ProfileDocument profile_from_json(std::string_view text) {
    try {
        const auto j = nlohmann::json::parse(text);
        ProfileDocument doc;
        doc.graph = j.at("graph").get<std::string>();
        doc.method = j.at("method").get<std::string>();
        const auto order = j.at("order").get<std::size_t>();
        std::vector<BigCount> counts(order + 1);
        for (const auto& [key, value] : j.at("stirling").items()) {
            const auto k = std::stoul(key);
            if (k < 1 || k > order) throw Error("stirling key " + key + " outside 1.." + std::to_string(order));
            counts[k] = BigCount::from_string(value.get<std::string>());
        }
        doc.profile = CountProfile(order, std::move(counts));
        if (doc.profile.bell() != BigCount::from_string(j.at("bell").get<std::string>())) {
            throw Error("bell does not equal the sum of the stirling counts");
        }
        return doc;
    } catch (const nlohmann::json::exception& e) {
        throw Error(std::string("malformed profile JSON: ") + e.what());
    }
}

namespace {

enum class Method { oracle, formula, both };
enum class Format { plain, json, csv, bfile };

const std::map<std::string, Method> kMethods = {
    {"oracle", Method::oracle}, {"formula", Method::formula}, {"both", Method::both}};
const std::map<std::string, Format> kFormats = {
    {"plain", Format::plain}, {"json", Format::json}, {"csv", Format::csv}, {"bfile", Format::bfile}};

std::string method_name(Method m) {
    switch (m) {
        case Method::oracle: return "oracle";
        case Method::formula: return "formula";
        case Method::both: return "both";
    }
    return "?";
}

struct CommonFlags {
    Format format = Format::plain;
    Method method = Method::oracle;
    bool force = false;
    std::size_t jobs = 1;

    OracleOptions oracle() const {
        OracleOptions o;
        o.jobs = jobs;
        o.force = force;
        return o;
    }
};

void add_format(CLI::App* cmd, CommonFlags& f) {
    cmd->add_option("--format", f.format, "plain|json|csv|bfile")->transform(CLI::CheckedTransformer(kFormats));
}
void add_method(CLI::App* cmd, CommonFlags& f) {
    cmd->add_option("--method", f.method, "oracle|formula|both")->transform(CLI::CheckedTransformer(kMethods));
}
void add_oracle_flags(CLI::App* cmd, CommonFlags& f) {
    cmd->add_flag("--force", f.force, "lift the oracle's vertex cap");
    cmd->add_option("--jobs", f.jobs, "worker threads for the oracle")->check(CLI::PositiveNumber);
}

void reject_bfile(const CommonFlags& f, const char* command) {
    if (f.format == Format::bfile) throw OutOfDomain(std::string("--format bfile is only available for seq, not ") + command);
}

// One value computed by up to two routes.
struct Dual {
    std::optional<BigCount> oracle;
    std::optional<BigCount> formula;
    bool mismatch() const { return oracle && formula && *oracle != *formula; }
};

void write_dual(const std::string& graph, std::size_t order, std::optional<std::size_t> k, const char* key,
                Method method, const Dual& d, Format format, std::ostream& out) {
    if (format == Format::json) {
        nlohmann::ordered_json j;
        j["graph"] = graph;
        j["order"] = order;
        if (k) j["k"] = *k;
        j["method"] = method_name(method);
        if (method == Method::both) {
            j["oracle"] = d.oracle->to_string();
            j["formula"] = d.formula->to_string();
            j["match"] = !d.mismatch();
        } else {
            j[key] = (d.oracle ? *d.oracle : *d.formula).to_string();
        }
        out << j.dump() << '\n';
        return;
    }
    if (format == Format::csv) {
        out << "graph," << (k ? "k," : "") << "oracle,formula,match\n";
        out << '"' << graph << "\",";
        if (k) out << *k << ',';
        out << (d.oracle ? d.oracle->to_string() : "") << ',' << (d.formula ? d.formula->to_string() : "") << ',';
        if (method == Method::both) out << (d.mismatch() ? "false" : "true");
        out << '\n';
        return;
    }
    if (method == Method::both) {
        out << "oracle: " << *d.oracle << "\nformula: " << *d.formula << '\n'
            << (d.mismatch() ? "MISMATCH" : "match") << '\n';
    } else {
        out << (d.oracle ? *d.oracle : *d.formula) << '\n';
    }
}

void write_profile(const std::string& graph, Method method, const std::optional<CountProfile>& oracle,
                   const std::optional<CountProfile>& formula, Format format, std::ostream& out) {
    const CountProfile& primary = oracle ? *oracle : *formula;
    const bool both = oracle && formula;
    if (format == Format::json) {
        if (!both) {
            out << to_json({graph, method_name(method), primary}) << '\n';
            return;
        }
        auto j = nlohmann::ordered_json::parse(to_json({graph, method_name(method), primary}));
        nlohmann::ordered_json f;
        auto& s = f["stirling"] = nlohmann::ordered_json::object();
        for (std::size_t k = 1; k <= formula->order(); ++k) s[std::to_string(k)] = formula->count(k).to_string();
        f["bell"] = formula->bell().to_string();
        j["formula"] = std::move(f);
        j["match"] = *oracle == *formula;
        out << j.dump() << '\n';
        return;
    }
    if (format == Format::csv) {
        out << (both ? "k,oracle,formula\n" : "k,value\n");
        for (std::size_t k = 1; k <= primary.order(); ++k) {
            out << k << ',' << primary.count(k);
            if (both) out << ',' << formula->count(k);
            out << '\n';
        }
        return;
    }
    out << "graph " << graph << ", order " << primary.order() << ", method " << method_name(method) << '\n';
    for (std::size_t k = 1; k <= primary.order(); ++k) {
        out << "S(G;" << k << ") = " << primary.count(k);
        if (both) out << " | " << formula->count(k);
        out << '\n';
    }
    out << "B(G) = " << primary.bell();
    if (both) out << " | " << formula->bell();
    out << '\n';
    if (both) out << (*oracle == *formula ? "match" : "MISMATCH") << '\n';
}

int cmd_count(const std::string& text, std::optional<std::size_t> k, const CommonFlags& f, std::ostream& out) {
    reject_bfile(f, "count");
    const GraphSpec spec = parse_graph_spec(text);
    const std::string name = render(spec);
    const bool use_oracle = f.method != Method::formula;
    const bool use_formula = f.method != Method::oracle;

    if (k) {
        Dual d;
        // Formula first: an unsupported family fails before any enumeration.
        if (use_formula) d.formula = formula_count(spec, *k);
        if (use_oracle) d.oracle = stirling_profile(realize(spec), f.oracle()).count(*k);
        write_dual(name, spec_order(spec), k, "value", f.method, d, f.format, out);
        return d.mismatch() ? kExitMismatch : kExitOk;
    }
    std::optional<CountProfile> formula;
    std::optional<CountProfile> oracle;
    if (use_formula) formula = formula_profile(spec);
    if (use_oracle) oracle = stirling_profile(realize(spec), f.oracle());
    write_profile(name, f.method, oracle, formula, f.format, out);
    return oracle && formula && *oracle != *formula ? kExitMismatch : kExitOk;
}

int cmd_bell(const std::string& text, const CommonFlags& f, std::ostream& out) {
    reject_bfile(f, "bell");
    const GraphSpec spec = parse_graph_spec(text);
    Dual d;
    if (f.method != Method::oracle) d.formula = formula_bell(spec);
    if (f.method != Method::formula) d.oracle = bell_of(realize(spec), f.oracle());
    write_dual(render(spec), spec_order(spec), std::nullopt, "bell", f.method, d, f.format, out);
    return d.mismatch() ? kExitMismatch : kExitOk;
}

int cmd_poly(const std::string& text, const std::string& kind, const std::string& basis, const CommonFlags& f,
             std::ostream& out) {
    reject_bfile(f, "poly");
    const GraphSpec spec = parse_graph_spec(text);
    std::optional<CountProfile> formula;
    std::optional<CountProfile> oracle;
    if (f.method != Method::oracle) formula = formula_profile(spec);
    if (f.method != Method::formula) oracle = stirling_profile(realize(spec), f.oracle());
    const CountProfile& profile = oracle ? *oracle : *formula;

    Polynomial poly;
    if (kind == "partition") {
        poly = partition_polynomial(profile);
    } else {
        poly = chromatic_falling_form(profile);
        if (basis == "power") poly = poly.to_power_basis();
    }

    if (f.format == Format::json) {
        nlohmann::ordered_json j;
        j["graph"] = render(spec);
        j["kind"] = kind;
        j["basis"] = std::string(to_string(poly.basis()));
        auto& c = j["coefficients"] = nlohmann::ordered_json::array();
        for (const auto& v : poly.coefficients()) c.push_back(v.str());
        j["text"] = poly.render();
        out << j.dump() << '\n';
    } else if (f.format == Format::csv) {
        out << "degree,coefficient\n";
        for (std::size_t d = 0; d < poly.coefficients().size(); ++d) out << d << ',' << poly.coefficients()[d].str() << '\n';
    } else {
        out << to_string(poly.basis()) << ": " << poly.render() << '\n';
    }
    return oracle && formula && *oracle != *formula ? kExitMismatch : kExitOk;
}

int cmd_seq(const std::string& id_text, std::optional<std::size_t> from, std::optional<std::size_t> to,
            const CommonFlags& f, std::ostream& out) {
    const SequenceId id = parse_sequence_id(id_text);
    if (is_triangle(id)) throw NotALinearSequence(id_text + " is a triangle; use the triangle command");
    const std::size_t first = from.value_or(sequence_offset(id));
    const std::size_t last = to.value_or(first + 9);
    const auto terms = sequence_values(id, first, last);
    switch (f.format) {
        case Format::bfile: write_bfile(terms, out); break;
        case Format::json: write_sequence_json(id, terms, out); break;
        case Format::csv: write_sequence_csv(terms, out); break;
        case Format::plain: write_sequence_plain(terms, out); break;
    }
    return kExitOk;
}

int cmd_triangle(const std::string& id_text, std::size_t from_row, std::size_t rows, const CommonFlags& f,
                 std::ostream& out) {
    reject_bfile(f, "triangle");
    const SequenceId id = parse_sequence_id(id_text);
    if (!is_triangle(id)) throw NotATriangle(id_text + " is a linear sequence; use the seq command");
    std::vector<TriangleRow> out_rows;
    for (std::size_t n = from_row; n < from_row + rows; ++n) out_rows.push_back(triangle_row(id, n));
    switch (f.format) {
        case Format::json: write_triangle_json(id, out_rows, out); break;
        case Format::csv: write_triangle_csv(out_rows, out); break;
        default: write_triangle_plain(out_rows, out); break;
    }
    return kExitOk;
}

int cmd_verify(const std::string& family_text, std::optional<std::size_t> max_n, const std::string& budget,
               const CommonFlags& f, std::ostream& out) {
    reject_bfile(f, "verify");
    const VerifyFamily family = parse_verify_family(family_text);
    VerifyOptions options;
    options.oracle = f.oracle();
    if (!budget.empty()) options.oracle_budget = BigCount::from_string(budget);
    std::size_t default_max = 5;
    if (family == VerifyFamily::identities) default_max = 9;
    const VerifyReport report = run_verify(family, max_n.value_or(default_max), options);
    switch (f.format) {
        case Format::json: write_report_json(report, out); break;
        case Format::csv: write_report_csv(report, out); break;
        default: write_report_plain(report, out); break;
    }
    return report.oracle_agrees() ? kExitOk : kExitMismatch;
}

int exit_code_for(const std::exception& e) {
    if (dynamic_cast<const ParseError*>(&e) || dynamic_cast<const InvalidSize*>(&e) ||
        dynamic_cast<const NotATree*>(&e) || dynamic_cast<const NoFormula*>(&e) ||
        dynamic_cast<const NotALinearSequence*>(&e) || dynamic_cast<const NotATriangle*>(&e) ||
        dynamic_cast<const OutOfDomain*>(&e)) {
        return kExitUsage;
    }
    return kExitComputation;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Graphical Stirling and Bell numbers: exact enumeration, closed forms, OEIS sequences", "gstir"};
    app.require_subcommand(1);

    CommonFlags flags;
    std::string graph_text;
    std::optional<std::size_t> k;

    auto* count = app.add_subcommand("count", "graphical Stirling numbers S(G;k) of a graph");
    count->add_option("graph", graph_text, "graph description, e.g. K(3,3) or Myc(St(4))")->required();
    count->add_option("-k", k, "number of blocks (omit for the full profile)");
    add_method(count, flags);
    add_format(count, flags);
    add_oracle_flags(count, flags);

    auto* bell_cmd = app.add_subcommand("bell", "graphical Bell number B(G)");
    bell_cmd->add_option("graph", graph_text, "graph description")->required();
    add_method(bell_cmd, flags);
    add_format(bell_cmd, flags);
    add_oracle_flags(bell_cmd, flags);

    std::string kind = "partition";
    std::string basis = "power";
    auto* poly = app.add_subcommand("poly", "partition or chromatic polynomial");
    poly->add_option("graph", graph_text, "graph description")->required();
    poly->add_option("--kind", kind, "partition|chromatic")->check(CLI::IsMember({"partition", "chromatic"}));
    poly->add_option("--basis", basis, "power|falling (chromatic only)")->check(CLI::IsMember({"power", "falling"}));
    add_method(poly, flags);
    add_format(poly, flags);
    add_oracle_flags(poly, flags);

    std::string id_text;
    std::optional<std::size_t> from;
    std::optional<std::size_t> to;
    auto* seq = app.add_subcommand("seq", "terms of a linear OEIS sequence");
    seq->add_option("id", id_text, "A000051, A096376, A384980, A384981 or A384988")->required();
    seq->add_option("--from", from, "first index (default: the sequence offset)");
    seq->add_option("--to", to, "last index (default: from + 9)");
    add_format(seq, flags);

    std::size_t rows = 4;
    std::size_t from_row = 1;
    auto* triangle = app.add_subcommand("triangle", "rows of an OEIS triangle");
    triangle->add_option("id", id_text, "A385432 or A385437")->required();
    triangle->add_option("--rows", rows, "number of rows")->check(CLI::PositiveNumber);
    triangle->add_option("--from-row", from_row, "first row index")->check(CLI::PositiveNumber);
    add_format(triangle, flags);

    std::string family;
    std::optional<std::size_t> max_n;
    std::string budget;
    auto* verify = app.add_subcommand("verify", "cross-check closed forms against the oracle and published values");
    verify->add_option("family", family, "multipartite|km|myc-star|identities")->required();
    verify->add_option("--max-n", max_n, "largest family parameter");
    verify->add_option("--oracle-budget", budget, "max partitions the oracle may enumerate per graph");
    add_format(verify, flags);
    add_oracle_flags(verify, flags);

    std::vector<const char*> argv;
    argv.reserve(args.size());
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*count) return cmd_count(graph_text, k, flags, out);
        if (*bell_cmd) return cmd_bell(graph_text, flags, out);
        if (*poly) return cmd_poly(graph_text, kind, basis, flags, out);
        if (*seq) return cmd_seq(id_text, from, to, flags, out);
        if (*triangle) return cmd_triangle(id_text, from_row, rows, flags, out);
        if (*verify) return cmd_verify(family, max_n, budget, flags, out);
    } catch (const Error& e) {
        err << "gstir: " << e.what() << '\n';
        return exit_code_for(e);
    } catch (const std::exception& e) {
        err << "gstir: internal error: " << e.what() << '\n';
        return kExitComputation;
    }
    return kExitUsage;
}

}  // namespace gstir
