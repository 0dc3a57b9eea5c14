#include "gstir/sequences.hpp"

#include "gstir/closed_forms.hpp"
#include "gstir/combinatorics.hpp"
#include "gstir/errors.hpp"

#include "json.hpp"

#include <array>
#include <ostream>
#include <string>
#include <utility>

namespace gstir {

namespace {

constexpr std::array<std::pair<SequenceId, std::string_view>, 7> kNames = {{
    {SequenceId::A000051, "A000051"},
    {SequenceId::A096376, "A096376"},
    {SequenceId::A384980, "A384980"},
    {SequenceId::A384981, "A384981"},
    {SequenceId::A384988, "A384988"},
    {SequenceId::A385432, "A385432"},
    {SequenceId::A385437, "A385437"},
}};

BigCount linear_term(SequenceId id, std::size_t n) {
    switch (id) {
        case SequenceId::A000051:
            return pow(BigCount(2), static_cast<unsigned>(n)) + BigCount(1);
        case SequenceId::A096376:
            return BigCount(static_cast<std::uint64_t>(2 * n * n + n + 2));
        case SequenceId::A384980:
            return knn_stirling4(n);
        case SequenceId::A384981:
            return knn_stirling5(n);
        case SequenceId::A384988: {
            const BigCount s2 = stirling2(n, 2);
            return s2 * s2 + stirling2(n, 3);
        }
        default:
            throw NotALinearSequence(std::string(to_string(id)) + " is a triangle");
    }
}

}  // namespace

std::string_view to_string(SequenceId id) {
    for (const auto& [value, name] : kNames) {
        if (value == id) return name;
    }
    return "?";
}

SequenceId parse_sequence_id(std::string_view text) {
    for (const auto& [value, name] : kNames) {
        if (name == text) return value;
    }
    throw OutOfDomain("unknown sequence id '" + std::string(text) + "'");
}

bool is_triangle(SequenceId id) { return id == SequenceId::A385432 || id == SequenceId::A385437; }

std::size_t sequence_offset(SequenceId id) { return id == SequenceId::A000051 ? 0 : 1; }

std::vector<Term> sequence_values(SequenceId id, std::size_t from, std::size_t to) {
    if (is_triangle(id)) {
        throw NotALinearSequence(std::string(to_string(id)) + " is a triangle; use triangle_row");
    }
    if (from < sequence_offset(id)) {
        throw OutOfDomain(std::string(to_string(id)) + " starts at index " + std::to_string(sequence_offset(id)));
    }
    if (from > to) throw OutOfDomain("empty index range " + std::to_string(from) + ".." + std::to_string(to));
    std::vector<Term> out;
    out.reserve(to - from + 1);
    for (std::size_t n = from; n <= to; ++n) out.push_back({n, linear_term(id, n)});
    return out;
}

TriangleRow triangle_row(SequenceId id, std::size_t n) {
    if (!is_triangle(id)) throw NotATriangle(std::string(to_string(id)) + " is a linear sequence");
    if (n < 1) throw OutOfDomain("triangle rows start at n = 1");
    TriangleRow row{n, 0, {}};
    if (id == SequenceId::A385432) {
        const MultipartiteSpec spec({n, n, n});
        row.k_min = 3;
        for (std::size_t k = 3; k <= 3 * n; ++k) row.entries.push_back(multipartite_stirling(spec, k));
    } else {
        row.k_min = 2;
        for (std::size_t k = 2; k <= 2 * n; ++k) row.entries.push_back(km_stirling(n, k));
    }
    return row;
}

void write_bfile(std::span<const Term> terms, std::ostream& out) {
    for (std::size_t i = 1; i < terms.size(); ++i) {
        if (terms[i].index <= terms[i - 1].index) {
            throw NonMonotoneIndex("b-file indices must strictly increase (" + std::to_string(terms[i - 1].index) +
                                   " then " + std::to_string(terms[i].index) + ")");
        }
    }
    for (const auto& t : terms) out << t.index << ' ' << t.value << '\n';
}

void write_sequence_json(SequenceId id, std::span<const Term> terms, std::ostream& out) {
    nlohmann::ordered_json j;
    j["id"] = std::string(to_string(id));
    j["offset"] = terms.empty() ? sequence_offset(id) : terms.front().index;
    auto& list = j["terms"] = nlohmann::ordered_json::array();
    for (const auto& t : terms) list.push_back(t.value.to_string());
    out << j.dump() << '\n';
}

void write_sequence_csv(std::span<const Term> terms, std::ostream& out) {
    out << "index,value\n";
    for (const auto& t : terms) out << t.index << ',' << t.value << '\n';
}

void write_sequence_plain(std::span<const Term> terms, std::ostream& out) {
    for (std::size_t i = 0; i < terms.size(); ++i) out << (i ? ", " : "") << terms[i].value;
    out << '\n';
}

void write_triangle_json(SequenceId id, std::span<const TriangleRow> rows, std::ostream& out) {
    nlohmann::ordered_json j;
    j["id"] = std::string(to_string(id));
    auto& list = j["rows"] = nlohmann::ordered_json::array();
    for (const auto& r : rows) {
        nlohmann::ordered_json row;
        row["n"] = r.n;
        row["k_min"] = r.k_min;
        auto& entries = row["entries"] = nlohmann::ordered_json::array();
        for (const auto& e : r.entries) entries.push_back(e.to_string());
        list.push_back(std::move(row));
    }
    out << j.dump() << '\n';
}

void write_triangle_csv(std::span<const TriangleRow> rows, std::ostream& out) {
    out << "n,k,value\n";
    for (const auto& r : rows) {
        for (std::size_t i = 0; i < r.entries.size(); ++i) out << r.n << ',' << r.k_min + i << ',' << r.entries[i] << '\n';
    }
}

void write_triangle_plain(std::span<const TriangleRow> rows, std::ostream& out) {
    for (const auto& r : rows) {
        out << "n=" << r.n << ": [";
        for (std::size_t i = 0; i < r.entries.size(); ++i) out << (i ? ", " : "") << r.entries[i];
        out << "]\n";
    }
}

}  // namespace gstir
