#pragma once

#include "gstir/bigcount.hpp"

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string_view>
#include <vector>

namespace gstir {

enum class SequenceId { A000051, A096376, A384980, A384981, A384988, A385432, A385437 };

std::string_view to_string(SequenceId id);
// Throws OutOfDomain for an unknown id.
SequenceId parse_sequence_id(std::string_view text);
bool is_triangle(SequenceId id);

// First valid index: 0 for A000051, 1 for everything else (triangle rows
// start at n = 1).
std::size_t sequence_offset(SequenceId id);

struct Term {
    std::size_t index;
    BigCount value;
    bool operator==(const Term&) const = default;
};

// Terms a(from)..a(to):
//   A000051  2^n + 1
//   A096376  2n^2 + n + 2
//   A384980  S(K_{n,n}; 4)
//   A384981  S(K_{n,n}; 5)
//   A384988  S2(n,2)^2 + S2(n,3)
// Throws NotALinearSequence for triangle ids and OutOfDomain for from < offset
// or from > to.
std::vector<Term> sequence_values(SequenceId id, std::size_t from, std::size_t to);

struct TriangleRow {
    std::size_t n;
    std::size_t k_min;
    std::vector<BigCount> entries;  // columns k_min .. k_min + entries.size() - 1

    std::size_t k_max() const noexcept { return k_min + entries.size() - 1; }
    bool operator==(const TriangleRow&) const = default;
};

// A385432 row n: S(K_{n,n,n}; k) for k = 3..3n.
// A385437 row n: S(K_{n,n} - M; k) for k = 2..2n.
TriangleRow triangle_row(SequenceId id, std::size_t n);

// "<index> <value>\n" per term. Throws NonMonotoneIndex unless indices
// strictly increase; nothing is written in that case.
void write_bfile(std::span<const Term> terms, std::ostream& out);

void write_sequence_json(SequenceId id, std::span<const Term> terms, std::ostream& out);
void write_sequence_csv(std::span<const Term> terms, std::ostream& out);
void write_sequence_plain(std::span<const Term> terms, std::ostream& out);

void write_triangle_json(SequenceId id, std::span<const TriangleRow> rows, std::ostream& out);
void write_triangle_csv(std::span<const TriangleRow> rows, std::ostream& out);
void write_triangle_plain(std::span<const TriangleRow> rows, std::ostream& out);

}  // namespace gstir
