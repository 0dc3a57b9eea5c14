#pragma once

#include "gstir/bigcount.hpp"
#include "gstir/oracle.hpp"

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace gstir {

// Read-only view of the published values bundled into the binary
// (data/published_values.json).
class PublishedValues {
public:
    static const PublishedValues& bundled();
    static PublishedValues from_json(std::string_view text);

    int version() const noexcept { return version_; }
    std::optional<BigCount> value(std::string_view table, std::size_t n) const;
    std::optional<std::vector<BigCount>> row(std::string_view triangle, std::size_t n) const;

private:
    struct Table {
        std::string name;
        std::vector<std::pair<std::size_t, BigCount>> values;
    };
    struct Triangle {
        std::string name;
        std::vector<std::pair<std::size_t, std::vector<BigCount>>> rows;
    };

    int version_ = 0;
    std::vector<Table> tables_;
    std::vector<Triangle> triangles_;
};

std::string_view bundled_published_json();

enum class VerifyFamily { multipartite, km, myc_star, identities };

std::string_view to_string(VerifyFamily f);
// Throws OutOfDomain for an unknown family name.
VerifyFamily parse_verify_family(std::string_view text);

struct VerifyCase {
    std::string quantity;
    std::vector<std::size_t> args;
    // Absent when the closed form is outside its domain (e.g. S(Myc(St_1); 3)).
    std::optional<BigCount> formula_value;
    // Absent when the graph is above the oracle cap or its predicted number of
    // partitions exceeds the enumeration budget.
    std::optional<BigCount> oracle_value;
    std::optional<BigCount> published_value;

    // Present whenever both compared values are.
    std::optional<bool> formula_vs_oracle() const;
    // Compares the published value with the formula value, or with the oracle
    // value when no formula applies.
    std::optional<bool> vs_published() const;

    std::string params() const;  // e.g. "km_bell(2)"
};

struct VerifyReport {
    std::string family;
    std::size_t max_n = 0;
    std::vector<VerifyCase> cases;  // sorted by (quantity, args)

    bool oracle_agrees() const;
    std::size_t oracle_mismatches() const;
    std::size_t published_mismatches() const;
    std::size_t oracle_absent() const;

    const VerifyCase* find(std::string_view quantity, const std::vector<std::size_t>& args) const;
};

struct VerifyOptions {
    OracleOptions oracle;
    // Largest number of partitions the oracle may enumerate for one graph;
    // the formula's own Bell number serves as the estimate.
    BigCount oracle_budget = BigCount(std::uint64_t{50'000'000});
};

// Runs every closed form of the family for parameters up to max_n against the
// oracle and against the published values.
VerifyReport run_verify(VerifyFamily family, std::size_t max_n, const VerifyOptions& options = {});

void write_report_plain(const VerifyReport& report, std::ostream& out);
void write_report_json(const VerifyReport& report, std::ostream& out);
void write_report_csv(const VerifyReport& report, std::ostream& out);

}  // namespace gstir
