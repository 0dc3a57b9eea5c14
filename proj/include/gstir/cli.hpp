#pragma once

#include "gstir/graph_spec.hpp"
#include "gstir/oracle.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace gstir {

// Process exit codes of the gstir binary.
enum ExitCode : int {
    kExitOk = 0,
    kExitUsage = 1,
    kExitComputation = 2,
    kExitMismatch = 3,
};

// Closed-form profile for families that have one; throws NoFormula (with a
// hint) otherwise. Covers K(...) and KM(n) completely.
CountProfile formula_profile(const GraphSpec& spec);

// Closed-form S(G;k). Myc(St(n)) supports k = 3 (n >= 2) and k = 2n only.
BigCount formula_count(const GraphSpec& spec, std::size_t k);

// Closed-form B(G) for K(...), KM(n) and Myc(St(n)).
BigCount formula_bell(const GraphSpec& spec);

// JSON form of a profile:
//   {"graph": ..., "order": n, "stirling": {"1": "...", ...}, "bell": "...", "method": ...}
struct ProfileDocument {
    std::string graph;
    std::string method;
    CountProfile profile;

    bool operator==(const ProfileDocument&) const = default;
};

std::string to_json(const ProfileDocument& doc);
// Throws Error on malformed input or when bell disagrees with the counts.
ProfileDocument profile_from_json(std::string_view text);

// Entry point behind the gstir binary. args[0] is the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gstir
