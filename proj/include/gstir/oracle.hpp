#pragma once

#include "gstir/bigcount.hpp"
#include "gstir/graph.hpp"
#include "gstir/polynomial.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace gstir {

// The search core packs vertex sets into one machine word.
inline constexpr std::size_t kOracleHardLimit = 64;
inline constexpr std::size_t kDefaultOracleCap = 24;

struct OracleOptions {
    std::size_t jobs = 1;
    // Number of leading vertices whose assignments are enumerated serially to
    // form independent subtasks. Defaults to min(6, n). Results do not depend
    // on it.
    std::optional<std::size_t> split_depth;
    std::size_t max_order = kDefaultOracleCap;
    // Lifts max_order (but never kOracleHardLimit).
    bool force = false;
};

// Graphical Stirling numbers S(G;k) for k = 1..n and their sum B(G).
class CountProfile {
public:
    CountProfile() : bell_(1) {}
    // counts[k] for k = 0..order; counts[0] must be zero unless order == 0.
    CountProfile(std::size_t order, std::vector<BigCount> counts);

    std::size_t order() const noexcept { return order_; }
    BigCount count(std::size_t k) const { return k >= 1 && k < counts_.size() ? counts_[k] : BigCount{}; }
    const BigCount& bell() const noexcept { return bell_; }
    // Smallest k with a nonzero count, i.e. the chromatic number; 0 for n = 0.
    std::size_t min_blocks() const;

    friend bool operator==(const CountProfile&, const CountProfile&) = default;

private:
    std::size_t order_ = 0;
    std::vector<BigCount> counts_;
    BigCount bell_;
};

// Counts proper partitions by canonical block assignment: vertices are taken
// in descending-degree order and each may join an earlier block with no
// neighbor in it, or open the next fresh block. Every unordered partition is
// produced exactly once.
//
// Throws TooLarge above options.max_order (unless forced) or kOracleHardLimit.
// Practical up to roughly 18 vertices for sparse graphs.
CountProfile stirling_profile(const Graph& g, const OracleOptions& options = {});

BigCount bell_of(const Graph& g, const OracleOptions& options = {});

// F(G;x) = sum_k S(G;k) x^k.
Polynomial partition_polynomial(const Graph& g, const OracleOptions& options = {});
Polynomial partition_polynomial(const CountProfile& profile);

// chi(G;x) = sum_k S(G;k) x_(k), returned in the power basis.
Polynomial chromatic_polynomial(const Graph& g, const OracleOptions& options = {});
Polynomial chromatic_falling_form(const CountProfile& profile);

// Counts colorings with q labeled colors by direct backtracking, independent
// of the partition search. Throws TooLarge, unless forced, when the graph
// exceeds options.max_order or q^n exceeds 2^40.
BigCount proper_coloring_count(const Graph& g, std::size_t q, const OracleOptions& options = {});

// C(n,2) - |E|.
BigCount nonadjacent_pair_count(const Graph& g);

}  // namespace gstir
