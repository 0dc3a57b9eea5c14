#include "gstir/oracle.hpp"

#include "gstir/combinatorics.hpp"
#include "gstir/errors.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <numeric>
#include <thread>

namespace gstir {

CountProfile::CountProfile(std::size_t order, std::vector<BigCount> counts)
    : order_(order), counts_(std::move(counts)) {
    if (counts_.size() != order_ + 1) throw InvalidSize("profile needs exactly order+1 count slots");
    if (order_ == 0) {
        counts_ = {BigCount{}};
        bell_ = 1;
        return;
    }
    for (const auto& c : counts_) bell_ += c;
}

std::size_t CountProfile::min_blocks() const {
    for (std::size_t k = 1; k < counts_.size(); ++k) {
        if (!counts_[k].is_zero()) return k;
    }
    return 0;
}

namespace {

using Mask = std::uint64_t;

void check_oracle_size(std::size_t n, const OracleOptions& options, const char* what) {
    if (n > kOracleHardLimit) {
        throw TooLarge(std::string(what) + ": " + std::to_string(n) + " vertices exceeds the hard limit of " +
                       std::to_string(kOracleHardLimit));
    }
    if (n > options.max_order && !options.force) {
        throw TooLarge(std::string(what) + ": " + std::to_string(n) + " vertices exceeds the cap of " +
                       std::to_string(options.max_order) + " (use --force to lift it)");
    }
}

// Vertices renumbered by processing position. conflicts[i] holds the
// positions adjacent to position i.
std::vector<Mask> processing_order(const Graph& g) {
    const std::size_t n = g.order();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return g.degree(a) > g.degree(b); });
    std::vector<std::size_t> position(n);
    for (std::size_t i = 0; i < n; ++i) position[order[i]] = i;

    std::vector<Mask> conflicts(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (g.adjacent(order[i], order[j])) conflicts[i] |= Mask{1} << position[order[j]];
        }
    }
    return conflicts;
}

struct SearchState {
    std::array<Mask, kOracleHardLimit> blocks{};
    std::size_t used = 0;
};

// Per-k tallies. A single search cannot overflow 64 bits in feasible time:
// every increment corresponds to at least one enumerated partition.
class PartitionCounter {
public:
    PartitionCounter(const std::vector<Mask>& conflicts, std::vector<std::uint64_t>& tally)
        : conflicts_(conflicts), n_(conflicts.size()), tally_(tally) {}

    void run(SearchState& s, std::size_t next) {
        if (next == n_) {
            ++tally_[s.used];
            return;
        }
        const Mask conflict = conflicts_[next];
        const Mask bit = Mask{1} << next;
        if (next + 1 == n_) {
            std::uint64_t fits = 0;
            for (std::size_t b = 0; b < s.used; ++b) fits += (s.blocks[b] & conflict) == 0;
            tally_[s.used] += fits;
            ++tally_[s.used + 1];
            return;
        }
        for (std::size_t b = 0; b < s.used; ++b) {
            if (s.blocks[b] & conflict) continue;
            s.blocks[b] |= bit;
            run(s, next + 1);
            s.blocks[b] &= ~bit;
        }
        s.blocks[s.used++] = bit;
        run(s, next + 1);
        s.blocks[--s.used] = 0;
    }

private:
    const std::vector<Mask>& conflicts_;
    std::size_t n_;
    std::vector<std::uint64_t>& tally_;
};

void collect_prefixes(const std::vector<Mask>& conflicts, SearchState& s, std::size_t next, std::size_t depth,
                      std::vector<SearchState>& out) {
    if (next == depth) {
        out.push_back(s);
        return;
    }
    const Mask conflict = conflicts[next];
    const Mask bit = Mask{1} << next;
    for (std::size_t b = 0; b < s.used; ++b) {
        if (s.blocks[b] & conflict) continue;
        s.blocks[b] |= bit;
        collect_prefixes(conflicts, s, next + 1, depth, out);
        s.blocks[b] &= ~bit;
    }
    s.blocks[s.used++] = bit;
    collect_prefixes(conflicts, s, next + 1, depth, out);
    s.blocks[--s.used] = 0;
}

}  // namespace

CountProfile stirling_profile(const Graph& g, const OracleOptions& options) {
    const std::size_t n = g.order();
    check_oracle_size(n, options, "stirling_profile");
    if (n == 0) return CountProfile{};

    const std::vector<Mask> conflicts = processing_order(g);
    const std::size_t depth = std::min(options.split_depth.value_or(6), n);

    std::vector<SearchState> prefixes;
    SearchState root;
    collect_prefixes(conflicts, root, 0, depth, prefixes);

    const std::size_t workers = std::clamp<std::size_t>(options.jobs, 1, std::max<std::size_t>(prefixes.size(), 1));
    std::vector<std::vector<std::uint64_t>> tallies(workers, std::vector<std::uint64_t>(n + 2, 0));
    std::atomic<std::size_t> next_task{0};

    auto work = [&](std::size_t w) {
        PartitionCounter counter(conflicts, tallies[w]);
        for (std::size_t t = next_task.fetch_add(1); t < prefixes.size(); t = next_task.fetch_add(1)) {
            SearchState s = prefixes[t];
            counter.run(s, depth);
        }
    };

    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work, w);
    }

    std::vector<BigCount> counts(n + 1);
    for (const auto& tally : tallies) {
        for (std::size_t k = 1; k <= n; ++k) counts[k] += BigCount(tally[k]);
    }
    return CountProfile(n, std::move(counts));
}

BigCount bell_of(const Graph& g, const OracleOptions& options) { return stirling_profile(g, options).bell(); }

Polynomial partition_polynomial(const CountProfile& profile) {
    std::vector<BigInt> coeffs(profile.order() + 1);
    for (std::size_t k = 1; k <= profile.order(); ++k) coeffs[k] = profile.count(k).value();
    return Polynomial(Basis::power, std::move(coeffs));
}

Polynomial partition_polynomial(const Graph& g, const OracleOptions& options) {
    return partition_polynomial(stirling_profile(g, options));
}

Polynomial chromatic_falling_form(const CountProfile& profile) {
    std::vector<BigInt> coeffs(profile.order() + 1);
    for (std::size_t k = 1; k <= profile.order(); ++k) coeffs[k] = profile.count(k).value();
    // The empty graph has exactly one (empty) coloring for every q.
    if (profile.order() == 0) coeffs[0] = 1;
    return Polynomial(Basis::falling_factorial, std::move(coeffs));
}

Polynomial chromatic_polynomial(const Graph& g, const OracleOptions& options) {
    return chromatic_falling_form(stirling_profile(g, options)).to_power_basis();
}

namespace {

class ColoringCounter {
public:
    ColoringCounter(const Graph& g, std::size_t q) : g_(g), q_(q), color_(g.order(), 0) {}

    std::uint64_t run(std::size_t v) {
        if (v == g_.order()) return 1;
        std::uint64_t total = 0;
        for (std::size_t c = 0; c < q_; ++c) {
            bool ok = true;
            for (std::size_t u = 0; u < v && ok; ++u) ok = !(g_.adjacent(u, v) && color_[u] == c);
            if (!ok) continue;
            color_[v] = c;
            total += run(v + 1);
        }
        return total;
    }

private:
    const Graph& g_;
    std::size_t q_;
    std::vector<std::size_t> color_;
};

}  // namespace

BigCount proper_coloring_count(const Graph& g, std::size_t q, const OracleOptions& options) {
    const std::size_t n = g.order();
    if (!options.force) {
        check_oracle_size(n, options, "proper_coloring_count");
        if (q > 1 && n > 0 && static_cast<double>(n) * std::log2(static_cast<double>(q)) > 40.0) {
            throw TooLarge("proper_coloring_count: q^n exceeds 2^40 (use --force to lift it)");
        }
    }
    return BigCount(ColoringCounter(g, q).run(0));
}

BigCount nonadjacent_pair_count(const Graph& g) {
    return checked_sub(binomial(g.order(), 2), BigCount(static_cast<std::uint64_t>(g.edge_count())));
}

}  // namespace gstir
