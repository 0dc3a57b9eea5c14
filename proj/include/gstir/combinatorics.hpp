#pragma once

#include "gstir/bigcount.hpp"

#include <cstddef>
#include <cstdint>
#include <shared_mutex>
#include <vector>

namespace gstir {

// Triangle of Stirling numbers of the second kind, grown a whole row at a
// time on demand. Lookups take a shared lock; growth takes the exclusive one,
// so concurrent callers always observe the same values.
class StirlingTable {
public:
    StirlingTable();

    BigCount get(std::size_t n, std::size_t k);
    std::size_t max_n() const;

    // The process-wide table shared by every module.
    static StirlingTable& global();

private:
    void grow_to(std::size_t n);

    mutable std::shared_mutex mutex_;
    std::vector<std::vector<BigCount>> rows_;  // rows_[n][k], k = 0..n
};

BigCount stirling2(std::size_t n, std::size_t k);
BigCount bell(std::size_t n);
BigCount binomial(std::size_t n, std::size_t k);
BigInt falling_factorial(const BigInt& x, std::size_t k);
BigCount fibonacci(std::size_t n);
BigCount lucas(std::size_t n);

}  // namespace gstir
