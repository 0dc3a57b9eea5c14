#include "gstir/combinatorics.hpp"

#include <mutex>

namespace gstir {

StirlingTable::StirlingTable() { rows_.push_back({BigCount(1)}); }

StirlingTable& StirlingTable::global() {
    static StirlingTable table;
    return table;
}

std::size_t StirlingTable::max_n() const {
    std::shared_lock lock(mutex_);
    return rows_.size() - 1;
}

BigCount StirlingTable::get(std::size_t n, std::size_t k) {
    if (k > n) return BigCount{};
    {
        std::shared_lock lock(mutex_);
        if (n < rows_.size()) return rows_[n][k];
    }
    grow_to(n);
    std::shared_lock lock(mutex_);
    return rows_[n][k];
}

void StirlingTable::grow_to(std::size_t n) {
    std::unique_lock lock(mutex_);
    while (rows_.size() <= n) {
        const auto& prev = rows_.back();
        const std::size_t m = rows_.size();
        std::vector<BigCount> row(m + 1);
        // S2(m,0) = 0 for m >= 1.
        for (std::size_t k = 1; k <= m; ++k) {
            BigCount v = (k < prev.size()) ? prev[k] * BigCount(static_cast<std::uint64_t>(k)) : BigCount{};
            v += prev[k - 1];
            row[k] = std::move(v);
        }
        rows_.push_back(std::move(row));
    }
}

BigCount stirling2(std::size_t n, std::size_t k) { return StirlingTable::global().get(n, k); }

BigCount bell(std::size_t n) {
    BigCount total;
    for (std::size_t k = 0; k <= n; ++k) total += stirling2(n, k);
    return total;
}

BigCount binomial(std::size_t n, std::size_t k) {
    if (k > n) return BigCount{};
    if (k > n - k) k = n - k;
    BigInt acc = 1;
    for (std::size_t i = 1; i <= k; ++i) {
        acc *= n - k + i;
        acc /= i;  // exact: acc is C(n-k+i, i) after this step
    }
    return BigCount(acc);
}

BigInt falling_factorial(const BigInt& x, std::size_t k) {
    BigInt acc = 1;
    for (std::size_t i = 0; i < k; ++i) {
        acc *= x - BigInt(i);
        if (acc.is_zero()) break;
    }
    return acc;
}

namespace {

BigCount linear_recurrence(std::size_t n, BigCount a, BigCount b) {
    for (std::size_t i = 0; i < n; ++i) {
        BigCount next = a + b;
        a = std::move(b);
        b = std::move(next);
    }
    return a;
}

}  // namespace

BigCount fibonacci(std::size_t n) { return linear_recurrence(n, 0, 1); }
BigCount lucas(std::size_t n) { return linear_recurrence(n, 2, 1); }

}  // namespace gstir
