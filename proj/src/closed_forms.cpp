#include "gstir/closed_forms.hpp"

#include "gstir/combinatorics.hpp"
#include "gstir/errors.hpp"

#include <numeric>
#include <string>

namespace gstir {

MultipartiteSpec::MultipartiteSpec(std::vector<std::size_t> sizes) : sizes_(std::move(sizes)) {
    if (sizes_.empty()) throw InvalidSize("multipartite spec needs at least one part");
    for (std::size_t s : sizes_) {
        if (s < 1) throw InvalidSize("multipartite part sizes must be >= 1");
    }
}

std::size_t MultipartiteSpec::order() const noexcept {
    return std::accumulate(sizes_.begin(), sizes_.end(), std::size_t{0});
}

BigCount multipartite_stirling(const MultipartiteSpec& spec, std::size_t k) {
    if (k < spec.parts() || k > spec.order()) return BigCount{};
    // ways[t] = number of ways the parts seen so far use exactly t blocks,
    // each part contributing at least one.
    std::vector<BigCount> ways{BigCount(1)};
    for (std::size_t n_i : spec.sizes()) {
        std::vector<BigCount> next(ways.size() + n_i);
        for (std::size_t t = 0; t < ways.size(); ++t) {
            if (ways[t].is_zero()) continue;
            for (std::size_t j = 1; j <= n_i; ++j) next[t + j] += ways[t] * stirling2(n_i, j);
        }
        ways = std::move(next);
    }
    return k < ways.size() ? ways[k] : BigCount{};
}

BigCount multipartite_bell(const MultipartiteSpec& spec) {
    BigCount product(1);
    for (std::size_t n_i : spec.sizes()) product *= bell(n_i);
    return product;
}

namespace {

void require_positive(std::size_t n, const char* what) {
    if (n < 1) throw OutOfDomain(std::string(what) + " requires n >= 1");
}

BigCount p(unsigned base, std::size_t exponent) { return pow(BigCount(base), static_cast<unsigned>(exponent)); }

void cross_check(const BigCount& a, const BigCount& b, const char* what, std::size_t n) {
    if (a != b) {
        throw FormulaMismatch(std::string(what) + "(" + std::to_string(n) + "): " + a.to_string() +
                              " != " + b.to_string());
    }
}

}  // namespace

BigCount knn_stirling4(std::size_t n) {
    require_positive(n, "knn_stirling4");
    return checked_sub(BigCount(2) + p(3, n - 1) + p(4, n - 1), p(2, n + 1));
}

BigCount knn_stirling5(std::size_t n) {
    require_positive(n, "knn_stirling5");
    const BigCount positive = BigCount(3) * p(6, n - 1) + BigCount(6) * p(2, n);
    const BigCount negative = BigCount(5) * p(4, n - 1) + BigCount(6) * p(3, n - 1) + BigCount(4);
    BigCount value = exact_div(checked_sub(positive, negative), BigCount(3));
    cross_check(value, multipartite_stirling(MultipartiteSpec({n, n}), 5), "knn_stirling5", n);
    return value;
}

BigCount knnn_stirling5(std::size_t n) {
    require_positive(n, "knnn_stirling5");
    const BigCount positive = BigCount(18) + BigCount(2) * p(3, n) + BigCount(3) * p(4, n);
    BigCount value = exact_div(checked_sub(positive, BigCount(18) * p(2, n)), BigCount(4));
    const BigCount s2 = stirling2(n, 2);
    cross_check(value, BigCount(3) * s2 * s2 + BigCount(3) * stirling2(n, 3), "knnn_stirling5", n);
    return value;
}

BigCount km_stirling(std::size_t n, std::size_t k) {
    require_positive(n, "km_stirling");
    BigCount total;
    for (std::size_t s = 0; s <= n; ++s) {
        if (k + s < n) continue;
        const std::size_t r = k + s - n;
        BigCount inner;
        for (std::size_t j = 0; j <= r; ++j) inner += stirling2(s, j) * stirling2(s, r - j);
        if (!inner.is_zero()) total += binomial(n, s) * inner;
    }
    return total;
}

BigCount km_bell(std::size_t n) {
    require_positive(n, "km_bell");
    BigCount total;
    for (std::size_t k = 0; k <= n; ++k) {
        const BigCount b = bell(k);
        total += binomial(n, k) * b * b;
    }
    return total;
}

BigCount myc_star_bell(std::size_t n) {
    require_positive(n, "myc_star_bell");
    const std::size_t m = n - 1;
    BigCount paired;
    for (std::size_t k = 0; k <= m; ++k) paired += binomial(m, k) * bell(2 * m - k);
    BigCount alone;
    for (std::size_t i = 0; i <= m; ++i) {
        for (std::size_t j = 0; j <= m; ++j) alone += binomial(m, i) * binomial(m, j) * bell(2 * m - i - j);
    }
    return BigCount(2) * paired + alone;
}

BigCount myc_star_stirling3(std::size_t n) {
    if (n < 2) throw OutOfDomain("myc_star_stirling3 requires n >= 2 (the star needs a leaf)");
    return p(2, n) + BigCount(1);
}

BigCount myc_star_stirling_2n(std::size_t n) {
    require_positive(n, "myc_star_stirling_2n");
    return checked_sub(BigCount(static_cast<std::uint64_t>(2 * n * n + 3)), BigCount(static_cast<std::uint64_t>(3 * n)));
}

}  // namespace gstir
