#pragma once

#include "gstir/bigcount.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace gstir {

// Block sizes n_1..n_l of a complete multipartite graph; each >= 1, l >= 1.
class MultipartiteSpec {
public:
    explicit MultipartiteSpec(std::vector<std::size_t> sizes);

    std::span<const std::size_t> sizes() const noexcept { return sizes_; }
    std::size_t parts() const noexcept { return sizes_.size(); }
    std::size_t order() const noexcept;

private:
    std::vector<std::size_t> sizes_;
};

// Sum over compositions j_1 + ... + j_l = k with j_i >= 1 of prod S2(n_i, j_i):
// every independent set of K(n_1..n_l) lives inside one part.
BigCount multipartite_stirling(const MultipartiteSpec& spec, std::size_t k);

// prod Bell(n_i).
BigCount multipartite_bell(const MultipartiteSpec& spec);

// S(K_{n,n}; 4) = 2 - 2^{n+1} + 3^{n-1} + 4^{n-1}.
BigCount knn_stirling4(std::size_t n);

// S(K_{n,n}; 5), evaluated as
// (3*6^{n-1} - 5*4^{n-1} - 6*3^{n-1} + 6*2^n - 4) / 3 with a checked division
// and cross-checked against multipartite_stirling({n,n}, 5).
BigCount knn_stirling5(std::size_t n);

// S(K_{n,n,n}; 5) = (18 - 18*2^n + 2*3^n + 3*4^n) / 4, cross-checked against
// 3*S2(n,2)^2 + 3*S2(n,3).
BigCount knnn_stirling5(std::size_t n);

// S(K_{n,n} - M; k). s counts the matched pairs {u_i, v_i} that are split up;
// the other n - s pairs form blocks of their own.
BigCount km_stirling(std::size_t n, std::size_t k);

// B(K_{n,n} - M) = sum_k C(n,k) Bell(k)^2.
BigCount km_bell(std::size_t n);

// B(Myc(St_n)) for the star on n vertices, m = n - 1:
//   2 * sum_k C(m,k) Bell(2m-k) + sum_{i,j} C(m,i) C(m,j) Bell(2m-i-j)
// The three terms correspond to the center sharing a block with its copy,
// sharing one with the apex, or sitting alone.
BigCount myc_star_bell(std::size_t n);

// S(Myc(St_n); 3) = 2^n + 1. Throws OutOfDomain for n < 2, where the star has
// no leaf and the count is 1 instead.
BigCount myc_star_stirling3(std::size_t n);

// S(Myc(St_n); 2n) = 2n^2 - 3n + 3, the number of non-adjacent vertex pairs.
BigCount myc_star_stirling_2n(std::size_t n);

}  // namespace gstir
