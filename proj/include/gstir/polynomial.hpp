#pragma once

#include "gstir/bigcount.hpp"

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace gstir {

enum class Basis { power, falling_factorial };

std::string_view to_string(Basis b);

// Integer polynomial with coefficients indexed by degree. In the
// falling-factorial basis, coefficient k multiplies x(x-1)...(x-k+1).
// Trailing zero coefficients are trimmed, so the zero polynomial has none.
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(Basis basis, std::vector<BigInt> coefficients);

    Basis basis() const noexcept { return basis_; }
    const std::vector<BigInt>& coefficients() const noexcept { return coeffs_; }
    BigInt coefficient(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : BigInt(0); }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    // -1 for the zero polynomial.
    long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }

    BigInt evaluate(const BigInt& x) const;
    Polynomial to_power_basis() const;

    // Lowest degree first, e.g. "2x - 3x^2 + x^3"; falling factorials are
    // written x_(k).
    std::string render() const;

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
    Basis basis_ = Basis::power;
    std::vector<BigInt> coeffs_;
};

}  // namespace gstir
