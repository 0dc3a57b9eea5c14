#include "gstir/polynomial.hpp"

#include "gstir/combinatorics.hpp"

namespace gstir {

std::string_view to_string(Basis b) { return b == Basis::power ? "power" : "falling_factorial"; }

Polynomial::Polynomial(Basis basis, std::vector<BigInt> coefficients)
    : basis_(basis), coeffs_(std::move(coefficients)) {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

BigInt Polynomial::evaluate(const BigInt& x) const {
    BigInt acc = 0;
    if (basis_ == Basis::power) {
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    } else {
        for (std::size_t k = 0; k < coeffs_.size(); ++k) {
            if (!coeffs_[k].is_zero()) acc += coeffs_[k] * falling_factorial(x, k);
        }
    }
    return acc;
}

Polynomial Polynomial::to_power_basis() const {
    if (basis_ == Basis::power) return *this;
    std::vector<BigInt> out(coeffs_.size());
    // term holds the power-basis expansion of x(x-1)...(x-k+1).
    std::vector<BigInt> term{1};
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        if (!coeffs_[k].is_zero()) {
            for (std::size_t d = 0; d < term.size(); ++d) out[d] += coeffs_[k] * term[d];
        }
        std::vector<BigInt> next(term.size() + 1);
        for (std::size_t d = 0; d < term.size(); ++d) {
            next[d + 1] += term[d];
            next[d] -= term[d] * BigInt(k);
        }
        term = std::move(next);
    }
    return Polynomial(Basis::power, std::move(out));
}

std::string Polynomial::render() const {
    if (coeffs_.empty()) return "0";
    std::string out;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        const BigInt& c = coeffs_[k];
        if (c.is_zero()) continue;
        const bool negative = c.sign() < 0;
        const BigInt magnitude = negative ? BigInt(-c) : c;
        if (out.empty()) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        std::string var;
        if (k > 0) {
            if (basis_ == Basis::falling_factorial) var = "x_(" + std::to_string(k) + ")";
            else var = k == 1 ? "x" : "x^" + std::to_string(k);
        }
        if (var.empty() || magnitude != 1) out += magnitude.str();
        out += var;
    }
    return out;
}

}  // namespace gstir
