#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <concepts>
#include <type_traits>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace gstir {

// Signed arbitrary-precision integer. Used where a value may legitimately go
// negative: falling factorials of negative arguments and power-basis
// coefficients of chromatic polynomials.
using BigInt = boost::multiprecision::cpp_int;

// Nonnegative arbitrary-precision integer, the value type of every count.
// Subtraction and division are checked: a result that would be negative or
// inexact throws instead of wrapping or truncating.
class BigCount {
public:
    BigCount() = default;
    template <std::integral T>
    BigCount(T v) : value_(v) {  // NOLINT(google-explicit-constructor)
        if constexpr (std::is_signed_v<T>) {
            if (v < 0) throw_negative();
        }
    }
    explicit BigCount(const BigInt& v);

    static BigCount from_string(std::string_view decimal);
    std::string to_string() const;

    const BigInt& value() const noexcept { return value_; }
    bool is_zero() const noexcept { return value_.is_zero(); }

    BigCount& operator+=(const BigCount& rhs) {
        value_ += rhs.value_;
        return *this;
    }
    BigCount& operator*=(const BigCount& rhs) {
        value_ *= rhs.value_;
        return *this;
    }

    friend BigCount operator+(BigCount lhs, const BigCount& rhs) { return lhs += rhs; }
    friend BigCount operator*(BigCount lhs, const BigCount& rhs) { return lhs *= rhs; }

    friend bool operator==(const BigCount& a, const BigCount& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const BigCount& a, const BigCount& b) {
        if (a.value_ < b.value_) return std::strong_ordering::less;
        if (a.value_ > b.value_) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    friend std::ostream& operator<<(std::ostream& os, const BigCount& c);

private:
    [[noreturn]] static void throw_negative();

    BigInt value_{0};
};

// a - b; throws NegativeResult when b > a.
BigCount checked_sub(const BigCount& a, const BigCount& b);

// num / den; throws InexactDivision on a nonzero remainder and OutOfDomain
// when den is zero.
BigCount exact_div(const BigCount& num, const BigCount& den);

BigCount pow(const BigCount& base, unsigned exponent);

}  // namespace gstir
