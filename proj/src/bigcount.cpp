#include "gstir/bigcount.hpp"

#include "gstir/errors.hpp"

#include <ostream>

namespace gstir {

void BigCount::throw_negative() { throw NegativeResult("BigCount cannot hold a negative value"); }

BigCount::BigCount(const BigInt& v) : value_(v) {
    if (v.sign() < 0) throw NegativeResult("BigCount cannot hold a negative value");
}

BigCount BigCount::from_string(std::string_view decimal) {
    if (decimal.empty()) throw Error("empty decimal string");
    for (char c : decimal) {
        if (c < '0' || c > '9') throw Error("invalid decimal digit in '" + std::string(decimal) + "'");
    }
    BigCount out;
    out.value_ = BigInt(std::string(decimal));
    return out;
}

std::string BigCount::to_string() const { return value_.str(); }

std::ostream& operator<<(std::ostream& os, const BigCount& c) { return os << c.value_.str(); }

BigCount checked_sub(const BigCount& a, const BigCount& b) {
    if (b > a) throw NegativeResult(a.to_string() + " - " + b.to_string() + " is negative");
    return BigCount(BigInt(a.value() - b.value()));
}

BigCount exact_div(const BigCount& num, const BigCount& den) {
    if (den.is_zero()) throw OutOfDomain("division by zero");
    BigInt q;
    BigInt r;
    boost::multiprecision::divide_qr(num.value(), den.value(), q, r);
    if (!r.is_zero()) {
        throw InexactDivision(num.to_string() + " is not divisible by " + den.to_string());
    }
    return BigCount(q);
}

BigCount pow(const BigCount& base, unsigned exponent) {
    return BigCount(BigInt(boost::multiprecision::pow(base.value(), exponent)));
}

}  // namespace gstir
