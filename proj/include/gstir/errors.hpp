#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gstir {

// Base of every error the library raises on bad input or an impossible
// request. Logic bugs (a closed form disagreeing with its second route)
// surface as FormulaMismatch, which derives from std::logic_error instead.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidSize : public Error {
public:
    using Error::Error;
};

class NotATree : public Error {
public:
    using Error::Error;
};

class TooLarge : public Error {
public:
    using Error::Error;
};

class OutOfDomain : public Error {
public:
    using Error::Error;
};

class InexactDivision : public Error {
public:
    using Error::Error;
};

class NegativeResult : public Error {
public:
    using Error::Error;
};

class NotALinearSequence : public Error {
public:
    using Error::Error;
};

class NotATriangle : public Error {
public:
    using Error::Error;
};

class NonMonotoneIndex : public Error {
public:
    using Error::Error;
};

class NoFormula : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(std::size_t offset, const std::string& message)
        : Error("parse error at offset " + std::to_string(offset) + ": " + message),
          offset_(offset),
          message_(message) {}

    std::size_t offset() const noexcept { return offset_; }
    const std::string& detail() const noexcept { return message_; }

private:
    std::size_t offset_;
    std::string message_;
};

class FormulaMismatch : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace gstir
