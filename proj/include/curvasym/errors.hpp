#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace curvasym {

// Error taxonomy. Each class maps to one CLI exit code; see cli.cpp.

// Malformed curve text (bad token, stray character, unsupported exponent). Exit 2.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::runtime_error(what + " (at position " + std::to_string(position) + ")"),
          position_(position) {}
    // For input errors with no meaningful text position (CLI usage, config values).
    explicit ParseError(const std::string& what) : std::runtime_error(what), position_(0) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

// Curve unusable for the asymptotic pipeline (zero polynomial, constant, no shear works). Exit 3.
class DegenerateCurveError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Newton polygon / lifting failure: recursion cap, root finder stuck, inconsistent chart. Exit 4.
class ExpansionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Branch or leaf selector out of range. Exit 5.
class SelectorError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A sampling window produced no usable points. Exit 6.
class EmptySampleError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace curvasym
