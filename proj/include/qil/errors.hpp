#ifndef QIL_ERRORS_HPP
#define QIL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qil {

/// Base class for all library errors.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct division_by_zero : error {
    division_by_zero() : error("division by zero") {}
};

/// Exact division requested but the divisor does not divide the dividend.
struct not_divisible : error {
    not_divisible() : error("not divisible") {}
    explicit not_divisible(const std::string& what) : error(what) {}
};

/// Exponents not divisible by the requested stretch factor.
struct not_divisible_exponent : error {
    not_divisible_exponent() : error("exponent not divisible") {}
};

struct dimension_mismatch : error {
    dimension_mismatch() : error("variable count mismatch") {}
};

/// Type vector rejected by a substitution precondition.
struct invalid_type : error {
    explicit invalid_type(const std::string& what) : error(what) {}
};

struct zero_vector : error {
    zero_vector() : error("zero vector has no direction") {}
};

struct zero_polynomial : error {
    zero_polynomial() : error("zero polynomial has no decomposition") {}
};

struct empty_input : error {
    empty_input() : error("empty input") {}
};

struct invalid_input : error {
    explicit invalid_input(const std::string& what) : error(what) {}
};

/// Internal contract violation; maps to CLI exit code 2.
struct internal_error : error {
    explicit internal_error(const std::string& what) : error("internal error: " + what) {}
};

/// Text input rejected; carries 1-based position. Maps to CLI exit code 1.
struct parse_error : error {
    int line;
    int column;
    parse_error(int line_, int column_, const std::string& what)
        : error("parse error at line " + std::to_string(line_) + ", column " +
                std::to_string(column_) + ": " + what),
          line(line_),
          column(column_) {}
};

} // namespace qil

#endif
