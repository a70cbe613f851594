#pragma once

#include <stdexcept>
#include <string>

namespace facta {

/// Violated domain rule: bad construction argument, failed precondition,
/// or an element outside the monoid/ring it was claimed to live in.
class domain_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The exact oracle refuses inputs beyond its configured scale instead of
/// risking a wrong answer.
class oracle_scale_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Syntax error in an expression or literal, with the byte offset where
/// scanning stopped.
class parse_error : public std::runtime_error {
public:
    parse_error(std::size_t pos, const std::string& expected)
        : std::runtime_error("parse error at position " + std::to_string(pos) +
                             ": expected " + expected),
          pos_(pos) {}

    std::size_t position() const { return pos_; }

private:
    std::size_t pos_;
};

} // namespace facta
