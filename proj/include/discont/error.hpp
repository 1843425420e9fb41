#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace discont {

enum class ErrorKind {
    invalid_symbol,
    invalid_position,
    alphabet_mismatch,
    parse_error,
    not_gnf,
    unknown_symbol,
    empty_rule_set,
    empty_input,
    not_derivable,
    not_applicable,
    invalid_parameters,
    unknown_suite,
    filter_on_nonbinary,
    not_clearing,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries one of the kinds above so
/// callers (notably the CLI) can map it to an exit code.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

/// A parse failure tagged with its 1-based line number (0 when not line-bound).
class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& what)
        : Error(ErrorKind::parse_error, line == 0 ? what : "line " + std::to_string(line) + ": " + what),
          line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

}  // namespace discont
