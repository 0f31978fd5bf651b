#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace ybmap {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Raised when an evaluation point lies on the pole set of a rational map.
/// Verifiers catch this and resample the whole input tuple.
struct PoleError : Error {
    using Error::Error;
};

struct DivisionByZero : PoleError {
    DivisionByZero() : PoleError("division by zero") {}
};

struct SingularMatrix : PoleError {
    SingularMatrix() : PoleError("singular matrix") {}
};

struct SamplingExhausted : Error {
    explicit SamplingExhausted(std::size_t tries)
        : Error("sampling exhausted after " + std::to_string(tries) + " draws") {}
};

struct ParseError : Error {
    std::size_t line;
    std::size_t column;
    std::vector<std::string> expected;

    ParseError(std::size_t line_, std::size_t column_, std::vector<std::string> expected_,
               const std::string& found)
        : Error(format(line_, column_, expected_, found)),
          line(line_),
          column(column_),
          expected(std::move(expected_)) {}

private:
    static std::string format(std::size_t l, std::size_t c, const std::vector<std::string>& exp,
                              const std::string& found) {
        std::string msg = "parse error at " + std::to_string(l) + ":" + std::to_string(c) +
                          ": found " + found;
        if (!exp.empty()) {
            msg += ", expected one of {";
            for (std::size_t i = 0; i < exp.size(); ++i) {
                if (i) msg += ", ";
                msg += exp[i];
            }
            msg += "}";
        }
        return msg;
    }
};

struct UndeclaredSymbol : Error {
    std::string symbol;
    explicit UndeclaredSymbol(std::string s)
        : Error("undeclared symbol '" + s + "'"), symbol(std::move(s)) {}
};

struct UnboundSymbol : Error {
    std::string symbol;
    explicit UnboundSymbol(std::string s)
        : Error("unbound symbol '" + s + "'"), symbol(std::move(s)) {}
};

struct ArityMismatch : Error {
    using Error::Error;
};

struct UnknownQuasigroup : Error {
    explicit UnknownQuasigroup(const std::string& name) : Error("unknown quasigroup '" + name + "'") {}
};

struct IncompatibleStructure : Error {
    using Error::Error;
};

struct UnknownEntry : Error {
    explicit UnknownEntry(const std::string& name) : Error("unknown catalog entry '" + name + "'") {}
};

struct UnsupportedOrder : Error {
    explicit UnsupportedOrder(std::size_t n)
        : Error("matrix order " + std::to_string(n) + " is not supported (only 2)") {}
};

}  // namespace ybmap
