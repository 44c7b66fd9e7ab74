#pragma once

#include <stdexcept>
#include <string>

namespace setcalc {

/// Base class for every error raised by the calculus.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Inverse powerset applied to (something that denotes) the empty set.
class DomainError : public Error {
public:
    using Error::Error;
};

/// Operator applied to a term shape it is not defined on (e.g. P on a union form).
class UnsupportedOperandError : public Error {
public:
    using Error::Error;
};

/// Relation queried across incompatible levels or on union forms.
class RelationUndefinedError : public Error {
public:
    using Error::Error;
};

/// level_of on a proper union form.
class UndefinedLevelError : public Error {
public:
    using Error::Error;
};

/// CH-cardinality queried on a term that falls outside the level-(<=1) fragment.
class OutsideEzfError : public Error {
public:
    using Error::Error;
};

/// between_witness called on a pair that is not strictly ordered.
class OrderingError : public Error {
public:
    using Error::Error;
};

/// No eligible payload core for the density witness (all candidates strip to {}).
class WitnessUnavailableError : public Error {
public:
    using Error::Error;
};

/// A configured resource limit (universe rank, powerset width) was exceeded.
class ResourceError : public Error {
public:
    using Error::Error;
};

/// Set literal whose element is not a Zermelo subexpression.
class StructuralError : public Error {
public:
    StructuralError(const std::string& msg, int line, int column)
        : Error(msg), line_(line), column_(column) {}

    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

/// Syntax error with 1-based source position.
class ParseError : public Error {
public:
    ParseError(const std::string& msg, int line, int column)
        : Error(msg), line_(line), column_(column) {}

    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

} // namespace setcalc
