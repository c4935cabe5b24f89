#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace cwlab {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DivisionByZero : Error {
    DivisionByZero() : Error("division by zero") {}
};

/// Scalar grammar failure; carries the byte offset and the token set that
/// would have been accepted at that position.
struct ParseError : Error {
    std::size_t offset;
    std::vector<std::string> expected;

    ParseError(std::size_t off, std::vector<std::string> exp, const std::string& what_arg)
        : Error(what_arg), offset(off), expected(std::move(exp)) {}
};

struct DimensionMismatch : Error {
    using Error::Error;
};

struct ModeCountMismatch : Error {
    using Error::Error;
};

struct DependentBasis : Error {
    using Error::Error;
};

struct NotClosedError : Error {
    std::string left, right;   // generator labels (or indices as text)
    std::string residual;      // rendering of the part outside the span

    NotClosedError(std::string l, std::string r, std::string res)
        : Error("bracket [" + l + ", " + r + "] leaves the span; residual " + res),
          left(std::move(l)), right(std::move(r)), residual(std::move(res)) {}
};

struct ZeroElement : Error {
    ZeroElement() : Error("zero element has no root") {}
};

struct UnknownLabel : Error {
    UnknownLabel(const std::string& label) : Error("unknown generator label '" + label + "'") {}
};

struct UnknownName : Error {
    UnknownName(const std::string& name) : Error("unknown generator name '" + name + "'") {}
};

struct NoPartner : Error {
    NoPartner(const std::string& label, const std::string& why)
        : Error("generator '" + label + "' has no usable negative-root partner: " + why) {}
};

struct DegenerateCartan : Error {
    using Error::Error;
};

/// A required square root (Killing norm) falls outside Q(i, sqrt2, sqrt3).
struct NotRepresentable : Error {
    using Error::Error;
};

struct SchemaError : Error {
    std::string path;
    SchemaError(std::string p, const std::string& what_arg)
        : Error(p + ": " + what_arg), path(std::move(p)) {}
};

struct DuplicateLabel : Error {
    DuplicateLabel(const std::string& label) : Error("duplicate generator label '" + label + "'") {}
};

struct NonSquareMatrix : Error {
    using Error::Error;
};

struct UnknownPreset : Error {
    UnknownPreset(const std::string& name)
        : Error("'" + name + "' is neither a preset nor a readable algebra file") {}
};

struct UnsupportedFormat : Error {
    using Error::Error;
};

struct RankNotTwo : Error {
    using Error::Error;
};

}  // namespace cwlab
