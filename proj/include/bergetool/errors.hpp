#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace berge {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed HGR input; `line` is 1-based.
struct ParseError : Error {
    int line;
    ParseError(int line_, const std::string& what_)
        : Error("line " + std::to_string(line_) + ": " + what_), line(line_) {}
};

struct InvalidParams : Error {
    using Error::Error;
};

struct UnsupportedRegime : Error {
    using Error::Error;
};

struct CanonLimitExceeded : Error {
    using Error::Error;
};

struct EmptyHypergraph : Error {
    using Error::Error;
};

struct IndexOutOfRange : Error {
    using Error::Error;
};

struct MultiplicityExceeded : Error {
    using Error::Error;
};

struct TooFewVertices : Error {
    using Error::Error;
};

struct NotBipartite : Error {
    using Error::Error;
};

/// The witness finder requires a cycle-free input; carries the offending
/// cycle as a serialized certificate line.
struct PreconditionViolated : Error {
    std::string certificate;
    PreconditionViolated(const std::string& what_, std::string cert)
        : Error(what_), certificate(std::move(cert)) {}
};

}  // namespace berge
