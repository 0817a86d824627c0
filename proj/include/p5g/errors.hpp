#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace p5g {

/// Base class of every recoverable failure raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A caller broke an operation's documented precondition. This is a
/// programming error, so it derives from std::logic_error rather than Error.
class PreconditionError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

class ConstructionFailed : public Error {
public:
    using Error::Error;
};

class NeitherCaseHolds : public Error {
public:
    using Error::Error;
};

class DivideInvalid : public Error {
public:
    using Error::Error;
};

class InvalidPair : public Error {
public:
    using Error::Error;
};

class InternalStructureError : public Error {
public:
    using Error::Error;
};

class GenerationExhausted : public Error {
public:
    using Error::Error;
};

class MalformedTree : public Error {
public:
    MalformedTree(std::string path, const std::string& what)
        : Error("malformed tree at " + path + ": " + what), path_(std::move(path)) {}
    const std::string& path() const noexcept { return path_; }

private:
    std::string path_;
};

/// Parse failure in one of the text formats; offset is the 0-based byte
/// (graph6) or 1-based line (edge list) where the problem was found.
class FormatError : public Error {
public:
    FormatError(std::size_t offset, const std::string& what)
        : Error(what + " (at " + std::to_string(offset) + ")"), offset_(offset) {}
    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

} // namespace p5g
