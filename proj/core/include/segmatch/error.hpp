#pragma once

#include <stdexcept>
#include <string>

namespace segmatch {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Invalid input data: malformed records, broken invariants, bad arguments.
/// The CLI maps this to exit code 1.
class ValidationError : public Error {
public:
    explicit ValidationError(const std::string& what) : Error(what) {}
};

/// File and serialization failures: missing files, corrupt or truncated
/// binary payloads, checksum mismatches.
class IoError : public Error {
public:
    explicit IoError(const std::string& what) : Error(what) {}
};

/// A model response that does not contain the expected structure.
class ParseError : public Error {
public:
    explicit ParseError(const std::string& what) : Error(what) {}
};

/// Remote provider or chat service failure after all retries.
class RemoteError : public Error {
public:
    explicit RemoteError(const std::string& what) : Error(what) {}
};

} // namespace segmatch
