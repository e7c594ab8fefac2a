#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ggn {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Group closure or lattice enumeration would exceed the configured size.
class CapExceeded : public Error {
public:
    using Error::Error;
};

/// A constructor or formula received a parameter outside its domain.
class InvalidParameter : public Error {
public:
    using Error::Error;
};

/// The requested game does not exist (e.g. the avoidance game on a trivial group).
class NoSuchGame : public Error {
public:
    using Error::Error;
};

/// The exhaustive solver was asked for a game beyond its state budget.
class OracleScaleExceeded : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t offset)
        : Error(what + " at offset " + std::to_string(offset)), offset_(offset) {}
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

}  // namespace ggn
