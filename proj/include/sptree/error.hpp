#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sptree {

/// Base class for every domain failure reported by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// Raised by algorithms that require a connected input.
class DisconnectedGraph : public Error {
public:
    explicit DisconnectedGraph(std::size_t unreachable)
        : Error("graph is disconnected: node " + std::to_string(unreachable) +
                " is unreachable"),
          unreachable_(unreachable) {}

    std::size_t unreachable_node() const noexcept { return unreachable_; }

private:
    std::size_t unreachable_;
};

}  // namespace sptree
