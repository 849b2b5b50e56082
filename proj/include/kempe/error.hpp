#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace kempe {

enum class ErrorKind {
    Loop,
    UnknownVertex,
    UnknownEdge,
    InvalidArgument,
    PartialColoring,
    ColorOutOfRange,
    IllegalColoring,
    NotRegular,
    DegreeMismatch,
    StaleSwitch,
    NotCovering,
    NonConstantFiber,
    GraphMismatch,
    TooLarge,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

// Raised by sequence replay; carries the position of the first switch that
// was not bi-chromatic for the coloring current at that point.
class StaleSwitchError : public Error {
public:
    StaleSwitchError(std::size_t index, const std::string& what)
        : Error(ErrorKind::StaleSwitch, what), index_(index) {}

    std::size_t index() const noexcept { return index_; }

private:
    std::size_t index_;
};

} // namespace kempe
