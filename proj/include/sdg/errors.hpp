#pragma once

#include <stdexcept>
#include <string>

namespace sdg {

// Invalid user-facing configuration (CLI flags, parameters out of range).
struct config_error : std::runtime_error {
    explicit config_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Numerical failure (singular system, regularity cannot be met, ...).
struct numeric_error : std::runtime_error {
    explicit numeric_error(const std::string& msg) : std::runtime_error(msg) {}
};

// File I/O and parse failures.
struct io_error : std::runtime_error {
    explicit io_error(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace sdg
