#pragma once

#include <stdexcept>
#include <string>

namespace pbdm {

/// Invalid configuration (grid/parameter/preset), detected before any compute.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// Numerical failure during a solve (singular pivot, non-finite field, ...).
class NumericsError : public std::runtime_error {
public:
    explicit NumericsError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace pbdm
