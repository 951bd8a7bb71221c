#pragma once

#include <stdexcept>
#include <string>

namespace etfsim {

/// Error raised for invalid input data, violated preconditions and failed
/// computations. The message carries enough context (file, line, asset,
/// date) to locate the offending input.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace etfsim
