#pragma once

#include <stdexcept>
#include <string>

namespace dicholp {

/// Vector/matrix sizes passed to an operation do not agree.
struct DimensionError : std::invalid_argument {
    explicit DimensionError(const std::string& what) : std::invalid_argument(what) {}
};

/// A pivot loop exceeded its iteration budget. Reported as an error,
/// never as an Infeasible/Unbounded verdict.
struct IterationLimitError : std::runtime_error {
    explicit IterationLimitError(const std::string& what) : std::runtime_error(what) {}
};

/// The upward search for an infeasible objective level ran out of doublings
/// even though the recession-cone test claimed the problem is bounded.
struct BracketSearchError : std::runtime_error {
    explicit BracketSearchError(const std::string& what) : std::runtime_error(what) {}
};

/// Instance exceeds the enumeration limits of the brute-force oracle.
struct InstanceTooLargeError : std::invalid_argument {
    explicit InstanceTooLargeError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace dicholp
