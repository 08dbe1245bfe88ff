#pragma once

#include <stdexcept>
#include <string>

namespace nrssp {

// Instance data breaks a structural invariant (nonpositive p/a/b, unsorted u, ...).
class InvalidInstance : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Vector lengths disagree with the instance.
class DimensionMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Total requirement exceeds total supply, so no schedule exists.
class InfeasibleInstance : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// The exhaustive oracle refuses instances above its job-count cap.
class OracleCapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace nrssp
