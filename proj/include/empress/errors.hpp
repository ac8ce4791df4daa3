#pragma once

#include <stdexcept>
#include <string>

namespace empress {

// Invalid variant parameters, unknown catalog names, malformed inputs.
class ParameterError : public std::invalid_argument {
public:
    explicit ParameterError(const std::string& what) : std::invalid_argument(what) {}
};

// A computation hit its configured resource limit. Never reported as a
// truncated result; callers either raise the limit or use a closed form.
class CapacityError : public std::runtime_error {
public:
    explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
};

// A word prefix was too short for the requested occurrence. Callers that own
// the prefix respond by generating a longer one.
class InsufficientWordError : public std::runtime_error {
public:
    explicit InsufficientWordError(const std::string& what) : std::runtime_error(what) {}
};

// 128-bit exact arithmetic left its supported range. Loud, never silent.
class OverflowError : public std::overflow_error {
public:
    explicit OverflowError(const std::string& what) : std::overflow_error(what) {}
};

} // namespace empress
