#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace discforge {

// Malformed expression or family file; `position` is a 0-based byte offset
// into the offending text.
class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& what, std::size_t position)
        : std::runtime_error(what + " (at position " + std::to_string(position) + ")"),
          position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

class ring_mismatch_error : public std::runtime_error {
public:
    explicit ring_mismatch_error(const std::string& what) : std::runtime_error(what) {}
};

class unknown_variable_error : public std::runtime_error {
public:
    explicit unknown_variable_error(const std::string& name)
        : std::runtime_error("unknown variable: " + name) {}
};

class exponent_overflow_error : public std::runtime_error {
public:
    explicit exponent_overflow_error(const std::string& what) : std::runtime_error(what) {}
};

// A Groebner computation exceeded its step budget.  This is a reported
// outcome, not a crash: callers either propagate it or fall back.
class budget_exceeded_error : public std::runtime_error {
public:
    explicit budget_exceeded_error(const std::string& what) : std::runtime_error(what) {}
};

// Replicated runs with distinct random witnesses disagreed.
class genericity_failure_error : public std::runtime_error {
public:
    explicit genericity_failure_error(const std::string& what) : std::runtime_error(what) {}
};

// The likelihood system at a parameter point is not zero-dimensional.
class degenerate_point_error : public std::runtime_error {
public:
    explicit degenerate_point_error(const std::string& what) : std::runtime_error(what) {}
};

class sampling_infeasible_error : public std::runtime_error {
public:
    explicit sampling_infeasible_error(const std::string& what) : std::runtime_error(what) {}
};

// A chi-sample linear system has no positive-integer solution.
class inconsistent_system_error : public std::runtime_error {
public:
    explicit inconsistent_system_error(const std::string& what) : std::runtime_error(what) {}
};

class unit_ideal_error : public std::runtime_error {
public:
    explicit unit_ideal_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace discforge
