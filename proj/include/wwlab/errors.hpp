#pragma once

#include <stdexcept>
#include <string>

namespace wwlab {

// Violated operation precondition (bad argument, unsupported variant, ...).
struct contract_error : std::invalid_argument {
    explicit contract_error(const std::string& what) : std::invalid_argument(what) {}
};

// Index or prefix length out of range.
struct range_error : std::out_of_range {
    explicit range_error(const std::string& what) : std::out_of_range(what) {}
};

// A configured cap (index growth, enumeration budget) was exceeded.
struct resource_error : std::runtime_error {
    explicit resource_error(const std::string& what) : std::runtime_error(what) {}
};

// Scenario configuration could not be resolved.
struct config_error : std::runtime_error {
    explicit config_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace wwlab
