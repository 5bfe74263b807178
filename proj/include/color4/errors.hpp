#pragma once

#include <stdexcept>
#include <string>

namespace color4 {

// Error taxonomy mirrored by the CLI exit codes (see io.hpp).
struct parse_error : std::runtime_error {
    explicit parse_error(const std::string& m) : std::runtime_error(m) {}
};

struct invalid_instance_error : std::runtime_error {
    explicit invalid_instance_error(const std::string& m) : std::runtime_error(m) {}
};

// Signals Z = 0: the instance admits no proper coloring.
struct unsatisfiable_error : std::runtime_error {
    explicit unsatisfiable_error(const std::string& m) : std::runtime_error(m) {}
};

struct capacity_error : std::runtime_error {
    explicit capacity_error(const std::string& m) : std::runtime_error(m) {}
};

// Precondition violation of an operation contract.
struct contract_error : std::logic_error {
    explicit contract_error(const std::string& m) : std::logic_error(m) {}
};

// Argument outside a mathematical function's domain.
struct domain_error : std::runtime_error {
    explicit domain_error(const std::string& m) : std::runtime_error(m) {}
};

}  // namespace color4
