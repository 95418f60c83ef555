#pragma once

#include <stdexcept>
#include <string>

namespace vbslab {

// A requested computation is well-formed but violates a model condition
// (inconsistent multiplicities, unsatisfiable spin assignment, ...).
struct model_error : std::runtime_error {
    explicit model_error(const std::string& what) : std::runtime_error(what) {}
};

// A computation exceeds a configured resource cap (Hilbert-space dimension,
// monomial count, ...). Raise the cap explicitly to proceed.
struct resource_error : std::runtime_error {
    explicit resource_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace vbslab
