#pragma once

#include <stdexcept>
#include <string>

namespace schwarz::la {

/// Dimension mismatch between an operator and its operand.
class DimensionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Factorization hit an exactly singular pivot. The pivot index is reported
/// because a singular local saddle block usually means a missing pressure
/// constraint, and the offending row identifies which one.
class SingularMatrixError : public std::runtime_error {
public:
    SingularMatrixError(const std::string& what, int pivot)
        : std::runtime_error(what), pivot_index(pivot) {}
    int pivot_index;
};

} // namespace schwarz::la
