#pragma once

#include <stdexcept>

namespace joq {

/**
 * Raised when a property that is mathematically guaranteed fails at runtime,
 * e.g. an omega component that should cancel does not. Distinct from
 * std::domain_error / std::invalid_argument, which signal caller mistakes.
 */
struct internal_error : std::logic_error {
    using std::logic_error::logic_error;
};

} // namespace joq
