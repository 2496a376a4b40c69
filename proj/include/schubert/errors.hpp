#pragma once

#include <stdexcept>
#include <string>

namespace schubert {

// Input errors. The CLI maps these to exit code 1.
struct OutOfRectangle : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct DimensionMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Internal consistency failures. The CLI maps these to exit code 3.
struct InvariantViolation : std::logic_error {
    using std::logic_error::logic_error;
};

struct NotInSpecializationOrder : InvariantViolation {
    using InvariantViolation::InvariantViolation;
};

struct UniquenessViolation : InvariantViolation {
    using InvariantViolation::InvariantViolation;
};

struct TranslationGap : InvariantViolation {
    using InvariantViolation::InvariantViolation;
};

struct CountOverflow : std::overflow_error {
    using std::overflow_error::overflow_error;
};

inline long long checked_add(long long a, long long b) {
    long long r = 0;
    if (__builtin_add_overflow(a, b, &r)) throw CountOverflow("coefficient overflow");
    return r;
}

inline long long checked_mul(long long a, long long b) {
    long long r = 0;
    if (__builtin_mul_overflow(a, b, &r)) throw CountOverflow("coefficient overflow");
    return r;
}

}  // namespace schubert
