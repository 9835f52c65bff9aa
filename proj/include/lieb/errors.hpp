#pragma once

#include <stdexcept>

namespace lieb {

// Operand dimensions disagree or a basis index is out of range.
struct dimension_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// The operation needs a nilpotent algebra or a nilpotent operator.
struct not_nilpotent_error : std::domain_error {
    using std::domain_error::domain_error;
};

// A rank profile that cannot come from a nilpotent operator.
struct invalid_profile_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Empty characteristic sequence.
struct empty_sequence_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// No admissible sample outside the derived subalgebra (defensive; cannot
// happen for a nonzero nilpotent algebra).
struct empty_sample_error : std::logic_error {
    using std::logic_error::logic_error;
};

// The given subspace is not an ideal.
struct not_an_ideal_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct unknown_key_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct missing_param_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A family parameter is out of the family's admissible shape.
struct param_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// The closure constraint of a parameterized family evaluates nonzero.
struct constraint_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A computed value contradicts an established structure result.  Seeing this
// means a bug, not bad input.
struct theorem_violation : std::logic_error {
    using std::logic_error::logic_error;
};

// Malformed input file.
struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace lieb
