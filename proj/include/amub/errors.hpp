#pragma once

#include <stdexcept>

namespace amub {

// Base class for every error raised by this library. Each operation's
// documented failure mode gets its own type so callers can dispatch on it.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

#define AMUB_DEFINE_ERROR(Name)   \
    struct Name final : Error {   \
        using Error::Error;       \
    }

AMUB_DEFINE_ERROR(NotPrime);
AMUB_DEFINE_ERROR(NotPrimePower);
AMUB_DEFINE_ERROR(TooLarge);
AMUB_DEFINE_ERROR(TooSmall);
AMUB_DEFINE_ERROR(ZeroArgument);
AMUB_DEFINE_ERROR(TrivialCharacter);
AMUB_DEFINE_ERROR(OrderMismatch);
AMUB_DEFINE_ERROR(EmptyFamily);
AMUB_DEFINE_ERROR(NotOrthogonalFamily);
AMUB_DEFINE_ERROR(BadOrder);
AMUB_DEFINE_ERROR(NotHadamard);
AMUB_DEFINE_ERROR(NotHadamardInput);
AMUB_DEFINE_ERROR(BadPrime);
AMUB_DEFINE_ERROR(SingularCurve);
AMUB_DEFINE_ERROR(BadDegreeRange);
AMUB_DEFINE_ERROR(PointNotOnCurve);
AMUB_DEFINE_ERROR(BoundViolated);
AMUB_DEFINE_ERROR(DimensionMismatch);
AMUB_DEFINE_ERROR(FieldMismatch);
AMUB_DEFINE_ERROR(SingleBasis);
AMUB_DEFINE_ERROR(NotOrthonormal);
AMUB_DEFINE_ERROR(BadParameters);
AMUB_DEFINE_ERROR(BadRange);
AMUB_DEFINE_ERROR(TooFewVectors);
AMUB_DEFINE_ERROR(AlreadyReal);
AMUB_DEFINE_ERROR(MalformedBundle);

#undef AMUB_DEFINE_ERROR

} // namespace amub
