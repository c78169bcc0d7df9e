#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace entrolab {

enum class ErrorCode {
    NonPositiveMass,
    MassSumNotOne,
    DuplicateLabel,
    NotMeasurePreserving,
    NotSurjective,
    BaseMismatch,
    ChainMismatch,
    TargetMismatch,
    NotCommuting,
    NonPositive,
    PrecisionExhausted,
    UnsupportedAlpha,
    NotMajorized,
    HypothesisViolated,
    BudgetExhausted,
    InvalidMonoid,
    EmptySet,
    InvalidMorphism,
    UnknownFunctor,
    RangeError,
    ParseError,
    InvalidArgument,
};

std::string_view to_string(ErrorCode code);

/// Exception carrying a machine-checkable code; every library failure
/// surfaces as one of these.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace entrolab
