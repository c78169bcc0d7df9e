#include "entrolab/error.hpp"

namespace entrolab {

std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::NonPositiveMass: return "NonPositiveMass";
        case ErrorCode::MassSumNotOne: return "MassSumNotOne";
        case ErrorCode::DuplicateLabel: return "DuplicateLabel";
        case ErrorCode::NotMeasurePreserving: return "NotMeasurePreserving";
        case ErrorCode::NotSurjective: return "NotSurjective";
        case ErrorCode::BaseMismatch: return "BaseMismatch";
        case ErrorCode::ChainMismatch: return "ChainMismatch";
        case ErrorCode::TargetMismatch: return "TargetMismatch";
        case ErrorCode::NotCommuting: return "NotCommuting";
        case ErrorCode::NonPositive: return "NonPositive";
        case ErrorCode::PrecisionExhausted: return "PrecisionExhausted";
        case ErrorCode::UnsupportedAlpha: return "UnsupportedAlpha";
        case ErrorCode::NotMajorized: return "NotMajorized";
        case ErrorCode::HypothesisViolated: return "HypothesisViolated";
        case ErrorCode::BudgetExhausted: return "BudgetExhausted";
        case ErrorCode::InvalidMonoid: return "InvalidMonoid";
        case ErrorCode::EmptySet: return "EmptySet";
        case ErrorCode::InvalidMorphism: return "InvalidMorphism";
        case ErrorCode::UnknownFunctor: return "UnknownFunctor";
        case ErrorCode::RangeError: return "RangeError";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

}  // namespace entrolab
