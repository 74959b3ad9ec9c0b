#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cylcert {

enum class ErrorCode {
    SyntaxError,
    GluingError,
    CountMismatch,
    LengthMismatch,
    EmptySurface,
    InvalidCoordinates,
    QuadIncompatible,
    NotClosed,
    NonOrientableAmbient,
    OneSided,
    PerComponentOnly,
    Disconnected,
    ArcNotProper,
    ArcsIntersect,
    CurveNotInterior,
    CurvesIntersect,
    NotContained,
    NotEmbedded,
    NotNormalized,
    NoQualifyingComponent,
    PipelinePreconditionFailed,
    ClassificationFailed,
    PantsNotFound,
    OppUndefined,
    OppCollision,
    LadderBroken,
    AllParallel,
    NoCertificate,
    SearchExhausted,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& detail)
        : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace cylcert
