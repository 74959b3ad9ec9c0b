#include "cylcert/error.hpp"

namespace cylcert {

std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::SyntaxError: return "SyntaxError";
        case ErrorCode::GluingError: return "GluingError";
        case ErrorCode::CountMismatch: return "CountMismatch";
        case ErrorCode::LengthMismatch: return "LengthMismatch";
        case ErrorCode::EmptySurface: return "EmptySurface";
        case ErrorCode::InvalidCoordinates: return "InvalidCoordinates";
        case ErrorCode::QuadIncompatible: return "QuadIncompatible";
        case ErrorCode::NotClosed: return "NotClosed";
        case ErrorCode::NonOrientableAmbient: return "NonOrientableAmbient";
        case ErrorCode::OneSided: return "OneSided";
        case ErrorCode::PerComponentOnly: return "PerComponentOnly";
        case ErrorCode::Disconnected: return "Disconnected";
        case ErrorCode::ArcNotProper: return "ArcNotProper";
        case ErrorCode::ArcsIntersect: return "ArcsIntersect";
        case ErrorCode::CurveNotInterior: return "CurveNotInterior";
        case ErrorCode::CurvesIntersect: return "CurvesIntersect";
        case ErrorCode::NotContained: return "NotContained";
        case ErrorCode::NotEmbedded: return "NotEmbedded";
        case ErrorCode::NotNormalized: return "NotNormalized";
        case ErrorCode::NoQualifyingComponent: return "NoQualifyingComponent";
        case ErrorCode::PipelinePreconditionFailed: return "PipelinePreconditionFailed";
        case ErrorCode::ClassificationFailed: return "ClassificationFailed";
        case ErrorCode::PantsNotFound: return "PantsNotFound";
        case ErrorCode::OppUndefined: return "OppUndefined";
        case ErrorCode::OppCollision: return "OppCollision";
        case ErrorCode::LadderBroken: return "LadderBroken";
        case ErrorCode::AllParallel: return "AllParallel";
        case ErrorCode::NoCertificate: return "NoCertificate";
        case ErrorCode::SearchExhausted: return "SearchExhausted";
    }
    return "Unknown";
}

}  // namespace cylcert
