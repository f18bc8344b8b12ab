#include "tropres/error.hpp"

namespace tropres {

const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::InvalidInput: return "InvalidInput";
        case ErrorCode::DegenerateConfig: return "DegenerateConfig";
        case ErrorCode::EmptyCone: return "EmptyCone";
        case ErrorCode::EmptyFactor: return "EmptyFactor";
        case ErrorCode::NotAFan: return "NotAFan";
        case ErrorCode::NotATriangulation: return "NotATriangulation";
        case ErrorCode::NoSuchVector: return "NoSuchVector";
        case ErrorCode::EmptySpecializedResultant: return "EmptySpecializedResultant";
        case ErrorCode::NotInSubspace: return "NotInSubspace";
        case ErrorCode::NotARidge: return "NotARidge";
        case ErrorCode::PointOnHypersurface: return "PointOnHypersurface";
        case ErrorCode::InconsistentCycle: return "InconsistentCycle";
        case ErrorCode::Internal: return "Internal";
    }
    return "Unknown";
}

}  // namespace tropres
