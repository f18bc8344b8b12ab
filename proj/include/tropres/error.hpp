#pragma once

#include <stdexcept>
#include <string>

namespace tropres {

enum class ErrorCode {
    InvalidInput,
    DegenerateConfig,
    EmptyCone,
    EmptyFactor,
    NotAFan,
    NotATriangulation,
    NoSuchVector,
    EmptySpecializedResultant,
    NotInSubspace,
    NotARidge,
    PointOnHypersurface,
    InconsistentCycle,
    Internal
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

}  // namespace tropres
