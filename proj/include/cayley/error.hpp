#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cayley {

enum class ErrorCode {
    DuplicateEdge,
    SelfLoop,
    VertexOutOfRange,
    InvalidConstruction,
    EdgeNotInGraph,
    NotWellconstrained,
    NotHennebergFromF,
    NonpositiveLength,
    StepOutOfRange,
    SubsystemUnrealizable,
    CoincidentCenters,
    DegenerateStep,
    TooManyOrientations,
    EmptyFeasibility,
    NotSimple1DofHenneberg,
    PreconditionViolated,
    NotHenneberg,
    ParseError,
    SchemaError,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above so the
/// C API can translate it without string matching.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what)
        , code_(code)
    {
    }

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

} // namespace cayley
