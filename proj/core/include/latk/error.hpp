#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "latk/geometry.hpp"

namespace latk {

enum class ErrorCode {
    // diagram construction
    NonUnitOrDiagonalStep,
    OpenComponent,
    EdgeReused,
    VertexDegreeExceeds4,
    TangentialCrossing,
    UndeclaredCrossing,
    TypeDeclaredAtNonCrossing,
    NotACrossing,
    // generator
    GenerationBudgetExhausted,
    // problem crossing graph decomposition
    NotTwoNearRegular,
    NoNonCornerOnCycle,
    // lift engine
    NoProperAxis,
    InternalScheduleError,
    // constraint oracle
    NotLiftable,
    // 3-dimensional links
    NonAxisParallelStep,
    CollinearCorners,
    NonProperProjection,
    // text formats
    SyntaxError,
};

const char* error_code_name(ErrorCode code);

/// Single exception type for all domain errors; carries a code so tests and
/// the CLI can branch without string matching.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, std::string message)
        : std::runtime_error(std::move(message)), code_(code) {}
    Error(ErrorCode code, std::string message, Point2 where)
        : std::runtime_error(std::move(message)), code_(code), where_(where) {}
    Error(ErrorCode code, std::string message, int line)
        : std::runtime_error(std::move(message)), code_(code), line_(line) {}

    ErrorCode code() const { return code_; }
    std::optional<Point2> where() const { return where_; }
    /// 1-based input line for parse errors, -1 otherwise.
    int line() const { return line_; }

private:
    ErrorCode code_;
    std::optional<Point2> where_;
    int line_ = -1;
};

}  // namespace latk
