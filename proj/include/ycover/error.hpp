#pragma once

#include <stdexcept>
#include <string>

namespace ycover {

enum class ErrorCode {
    EmptyProfile,
    NotWeaklyDecreasing,
    NonPositiveLength,
    IndexOutOfRange,
    EmptyRect,
    RectOutsideDiagram,
    NotACover,
    StepCountMismatch,
    Overflow,
    Infeasible,
    InvalidBudget,
    CapExceeded,
    NotADifferenceGraph,
    CycleDetected,
    NotHeightTwo,
    ForeignElement,
    Parse,
    Internal,
};

inline const char* to_string(ErrorCode code) {
    switch (code) {
    case ErrorCode::EmptyProfile: return "EmptyProfile";
    case ErrorCode::NotWeaklyDecreasing: return "NotWeaklyDecreasing";
    case ErrorCode::NonPositiveLength: return "NonPositiveLength";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::EmptyRect: return "EmptyRect";
    case ErrorCode::RectOutsideDiagram: return "RectOutsideDiagram";
    case ErrorCode::NotACover: return "NotACover";
    case ErrorCode::StepCountMismatch: return "StepCountMismatch";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::Infeasible: return "Infeasible";
    case ErrorCode::InvalidBudget: return "InvalidBudget";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::NotADifferenceGraph: return "NotADifferenceGraph";
    case ErrorCode::CycleDetected: return "CycleDetected";
    case ErrorCode::NotHeightTwo: return "NotHeightTwo";
    case ErrorCode::ForeignElement: return "ForeignElement";
    case ErrorCode::Parse: return "Parse";
    case ErrorCode::Internal: return "Internal";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

} // namespace ycover
