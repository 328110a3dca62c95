#pragma once

#include <stdexcept>
#include <string>

namespace toepl {

// Error hierarchy shared by all modules. Each class carries the process
// exit code used by the command line tool:
//   2 = invalid spec / arguments, 3 = depth or range exceeded,
//   4 = verification failure, 5 = I/O.
struct Error : std::runtime_error {
    Error(std::string msg, int code) : std::runtime_error(std::move(msg)), exit_code(code) {}
    int exit_code;
};

struct SpecError : Error {
    explicit SpecError(std::string msg) : Error(std::move(msg), 2) {}
};
struct ArgError : Error {
    explicit ArgError(std::string msg) : Error(std::move(msg), 2) {}
};
struct PotentialError : Error {
    explicit PotentialError(std::string msg) : Error(std::move(msg), 2) {}
};
struct UndecidableError : Error {
    explicit UndecidableError(std::string msg) : Error(std::move(msg), 2) {}
};
struct DepthError : Error {
    explicit DepthError(std::string msg) : Error(std::move(msg), 3) {}
};
struct RangeError : Error {
    explicit RangeError(std::string msg) : Error(std::move(msg), 3) {}
};
struct BudgetError : Error {
    explicit BudgetError(std::string msg) : Error(std::move(msg), 3) {}
};
struct BoundExceeded : Error {
    explicit BoundExceeded(std::string msg) : Error(std::move(msg), 3) {}
};
struct ExtendedWordError : Error {
    explicit ExtendedWordError(std::string msg) : Error(std::move(msg), 2) {}
};
struct PatternError : Error {
    explicit PatternError(std::string msg) : Error(std::move(msg), 2) {}
};
struct VerifyError : Error {
    explicit VerifyError(std::string msg) : Error(std::move(msg), 4) {}
};
struct IoError : Error {
    explicit IoError(std::string msg) : Error(std::move(msg), 5) {}
};

}  // namespace toepl
