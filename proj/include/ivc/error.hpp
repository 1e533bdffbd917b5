#pragma once

#include <stdexcept>
#include <string>

namespace ivc {

/// Process exit codes shared by the CLI and the error types below.
enum class ExitCode : int {
    ok = 0,
    negative = 1,
    input_error = 2,
    guard_refusal = 3,
    theorem_violation = 4,
};

class Error : public std::runtime_error {
public:
    Error(ExitCode code, const std::string & message) :
        std::runtime_error(message), _code(code)
    {
    }

    auto code() const noexcept -> ExitCode { return _code; }

private:
    ExitCode _code;
};

/// Malformed or out-of-range input.
class InputError : public Error {
public:
    explicit InputError(const std::string & message) :
        Error(ExitCode::input_error, "input error: " + message)
    {
    }
};

/// A search was refused because the instance exceeds a size guard.
class GuardRefusal : public Error {
public:
    explicit GuardRefusal(const std::string & message) :
        Error(ExitCode::guard_refusal, "guard refusal: " + message)
    {
    }
};

/// An internal consistency check failed in a way that would contradict a
/// proven statement (for example a produced certificate does not validate).
class TheoremViolation : public Error {
public:
    explicit TheoremViolation(const std::string & message) :
        Error(ExitCode::theorem_violation, "theorem violation: " + message)
    {
    }
};

} // namespace ivc
