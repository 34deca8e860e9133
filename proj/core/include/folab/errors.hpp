#pragma once

#include <stdexcept>
#include <string>

namespace folab {

// Base for every library error: callers that only need a verdict can catch this.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DivisionByZero : Error {
    DivisionByZero() : Error("division by zero") {}
};

struct NotSquarefree : Error {
    explicit NotSquarefree(const std::string& what) : Error(what) {}
};

struct SingularSystem : Error {
    SingularSystem() : Error("linear system is singular") {}
};

struct ZeroForm : Error {
    ZeroForm() : Error("operation undefined on the zero form") {}
};

struct RadialPencil : Error {
    RadialPencil() : Error("xA + yB vanishes identically (radial pencil)") {}
};

struct DegenerateJacobian : Error {
    DegenerateJacobian() : Error("discriminant form vanishes identically") {}
};

struct NotAFixedPoint : Error {
    explicit NotAFixedPoint(const std::string& what) : Error(what) {}
};

struct UnsupportedSpec : Error {
    explicit UnsupportedSpec(const std::string& what) : Error(what) {}
};

struct EliminationOverflow : Error {
    explicit EliminationOverflow(const std::string& what) : Error(what) {}
};

// Degree/size guard tripped (CLI exit code 1).
struct GuardExceeded : Error {
    explicit GuardExceeded(const std::string& what) : Error(what) {}
};

// Malformed or invalid input document (CLI exit code 2).
struct ValidationError : Error {
    explicit ValidationError(const std::string& what) : Error(what) {}
};

}  // namespace folab
