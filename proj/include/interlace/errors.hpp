#ifndef INTERLACE_ERRORS_HPP
#define INTERLACE_ERRORS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace interlace {

/// Base error. `code()` is a stable machine-readable identifier; the CLI maps
/// categories to exit codes (input errors 2, precondition violations 3,
/// budget exhaustion 4).
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& msg)
        : std::runtime_error(code + ": " + msg), code_(std::move(code)) {}
    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

// -- input / parse errors (CLI exit 2) --------------------------------------

class ParseError : public Error {
public:
    explicit ParseError(const std::string& msg) : Error("ParseError", msg) {}
protected:
    ParseError(std::string code, const std::string& msg) : Error(std::move(code), msg) {}
};

class EmptyInput : public ParseError {
public:
    explicit EmptyInput(const std::string& msg = "blank input") : ParseError("EmptyInput", msg) {}
};

class UnknownSuite : public ParseError {
public:
    explicit UnknownSuite(const std::string& name) : ParseError("UnknownSuite", "no verification suite named '" + name + "'") {}
};

// -- precondition violations (CLI exit 3) ------------------------------------

class PreconditionError : public Error {
public:
    using Error::Error;
};

#define INTERLACE_DEFINE_PRECONDITION_ERROR(NAME)                                \
    class NAME : public PreconditionError {                                      \
    public:                                                                      \
        explicit NAME(const std::string& msg = "") : PreconditionError(#NAME, msg) {} \
    }

INTERLACE_DEFINE_PRECONDITION_ERROR(ZeroPolynomial);
INTERLACE_DEFINE_PRECONDITION_ERROR(DegreeTooSmall);
INTERLACE_DEFINE_PRECONDITION_ERROR(DegreeCapExceeded);
INTERLACE_DEFINE_PRECONDITION_ERROR(NotSquarefree);
INTERLACE_DEFINE_PRECONDITION_ERROR(NotTotallyReal);
INTERLACE_DEFINE_PRECONDITION_ERROR(NotMonic);
INTERLACE_DEFINE_PRECONDITION_ERROR(NotIrreducible);
INTERLACE_DEFINE_PRECONDITION_ERROR(IndexOutOfRange);
INTERLACE_DEFINE_PRECONDITION_ERROR(NonPositiveEps);
INTERLACE_DEFINE_PRECONDITION_ERROR(NonPositiveTrace);
INTERLACE_DEFINE_PRECONDITION_ERROR(DegreeMismatch);
INTERLACE_DEFINE_PRECONDITION_ERROR(DegreeViolation);
INTERLACE_DEFINE_PRECONDITION_ERROR(DimensionMismatch);
INTERLACE_DEFINE_PRECONDITION_ERROR(InvalidCount);
INTERLACE_DEFINE_PRECONDITION_ERROR(MissingKissingEntry);
INTERLACE_DEFINE_PRECONDITION_ERROR(SquareInput);
INTERLACE_DEFINE_PRECONDITION_ERROR(EmptySearchSpace);
INTERLACE_DEFINE_PRECONDITION_ERROR(ArgumentTooSmall);
INTERLACE_DEFINE_PRECONDITION_ERROR(IOError);

#undef INTERLACE_DEFINE_PRECONDITION_ERROR

/// Internal-consistency failure: the Gram matrix of a squarefree polynomial
/// is provably invertible, so hitting this signals a bug, not bad input.
class SingularGram : public Error {
public:
    explicit SingularGram(const std::string& msg = "") : Error("SingularGram", msg) {}
};

// -- search outcomes ---------------------------------------------------------

/// A scan hit its node budget. Deliberately distinct from "proved empty":
/// emptiness certificates must never come from a truncated search.
class BudgetExceeded : public Error {
public:
    BudgetExceeded(std::uint64_t budget, std::uint64_t nodes)
        : Error("BudgetExceeded",
                "node budget " + std::to_string(budget) + " exhausted after " + std::to_string(nodes) + " nodes"),
          budget(budget), nodes(nodes) {}
    std::uint64_t budget;
    std::uint64_t nodes;
};

}  // namespace interlace

#endif
