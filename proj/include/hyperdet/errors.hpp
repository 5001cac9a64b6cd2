#pragma once

#include <stdexcept>
#include <string>

namespace hyperdet {

struct DivisionByZero : std::domain_error {
    DivisionByZero() : std::domain_error("division by zero") {}
};

struct DimensionMismatch : std::invalid_argument {
    explicit DimensionMismatch(const std::string& what)
        : std::invalid_argument("dimension mismatch: " + what) {}
};

struct IndexOutOfRange : std::out_of_range {
    explicit IndexOutOfRange(const std::string& what)
        : std::out_of_range("index out of range: " + what) {}
};

struct ZeroScale : std::invalid_argument {
    ZeroScale() : std::invalid_argument("scale factor must be nonzero") {}
};

struct VariableCountMismatch : std::invalid_argument {
    VariableCountMismatch()
        : std::invalid_argument("polynomials have different variable counts") {}
};

struct SingularMatrix : std::invalid_argument {
    SingularMatrix() : std::invalid_argument("matrix is singular") {}
};

struct EmptyInput : std::invalid_argument {
    explicit EmptyInput(const std::string& what) : std::invalid_argument("empty input: " + what) {}
};

struct DegenerateInput : std::runtime_error {
    explicit DegenerateInput(const std::string& what)
        : std::runtime_error("degenerate hypermatrix: " + what) {}
};

struct BudgetExceeded : std::runtime_error {
    explicit BudgetExceeded(const std::string& what)
        : std::runtime_error("budget exceeded: " + what) {}
};

// Symbolic computation ran past its configured resource cap.
struct Infeasible : std::runtime_error {
    explicit Infeasible(const std::string& what) : std::runtime_error("infeasible: " + what) {}
};

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error("parse error: " + what) {}
};

}  // namespace hyperdet
