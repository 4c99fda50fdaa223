#ifndef POLYMF_ERRORS_HPP
#define POLYMF_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace polymf {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Operands live in variable contexts with different orderings.
class ContextError : public Error {
public:
    using Error::Error;
};

class DivisionByZeroError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t position)
        : Error(what + " at position " + std::to_string(position)), position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

class UnknownVariableError : public ParseError {
public:
    UnknownVariableError(const std::string& name, std::size_t position)
        : ParseError("unknown variable '" + name + "'", position), name_(name) {}

    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

class DimensionError : public Error {
public:
    using Error::Error;
};

/// A matrix identity (P*Q = f*I, A1*A2*A3 = f*I) failed; carries the first bad entry.
class CertificateError : public Error {
public:
    CertificateError(const std::string& what, std::size_t row, std::size_t col)
        : Error(what), row_(row), col_(col) {}

    std::size_t row() const noexcept { return row_; }
    std::size_t col() const noexcept { return col_; }

private:
    std::size_t row_;
    std::size_t col_;
};

/// Zero pivot met while pivoting is disabled. `order` is the size of the
/// leading principal submatrix that is singular.
class SingularPivotError : public Error {
public:
    explicit SingularPivotError(std::size_t order)
        : Error("zero pivot: leading principal submatrix of order " + std::to_string(order) +
                " is singular"),
          order_(order) {}

    std::size_t order() const noexcept { return order_; }

private:
    std::size_t order_;
};

class StructurallySingularError : public Error {
public:
    explicit StructurallySingularError(std::size_t column)
        : Error("matrix is singular: no nonzero pivot available in column " +
                std::to_string(column)),
          column_(column) {}

    std::size_t column() const noexcept { return column_; }

private:
    std::size_t column_;
};

/// One of the three commuting-square equations of a morphism failed.
class MorphismError : public Error {
public:
    MorphismError(const std::string& what, int equation) : Error(what), equation_(equation) {}

    /// 1: alpha*phi1 = phi2*beta, 2: psi2*delta = beta*psi1, 3: delta*theta1 = theta2*alpha;
    /// 0 for shape or domain problems.
    int equation() const noexcept { return equation_; }

private:
    int equation_;
};

class VariableCollisionError : public Error {
public:
    using Error::Error;
};

class TargetMismatchError : public Error {
public:
    using Error::Error;
};

/// A serialized artifact does not follow the expected layout.
class FormatError : public Error {
public:
    using Error::Error;
};

}  // namespace polymf

#endif  // POLYMF_ERRORS_HPP
