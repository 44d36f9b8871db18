#pragma once

#include <stdexcept>
#include <string>

namespace skylattice {

/// Input file layout problem: missing or duplicate column, bad declaration.
class SchemaError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A cell that cannot be used as a criterion value.
class ValueError : public std::runtime_error {
public:
    ValueError(const std::string& what, std::size_t row, std::string column)
        : std::runtime_error(what), row_(row), column_(std::move(column)) {}

    std::size_t row() const noexcept { return row_; }
    const std::string& column() const noexcept { return column_; }

private:
    std::size_t row_;
    std::string column_;
};

/// A caller broke an operation's precondition.
class ContractViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace skylattice
