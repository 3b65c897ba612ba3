#ifndef MULTISINE_ERRORS_HPP
#define MULTISINE_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace multisine {

/// Base class for every error this library raises on purpose.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Argument outside the domain of an operation (poles, |z| >= 1, ...).
struct domain_error : error {
    using error::error;
};

/// A summation would need more terms than its configured budget.
struct budget_error : error {
    using error::error;
};

/// Accelerated estimates or extrapolants failed to settle.
struct convergence_error : error {
    using error::error;
};

/// Syntax error in the expression language; offset is a byte position.
struct parse_error : error {
    parse_error(const std::string& msg, std::size_t byte_offset)
        : error(msg + " (at byte " + std::to_string(byte_offset) + ")"),
          offset(byte_offset) {}
    std::size_t offset;
};

/// Evaluation error tagged with the offending sub-expression.
struct eval_error : error {
    eval_error(const std::string& msg, const std::string& subexpr, std::size_t byte_offset)
        : error(msg + " [in `" + subexpr + "` at byte " + std::to_string(byte_offset) + "]"),
          where(subexpr), offset(byte_offset) {}
    std::string where;
    std::size_t offset;
};

}  // namespace multisine

#endif
