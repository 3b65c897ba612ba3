#ifndef MULTISINE_EXPR_HPP
#define MULTISINE_EXPR_HPP

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "multisine/hpreal.hpp"
#include "multisine/precision.hpp"

namespace multisine {

/// Expression AST. Numbers keep their literal text so nothing is rounded
/// before evaluation; every node remembers its byte offset for diagnostics.
struct Expr {
    enum class Kind { number, constant, negate, binary, call };

    Kind kind;
    std::size_t offset = 0;
    std::string text;  // literal (number) or identifier (constant/call)
    char op = 0;       // binary: one of + - * / ^
    std::vector<std::shared_ptr<const Expr>> children;
};

using ExprPtr = std::shared_ptr<const Expr>;

/// Recursive-descent parser for
///   expr   := term (('+'|'-') term)*
///   term   := factor (('*'|'/') factor)*
///   factor := ('-')? power
///   power  := atom ('^' factor)?          (right-associative)
///   atom   := NUMBER | IDENT | IDENT '(' [expr (',' expr)*] ')' | '(' expr ')'
/// Unknown constants/functions and arity mismatches are parse errors.
ExprPtr parse(std::string_view text);

/// Minimal-parenthesis rendering; parse(to_string(e)) is structurally e.
std::string to_string(const Expr& e);

bool structurally_equal(const Expr& a, const Expr& b);

/// Evaluate at working precision. Domain errors from the function catalogue
/// are rethrown as eval_error tagged with the offending sub-expression.
HPReal evaluate(const Expr& e, Precision prec);

}  // namespace multisine

#endif
