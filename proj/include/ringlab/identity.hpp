#pragma once

/**
 * @file identity.hpp
 * @brief Textual algebraic identities: parser, printer, and an exhaustive
 *        evaluator over a finite ring with bound map symbols.
 *
 * Grammar (whitespace insignificant):
 *
 *     identity := expr "=" expr
 *     expr     := term { ("+" | "-") term }
 *     term     := factor { ("*" | "o") factor }
 *     factor   := ["-"] atom
 *     atom     := IDENT "(" expr ")" | "q" INT "(" expr { "," expr } ")"
 *               | IDENT | "0" | "1" | "(" expr ")"
 *
 * "o" is the Jordan product and is reserved. An identifier followed by "("
 * is a map symbol; a bare identifier is a ring variable. q<k>(...) must have
 * exactly k arguments.
 */

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "ringlab/error.hpp"
#include "ringlab/ring_map.hpp"

namespace ringlab {

struct Expr {
    enum class Kind { Variable, Zero, One, Negate, Add, Subtract, Multiply, Jordan, Apply, Q };

    Kind kind = Kind::Zero;
    /// Variable name or map symbol.
    std::string name;
    std::vector<Expr> args;

    friend bool operator==(const Expr&, const Expr&) = default;
};

struct IdentityAst {
    Expr lhs;
    Expr rhs;
    /// In order of first appearance, lhs before rhs.
    std::vector<std::string> variables;
    std::vector<std::string> map_symbols;

    friend bool operator==(const IdentityAst&, const IdentityAst&) = default;
};

class ParseError : public Error {
public:
    ParseError(std::size_t offset, std::vector<std::string> expected, std::string found,
               std::size_t line = 0);

    /// Byte offset into the identity text (the line, for identity files).
    std::size_t offset() const noexcept { return offset_; }
    const std::vector<std::string>& expected() const noexcept { return expected_; }
    const std::string& found() const noexcept { return found_; }
    /// 1-based line in an identity file; 0 for a single identity.
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t offset_;
    std::vector<std::string> expected_;
    std::string found_;
    std::size_t line_;
};

IdentityAst parse_identity(std::string_view text);

std::string print(const Expr& expr);
/// Reparses to an equal AST.
std::string print(const IdentityAst& ast);

struct IdentityLine {
    std::size_t line;
    std::string text;
    IdentityAst ast;
};

/// One identity per line; "#" starts a comment; blank lines are skipped.
/// Throws ParseError carrying the line number.
std::vector<IdentityLine> parse_identity_file(std::string_view content);

inline constexpr std::uint64_t kDefaultEvalBudget = 100'000'000;

struct EvalOptions {
    std::uint64_t budget = kDefaultEvalBudget;
    unsigned workers = 0;
};

struct EvalResult {
    bool holds = true;
    /// Lexicographically smallest failing assignment, one element per variable.
    std::vector<Elem> counterexample;
    std::uint64_t assignments = 0;
};

/// Checks lhs = rhs under every assignment of ring elements to the variables.
/// Throws StructuralError on an unbound symbol or a map over another ring,
/// BudgetExceeded when |ring|^variables exceeds the budget.
EvalResult eval_identity(const FiniteRing& ring, const IdentityAst& ast,
                         const std::map<std::string, RingMap>& bindings, EvalOptions options = {});

/// Fully expanded text of a builtin law for 2 <= n <= 6: "jordan_n_derivation"
/// (map D), "generalized_jordan_n_derivation" (F and D), "jordan_n_centralizer" (F).
std::string builtin_identity_text(std::string_view name, int n);
IdentityAst builtin_identity(std::string_view name, int n);

}  // namespace ringlab
