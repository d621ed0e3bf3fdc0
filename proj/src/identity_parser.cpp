#include <algorithm>
#include <cctype>

#include "ringlab/identity.hpp"

namespace ringlab {

ParseError::ParseError(std::size_t offset, std::vector<std::string> expected, std::string found,
                       std::size_t line)
    : Error([&] {
          std::string m = (line ? "line " + std::to_string(line) + ", " : std::string()) +
                          "offset " + std::to_string(offset) + ": expected ";
          for (std::size_t i = 0; i < expected.size(); ++i)
              m += (i ? " or " : "") + expected[i];
          return m + ", found " + found;
      }()),
      offset_(offset),
      expected_(std::move(expected)),
      found_(std::move(found)),
      line_(line) {}

namespace {

struct Token {
    enum class Kind { Ident, Number, Symbol, End };
    Kind kind;
    std::string text;
    std::size_t offset;

    std::string describe() const {
        if (kind == Kind::End) return "end of input";
        return "\"" + text + "\"";
    }
};

std::vector<Token> lex(std::string_view s) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < s.size()) {
        const auto c = static_cast<unsigned char>(s[i]);
        if (std::isspace(c)) {
            ++i;
        } else if (std::isalpha(c) || c == '_') {
            std::size_t j = i;
            while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
            out.push_back({Token::Kind::Ident, std::string(s.substr(i, j - i)), i});
            i = j;
        } else if (std::isdigit(c)) {
            std::size_t j = i;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
            out.push_back({Token::Kind::Number, std::string(s.substr(i, j - i)), i});
            i = j;
        } else if (std::string_view("+-*()=,").find(static_cast<char>(c)) != std::string_view::npos) {
            out.push_back({Token::Kind::Symbol, std::string(1, static_cast<char>(c)), i});
            ++i;
        } else {
            throw ParseError(i, {"token"}, "\"" + std::string(1, static_cast<char>(c)) + "\"");
        }
    }
    out.push_back({Token::Kind::End, {}, s.size()});
    return out;
}

// q<k> with k a positive decimal, no leading zero.
int builtin_arity(const std::string& ident) {
    if (ident.size() < 2 || ident[0] != 'q' || ident[1] == '0') return 0;
    if (!std::all_of(ident.begin() + 1, ident.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
        return 0;
    if (ident.size() > 4) return -1;
    return std::stoi(ident.substr(1));
}

class Parser {
public:
    explicit Parser(std::string_view text) : tokens_(lex(text)) {}

    IdentityAst identity() {
        IdentityAst ast;
        ast.lhs = expr();
        if (!is_symbol("=")) fail({"\"+\"", "\"-\"", "\"*\"", "\"o\"", "\"=\""});
        ++pos_;
        ast.rhs = expr();
        if (peek().kind != Token::Kind::End) fail({"\"+\"", "\"-\"", "\"*\"", "\"o\"", "end of input"});
        ast.variables = std::move(variables_);
        ast.map_symbols = std::move(maps_);
        return ast;
    }

private:
    const Token& peek() const { return tokens_[pos_]; }
    bool is_symbol(std::string_view s) const {
        return peek().kind == Token::Kind::Symbol && peek().text == s;
    }
    bool is_jordan() const { return peek().kind == Token::Kind::Ident && peek().text == "o"; }

    [[noreturn]] void fail(std::vector<std::string> expected) const {
        throw ParseError(peek().offset, std::move(expected), peek().describe());
    }

    void expect(std::string_view s) {
        if (!is_symbol(s)) fail({"\"" + std::string(s) + "\""});
        ++pos_;
    }

    static Expr node(Expr::Kind kind, std::vector<Expr> args, std::string name = {}) {
        return Expr{kind, std::move(name), std::move(args)};
    }

    Expr expr() {
        Expr left = term();
        for (;;) {
            Expr::Kind kind;
            if (is_symbol("+")) kind = Expr::Kind::Add;
            else if (is_symbol("-")) kind = Expr::Kind::Subtract;
            else return left;
            ++pos_;
            left = node(kind, {std::move(left), term()});
        }
    }

    Expr term() {
        Expr left = factor();
        for (;;) {
            Expr::Kind kind;
            if (is_symbol("*")) kind = Expr::Kind::Multiply;
            else if (is_jordan()) kind = Expr::Kind::Jordan;
            else return left;
            ++pos_;
            left = node(kind, {std::move(left), factor()});
        }
    }

    Expr factor() {
        if (is_symbol("-")) {
            ++pos_;
            return node(Expr::Kind::Negate, {atom()});
        }
        return atom();
    }

    Expr atom() {
        const Token& t = peek();
        static const std::vector<std::string> atom_expected{"atom"};
        switch (t.kind) {
            case Token::Kind::Number:
                if (t.text == "0" || t.text == "1") {
                    ++pos_;
                    return node(t.text == "0" ? Expr::Kind::Zero : Expr::Kind::One, {});
                }
                fail(atom_expected);
            case Token::Kind::Symbol:
                if (t.text == "(") {
                    ++pos_;
                    Expr inner = expr();
                    expect(")");
                    return inner;
                }
                fail(atom_expected);
            case Token::Kind::End:
                fail(atom_expected);
            case Token::Kind::Ident:
                break;
        }
        if (t.text == "o") fail(atom_expected);
        const Token ident = t;
        ++pos_;
        if (!is_symbol("(")) {
            note(variables_, ident.text);
            return node(Expr::Kind::Variable, {}, ident.text);
        }
        ++pos_;
        if (const int k = builtin_arity(ident.text); k != 0) {
            std::vector<Expr> args{expr()};
            while (is_symbol(",")) {
                ++pos_;
                args.push_back(expr());
            }
            expect(")");
            if (k < 0 || static_cast<std::size_t>(k) != args.size())
                throw ParseError(ident.offset, {std::to_string(k < 0 ? 0 : k) + " arguments"},
                                 std::to_string(args.size()) + " arguments");
            return node(Expr::Kind::Q, std::move(args), ident.text);
        }
        note(maps_, ident.text);
        Expr arg = expr();
        expect(")");
        return node(Expr::Kind::Apply, {std::move(arg)}, ident.text);
    }

    static void note(std::vector<std::string>& list, const std::string& name) {
        if (std::find(list.begin(), list.end(), name) == list.end()) list.push_back(name);
    }

    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
    std::vector<std::string> variables_;
    std::vector<std::string> maps_;
};

int precedence(Expr::Kind kind) {
    switch (kind) {
        case Expr::Kind::Add:
        case Expr::Kind::Subtract: return 1;
        case Expr::Kind::Multiply:
        case Expr::Kind::Jordan: return 2;
        case Expr::Kind::Negate: return 3;
        default: return 4;
    }
}

std::string print_at(const Expr& e, int min_prec) {
    std::string s;
    switch (e.kind) {
        case Expr::Kind::Variable: s = e.name; break;
        case Expr::Kind::Zero: s = "0"; break;
        case Expr::Kind::One: s = "1"; break;
        case Expr::Kind::Negate: s = "-" + print_at(e.args[0], 4); break;
        case Expr::Kind::Apply: s = e.name + "(" + print(e.args[0]) + ")"; break;
        case Expr::Kind::Q:
            s = e.name + "(";
            for (std::size_t i = 0; i < e.args.size(); ++i) s += (i ? ", " : "") + print(e.args[i]);
            s += ")";
            break;
        default: {
            static constexpr std::string_view ops[] = {" + ", " - ", " * ", " o "};
            const int p = precedence(e.kind);
            const auto op = ops[static_cast<int>(e.kind) - static_cast<int>(Expr::Kind::Add)];
            // left-associative: the right operand binds tighter
            s = print_at(e.args[0], p) + std::string(op) + print_at(e.args[1], p + 1);
        }
    }
    return precedence(e.kind) < min_prec ? "(" + s + ")" : s;
}

}  // namespace

IdentityAst parse_identity(std::string_view text) { return Parser(text).identity(); }

std::string print(const Expr& expr) { return print_at(expr, 0); }

std::string print(const IdentityAst& ast) { return print(ast.lhs) + " = " + print(ast.rhs); }

std::vector<IdentityLine> parse_identity_file(std::string_view content) {
    std::vector<IdentityLine> out;
    std::size_t line_no = 0;
    while (!content.empty()) {
        ++line_no;
        const auto nl = content.find('\n');
        std::string_view line = content.substr(0, nl);
        content = nl == std::string_view::npos ? std::string_view{} : content.substr(nl + 1);
        if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        if (std::all_of(line.begin(), line.end(), [](char c) { return std::isspace(static_cast<unsigned char>(c)); }))
            continue;
        try {
            out.push_back({line_no, std::string(line), parse_identity(line)});
        } catch (const ParseError& e) {
            throw ParseError(e.offset(), e.expected(), e.found(), line_no);
        }
    }
    return out;
}

std::string builtin_identity_text(std::string_view name, int n) {
    if (n < 2 || n > 6) throw StructuralError("builtin identity: n must be in [2, 6], got " + std::to_string(n));
    static constexpr std::string_view vars[] = {"x", "y", "z", "u", "v", "w"};

    // q_n(args) with slot i wrapped in `map` (i < 0: no slot)
    auto product = [&](int slot, std::string_view map) {
        std::vector<std::string> a;
        for (int i = 0; i < n; ++i)
            a.push_back(i == slot ? std::string(map) + "(" + std::string(vars[i]) + ")" : std::string(vars[i]));
        if (n == 2) return a[0] + " o " + a[1];
        std::string s = "q" + std::to_string(n) + "(";
        for (int i = 0; i < n; ++i) s += (i ? "," : "") + a[static_cast<std::size_t>(i)];
        return s + ")";
    };
    auto lhs = [&](std::string_view map) { return std::string(map) + "(" + product(-1, "") + ")"; };

    if (name == "jordan_n_derivation") {
        std::string s = lhs("D") + " = ";
        for (int i = 0; i < n; ++i) s += (i ? " + " : "") + product(i, "D");
        return s;
    }
    if (name == "generalized_jordan_n_derivation") {
        std::string s = lhs("F") + " = " + product(0, "F");
        for (int i = 1; i < n; ++i) s += " + " + product(i, "D");
        return s;
    }
    if (name == "jordan_n_centralizer") return lhs("F") + " = " + product(0, "F");
    throw StructuralError("unknown builtin identity '" + std::string(name) + "'");
}

IdentityAst builtin_identity(std::string_view name, int n) {
    return parse_identity(builtin_identity_text(name, n));
}

}  // namespace ringlab
