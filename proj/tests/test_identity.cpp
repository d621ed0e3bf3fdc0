#include <gtest/gtest.h>

#include <functional>

#include "oracle.hpp"
#include "ringlab/enumeration.hpp"
#include "ringlab/identity.hpp"

using namespace ringlab;

namespace {

const FiniteRing& z3() {
    static const auto r = build_zmod(3);
    return r;
}
const FiniteRing& t2() {
    static const auto r = build_triangular_ring(z3(), 2);
    return r;
}
const FiniteRing& m2() {
    static const auto r = build_matrix_ring(z3(), 2);
    return r;
}

ParseError parse_error(std::string_view text) {
    try {
        parse_identity(text);
    } catch (const ParseError& e) {
        return e;
    }
    ADD_FAILURE() << "no parse error for: " << text;
    return ParseError(0, {}, "");
}

}  // namespace

TEST(Parse, JordanDerivationLaw) {
    const auto ast = parse_identity("D(x o y) = D(x) o y + x o D(y)");
    EXPECT_EQ(ast.map_symbols, std::vector<std::string>{"D"});
    EXPECT_EQ(ast.variables, (std::vector<std::string>{"x", "y"}));
    EXPECT_EQ(ast.lhs.kind, Expr::Kind::Apply);
    EXPECT_EQ(ast.rhs.kind, Expr::Kind::Add);
    EXPECT_EQ(ast.rhs.args[0].kind, Expr::Kind::Jordan);
}

TEST(Parse, CentralizerWithQ) {
    const auto ast = parse_identity("F(q3(x,y,z)) = q3(F(x),y,z)");
    EXPECT_EQ(ast.map_symbols, std::vector<std::string>{"F"});
    EXPECT_EQ(ast.variables.size(), 3u);
    ASSERT_EQ(ast.lhs.args[0].kind, Expr::Kind::Q);
    EXPECT_EQ(ast.lhs.args[0].args.size(), 3u);
}

TEST(Parse, TrailingOperator) {
    const auto e = parse_error("x + ");
    EXPECT_EQ(e.offset(), 4u);
    EXPECT_EQ(e.expected(), std::vector<std::string>{"atom"});
    EXPECT_EQ(e.found(), "end of input");
}

TEST(Parse, Errors) {
    const auto arity = parse_error("q3(x, y) = x");
    EXPECT_EQ(arity.offset(), 0u);
    EXPECT_EQ(arity.found(), "2 arguments");
    EXPECT_EQ(parse_error("x = 2").offset(), 4u);
    EXPECT_EQ(parse_error("x y = y").offset(), 2u);
    EXPECT_EQ(parse_error("D(x = x").offset(), 4u);
    EXPECT_EQ(parse_error("x = y )").offset(), 6u);
    EXPECT_EQ(parse_error("x = $").offset(), 4u);
    EXPECT_EQ(parse_error("x = o").offset(), 4u);
    EXPECT_EQ(parse_error("x = - - y").offset(), 6u);
    EXPECT_EQ(parse_error("").offset(), 0u);
    const auto e = parse_error("x o y");
    EXPECT_EQ(e.offset(), 5u);
    EXPECT_LE(e.offset(), 5u + 1);
}

TEST(Parse, PrecedenceAndAssociativity) {
    const auto ast = parse_identity("x - y - z = -x * y o z + 1");
    // (x - y) - z
    ASSERT_EQ(ast.lhs.kind, Expr::Kind::Subtract);
    EXPECT_EQ(ast.lhs.args[0].kind, Expr::Kind::Subtract);
    // ((-x) * y) o z + 1
    ASSERT_EQ(ast.rhs.kind, Expr::Kind::Add);
    const auto& j = ast.rhs.args[0];
    ASSERT_EQ(j.kind, Expr::Kind::Jordan);
    ASSERT_EQ(j.args[0].kind, Expr::Kind::Multiply);
    EXPECT_EQ(j.args[0].args[0].kind, Expr::Kind::Negate);
    EXPECT_EQ(ast.rhs.args[1].kind, Expr::Kind::One);
}

TEST(Print, RoundTrips) {
    for (const char* text : {"D(x o y) = D(x) o y + x o D(y)", "F(q3(x,y,z)) = q3(F(x),y,z)",
                             "x - (y - z) = x - y + z", "-(x * y) = -x * y", "-(-x) = x",
                             "x * (y o z) = (x * y) o z", "G(F(x) + 0) = 1 - x",
                             "q1(x) = x", "(x + y) * (x - y) = x * x - y * y"}) {
        const auto ast = parse_identity(text);
        const auto again = parse_identity(print(ast));
        EXPECT_EQ(again, ast) << text << " -> " << print(ast);
        EXPECT_EQ(print(again), print(ast));
    }
}

TEST(Print, RandomTreesRoundTrip) {
    SplitMix64 rng(5);
    std::function<Expr(int)> gen = [&](int depth) -> Expr {
        const auto pick = depth <= 0 ? rng.below(3) : rng.below(10);
        switch (pick) {
            case 0: return Expr{Expr::Kind::Variable, std::string(1, char('a' + rng.below(3))), {}};
            case 1: return Expr{Expr::Kind::Zero, {}, {}};
            case 2: return Expr{Expr::Kind::One, {}, {}};
            case 3: return Expr{Expr::Kind::Negate, {}, {gen(depth - 1)}};
            case 4: return Expr{Expr::Kind::Apply, "F", {gen(depth - 1)}};
            case 5: return Expr{Expr::Kind::Q, "q2", {gen(depth - 1), gen(depth - 1)}};
            default: {
                const Expr::Kind k[] = {Expr::Kind::Add, Expr::Kind::Subtract, Expr::Kind::Multiply,
                                        Expr::Kind::Jordan};
                return Expr{k[rng.below(4)], {}, {gen(depth - 1), gen(depth - 1)}};
            }
        }
    };
    for (int i = 0; i < 300; ++i) {
        const Expr lhs = gen(4), rhs = gen(4);
        const std::string text = print(lhs) + " = " + print(rhs);
        const auto ast = parse_identity(text);
        EXPECT_EQ(ast.lhs, lhs) << text;
        EXPECT_EQ(ast.rhs, rhs) << text;
    }
}

TEST(Builtin, Texts) {
    EXPECT_EQ(builtin_identity("jordan_n_derivation", 2), parse_identity("D(x o y) = D(x) o y + x o D(y)"));
    EXPECT_EQ(builtin_identity("jordan_n_centralizer", 2), parse_identity("F(x o y) = F(x) o y"));
    EXPECT_EQ(builtin_identity("generalized_jordan_n_derivation", 2),
              parse_identity("F(x o y) = F(x) o y + x o D(y)"));
    EXPECT_EQ(builtin_identity_text("jordan_n_centralizer", 3), "F(q3(x,y,z)) = q3(F(x),y,z)");
    const auto g6 = builtin_identity("generalized_jordan_n_derivation", 6);
    EXPECT_EQ(g6.variables.size(), 6u);
    EXPECT_EQ(g6.map_symbols, (std::vector<std::string>{"F", "D"}));
    EXPECT_THROW(builtin_identity("jordan_n_derivation", 1), StructuralError);
    EXPECT_THROW(builtin_identity("jordan_n_derivation", 7), StructuralError);
    EXPECT_THROW(builtin_identity("lie_n_derivation", 2), StructuralError);
}

TEST(Eval, Examples) {
    const auto law = builtin_identity("jordan_n_derivation", 2);
    const Elem e12 = *t2().find_label("E12");
    EXPECT_TRUE(eval_identity(t2(), law, {{"D", inner_derivation(t2(), e12)}}).holds);

    const auto bad = eval_identity(z3(), law, {{"D", identity_map(z3())}});
    EXPECT_FALSE(bad.holds);
    EXPECT_EQ(bad.counterexample, (std::vector<Elem>{1, 1}));

    const auto sym = parse_identity("x o y = y o x");
    EXPECT_TRUE(eval_identity(m2(), sym, {}).holds);
    EXPECT_TRUE(eval_identity(t2(), sym, {}).holds);
    EXPECT_FALSE(eval_identity(m2(), parse_identity("x * y = y * x"), {}).holds);
}

TEST(Eval, QMatchesJordanProduct) {
    EXPECT_TRUE(eval_identity(m2(), parse_identity("q2(x, y) = x o y"), {}).holds);
    EXPECT_TRUE(eval_identity(t2(), parse_identity("q3(x, y, z) = (x o y) o z"), {}).holds);
    EXPECT_TRUE(eval_identity(t2(), parse_identity("q1(x) + x = q2(x, 1)"), {}).holds);
}

TEST(Eval, CounterexampleIsLexicographicallySmallest) {
    const auto ast = parse_identity("x * y * z = z * y * x");
    const auto got = eval_identity(t2(), ast, {}, {.workers = 8});
    std::optional<std::vector<Elem>> want;
    oracle::each_tuple(t2().order(), 3, [&](const std::vector<Elem>& t) {
        if (t2().mul(t2().mul(t[0], t[1]), t[2]) != t2().mul(t2().mul(t[2], t[1]), t[0])) {
            want = t;
            return false;
        }
        return true;
    });
    ASSERT_TRUE(want);
    EXPECT_EQ(got.counterexample, *want);
    EXPECT_EQ(eval_identity(t2(), ast, {}, {.workers = 1}).counterexample, *want);
}

TEST(Eval, Errors) {
    const auto law = builtin_identity("jordan_n_derivation", 2);
    EXPECT_THROW(eval_identity(t2(), law, {}), StructuralError);
    EXPECT_THROW(eval_identity(t2(), law, {{"D", zero_map(m2())}}), StructuralError);
    EXPECT_THROW(eval_identity(m2(), builtin_identity("jordan_n_derivation", 5), {{"D", zero_map(m2())}}),
                 BudgetExceeded);
    EXPECT_THROW(eval_identity(t2(), law, {{"D", zero_map(t2())}}, {.budget = 100}), BudgetExceeded);
}

TEST(Eval, RenamingInvariance) {
    const auto a = parse_identity("D(x o y) = D(x) o y + x o D(y)");
    const auto b = parse_identity("G(s o t) = G(s) o t + s o G(t)");
    SplitMix64 rng(17);
    for (int i = 0; i < 20; ++i) {
        const auto f = perturbed(inner_derivation(t2(), Elem(rng.below(27))), Elem(rng.below(27)),
                                 Elem(rng.below(27)));
        const auto ra = eval_identity(t2(), a, {{"D", f}});
        const auto rb = eval_identity(t2(), b, {{"G", f}});
        EXPECT_EQ(ra.holds, rb.holds);
        EXPECT_EQ(ra.counterexample, rb.counterexample);
    }
}

// The textual laws and the native predicates are oracles for each other.
TEST(Eval, AgreesWithNativePredicates) {
    SplitMix64 rng(2024);
    std::vector<RingMap> maps;
    for (int i = 0; i < 30; ++i) maps.push_back(oracle::random_additive(t2(), rng));
    const auto derivs = enumerate_additive_maps(t2(), MapPredicate::jordan_n_derivation(2));
    maps.insert(maps.end(), derivs.maps.begin(), derivs.maps.end());
    for (int n : {2, 3}) {
        const auto jd = builtin_identity("jordan_n_derivation", n);
        const auto jc = builtin_identity("jordan_n_centralizer", n);
        const auto gj = builtin_identity("generalized_jordan_n_derivation", n);
        for (const auto& f : maps) {
            const auto dsl = eval_identity(t2(), jd, {{"D", f}});
            const auto native = is_jordan_n_derivation(f, n);
            ASSERT_EQ(dsl.holds, native.holds);
            EXPECT_EQ(dsl.counterexample, native.witness);
            EXPECT_EQ(eval_identity(t2(), jc, {{"F", f}}).holds, is_jordan_n_centralizer(f, n).holds);
            const auto& d = derivs.maps[f.images()[1] % derivs.maps.size()];
            EXPECT_EQ(eval_identity(t2(), gj, {{"F", f}, {"D", d}}).holds,
                      satisfies_generalized_identity(f, d, n).holds);
        }
    }
}

TEST(File, LinesAndComments) {
    const auto lines = parse_identity_file("# laws\n\nx o y = y o x  # symmetric\r\n  \nD(x) = x\n");
    ASSERT_EQ(lines.size(), 2u);
    EXPECT_EQ(lines[0].line, 3u);
    EXPECT_EQ(lines[1].line, 5u);
    EXPECT_EQ(lines[1].ast.map_symbols, std::vector<std::string>{"D"});
    try {
        parse_identity_file("x = x\ny = y\nx + = y\n");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 3u);
        EXPECT_EQ(e.offset(), 4u);
    }
}
