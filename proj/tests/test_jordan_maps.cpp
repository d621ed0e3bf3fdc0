#include <gtest/gtest.h>

#include <array>

#include "oracle.hpp"
#include "ringlab/enumeration.hpp"
#include "ringlab/error.hpp"
#include "ringlab/jordan_maps.hpp"

using namespace ringlab;

namespace {

const FiniteRing& z3() {
    static const auto r = build_zmod(3);
    return r;
}
const FiniteRing& m2() {
    static const auto r = build_matrix_ring(z3(), 2);
    return r;
}
const FiniteRing& t2() {
    static const auto r = build_triangular_ring(z3(), 2);
    return r;
}
const FiniteRing& z3z3() {
    static const auto r = build_product_ring(z3(), z3());
    return r;
}

Elem lbl(const FiniteRing& R, const char* s) {
    auto e = R.find_label(s);
    EXPECT_TRUE(e) << s;
    return e.value_or(0);
}

RingMap constant(const FiniteRing& R, Elem c) {
    return RingMap(R, std::vector<Elem>(R.order(), c));
}

}  // namespace

TEST(JordanProduct, Examples) {
    EXPECT_EQ(jordan_product(m2(), lbl(m2(), "E11"), lbl(m2(), "E12")), lbl(m2(), "E12"));
    for (const FiniteRing* R : {&m2(), &t2(), &z3z3()})
        for (std::size_t i = 0; i < R->order(); ++i) {
            const Elem t = Elem(i);
            EXPECT_EQ(jordan_product(*R, R->one(), t), R->add(t, t));
            for (std::size_t j = 0; j < R->order(); ++j)
                EXPECT_EQ(jordan_product(*R, t, Elem(j)), jordan_product(*R, Elem(j), t));
        }
}

TEST(Qn, Examples) {
    const std::array<Elem, 3> args{lbl(m2(), "E11"), lbl(m2(), "E12"), lbl(m2(), "E11")};
    EXPECT_EQ(q_n(m2(), args), lbl(m2(), "E12"));
    EXPECT_THROW(q_n(m2(), std::span<const Elem>{}), std::exception);
    for (std::size_t i = 0; i < m2().order(); ++i) {
        const Elem t = Elem(i);
        for (int n = 1; n <= 5; ++n) {
            std::vector<Elem> v(static_cast<std::size_t>(n), m2().one());
            v[0] = t;
            EXPECT_EQ(q_n(m2(), v), m2().times(std::uint64_t{1} << (n - 1), t));
        }
        const std::array<Elem, 2> pair{t, lbl(m2(), "E21")};
        EXPECT_EQ(q_n(m2(), pair), jordan_product(m2(), t, lbl(m2(), "E21")));
    }
}

TEST(Additive, Examples) {
    EXPECT_TRUE(is_additive(identity_map(z3())).holds);
    const auto c = is_additive(constant(z3(), 1));
    EXPECT_FALSE(c.holds);
    EXPECT_EQ(c.witness, (std::vector<Elem>{0, 0}));
    EXPECT_TRUE(is_additive(inner_derivation(m2(), lbl(m2(), "E12"))).holds);
    EXPECT_FALSE(is_additive(power_map(m2(), 2)).holds);
}

TEST(Derivation, Examples) {
    EXPECT_TRUE(is_derivation(zero_map(m2())).holds);
    for (std::size_t a = 0; a < t2().order(); ++a)
        EXPECT_TRUE(is_derivation(inner_derivation(t2(), Elem(a))).holds);
    for (Elem a : {Elem(1), Elem(5), Elem(40), Elem(77)})
        EXPECT_TRUE(is_derivation(inner_derivation(m2(), a)).holds);
    const auto id = is_derivation(identity_map(z3()));
    EXPECT_FALSE(id.holds);
    EXPECT_EQ(id.witness, (std::vector<Elem>{1, 1}));
}

TEST(InnerDerivation, Examples) {
    EXPECT_EQ(inner_derivation(m2(), lbl(m2(), "2I")), zero_map(m2()));
    const auto d = inner_derivation(m2(), lbl(m2(), "E12"));
    EXPECT_EQ(d(lbl(m2(), "E21")), lbl(m2(), "E11+2E22"));
}

TEST(ScalarMap, Examples) {
    EXPECT_EQ(scalar_map(m2(), 0), zero_map(m2()));
    EXPECT_EQ(scalar_map(m2(), m2().one()), identity_map(m2()));
    const auto d = scalar_map(m2(), lbl(m2(), "2I"));
    for (std::size_t i = 0; i < m2().order(); ++i) EXPECT_EQ(d(Elem(i)), m2().times(2, Elem(i)));
}

TEST(JordanDerivation, Examples) {
    for (int n : {2, 3}) {
        EXPECT_TRUE(is_jordan_n_derivation(zero_map(m2()), n).holds);
        EXPECT_TRUE(is_jordan_n_derivation(inner_derivation(m2(), lbl(m2(), "E12")), n).holds);
    }
    const auto sq = is_jordan_n_derivation(power_map(m2(), 2), 2);
    EXPECT_FALSE(sq.holds);
    ASSERT_EQ(sq.witness.size(), 2u);
    const auto sqmap = power_map(m2(), 2);
    EXPECT_EQ(sq.witness, *oracle::first_violation(m2(), 2, sqmap, sqmap, &sqmap));
}

TEST(JordanDerivation, BudgetRefuses) {
    EXPECT_THROW(is_jordan_n_derivation(zero_map(m2()), 3, {.max_tuples = 1000}), BudgetExceeded);
}

TEST(JordanDerivation, WitnessMatchesOracleOnPerturbedMaps) {
    SplitMix64 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        const auto base = inner_derivation(t2(), Elem(rng.below(27)));
        const auto f = perturbed(base, Elem(rng.below(27)), Elem(rng.below(27)));
        for (int n : {2, 3}) {
            const auto got = is_jordan_n_derivation(f, n);
            const auto want = oracle::first_violation(t2(), n, f, f, &f);
            ASSERT_EQ(got.holds, !want);
            if (want) EXPECT_EQ(got.witness, *want);
        }
    }
}

TEST(Generalized, Examples) {
    const Elem e12 = lbl(m2(), "E12");
    const auto ad = inner_derivation(m2(), e12);
    EXPECT_TRUE(is_generalized_jordan_n_derivation(ad, ad, 2).holds);
    EXPECT_TRUE(is_generalized_jordan_n_derivation(scalar_map(m2(), lbl(m2(), "2I")), zero_map(m2()), 3).holds);
    const auto F = map_sum(scalar_map(m2(), lbl(m2(), "2I")), ad);
    EXPECT_TRUE(is_generalized_jordan_n_derivation(F, ad, 3).holds);
}

TEST(Generalized, DeltaMustBeJordanDerivation) {
    try {
        is_generalized_jordan_n_derivation(identity_map(m2()), power_map(m2(), 2), 2);
        FAIL();
    } catch (const PreconditionError& e) {
        EXPECT_EQ(e.predicate(), "jordan_n_derivation");
        EXPECT_EQ(e.witness().size(), 2u);
    }
}

TEST(Generalized, ReducesToJordanDerivation) {
    SplitMix64 rng(11);
    for (int trial = 0; trial < 10; ++trial) {
        const auto f = inner_derivation(t2(), Elem(rng.below(27)));
        for (int n : {2, 3})
            EXPECT_EQ(is_generalized_jordan_n_derivation(f, f, n).holds,
                      is_jordan_n_derivation(f, n).holds);
        const auto g = perturbed(f, Elem(rng.below(27)), Elem(rng.below(27)));
        const auto want = oracle::first_violation(t2(), 2, g, g, &f);
        const auto got = satisfies_generalized_identity(g, f, 2);
        EXPECT_EQ(got.holds, !want);
        if (want) EXPECT_EQ(got.witness, *want);
    }
}

TEST(Centralizer, Examples) {
    for (int n : {2, 3}) {
        EXPECT_TRUE(is_jordan_n_centralizer(scalar_map(m2(), lbl(m2(), "2I")), n).holds);
        EXPECT_TRUE(is_jordan_n_centralizer(identity_map(m2()), n).holds);
    }
    const auto ad = is_jordan_n_centralizer(inner_derivation(m2(), lbl(m2(), "E12")), 2);
    EXPECT_FALSE(ad.holds);
    const auto f = inner_derivation(m2(), lbl(m2(), "E12"));
    EXPECT_EQ(ad.witness, *oracle::first_violation(m2(), 2, f, f, nullptr));
}

TEST(Centralizer, CentralScalingsForSeveralN) {
    for (const FiniteRing* R : {&t2(), &z3z3()})
        for (Elem mu : center_commutant(*R).elements)
            for (int n : {2, 3, 4}) EXPECT_TRUE(is_jordan_n_centralizer(scalar_map(*R, mu), n).holds);
    for (Elem mu : center_commutant(m2()).elements)
        for (int n : {2, 3}) EXPECT_TRUE(is_jordan_n_centralizer(scalar_map(m2(), mu), n).holds);
}

TEST(Centralizer, SlotExchangeForEveryCentralizer) {
    for (const FiniteRing* R : {&t2(), &z3z3()}) {
        for (int n : {2, 3}) {
            const auto all = enumerate_jordan_n_centralizers(*R, n);
            for (const auto& F : all.maps) EXPECT_TRUE(check_slot_exchange(F, n).holds);
        }
    }
    EXPECT_FALSE(check_slot_exchange(inner_derivation(m2(), lbl(m2(), "E12")), 2).holds);
}

TEST(PlainCentralizer, Examples) {
    EXPECT_TRUE(is_centralizer(scalar_map(m2(), lbl(m2(), "2I"))).holds);
    EXPECT_FALSE(is_centralizer(inner_derivation(m2(), lbl(m2(), "E12"))).holds);
    EXPECT_TRUE(is_centralizer(zero_map(m2())).holds);
    EXPECT_FALSE(is_centralizer(scalar_map(m2(), lbl(m2(), "E11"))).holds);
}

TEST(Singular, Examples) {
    const PeirceContext m(m2(), lbl(m2(), "E11"));
    const PeirceContext t(t2(), lbl(t2(), "E11"));
    EXPECT_TRUE(is_singular_jordan_derivation(zero_map(m2()), m).holds);
    EXPECT_FALSE(is_singular_jordan_derivation(inner_derivation(m2(), lbl(m2(), "E12")), m).holds);
    for (std::size_t a = 1; a < t2().order(); ++a) {
        const auto d = inner_derivation(t2(), Elem(a));
        if (d == zero_map(t2())) continue;
        EXPECT_FALSE(is_singular_jordan_derivation(d, t).holds);
    }
}

TEST(Antiderivation, Examples) {
    EXPECT_TRUE(is_antiderivation(zero_map(m2())).holds);
    const auto r = is_antiderivation(inner_derivation(m2(), lbl(m2(), "E12")));
    EXPECT_FALSE(r.holds);
    EXPECT_EQ(r.witness.size(), 2u);
    // On a commutative ring the rules coincide; Z_3 x Z_3 has only the zero derivation,
    // so use every additive map and compare the two predicates.
    const auto all = enumerate_additive_maps(z3z3(), MapPredicate::additive());
    for (const auto& f : all.maps) EXPECT_EQ(is_derivation(f).holds, is_antiderivation(f).holds);
}

TEST(Singular, OrthogonalContextsGiveAntiderivations) {
    for (const FiniteRing* R : {&t2(), &z3z3()}) {
        for (const auto& i : find_idempotents(*R)) {
            if (!i.nontrivial) continue;
            const PeirceContext ctx(*R, i.element);
            if (!check_orthogonality_hypothesis(ctx).holds) continue;
            const auto sing = enumerate_additive_maps(*R, MapPredicate::singular_jordan_derivation(ctx));
            for (const auto& f : sing.maps) EXPECT_TRUE(is_antiderivation(f).holds);
        }
    }
}

TEST(Decompose, CentralizerExamples) {
    const Elem two = lbl(m2(), "2I");
    const auto r = decompose_centralizer(scalar_map(m2(), two), 2);
    EXPECT_EQ(r.mu, two);
    EXPECT_TRUE(r.all_verified());
    EXPECT_EQ(r.image_of_zero, 0);
    const auto id = decompose_centralizer(identity_map(m2()), 2);
    EXPECT_EQ(id.mu, m2().one());
    EXPECT_TRUE(id.all_verified());
    EXPECT_EQ(id.residual, zero_map(m2()));
}

TEST(Decompose, PerturbedCentralizerFails) {
    const auto F = perturbed(scalar_map(m2(), lbl(m2(), "2I")), 5, 0);
    const auto r = decompose_centralizer(F, 2);
    EXPECT_FALSE(r.identity_verified);
    EXPECT_EQ(r.identity_witness, *oracle::first_violation(m2(), 2, F, F, nullptr));
    EXPECT_FALSE(r.all_verified());
}

TEST(Decompose, RequiresTorsionFree) {
    const auto z4 = build_zmod(4);
    EXPECT_THROW(decompose_centralizer(identity_map(z4), 2), UnsupportedOperation);
}

TEST(Decompose, GeneralizedExamples) {
    const Elem two = lbl(m2(), "2I");
    const auto ad = inner_derivation(m2(), lbl(m2(), "E12"));
    const auto r = decompose_generalized(map_sum(scalar_map(m2(), two), ad), ad, 2);
    EXPECT_EQ(r.mu, two);
    EXPECT_TRUE(r.additivity_verified);
    EXPECT_TRUE(r.all_verified());
    EXPECT_EQ(r.residual, ad);
    EXPECT_EQ(decompose_generalized(ad, ad, 2).mu, 0);
    EXPECT_EQ(decompose_generalized(scalar_map(m2(), two), zero_map(m2()), 2).mu, two);
}

TEST(Decompose, GeneralizedPreconditions) {
    const auto ad = inner_derivation(m2(), lbl(m2(), "E12"));
    try {
        decompose_generalized(identity_map(m2()), ad, 2);
        FAIL();
    } catch (const PreconditionError& e) {
        EXPECT_EQ(e.predicate(), "generalized_jordan_n_derivation");
    }
}

// Every map satisfying the generalized identity decomposes as the theorem says.
TEST(Decompose, EveryGeneralizedDerivationOnSmallRings) {
    for (const FiniteRing* R : {&t2(), &z3z3()}) {
        for (int n : {2, 3}) {
            const auto cents = enumerate_jordan_n_centralizers(*R, n);
            for (std::size_t a = 0; a < R->order(); a += 4) {
                const auto delta = inner_derivation(*R, Elem(a));
                for (const auto& phi : cents.maps) {
                    const auto F = map_sum(phi, delta);
                    const auto r = decompose_generalized(F, delta, n);
                    EXPECT_TRUE(r.all_verified());
                    for (std::size_t t = 0; t < R->order(); ++t)
                        EXPECT_EQ(F(Elem(t)), R->add(R->mul(r.mu, Elem(t)), delta(Elem(t))));
                }
            }
        }
    }
}

TEST(DecomposeSingular, DerivationHasZeroSingularPart) {
    const PeirceContext m(m2(), lbl(m2(), "E11"));
    const auto ad = inner_derivation(m2(), lbl(m2(), "E12"));
    const auto r = decompose_singular(ad, m);
    ASSERT_TRUE(r.found);
    EXPECT_EQ(*r.phi, zero_map(m2()));
    EXPECT_EQ(*r.d, ad);
}

TEST(DecomposeSingular, TriangularForcesZero) {
    const PeirceContext t(t2(), lbl(t2(), "E11"));
    const auto all = enumerate_additive_maps(t2(), MapPredicate::jordan_n_derivation(2));
    for (const auto& f : all.maps) {
        const auto r = decompose_singular(f, t);
        ASSERT_TRUE(r.found);
        EXPECT_EQ(*r.phi, zero_map(t2()));
        EXPECT_EQ(r.solutions, 1u);
        EXPECT_TRUE(is_derivation(*r.d).holds);
    }
}

TEST(DecomposeSingular, Preconditions) {
    const PeirceContext p(z3z3(), lbl(z3z3(), "(1,0)"));
    try {
        decompose_singular(zero_map(z3z3()), p);
        FAIL();
    } catch (const PreconditionError& e) {
        EXPECT_EQ(e.predicate(), "spade");
    }
    const PeirceContext m(m2(), lbl(m2(), "E11"));
    EXPECT_THROW(decompose_singular(power_map(m2(), 2), m), PreconditionError);
}

TEST(ParallelScans, WitnessIndependentOfWorkers) {
    const auto f = perturbed(inner_derivation(m2(), lbl(m2(), "E12")), 40, 3);
    const auto one = is_jordan_n_derivation(f, 2, {.workers = 1});
    for (unsigned w : {2u, 3u, 8u}) {
        const auto many = is_jordan_n_derivation(f, 2, {.workers = w});
        EXPECT_EQ(one.holds, many.holds);
        EXPECT_EQ(one.witness, many.witness);
    }
}
