#include <gtest/gtest.h>

#include <algorithm>
#include <array>
#include <set>

#include "oracle.hpp"
#include "ringlab/enumeration.hpp"
#include "ringlab/error.hpp"

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

std::vector<RingMap> scalar_maps_of_center(const FiniteRing& R) {
    std::vector<RingMap> out;
    for (Elem mu : oracle::center(R)) out.push_back(scalar_map(R, mu));
    std::sort(out.begin(), out.end());
    return out;
}

void expect_accounting(const EnumerationResult& r) {
    EXPECT_EQ(r.scanned, r.pruned + r.rejected + r.count) << r.class_name;
    EXPECT_TRUE(std::is_sorted(r.maps.begin(), r.maps.end()));
    EXPECT_EQ(std::adjacent_find(r.maps.begin(), r.maps.end()), r.maps.end());
}

// All Z_3-linear maps of T_2(Z_3) in coordinates, independent of the library's charts.
std::vector<RingMap> linear_maps_t2() {
    const auto model = oracle::MatrixModel::upper(3, 2);
    std::vector<RingMap> out;
    for (int code = 0; code < 19683; ++code) {
        int c = code;
        int a[3][3];
        for (auto& row : a)
            for (int& x : row) {
                x = c % 3;
                c /= 3;
            }
        std::vector<Elem> images(27);
        for (int t = 0; t < 27; ++t) {
            const int v[3] = {t % 3, t / 3 % 3, t / 9};
            int w[3];
            for (int i = 0; i < 3; ++i) w[i] = (a[i][0] * v[0] + a[i][1] * v[1] + a[i][2] * v[2]) % 3;
            images[t] = Elem(w[0] + 3 * w[1] + 9 * w[2]);
        }
        (void)model;
        out.emplace_back(t2(), std::move(images));
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST(Centralizers, MatrixRingCountsCenter) {
    for (int n : {2, 3, 4}) {
        const auto r = enumerate_jordan_n_centralizers(m2(), n);
        EXPECT_EQ(r.count, 3u);
        EXPECT_EQ(r.maps, scalar_maps_of_center(m2()));
        EXPECT_EQ(r.scanned, 81u);
        EXPECT_EQ(r.class_name, "jordan_n_centralizer");
        expect_accounting(r);
    }
}

TEST(Centralizers, OtherRings) {
    EXPECT_EQ(enumerate_jordan_n_centralizers(z3(), 2).count, 3u);
    EXPECT_EQ(enumerate_jordan_n_centralizers(t2(), 3).count, 3u);
    EXPECT_THROW(enumerate_jordan_n_centralizers(build_zmod(4), 2), UnsupportedOperation);
}

// Counting form over rings satisfying the hypotheses, against a brute-force center.
TEST(Centralizers, CountEqualsCenterUnderHypotheses) {
    std::vector<FiniteRing> rings;
    rings.push_back(t2());
    rings.push_back(build_triangular_ring(build_zmod(5), 2));
    rings.push_back(build_triangular_ring(build_zmod(9), 2));
    for (const auto& R : rings) {
        bool spade = false;
        for (const auto& i : find_idempotents(R))
            if (i.nontrivial && check_spade(PeirceContext(R, i.element)).holds) spade = true;
        ASSERT_TRUE(spade) << R.name();
        const int max_n = R.order() > 200 ? 2 : 4;
        for (int n = 2; n <= max_n; ++n) {
            const auto r = enumerate_jordan_n_centralizers(R, n);
            EXPECT_EQ(r.maps, scalar_maps_of_center(R)) << R.name() << " n=" << n;
        }
    }
}

// The half-law candidates are exhaustive: on Z_3 every one of the 27 maps is checked.
TEST(Centralizers, ExhaustiveOverAllMapsOnZ3) {
    std::vector<RingMap> brute;
    for (int code = 0; code < 27; ++code) {
        const RingMap f(z3(), {Elem(code % 3), Elem(code / 3 % 3), Elem(code / 9)});
        if (oracle::jordan_n_centralizer(f, 2)) brute.push_back(f);
    }
    std::sort(brute.begin(), brute.end());
    EXPECT_EQ(enumerate_jordan_n_centralizers(z3(), 2).maps, brute);
}

TEST(Additive, JordanDerivationsOnTriangularAreDerivations) {
    const auto r = enumerate_additive_maps(t2(), MapPredicate::jordan_n_derivation(2));
    EXPECT_EQ(r.scanned, 19683u);
    EXPECT_EQ(r.count, 9u);
    expect_accounting(r);
    for (const auto& f : r.maps) EXPECT_TRUE(oracle::derivation(f));

    std::vector<RingMap> brute;
    for (const auto& f : linear_maps_t2())
        if (oracle::jordan_n_derivation(f, 2)) brute.push_back(f);
    EXPECT_EQ(r.maps, brute);
}

TEST(Additive, AllAdditiveMapsOnTriangular) {
    const auto r = enumerate_additive_maps(t2(), MapPredicate::additive());
    EXPECT_EQ(r.count, 19683u);
    EXPECT_EQ(r.maps, linear_maps_t2());
}

TEST(Additive, SingularClassOnTriangularIsZero) {
    const PeirceContext ctx(t2(), lbl(t2(), "E11"));
    const auto r = enumerate_additive_maps(t2(), MapPredicate::singular_jordan_derivation(ctx));
    ASSERT_EQ(r.count, 1u);
    EXPECT_EQ(r.maps.front(), zero_map(t2()));
    expect_accounting(r);
}

TEST(Additive, CentralizersAreCentralScalings) {
    for (const FiniteRing* R : {&t2(), &z3z3(), &z3()}) {
        const auto r = enumerate_additive_maps(*R, MapPredicate::centralizer());
        EXPECT_EQ(r.maps, scalar_maps_of_center(*R)) << R->name();
        expect_accounting(r);
    }
    const auto z4 = build_zmod(4);
    EXPECT_EQ(enumerate_additive_maps(z4, MapPredicate::centralizer()).maps, scalar_maps_of_center(z4));
}

TEST(Additive, ClassInclusions) {
    for (const FiniteRing* R : {&t2(), &z3z3()}) {
        const auto d = enumerate_additive_maps(*R, MapPredicate::derivation());
        const auto j2 = enumerate_additive_maps(*R, MapPredicate::jordan_n_derivation(2));
        const auto j3 = enumerate_additive_maps(*R, MapPredicate::jordan_n_derivation(3));
        EXPECT_TRUE(std::includes(j2.maps.begin(), j2.maps.end(), d.maps.begin(), d.maps.end()));
        EXPECT_TRUE(std::includes(j3.maps.begin(), j3.maps.end(), j2.maps.begin(), j2.maps.end()));
        expect_accounting(d);
        expect_accounting(j3);
    }
}

TEST(Additive, TorsionGroupsRespectRelations) {
    // Z_4 x Z_2 has additive maps that must respect the element orders.
    const auto R = build_product_ring(build_zmod(4), build_zmod(2));
    const auto r = enumerate_additive_maps(R, MapPredicate::additive());
    // |Hom(Z4 + Z2, Z4 + Z2)| = |Hom(Z4,Z4)| |Hom(Z4,Z2)| |Hom(Z2,Z4)| |Hom(Z2,Z2)| = 4*2*2*2
    EXPECT_EQ(r.count, 32u);
    for (const auto& f : r.maps) EXPECT_TRUE(oracle::additive(f));
    expect_accounting(r);
}

TEST(Additive, BudgetIsEnforced) {
    try {
        enumerate_additive_maps(m2(), MapPredicate::jordan_n_derivation(2), {.budget = 10'000'000});
        FAIL();
    } catch (const BudgetExceeded& e) {
        EXPECT_EQ(e.required(), 43046721u);
    }
}

TEST(Additive, MaxMapsTruncatesButCounts) {
    EnumerationOptions options;
    options.max_maps = 2;
    const auto r = enumerate_additive_maps(t2(), MapPredicate::jordan_n_derivation(2), options);
    EXPECT_EQ(r.count, 9u);
    EXPECT_EQ(r.maps.size(), 2u);
    EXPECT_TRUE(r.truncated);
}

TEST(Determinism, WorkerCountsAgree) {
    EnumerationOptions one;
    one.workers = 1;
    EnumerationOptions eight;
    eight.workers = 8;
    const auto a = enumerate_additive_maps(t2(), MapPredicate::jordan_n_derivation(2), one);
    const auto b = enumerate_additive_maps(t2(), MapPredicate::jordan_n_derivation(2), eight);
    EXPECT_EQ(a.maps, b.maps);
    EXPECT_EQ(a.count, b.count);
    EXPECT_EQ(a.pruned, b.pruned);
    EXPECT_EQ(a.rejected, b.rejected);
    const auto c = enumerate_jordan_n_centralizers(m2(), 3, one);
    const auto d = enumerate_jordan_n_centralizers(m2(), 3, eight);
    EXPECT_EQ(c.maps, d.maps);
    EXPECT_EQ(c.pruned, d.pruned);
}

TEST(Fuzz, DerivationHasNoSiblings) {
    const auto base = inner_derivation(m2(), lbl(m2(), "E12"));
    const auto r = fuzz_predicate(base, MapPredicate::derivation(), 100, 1);
    EXPECT_EQ(r.failures, 100u);
    EXPECT_TRUE(r.siblings.empty());
}

TEST(Fuzz, SiblingsAreRecordedAndReal) {
    const auto base = zero_map(z3());
    const auto r = fuzz_predicate(base, MapPredicate::jordan_n_derivation(2), 50, 3);
    EXPECT_EQ(r.failures + r.siblings.size(), 50u);
    for (const auto& s : r.siblings) {
        EXPECT_NE(s.image, base(s.point));
        EXPECT_TRUE(oracle::jordan_n_derivation(perturbed(base, s.point, s.image), 2));
    }
}

TEST(Fuzz, SeedDeterminesReport) {
    const auto base = inner_derivation(t2(), lbl(t2(), "E12"));
    const auto p = MapPredicate::jordan_n_derivation(2);
    EXPECT_EQ(fuzz_predicate(base, p, 40, 9, {.workers = 1}), fuzz_predicate(base, p, 40, 9, {.workers = 8}));
    EXPECT_THROW(fuzz_predicate(power_map(m2(), 2), p, 1, 0), PreconditionError);
}

TEST(Pipeline, MatrixRingPasses) {
    const auto r = verify_theorem_pipeline(m2(), lbl(m2(), "E11"), 2, 5, 42);
    EXPECT_TRUE(r.hypotheses_met());
    EXPECT_TRUE(r.conclusions_hold());
    EXPECT_EQ(r.first_failure(), nullptr);
    EXPECT_EQ(r.center_size, 3u);
    EXPECT_EQ(r.centralizer_count, 3u);
    std::vector<std::string> names;
    for (const auto& s : r.stages) names.push_back(s.name);
    EXPECT_EQ(names, (std::vector<std::string>{"validate_ring", "two_torsion_free", "nontrivial_idempotent",
                                               "spade", "condition_2_1", "center_agreement",
                                               "centralizer_count", "roundtrip"}));
}

TEST(Pipeline, ProductRingFailsSpade) {
    const auto r = verify_theorem_pipeline(z3z3(), lbl(z3z3(), "(1,0)"), 2, 3, 1);
    EXPECT_FALSE(r.hypotheses_met());
    ASSERT_NE(r.first_failure(), nullptr);
    EXPECT_EQ(r.first_failure()->name, "spade");
    EXPECT_EQ(r.first_failure()->witness, std::vector<Elem>{lbl(z3z3(), "(1,0)")});
}

TEST(Pipeline, TwoTorsionFailsEarly) {
    const auto r = verify_theorem_pipeline(build_zmod(2), std::nullopt, 2, 3, 1);
    ASSERT_NE(r.first_failure(), nullptr);
    EXPECT_EQ(r.first_failure()->name, "two_torsion_free");
    const auto z4 = verify_theorem_pipeline(build_zmod(4), std::nullopt, 2, 3, 1);
    EXPECT_EQ(z4.first_failure()->name, "two_torsion_free");
}
