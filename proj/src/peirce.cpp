#include "ringlab/peirce.hpp"

#include <algorithm>

#include "ringlab/error.hpp"

namespace ringlab {

namespace {

// Quantifiers over "all x in A" only need x to range over additive generators
// whenever the tested expression is additive in x.
bool commutes_with_all(const FiniteRing& ring, Elem t) {
    for (const auto& g : ring.additive_generators())
        if (ring.mul(t, g.element) != ring.mul(g.element, t)) return false;
    return true;
}

}  // namespace

PeirceContext::PeirceContext(const FiniteRing& ring, Elem e1) : ring_(&ring), e1_(e1) {
    if (e1 >= ring.order()) throw StructuralError("idempotent index out of range");
    if (ring.mul(e1, e1) != e1)
        throw PreconditionError("idempotent", "element " + ring.label(e1) + " is not idempotent");
    if (e1 == ring.zero() || e1 == ring.one())
        throw PreconditionError("nontrivial_idempotent",
                                "idempotent " + ring.label(e1) + " is trivial");
    e2_ = ring.sub(ring.one(), e1);

    for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= 2; ++j) {
            auto& member = member_[slot(i, j)];
            member.assign(ring.order(), false);
            for (std::size_t t = 0; t < ring.order(); ++t)
                member[project(i, j, static_cast<Elem>(t))] = true;
            auto& comp = components_[slot(i, j)];
            for (std::size_t t = 0; t < ring.order(); ++t)
                if (member[t]) comp.push_back(static_cast<Elem>(t));
        }
}

Elem PeirceContext::project(int i, int j, Elem t) const {
    const Elem left = i == 1 ? e1_ : e2_;
    const Elem right = j == 1 ? e1_ : e2_;
    return ring_->mul(ring_->mul(left, t), right);
}

PeirceContext make_peirce_context(const FiniteRing& ring, Elem e1) { return PeirceContext(ring, e1); }

PeirceParts peirce_decompose(const PeirceContext& ctx, Elem t) {
    return {ctx.project(1, 1, t), ctx.project(1, 2, t), ctx.project(2, 1, t), ctx.project(2, 2, t)};
}

CheckResult check_spade(const PeirceContext& ctx) {
    const FiniteRing& R = ctx.ring();
    const auto& a12 = ctx.component(1, 2);
    const auto& a21 = ctx.component(2, 1);

    std::optional<Elem> worst;
    auto consider = [&](Elem t) {
        if (!worst || t < *worst) worst = t;
    };

    for (Elem t11 : ctx.component(1, 1)) {
        if (t11 == 0) continue;
        const bool kills12 = std::all_of(a12.begin(), a12.end(),
                                         [&](Elem x) { return R.mul(t11, x) == 0; });
        const bool kills21 = std::all_of(a21.begin(), a21.end(),
                                         [&](Elem x) { return R.mul(x, t11) == 0; });
        if (kills12 && kills21) {
            consider(t11);
            break;
        }
    }
    for (Elem t22 : ctx.component(2, 2)) {
        if (t22 == 0) continue;
        const bool kills12 = std::all_of(a12.begin(), a12.end(),
                                         [&](Elem x) { return R.mul(x, t22) == 0; });
        const bool kills21 = std::all_of(a21.begin(), a21.end(),
                                         [&](Elem x) { return R.mul(t22, x) == 0; });
        if (kills12 && kills21) {
            consider(t22);
            break;
        }
    }
    if (worst) return CheckResult::fail({*worst});
    return CheckResult::pass();
}

CenterDescription center_commutant(const FiniteRing& ring) {
    CenterDescription z;
    z.via = CenterDescription::Via::Commutant;
    for (std::size_t t = 0; t < ring.order(); ++t)
        if (commutes_with_all(ring, static_cast<Elem>(t))) z.elements.push_back(static_cast<Elem>(t));
    return z;
}

CenterDescription center_peirce(const PeirceContext& ctx) {
    const FiniteRing& R = ctx.ring();
    const auto& a12 = ctx.component(1, 2);
    const auto& a21 = ctx.component(2, 1);
    CenterDescription z;
    z.via = CenterDescription::Via::Peirce;
    for (Elem t11 : ctx.component(1, 1))
        for (Elem t22 : ctx.component(2, 2)) {
            const bool ok12 = std::all_of(a12.begin(), a12.end(), [&](Elem x) {
                return R.mul(t11, x) == R.mul(x, t22);
            });
            const bool ok21 = ok12 && std::all_of(a21.begin(), a21.end(), [&](Elem x) {
                return R.mul(x, t11) == R.mul(t22, x);
            });
            if (ok21) z.elements.push_back(R.add(t11, t22));
        }
    std::sort(z.elements.begin(), z.elements.end());
    z.elements.erase(std::unique(z.elements.begin(), z.elements.end()), z.elements.end());
    return z;
}

CheckResult check_condition_2_1(const FiniteRing& ring) {
    std::vector<bool> central(ring.order(), false);
    for (Elem z : center_commutant(ring).elements) central[z] = true;
    for (std::size_t i = 0; i < ring.order(); ++i) {
        const auto t = static_cast<Elem>(i);
        if (central[t]) continue;
        bool all_central = true;
        for (const auto& g : ring.additive_generators())
            if (!central[ring.commutator(t, g.element)]) {
                all_central = false;
                break;
            }
        if (all_central) return CheckResult::fail({t});
    }
    return CheckResult::pass();
}

XiResult compute_xi(const PeirceContext& ctx) {
    const FiniteRing& R = ctx.ring();
    const auto& a12 = ctx.component(1, 2);
    const auto& a21 = ctx.component(2, 1);
    const auto center = center_commutant(R).elements;

    std::vector<Elem> domain, codomain;
    for (Elem z : center) {
        domain.push_back(R.mul(z, ctx.e1()));
        codomain.push_back(R.mul(z, ctx.e2()));
    }
    for (auto* v : {&domain, &codomain}) {
        std::sort(v->begin(), v->end());
        v->erase(std::unique(v->begin(), v->end()), v->end());
    }

    auto solves = [&](Elem z11, Elem w) {
        for (Elem x : a12)
            if (R.mul(z11, x) != R.mul(x, w)) return false;
        for (Elem x : a21)
            if (R.mul(x, z11) != R.mul(w, x)) return false;
        return true;
    };

    XiResult result;
    for (Elem z11 : domain) {
        std::vector<Elem> solutions;
        for (Elem w : codomain)
            if (solves(z11, w)) solutions.push_back(w);
        if (solutions.size() == 1) {
            result.table.emplace_back(z11, solutions.front());
            continue;
        }
        result.failing_element = z11;
        result.solutions_in_codomain = solutions.size();
        result.table.clear();
        if (solutions.empty()) {
            result.status = XiResult::Status::NoSolution;
            for (Elem w : ctx.component(2, 2))
                if (solves(z11, w)) {
                    result.solution_outside_codomain = w;
                    break;
                }
            result.message = "no solution in Z*e2 for " + R.label(z11);
        } else {
            result.status = XiResult::Status::MultipleSolutions;
            result.message = std::to_string(solutions.size()) + " solutions in Z*e2 for " +
                             R.label(z11);
        }
        return result;
    }
    return result;
}

PrimeCheck is_prime(const FiniteRing& ring) {
    const auto gens = ring.additive_generators();
    for (std::size_t u = 1; u < ring.order(); ++u)
        for (std::size_t v = 1; v < ring.order(); ++v) {
            bool annihilates = true;
            for (const auto& g : gens)
                if (ring.mul(ring.mul(static_cast<Elem>(u), g.element), static_cast<Elem>(v)) != 0) {
                    annihilates = false;
                    break;
                }
            if (annihilates)
                return {false, std::pair{static_cast<Elem>(u), static_cast<Elem>(v)}};
        }
    return {};
}

Faithfulness is_faithful_bimodule(const PeirceContext& ctx) {
    const FiniteRing& R = ctx.ring();
    const auto& a12 = ctx.component(1, 2);
    Faithfulness f;
    for (Elem a : ctx.component(1, 1)) {
        if (a == 0) continue;
        if (std::all_of(a12.begin(), a12.end(), [&](Elem x) { return R.mul(a, x) == 0; })) {
            f.left_faithful = false;
            f.left_witness = a;
            break;
        }
    }
    for (Elem a : ctx.component(2, 2)) {
        if (a == 0) continue;
        if (std::all_of(a12.begin(), a12.end(), [&](Elem x) { return R.mul(x, a) == 0; })) {
            f.right_faithful = false;
            f.right_witness = a;
            break;
        }
    }
    return f;
}

CheckResult check_orthogonality_hypothesis(const PeirceContext& ctx) {
    const FiniteRing& R = ctx.ring();
    for (Elem x : ctx.component(1, 2))
        for (Elem y : ctx.component(2, 1))
            if (R.mul(x, y) != 0 || R.mul(y, x) != 0) return CheckResult::fail({x, y});
    return CheckResult::pass();
}

}  // namespace ringlab
