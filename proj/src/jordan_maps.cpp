#include "ringlab/jordan_maps.hpp"

#include <algorithm>

#include "ringlab/error.hpp"
#include "ringlab/parallel.hpp"

namespace ringlab {

namespace {

using Tuple = std::vector<Elem>;

std::uint64_t tuple_count(std::size_t order, int arity) {
    std::uint64_t total = 1;
    for (int i = 0; i < arity; ++i) {
        if (total > UINT64_MAX / order) return UINT64_MAX;
        total *= order;
    }
    return total;
}

void require_arity(int n, const char* what) {
    if (n < 2) throw StructuralError(std::string(what) + ": n must be at least 2");
}

void require_budget(std::size_t order, int n, const ScanOptions& options, const char* what) {
    const std::uint64_t needed = tuple_count(order, n);
    if (needed > options.max_tuples)
        throw BudgetExceeded(std::string(what) + " over " + std::to_string(n) +
                                 "-tuples is too large for an exact scan; use fuzz_predicate "
                                 "for sampled checking",
                             needed, options.max_tuples);
}

/**
 * Scans every n-tuple for target(q_n(t)) == S_n where
 *   S_1 = first(t_1),
 *   S_k = S_{k−1} ∘ t_k + q_{k−1}(t) ∘ slot(t_k)   (second term only with a slot map).
 * Distributivity makes S_n the sum over slot positions without assuming any
 * map is additive. Prefix values are cached per level, so the innermost loop
 * costs a handful of table lookups.
 */
CheckResult scan_q_identity(const FiniteRing& R, std::span<const Elem> target,
                            std::span<const Elem> first, const Elem* slot, int n,
                            const ScanOptions& options, const char* law) {
    require_arity(n, law);
    require_budget(R.order(), n, options, law);
    const std::size_t N = R.order();
    const Elem* J = R.jordan_table().data();
    const Elem* A = R.add_table().data();
    const Elem* tgt = target.data();

    auto witness = parallel::find_first<Tuple>(N, options.workers, [&](std::size_t t1) -> std::optional<Tuple> {
        Tuple tuple(static_cast<std::size_t>(n));
        tuple[0] = static_cast<Elem>(t1);
        // Returns true when a failure was found below this level.
        auto descend = [&](auto& self, int level, Elem p, Elem s) -> bool {
            const std::size_t prow = std::size_t{p} * N;
            const std::size_t srow = std::size_t{s} * N;
            if (level == n) {
                for (std::size_t t = 0; t < N; ++t) {
                    const Elem pn = J[prow + t];
                    Elem sn = J[srow + t];
                    if (slot) sn = A[std::size_t{sn} * N + J[prow + slot[t]]];
                    if (tgt[pn] != sn) {
                        tuple[static_cast<std::size_t>(level - 1)] = static_cast<Elem>(t);
                        return true;
                    }
                }
                return false;
            }
            for (std::size_t t = 0; t < N; ++t) {
                tuple[static_cast<std::size_t>(level - 1)] = static_cast<Elem>(t);
                const Elem pn = J[prow + t];
                Elem sn = J[srow + t];
                if (slot) sn = A[std::size_t{sn} * N + J[prow + slot[t]]];
                if (self(self, level + 1, pn, sn)) return true;
            }
            return false;
        };
        if (descend(descend, 2, static_cast<Elem>(t1), first[t1])) return tuple;
        return std::nullopt;
    });
    if (witness) return CheckResult::fail(std::move(*witness), law);
    return CheckResult::pass();
}

// First pair (a, b) for which `violates(a, b)` holds.
template <class Violates>
std::optional<Tuple> first_pair(std::size_t N, unsigned workers, Violates violates) {
    return parallel::find_first<Tuple>(N, workers, [&](std::size_t a) -> std::optional<Tuple> {
        for (std::size_t b = 0; b < N; ++b)
            if (violates(static_cast<Elem>(a), static_cast<Elem>(b)))
                return Tuple{static_cast<Elem>(a), static_cast<Elem>(b)};
        return std::nullopt;
    });
}

template <class Violates>
CheckResult additive_then(const RingMap& f, unsigned workers, const char* law, Violates violates) {
    CheckResult additive = is_additive(f, workers);
    if (!additive) return additive;
    if (auto w = first_pair(f.ring().order(), workers, violates)) return CheckResult::fail(*w, law);
    return CheckResult::pass();
}

std::string tuple_text(const FiniteRing& R, std::span<const Elem> t) {
    std::string s = "(";
    for (std::size_t i = 0; i < t.size(); ++i) s += (i ? ", " : "") + R.label(t[i]);
    return s + ")";
}

}  // namespace

Elem jordan_product(const FiniteRing& ring, Elem a, Elem b) { return ring.jordan(a, b); }

Elem q_n(const FiniteRing& ring, std::span<const Elem> args) {
    if (args.empty()) throw StructuralError("q_n needs at least one argument");
    Elem acc = args[0];
    for (std::size_t i = 1; i < args.size(); ++i) acc = ring.jordan(acc, args[i]);
    return acc;
}

CheckResult is_additive(const RingMap& f, unsigned workers) {
    const FiniteRing& R = f.ring();
    if (auto w = first_pair(R.order(), workers, [&](Elem a, Elem b) {
            return f(R.add(a, b)) != R.add(f(a), f(b));
        }))
        return CheckResult::fail(*w, "additivity");
    return CheckResult::pass();
}

CheckResult is_derivation(const RingMap& f, unsigned workers) {
    const FiniteRing& R = f.ring();
    return additive_then(f, workers, "leibniz", [&](Elem a, Elem b) {
        return f(R.mul(a, b)) != R.add(R.mul(f(a), b), R.mul(a, f(b)));
    });
}

CheckResult is_jordan_n_derivation(const RingMap& f, int n, ScanOptions options) {
    return scan_q_identity(f.ring(), f.images(), f.images(), f.images().data(), n, options,
                           "jordan_n_derivation");
}

CheckResult satisfies_generalized_identity(const RingMap& F, const RingMap& delta, int n,
                                           ScanOptions options) {
    return scan_q_identity(F.ring(), F.images(), F.images(), delta.images().data(), n, options,
                           "generalized_jordan_n_derivation");
}

CheckResult is_generalized_jordan_n_derivation(const RingMap& F, const RingMap& delta, int n,
                                               ScanOptions options) {
    CheckResult associated = is_jordan_n_derivation(delta, n, options);
    if (!associated)
        throw PreconditionError("jordan_n_derivation",
                                "associated map is not a Jordan " + std::to_string(n) +
                                    "-derivation; fails at " +
                                    tuple_text(delta.ring(), associated.witness),
                                associated.witness);
    return satisfies_generalized_identity(F, delta, n, options);
}

CheckResult is_jordan_n_centralizer(const RingMap& F, int n, ScanOptions options) {
    return scan_q_identity(F.ring(), F.images(), F.images(), nullptr, n, options,
                           "jordan_n_centralizer");
}

CheckResult check_slot_exchange(const RingMap& F, int n, ScanOptions options) {
    require_arity(n, "slot_exchange");
    require_budget(F.ring().order(), n, options, "slot_exchange");
    const FiniteRing& R = F.ring();
    const std::size_t N = R.order();
    auto witness = parallel::find_first<Tuple>(N, options.workers, [&](std::size_t t1) -> std::optional<Tuple> {
        Tuple tuple(static_cast<std::size_t>(n));
        tuple[0] = static_cast<Elem>(t1);
        // lhs = q_k(F(t1), t2, ..), rhs = q_k(t1, F(t2), ..)
        auto descend = [&](auto& self, int level, Elem lhs, Elem rhs) -> bool {
            for (std::size_t t = 0; t < N; ++t) {
                tuple[static_cast<std::size_t>(level - 1)] = static_cast<Elem>(t);
                Elem l, r;
                if (level == 2) {
                    l = R.jordan(F(static_cast<Elem>(t1)), static_cast<Elem>(t));
                    r = R.jordan(static_cast<Elem>(t1), F(static_cast<Elem>(t)));
                } else {
                    l = R.jordan(lhs, static_cast<Elem>(t));
                    r = R.jordan(rhs, static_cast<Elem>(t));
                }
                if (level == n) {
                    if (l != r) return true;
                } else if (self(self, level + 1, l, r)) {
                    return true;
                }
            }
            return false;
        };
        if (descend(descend, 2, 0, 0)) return tuple;
        return std::nullopt;
    });
    if (witness) return CheckResult::fail(std::move(*witness), "slot_exchange");
    return CheckResult::pass();
}

CheckResult is_centralizer(const RingMap& F, unsigned workers) {
    const FiniteRing& R = F.ring();
    return additive_then(F, workers, "centralizer", [&](Elem a, Elem b) {
        const Elem ab = F(R.mul(a, b));
        return ab != R.mul(F(a), b) || ab != R.mul(a, F(b));
    });
}

CheckResult is_antiderivation(const RingMap& f, unsigned workers) {
    const FiniteRing& R = f.ring();
    return additive_then(f, workers, "reversed_leibniz", [&](Elem a, Elem b) {
        return f(R.mul(a, b)) != R.add(R.mul(f(b), a), R.mul(b, f(a)));
    });
}

CheckResult is_singular_jordan_derivation(const RingMap& f, const PeirceContext& ctx,
                                          unsigned workers) {
    CheckResult additive = is_additive(f, workers);
    if (!additive) return additive;
    CheckResult jordan = is_jordan_n_derivation(f, 2, {kDefaultTupleBudget, workers});
    if (!jordan) return jordan;
    for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= 2; ++j)
            for (Elem t : ctx.component(i, j)) {
                const Elem ft = f(t);
                const bool ok = (i == j) ? ft == 0 : ctx.in_component(j, i, ft);
                if (!ok) return CheckResult::fail({t}, i == j ? "kills_diagonal" : "swaps_off_diagonal");
            }
    return CheckResult::pass();
}

DecompositionReport decompose_centralizer(const RingMap& F, int n, ScanOptions options) {
    const FiniteRing& R = F.ring();
    if (!R.two_torsion_free())
        throw UnsupportedOperation("decompose_centralizer: ring '" + R.name() +
                                   "' has 2-torsion, the half-law does not determine the map");
    const Elem mu = F(R.one());
    DecompositionReport report(map_difference(F, scalar_map(R, mu)));
    report.mu = mu;
    report.image_of_zero = F(0);

    report.half_law_verified = true;
    report.scalar_form_verified = true;
    for (std::size_t i = 0; i < R.order(); ++i) {
        const auto t = static_cast<Elem>(i);
        if (report.half_law_verified && R.add(F(t), F(t)) != R.jordan(mu, t)) {
            report.half_law_verified = false;
            report.half_law_witness = t;
        }
        if (report.scalar_form_verified && F(t) != R.mul(mu, t)) {
            report.scalar_form_verified = false;
            report.scalar_form_witness = t;
        }
    }

    report.mu_is_central = true;
    for (std::size_t i = 0; i < R.order(); ++i) {
        const auto x = static_cast<Elem>(i);
        if (R.mul(mu, x) != R.mul(x, mu)) {
            report.mu_is_central = false;
            report.central_witness = x;
            break;
        }
    }

    CheckResult identity = is_jordan_n_centralizer(F, n, options);
    report.identity_verified = identity.holds;
    report.identity_witness = std::move(identity.witness);

    CheckResult additive = is_additive(F, options.workers);
    report.additivity_verified = additive.holds;
    report.additivity_witness = std::move(additive.witness);
    return report;
}

DecompositionReport decompose_generalized(const RingMap& F, const RingMap& delta, int n,
                                          ScanOptions options) {
    const FiniteRing& R = F.ring();
    if (!R.two_torsion_free())
        throw UnsupportedOperation("decompose_generalized: ring '" + R.name() + "' has 2-torsion");
    CheckResult generalized = is_generalized_jordan_n_derivation(F, delta, n, options);
    if (!generalized)
        throw PreconditionError("generalized_jordan_n_derivation",
                                "map is not a generalized Jordan " + std::to_string(n) +
                                    "-derivation for the given associated map; fails at " +
                                    tuple_text(R, generalized.witness),
                                generalized.witness);

    const RingMap phi = map_difference(F, delta);
    DecompositionReport report = decompose_centralizer(phi, n, options);
    report.residual = map_difference(F, scalar_map(R, report.mu));

    CheckResult additive = is_additive(F, options.workers);
    report.additivity_verified = additive.holds;
    report.additivity_witness = std::move(additive.witness);
    return report;
}

std::vector<std::vector<Elem>> subgroup_homomorphisms(const FiniteRing& ring,
                                                      std::span<const Elem> domain,
                                                      std::span<const Elem> codomain,
                                                      std::uint64_t budget) {
    const AdditiveChart chart(ring, greedy_generators(ring, domain));
    const std::size_t k = chart.rank();
    std::uint64_t space = 1;
    for (std::size_t i = 0; i < k; ++i) {
        if (space > budget / std::max<std::size_t>(codomain.size(), 1))
            throw BudgetExceeded("homomorphism search", UINT64_MAX, budget);
        space *= codomain.size();
    }
    if (space > budget) throw BudgetExceeded("homomorphism search", space, budget);

    std::vector<std::vector<Elem>> homs;
    std::vector<Elem> images(k, 0);
    std::vector<Elem> table(ring.order(), 0);
    for (std::uint64_t idx = 0; idx < space; ++idx) {
        std::uint64_t rest = idx;
        for (std::size_t g = k; g-- > 0;) {
            images[g] = codomain[rest % codomain.size()];
            rest /= codomain.size();
        }
        std::fill(table.begin(), table.end(), Elem{0});
        if (chart.extend(images, table)) homs.push_back(table);
    }
    return homs;
}

SingularDecompositionReport decompose_singular(const RingMap& delta, const PeirceContext& ctx,
                                               std::uint64_t budget) {
    const FiniteRing& R = delta.ring();
    if (CheckResult a = is_additive(delta); !a)
        throw PreconditionError("additive", "map is not additive", a.witness);
    if (CheckResult j = is_jordan_n_derivation(delta, 2); !j)
        throw PreconditionError("jordan_n_derivation", "map is not a Jordan derivation", j.witness);
    if (CheckResult s = check_spade(ctx); !s)
        throw PreconditionError("spade", "idempotent fails the diagonal faithfulness condition",
                                s.witness);

    const auto h12 = subgroup_homomorphisms(R, ctx.component(1, 2), ctx.component(2, 1), budget);
    const auto h21 = subgroup_homomorphisms(R, ctx.component(2, 1), ctx.component(1, 2), budget);
    SingularDecompositionReport report;
    report.candidates = std::uint64_t{h12.size()} * h21.size();
    if (report.candidates > budget)
        throw BudgetExceeded("singular decomposition search", report.candidates, budget);

    for (const auto& f12 : h12)
        for (const auto& f21 : h21) {
            std::vector<Elem> images(R.order());
            for (std::size_t i = 0; i < R.order(); ++i) {
                const auto t = static_cast<Elem>(i);
                images[i] = R.add(f12[ctx.project(1, 2, t)], f21[ctx.project(2, 1, t)]);
            }
            RingMap phi(R, std::move(images));
            RingMap d = map_difference(delta, phi);
            if (!is_derivation(d, 1)) continue;
            ++report.solutions;
            if (!report.phi || phi < *report.phi) {
                report.phi = std::move(phi);
                report.d = std::move(d);
            }
        }
    report.found = report.solutions > 0;
    return report;
}

}  // namespace ringlab
