#pragma once

/**
 * @file jordan_maps.hpp
 * @brief Jordan products, the iterated product q_n, map-class predicates, and
 *        the decompositions Φ(t) = μt and Δ(t) = μt + δ(t).
 *
 * The n-ary predicates are multiplicative: they test only their defining
 * identity over every n-tuple and never assume additivity or f(0) = 0.
 * Additivity is a separate predicate. Witnesses are the lexicographically
 * smallest failing tuple.
 */

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ringlab/peirce.hpp"
#include "ringlab/ring_map.hpp"

namespace ringlab {

inline constexpr std::uint64_t kDefaultTupleBudget = 1'000'000'000;

struct ScanOptions {
    /// Exhaustive n-tuple scans larger than this refuse with BudgetExceeded.
    std::uint64_t max_tuples = kDefaultTupleBudget;
    /// 0 = available hardware parallelism.
    unsigned workers = 0;
};

/// a∘b = ab + ba
Elem jordan_product(const FiniteRing& ring, Elem a, Elem b);

/// q_1(t) = t, q_n(t_1..t_n) = q_{n−1}(t_1..t_{n−1}) ∘ t_n. Throws on empty input.
Elem q_n(const FiniteRing& ring, std::span<const Elem> args);

CheckResult is_additive(const RingMap& f, unsigned workers = 0);

/// Additive and f(ab) = f(a)b + af(b).
CheckResult is_derivation(const RingMap& f, unsigned workers = 0);

/// f(q_n(t)) = Σ_i q_n(t_1, .., f(t_i), .., t_n) for every n-tuple.
CheckResult is_jordan_n_derivation(const RingMap& f, int n, ScanOptions options = {});

/// F(q_n(t)) = q_n(F(t_1), t_2, .., t_n) + Σ_{i≥2} q_n(t_1, .., δ(t_i), .., t_n).
/// The identity alone, without checking δ.
CheckResult satisfies_generalized_identity(const RingMap& F, const RingMap& delta, int n,
                                           ScanOptions options = {});

/// δ must itself pass is_jordan_n_derivation; otherwise throws
/// PreconditionError("jordan_n_derivation") carrying δ's witness.
CheckResult is_generalized_jordan_n_derivation(const RingMap& F, const RingMap& delta, int n,
                                               ScanOptions options = {});

/// F(q_n(t)) = q_n(F(t_1), t_2, .., t_n) for every n-tuple.
CheckResult is_jordan_n_centralizer(const RingMap& F, int n, ScanOptions options = {});

/// q_n(F(t_1), t_2, ..) = q_n(t_1, F(t_2), ..) for every n-tuple: the slot
/// exchange every Jordan n-centralizer satisfies.
CheckResult check_slot_exchange(const RingMap& F, int n, ScanOptions options = {});

/// Additive and F(ab) = F(a)b = aF(b).
CheckResult is_centralizer(const RingMap& F, unsigned workers = 0);

/// Additive Jordan derivation with f(A11) = f(A22) = 0, f(A12) ⊆ A21, f(A21) ⊆ A12.
CheckResult is_singular_jordan_derivation(const RingMap& f, const PeirceContext& ctx,
                                          unsigned workers = 0);

/// Additive and f(xy) = f(y)x + yf(x).
CheckResult is_antiderivation(const RingMap& f, unsigned workers = 0);

struct DecompositionReport {
    explicit DecompositionReport(RingMap residual_map) : residual(std::move(residual_map)) {}

    Elem mu = 0;
    bool mu_is_central = false;
    /// Δ − μ·id (or Φ − μ·id for a bare centralizer).
    RingMap residual;
    /// The defining identity held for the centralizer part Φ.
    bool identity_verified = false;
    bool additivity_verified = false;
    /// 2Φ(t) = μ∘t for every t.
    bool half_law_verified = false;
    /// Φ(t) = μt for every t, i.e. Δ(t) = μt + δ(t).
    bool scalar_form_verified = false;
    /// Φ(0), recorded rather than assumed to be 0.
    Elem image_of_zero = 0;

    std::vector<Elem> identity_witness;
    std::vector<Elem> additivity_witness;
    std::optional<Elem> half_law_witness;
    std::optional<Elem> central_witness;  ///< x with μx ≠ xμ
    std::optional<Elem> scalar_form_witness;

    bool all_verified() const noexcept {
        return mu_is_central && identity_verified && additivity_verified && half_law_verified &&
               scalar_form_verified;
    }
};

/**
 * Tests (does not assume) that F is the central scaling t ↦ μt with μ = F(1):
 * the half-law, centrality of μ, the centralizer identity, scalar form, and
 * additivity are each checked exhaustively and recorded with witnesses.
 * Throws UnsupportedOperation on rings with 2-torsion.
 */
DecompositionReport decompose_centralizer(const RingMap& F, int n, ScanOptions options = {});

/**
 * Requires (F, δ) to pass is_generalized_jordan_n_derivation, otherwise throws
 * PreconditionError naming the failing predicate. Runs decompose_centralizer on
 * Φ = F − δ; additivity is reported for F itself.
 */
DecompositionReport decompose_generalized(const RingMap& F, const RingMap& delta, int n,
                                          ScanOptions options = {});

inline constexpr std::uint64_t kDefaultSingularBudget = 10'000'000;

struct SingularDecompositionReport {
    bool found = false;
    std::optional<RingMap> d;    ///< derivation part
    std::optional<RingMap> phi;  ///< singular part, lexicographically smallest
    std::size_t solutions = 0;   ///< number of admissible φ in the candidate space
    std::uint64_t candidates = 0;
};

/**
 * Searches the additive maps φ that vanish on A11 + A22 and swap A12 and A21
 * for one with δ − φ a derivation. Requires δ to be an additive Jordan
 * 2-derivation and the context to satisfy check_spade (PreconditionError
 * otherwise); a candidate space above `budget` throws BudgetExceeded.
 */
SingularDecompositionReport decompose_singular(const RingMap& delta, const PeirceContext& ctx,
                                               std::uint64_t budget = kDefaultSingularBudget);

/// Additive homomorphisms from the subgroup `domain` into the subgroup
/// `codomain`, each as a full-length table (zero off the domain).
std::vector<std::vector<Elem>> subgroup_homomorphisms(const FiniteRing& ring,
                                                      std::span<const Elem> domain,
                                                      std::span<const Elem> codomain,
                                                      std::uint64_t budget);

}  // namespace ringlab
