#pragma once

/**
 * @file peirce.hpp
 * @brief Structure relative to an idempotent: Peirce components, the
 *        faithfulness condition on the diagonal components, the center and its
 *        Peirce description, the commutator condition, the central
 *        isomorphism Z·e1 → Z·e2, and ring-class predicates.
 *
 * All witnesses are minimal-index.
 */

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "ringlab/finite_ring.hpp"

namespace ringlab {

/// A nontrivial idempotent e1, its complement e2 = 1 − e1, and the four
/// components A_ij = e_i·A·e_j as ascending element lists. Holds a non-owning
/// reference to the ring.
class PeirceContext {
public:
    /// Throws PreconditionError if e1 is not idempotent or is 0 or 1.
    PeirceContext(const FiniteRing& ring, Elem e1);

    const FiniteRing& ring() const noexcept { return *ring_; }
    Elem e1() const noexcept { return e1_; }
    Elem e2() const noexcept { return e2_; }

    /// Component e_{i}·A·e_{j} for i, j in {1, 2}.
    const std::vector<Elem>& component(int i, int j) const { return components_[slot(i, j)]; }
    bool in_component(int i, int j, Elem t) const { return member_[slot(i, j)][t]; }

    /// e_i·t·e_j
    Elem project(int i, int j, Elem t) const;

private:
    static std::size_t slot(int i, int j) { return static_cast<std::size_t>((i - 1) * 2 + (j - 1)); }

    const FiniteRing* ring_;
    Elem e1_;
    Elem e2_;
    std::array<std::vector<Elem>, 4> components_;
    std::array<std::vector<bool>, 4> member_;
};

PeirceContext make_peirce_context(const FiniteRing& ring, Elem e1);

struct PeirceParts {
    Elem t11, t12, t21, t22;
    friend bool operator==(const PeirceParts&, const PeirceParts&) = default;
};

PeirceParts peirce_decompose(const PeirceContext& ctx, Elem t);

/**
 * The faithfulness condition on diagonal components:
 *   t11·A12 = 0 = A21·t11  ⟹  t11 = 0,   and
 *   A12·t22 = 0 = t22·A21  ⟹  t22 = 0.
 * Witness: the smallest-index violating t11 or t22.
 */
CheckResult check_spade(const PeirceContext& ctx);

struct CenterDescription {
    enum class Via { Commutant, Peirce };
    std::vector<Elem> elements;  ///< ascending
    Via via = Via::Commutant;
};

/// { t : t·x = x·t for all x }
CenterDescription center_commutant(const FiniteRing& ring);

/// { t11 + t22 : t11·x12 = x12·t22 and x21·t11 = t22·x21 for all x12 ∈ A12, x21 ∈ A21 }
CenterDescription center_peirce(const PeirceContext& ctx);

/// [t, A] ⊆ Z(A) implies t ∈ Z(A). Witness: smallest violating t.
CheckResult check_condition_2_1(const FiniteRing& ring);

struct XiResult {
    enum class Status { Ok, NoSolution, MultipleSolutions };

    Status status = Status::Ok;
    /// (z11, ξ(z11)) for each z11 ∈ Z·e1, ascending by z11; filled only when Ok.
    std::vector<std::pair<Elem, Elem>> table;
    /// First domain element without a unique solution in Z·e2.
    std::optional<Elem> failing_element;
    std::size_t solutions_in_codomain = 0;
    /// When no solution lies in Z·e2, a solution found elsewhere in A22, if any.
    std::optional<Elem> solution_outside_codomain;
    std::string message;

    bool ok() const noexcept { return status == Status::Ok; }
};

/// Solves z11·x12 = x12·w and x21·z11 = w·x21 for w ∈ Z(A)·e2, for every
/// z11 ∈ Z(A)·e1, and reports existence and uniqueness.
XiResult compute_xi(const PeirceContext& ctx);

struct PrimeCheck {
    bool holds = true;
    std::optional<std::pair<Elem, Elem>> witness;  ///< (u, v), both nonzero, u·A·v = 0
};

/// u·A·v = 0 forces u = 0 or v = 0.
PrimeCheck is_prime(const FiniteRing& ring);

struct Faithfulness {
    bool left_faithful = true;   ///< a11·A12 = 0 ⟹ a11 = 0
    bool right_faithful = true;  ///< A12·a22 = 0 ⟹ a22 = 0
    std::optional<Elem> left_witness;
    std::optional<Elem> right_witness;
};

Faithfulness is_faithful_bimodule(const PeirceContext& ctx);

/// A12·A21 = 0 and A21·A12 = 0.
CheckResult check_orthogonality_hypothesis(const PeirceContext& ctx);

}  // namespace ringlab
