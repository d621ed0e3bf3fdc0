#pragma once

/**
 * @file enumeration.hpp
 * @brief Exhaustive and pruned map searches, predicate fuzzing, and the staged
 *        structure-theorem pipeline.
 */

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ringlab/jordan_maps.hpp"

namespace ringlab {

enum class MapClass {
    Additive,
    Derivation,
    JordanNDerivation,
    JordanNCentralizer,
    Centralizer,
    SingularJordanDerivation,
    Antiderivation,
};

/// A map-class predicate with its parameters (n, and the idempotent context
/// for the singular class).
struct MapPredicate {
    MapClass kind = MapClass::Additive;
    int n = 2;
    std::optional<PeirceContext> context;

    static MapPredicate additive() { return {MapClass::Additive, 2, std::nullopt}; }
    static MapPredicate derivation() { return {MapClass::Derivation, 2, std::nullopt}; }
    static MapPredicate jordan_n_derivation(int n) { return {MapClass::JordanNDerivation, n, std::nullopt}; }
    static MapPredicate jordan_n_centralizer(int n) { return {MapClass::JordanNCentralizer, n, std::nullopt}; }
    static MapPredicate centralizer() { return {MapClass::Centralizer, 2, std::nullopt}; }
    static MapPredicate singular_jordan_derivation(const PeirceContext& ctx) {
        return {MapClass::SingularJordanDerivation, 2, ctx};
    }
    static MapPredicate antiderivation() { return {MapClass::Antiderivation, 2, std::nullopt}; }

    std::string name() const;
    CheckResult evaluate(const RingMap& f, ScanOptions options = {}) const;
};

inline constexpr std::uint64_t kDefaultEnumerationBudget = 10'000'000;

struct EnumerationOptions {
    /// Largest search space (number of candidate assignments) accepted.
    std::uint64_t budget = kDefaultEnumerationBudget;
    unsigned workers = 0;
    /// Emitted maps beyond this many are counted but not kept.
    std::size_t max_maps = SIZE_MAX;
    ScanOptions scan;
};

struct EnumerationResult {
    std::string class_name;
    std::string ring;
    std::uint64_t count = 0;
    /// Candidates accounted for; always pruned + rejected + count.
    std::uint64_t scanned = 0;
    /// Candidates eliminated by a cheap necessary check before the full predicate.
    std::uint64_t pruned = 0;
    /// Candidates that reached the full predicate (or the additive extension) and failed.
    std::uint64_t rejected = 0;
    /// Emitted maps, sorted lexicographically by image table.
    std::vector<RingMap> maps;
    bool truncated = false;
    double elapsed_ms = 0;
};

/**
 * Every multiplicative Jordan n-centralizer of a 2-torsion-free ring. Any such
 * Φ obeys 2Φ(t) = Φ(1)∘t, so Φ is determined by μ = Φ(1) as
 * Φ_μ(t) = halve(μ∘t); scanning the |ring| candidates Φ_μ against the full
 * identity is therefore exhaustive over all maps, additive or not.
 * Throws UnsupportedOperation with 2-torsion.
 */
EnumerationResult enumerate_jordan_n_centralizers(const FiniteRing& ring, int n,
                                                  EnumerationOptions options = {});

/**
 * Every additive map passing `filter`, by depth-first assignment of images to
 * the additive generators. Cheap necessary checks run at the earliest depth
 * where they are decidable: generator-order relations, then instances of the
 * class law on generator tuples. Survivors are extended to full maps (rejected
 * if the images break a group relation) and must pass the full predicate.
 * Throws BudgetExceeded when |ring|^rank exceeds the budget.
 */
EnumerationResult enumerate_additive_maps(const FiniteRing& ring, const MapPredicate& filter,
                                          EnumerationOptions options = {});

struct FuzzReport {
    struct Sibling {
        Elem point;
        Elem image;
        friend bool operator==(const Sibling&, const Sibling&) = default;
    };

    std::string predicate;
    std::uint64_t seed = 0;
    std::size_t trials = 0;
    std::size_t failures = 0;
    /// Single-point perturbations that still pass, in trial order.
    std::vector<Sibling> siblings;

    friend bool operator==(const FuzzReport&, const FuzzReport&) = default;
};

/// Perturbs `base` at one random point per trial and re-runs the predicate.
/// Throws PreconditionError if `base` itself fails.
FuzzReport fuzz_predicate(const RingMap& base, const MapPredicate& predicate, std::size_t trials,
                          std::uint64_t seed, ScanOptions options = {});

struct PipelineStage {
    enum class Kind { Hypothesis, Conclusion };
    enum class Status { Pass, Fail, Skipped };

    std::string name;
    Kind kind = Kind::Hypothesis;
    Status status = Status::Skipped;
    std::string detail;
    std::vector<Elem> witness;
};

struct PipelineReport {
    std::string ring;
    std::optional<Elem> e1;
    int n = 2;
    std::size_t trials = 0;
    std::uint64_t seed = 0;
    std::vector<PipelineStage> stages;
    std::size_t center_size = 0;
    std::optional<std::uint64_t> centralizer_count;

    bool hypotheses_met() const;
    bool conclusions_hold() const;
    /// First failing stage, if any.
    const PipelineStage* first_failure() const;
};

/**
 * Runs every hypothesis and conclusion of the decomposition theorem as an
 * executable stage: ring axioms, 2-torsion, a nontrivial idempotent (`e1`, or
 * the smallest one), the diagonal faithfulness condition, the commutator
 * condition, agreement of the two center descriptions, the Jordan
 * n-centralizer count against |Z|, and seeded round trips Δ = μ·id + ad_a
 * through decompose_generalized. Nothing is assumed; stages that cannot run
 * are marked skipped.
 */
PipelineReport verify_theorem_pipeline(const FiniteRing& ring, std::optional<Elem> e1, int n,
                                       std::size_t trials, std::uint64_t seed,
                                       ScanOptions options = {});

std::string_view to_string(PipelineStage::Status status) noexcept;

}  // namespace ringlab
