#pragma once

/**
 * @file finite_ring.hpp
 * @brief Finite unital rings given by Cayley tables.
 *
 * Elements are dense indices in [0, order) with the additive identity fixed at
 * index 0. All arithmetic is a table lookup. Constructed families (Z_m, full,
 * upper triangular and block upper triangular matrix rings, direct products)
 * index their elements as little-endian mixed-radix tuples: the first
 * component (first row-major matrix position, left factor of a product) varies
 * fastest.
 */

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "ringlab/check.hpp"

namespace ringlab {

/// Largest order a table can index.
inline constexpr std::size_t kMaxRepresentableOrder = std::size_t{1} << 16;

/// Default guard against constructions too large for exhaustive scans.
inline constexpr std::size_t kDefaultOrderCap = 4096;

struct AdditiveGenerator {
    Elem element;
    std::size_t order;  ///< cyclic order of `element` in (ring, +)

    friend bool operator==(const AdditiveGenerator&, const AdditiveGenerator&) = default;
};

/// Raw candidate tables, not yet known to satisfy anything.
struct RingTables {
    std::vector<std::vector<std::int64_t>> add;
    std::vector<std::vector<std::int64_t>> mul;
    std::int64_t one = 1;
    std::vector<std::string> labels;  ///< empty, or one label per element
};

class FiniteRing {
public:
    /// Validates `tables` (structure and every ring axiom) and builds the ring.
    /// Throws StructuralError naming the first failure.
    static FiniteRing from_tables(const RingTables& tables, std::string name = "tables",
                                  std::size_t order_cap = kDefaultOrderCap);

    /**
     * Assembles a ring from flat row-major tables without checking the axioms.
     * Used by the family constructors, whose output is axiom-sound by
     * construction (and rechecked by the test suite). When `generators` is
     * empty a generating set is computed greedily.
     */
    static FiniteRing assemble(std::size_t order, std::vector<Elem> add, std::vector<Elem> mul,
                               Elem one, std::vector<AdditiveGenerator> generators,
                               std::vector<std::string> labels, std::string name);

    std::size_t order() const noexcept { return order_; }
    Elem zero() const noexcept { return 0; }
    Elem one() const noexcept { return one_; }

    Elem add(Elem a, Elem b) const noexcept { return add_[index(a, b)]; }
    Elem mul(Elem a, Elem b) const noexcept { return mul_[index(a, b)]; }
    Elem neg(Elem a) const noexcept { return neg_[a]; }
    Elem sub(Elem a, Elem b) const noexcept { return add_[index(a, neg_[b])]; }
    /// a∘b = ab + ba
    Elem jordan(Elem a, Elem b) const noexcept { return jordan_[index(a, b)]; }
    /// [a, b] = ab − ba
    Elem commutator(Elem a, Elem b) const noexcept { return sub(mul(a, b), mul(b, a)); }
    /// k·a, the k-fold sum of a.
    Elem times(std::uint64_t k, Elem a) const noexcept;

    bool two_torsion_free() const noexcept { return !half_.empty(); }
    /// The unique s with s + s = t. Throws UnsupportedOperation with 2-torsion.
    Elem halve(Elem t) const;

    std::span<const AdditiveGenerator> additive_generators() const noexcept { return generators_; }

    const std::string& label(Elem a) const { return labels_[a]; }
    std::optional<Elem> find_label(std::string_view label) const;
    const std::string& name() const noexcept { return name_; }

    std::span<const Elem> add_table() const noexcept { return add_; }
    std::span<const Elem> mul_table() const noexcept { return mul_; }
    std::span<const Elem> jordan_table() const noexcept { return jordan_; }

    /// Same order, tables, and identity (labels and name are ignored).
    bool same_structure(const FiniteRing& other) const noexcept;

    RingTables tables() const;

private:
    FiniteRing() = default;

    std::size_t index(Elem a, Elem b) const noexcept { return std::size_t{a} * order_ + b; }

    std::size_t order_ = 0;
    Elem one_ = 0;
    std::vector<Elem> add_;
    std::vector<Elem> mul_;
    std::vector<Elem> jordan_;
    std::vector<Elem> neg_;
    std::vector<Elem> half_;  // empty when the ring has 2-torsion
    std::vector<AdditiveGenerator> generators_;
    std::vector<std::string> labels_;
    std::unordered_map<std::string, Elem> label_index_;
    std::string name_;
};

// ---------------------------------------------------------------------------
// Validation
// ---------------------------------------------------------------------------

enum class Axiom {
    Zero,
    AdditiveCommutativity,
    AdditiveAssociativity,
    AdditiveInverses,
    Identity,
    MultiplicativeAssociativity,
    LeftDistributivity,
    RightDistributivity,
};

std::string_view axiom_name(Axiom axiom) noexcept;

struct ValidationReport {
    enum class Status { Pass, Structural, AxiomViolation };

    Status status = Status::Pass;
    std::optional<Axiom> axiom;
    std::vector<std::size_t> witness;  ///< minimal lexicographic violating tuple
    std::string message;

    bool ok() const noexcept { return status == Status::Pass; }
};

/// Checks table structure, then the ring axioms in a fixed order, reporting the
/// first violated axiom with its minimal witness.
ValidationReport validate_ring(const RingTables& candidate, unsigned workers = 0);
ValidationReport validate_ring(const FiniteRing& ring, unsigned workers = 0);

// ---------------------------------------------------------------------------
// Families
// ---------------------------------------------------------------------------

struct BuildOptions {
    std::size_t order_cap = kDefaultOrderCap;
};

FiniteRing build_zmod(std::int64_t modulus, BuildOptions options = {});
FiniteRing build_matrix_ring(const FiniteRing& base, std::int64_t size, BuildOptions options = {});
FiniteRing build_triangular_ring(const FiniteRing& base, std::int64_t size,
                                 BuildOptions options = {});
/// Entries allowed on and above the block diagonal of `partition`.
FiniteRing build_block_triangular_ring(const FiniteRing& base, std::int64_t size,
                                       std::span<const std::int64_t> partition,
                                       BuildOptions options = {});
FiniteRing build_product_ring(const FiniteRing& left, const FiniteRing& right,
                              BuildOptions options = {});

/// Decodes a constructed matrix-family element into its base-ring entries,
/// row-major over all size×size positions (disallowed positions are zero).
/// Only meaningful for rings built by the matrix-family constructors.
std::vector<Elem> matrix_entries(const FiniteRing& base, std::int64_t size,
                                 std::span<const std::int64_t> partition, Elem element);

/// Index of the matrix with entry `coefficient` at (row, col), zero elsewhere,
/// in a ring built by the matrix-family constructors.
Elem matrix_unit(const FiniteRing& base, std::int64_t size,
                 std::span<const std::int64_t> partition, std::size_t row, std::size_t col,
                 Elem coefficient);

// ---------------------------------------------------------------------------
// Element-level queries
// ---------------------------------------------------------------------------

struct Idempotent {
    Elem element;
    bool nontrivial;
};

/// All e with e·e = e, ascending by index.
std::vector<Idempotent> find_idempotents(const FiniteRing& ring);

/// Holds iff t + t = 0 forces t = 0; witness is the smallest nonzero t with t + t = 0.
CheckResult is_two_torsion_free(const FiniteRing& ring);

Elem halve(const FiniteRing& ring, Elem t);

/// Smallest additive subgroup containing `elements`, ascending.
std::vector<Elem> additive_span(const FiniteRing& ring, std::span<const Elem> elements);

/// Greedy generating set of the subgroup `subgroup` (ascending element list):
/// repeatedly take the smallest element not yet in the span.
std::vector<AdditiveGenerator> greedy_generators(const FiniteRing& ring,
                                                 std::span<const Elem> subgroup);

}  // namespace ringlab
