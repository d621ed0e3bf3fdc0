#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "ringlab/finite_ring.hpp"

namespace ringlab {

/// An arbitrary self-map of a finite ring, given by its image table. Nothing
/// (not even f(0) = 0) is assumed; additivity is a checked property. Holds a
/// non-owning reference to the ring.
class RingMap {
public:
    RingMap(const FiniteRing& ring, std::vector<Elem> images);

    const FiniteRing& ring() const noexcept { return *ring_; }
    Elem operator()(Elem t) const noexcept { return images_[t]; }
    std::span<const Elem> images() const noexcept { return images_; }

    friend bool operator==(const RingMap& a, const RingMap& b) noexcept {
        return a.images_ == b.images_;
    }
    /// Lexicographic on image tables.
    friend auto operator<=>(const RingMap& a, const RingMap& b) noexcept {
        return a.images_ <=> b.images_;
    }

private:
    const FiniteRing* ring_;
    std::vector<Elem> images_;
};

RingMap zero_map(const FiniteRing& ring);
RingMap identity_map(const FiniteRing& ring);
/// ad_a: t ↦ a·t − t·a
RingMap inner_derivation(const FiniteRing& ring, Elem a);
/// t ↦ μ·t
RingMap scalar_map(const FiniteRing& ring, Elem mu);
/// t ↦ t^k, k ≥ 1
RingMap power_map(const FiniteRing& ring, unsigned exponent);
RingMap map_sum(const RingMap& f, const RingMap& g);
RingMap map_difference(const RingMap& f, const RingMap& g);
/// f with the image of `at` replaced by `to`.
RingMap perturbed(const RingMap& f, Elem at, Elem to);

/**
 * Coordinates of a subgroup of (ring, +) over an ordered generating list.
 *
 * Every member x is reached from 0 by a breadth-first walk that adds one
 * generator per step, so x = parent(x) + g_step(x) and x = Σ c_k·g_k with the
 * path's step counts c_k (reduced modulo the generator orders). An additive
 * map on the subgroup is determined by the generator images; `extend` builds
 * it and reports whether the images respect every relation.
 */
class AdditiveChart {
public:
    AdditiveChart(const FiniteRing& ring, std::vector<AdditiveGenerator> generators);

    /// Chart of the whole ring over its own additive generators.
    static AdditiveChart of_ring(const FiniteRing& ring);

    const FiniteRing& ring() const noexcept { return *ring_; }
    std::span<const AdditiveGenerator> generators() const noexcept { return generators_; }
    std::size_t rank() const noexcept { return generators_.size(); }
    /// Subgroup members in walk order (starting with 0).
    std::span<const Elem> members() const noexcept { return members_; }
    bool contains(Elem x) const noexcept { return step_[x] != kOutside; }

    std::span<const std::uint32_t> coordinates(Elem x) const noexcept {
        return {coords_.data() + std::size_t{x} * rank(), rank()};
    }
    /// Largest k with a nonzero coordinate of x; nullopt for x = 0.
    std::optional<std::size_t> support_max(Elem x) const noexcept;

    /// Σ c_k·images[k] over the coordinates of x.
    Elem evaluate(std::span<const Elem> images, Elem x) const noexcept;

    /**
     * Writes the additive extension of `images` into `table` at every member
     * (other entries are left untouched). Returns false when the images violate
     * a relation, i.e. no additive map has them.
     */
    bool extend(std::span<const Elem> images, std::vector<Elem>& table) const;

private:
    static constexpr std::uint32_t kOutside = 0xFFFFFFFFu;

    const FiniteRing* ring_;
    std::vector<AdditiveGenerator> generators_;
    std::vector<Elem> members_;
    std::vector<Elem> parent_;
    std::vector<std::uint32_t> step_;  // generator index used to reach x; kOutside if not a member
    std::vector<std::uint32_t> coords_;
};

/// The additive map with the given images of the ring's additive generators,
/// or nullopt if those images are inconsistent with the group relations.
std::optional<RingMap> additive_extension(const FiniteRing& ring, std::span<const Elem> generator_images);

}  // namespace ringlab
