#include "ringlab/ring_map.hpp"

#include "ringlab/error.hpp"

namespace ringlab {

RingMap::RingMap(const FiniteRing& ring, std::vector<Elem> images)
    : ring_(&ring), images_(std::move(images)) {
    if (images_.size() != ring.order())
        throw StructuralError("map has " + std::to_string(images_.size()) + " images, ring order is " +
                              std::to_string(ring.order()));
    for (Elem x : images_)
        if (x >= ring.order())
            throw StructuralError("map image " + std::to_string(x) + " out of range");
}

namespace {

template <class F>
RingMap tabulate(const FiniteRing& ring, F f) {
    std::vector<Elem> images(ring.order());
    for (std::size_t t = 0; t < ring.order(); ++t) images[t] = f(static_cast<Elem>(t));
    return RingMap(ring, std::move(images));
}

}  // namespace

RingMap zero_map(const FiniteRing& ring) {
    return RingMap(ring, std::vector<Elem>(ring.order(), 0));
}

RingMap identity_map(const FiniteRing& ring) {
    return tabulate(ring, [](Elem t) { return t; });
}

RingMap inner_derivation(const FiniteRing& ring, Elem a) {
    return tabulate(ring, [&](Elem t) { return ring.commutator(a, t); });
}

RingMap scalar_map(const FiniteRing& ring, Elem mu) {
    return tabulate(ring, [&](Elem t) { return ring.mul(mu, t); });
}

RingMap power_map(const FiniteRing& ring, unsigned exponent) {
    if (exponent == 0) throw StructuralError("power map exponent must be positive");
    return tabulate(ring, [&](Elem t) {
        Elem p = t;
        for (unsigned k = 1; k < exponent; ++k) p = ring.mul(p, t);
        return p;
    });
}

RingMap map_sum(const RingMap& f, const RingMap& g) {
    const FiniteRing& R = f.ring();
    return tabulate(R, [&](Elem t) { return R.add(f(t), g(t)); });
}

RingMap map_difference(const RingMap& f, const RingMap& g) {
    const FiniteRing& R = f.ring();
    return tabulate(R, [&](Elem t) { return R.sub(f(t), g(t)); });
}

RingMap perturbed(const RingMap& f, Elem at, Elem to) {
    std::vector<Elem> images(f.images().begin(), f.images().end());
    images.at(at) = to;
    return RingMap(f.ring(), std::move(images));
}

AdditiveChart::AdditiveChart(const FiniteRing& ring, std::vector<AdditiveGenerator> generators)
    : ring_(&ring), generators_(std::move(generators)) {
    const std::size_t n = ring.order();
    const std::size_t k = generators_.size();
    parent_.assign(n, 0);
    step_.assign(n, kOutside);
    coords_.assign(n * k, 0);
    members_.push_back(0);
    step_[0] = 0;
    for (std::size_t head = 0; head < members_.size(); ++head) {
        const Elem x = members_[head];
        for (std::size_t g = 0; g < k; ++g) {
            const Elem y = ring.add(x, generators_[g].element);
            if (step_[y] != kOutside) continue;
            step_[y] = static_cast<std::uint32_t>(g);
            parent_[y] = x;
            for (std::size_t c = 0; c < k; ++c) coords_[y * k + c] = coords_[x * k + c];
            auto& cy = coords_[y * k + g];
            cy = static_cast<std::uint32_t>((cy + 1) % generators_[g].order);
            members_.push_back(y);
        }
    }
}

AdditiveChart AdditiveChart::of_ring(const FiniteRing& ring) {
    const auto gens = ring.additive_generators();
    return AdditiveChart(ring, std::vector<AdditiveGenerator>(gens.begin(), gens.end()));
}

std::optional<std::size_t> AdditiveChart::support_max(Elem x) const noexcept {
    const auto c = coordinates(x);
    for (std::size_t k = c.size(); k-- > 0;)
        if (c[k] != 0) return k;
    return std::nullopt;
}

Elem AdditiveChart::evaluate(std::span<const Elem> images, Elem x) const noexcept {
    const auto c = coordinates(x);
    Elem sum = 0;
    for (std::size_t k = 0; k < c.size(); ++k)
        if (c[k] != 0) sum = ring_->add(sum, ring_->times(c[k], images[k]));
    return sum;
}

bool AdditiveChart::extend(std::span<const Elem> images, std::vector<Elem>& table) const {
    const FiniteRing& R = *ring_;
    table[0] = 0;
    for (std::size_t i = 1; i < members_.size(); ++i) {
        const Elem x = members_[i];
        table[x] = R.add(table[parent_[x]], images[step_[x]]);
    }
    for (Elem x : members_)
        for (std::size_t g = 0; g < generators_.size(); ++g)
            if (table[R.add(x, generators_[g].element)] != R.add(table[x], images[g])) return false;
    return true;
}

std::optional<RingMap> additive_extension(const FiniteRing& ring, std::span<const Elem> generator_images) {
    const AdditiveChart chart = AdditiveChart::of_ring(ring);
    if (generator_images.size() != chart.rank())
        throw StructuralError("expected " + std::to_string(chart.rank()) + " generator images, got " +
                              std::to_string(generator_images.size()));
    std::vector<Elem> table(ring.order(), 0);
    if (!chart.extend(generator_images, table)) return std::nullopt;
    return RingMap(ring, std::move(table));
}

}  // namespace ringlab
