#include "ringlab/enumeration.hpp"

#include <algorithm>
#include <chrono>
#include <mutex>

#include "ringlab/error.hpp"
#include "ringlab/parallel.hpp"

namespace ringlab {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

void finish(EnumerationResult& result, std::vector<std::vector<RingMap>>& per_task,
            const EnumerationOptions& options) {
    for (auto& bucket : per_task)
        for (auto& m : bucket) result.maps.push_back(std::move(m));
    std::sort(result.maps.begin(), result.maps.end());
    result.count = result.maps.size();
    if (result.maps.size() > options.max_maps) {
        result.maps.erase(result.maps.begin() + static_cast<std::ptrdiff_t>(options.max_maps),
                          result.maps.end());
        result.truncated = true;
    }
}

// ---------------------------------------------------------------------------
// Law instances on generator tuples
// ---------------------------------------------------------------------------

enum class Law {
    Leibniz,
    ReversedLeibniz,
    Centralizer,
    JordanN,
    JordanNCentralizer,
    Vanishes,     // f(t) = 0
    LandsIn12,    // f(t) ∈ A12
    LandsIn21,    // f(t) ∈ A21
};

struct LawInstance {
    Law law;
    std::vector<Elem> args;
    std::size_t depth = 0;
};

// Evaluates one instance through `value`, which returns f at a point. Every
// point passed to `value` depends only on `args`, never on earlier values, so
// a recording `value` can discover which generator images an instance reads.
template <class Value>
bool instance_holds(const FiniteRing& R, const LawInstance& inst, int n,
                    const PeirceContext* ctx, Value&& value) {
    const auto& a = inst.args;
    switch (inst.law) {
        case Law::Leibniz: {
            const Elem lhs = value(R.mul(a[0], a[1]));
            return lhs == R.add(R.mul(value(a[0]), a[1]), R.mul(a[0], value(a[1])));
        }
        case Law::ReversedLeibniz: {
            const Elem lhs = value(R.mul(a[0], a[1]));
            return lhs == R.add(R.mul(value(a[1]), a[0]), R.mul(a[1], value(a[0])));
        }
        case Law::Centralizer: {
            const Elem lhs = value(R.mul(a[0], a[1]));
            const Elem l = R.mul(value(a[0]), a[1]);
            const Elem r = R.mul(a[0], value(a[1]));
            return lhs == l && lhs == r;
        }
        case Law::JordanN: {
            const Elem lhs = value(q_n(R, a));
            std::vector<Elem> slot(a.begin(), a.end());
            Elem rhs = 0;
            for (std::size_t i = 0; i < a.size(); ++i) {
                slot[i] = value(a[i]);
                rhs = R.add(rhs, q_n(R, slot));
                slot[i] = a[i];
            }
            return lhs == rhs;
        }
        case Law::JordanNCentralizer: {
            const Elem lhs = value(q_n(R, a));
            std::vector<Elem> slot(a.begin(), a.end());
            slot[0] = value(a[0]);
            return lhs == q_n(R, slot);
        }
        case Law::Vanishes: return value(a[0]) == 0;
        case Law::LandsIn12: return ctx->in_component(1, 2, value(a[0]));
        case Law::LandsIn21: return ctx->in_component(2, 1, value(a[0]));
    }
    (void)n;
    return false;
}

void for_each_tuple(std::size_t base, int arity, const auto& visit) {
    std::vector<std::size_t> idx(static_cast<std::size_t>(arity), 0);
    if (base == 0) return;
    for (;;) {
        visit(idx);
        int pos = arity - 1;
        while (pos >= 0 && ++idx[static_cast<std::size_t>(pos)] == base) idx[static_cast<std::size_t>(pos--)] = 0;
        if (pos < 0) return;
    }
}

std::vector<LawInstance> law_instances(const FiniteRing& R, const MapPredicate& filter,
                                       std::span<const AdditiveGenerator> gens) {
    std::vector<LawInstance> out;
    auto on_tuples = [&](Law law, int arity) {
        for_each_tuple(gens.size(), arity, [&](const std::vector<std::size_t>& idx) {
            LawInstance inst{law, {}, 0};
            for (auto i : idx) inst.args.push_back(gens[i].element);
            out.push_back(std::move(inst));
        });
    };
    switch (filter.kind) {
        case MapClass::Additive: break;
        case MapClass::Derivation: on_tuples(Law::Leibniz, 2); break;
        case MapClass::Antiderivation: on_tuples(Law::ReversedLeibniz, 2); break;
        case MapClass::Centralizer: on_tuples(Law::Centralizer, 2); break;
        case MapClass::JordanNDerivation: on_tuples(Law::JordanN, filter.n); break;
        case MapClass::JordanNCentralizer: on_tuples(Law::JordanNCentralizer, filter.n); break;
        case MapClass::SingularJordanDerivation: {
            const PeirceContext& ctx = *filter.context;
            auto per_generator = [&](int i, int j, Law law) {
                for (const auto& g : greedy_generators(R, ctx.component(i, j)))
                    out.push_back({law, {g.element}, 0});
            };
            per_generator(1, 1, Law::Vanishes);
            per_generator(2, 2, Law::Vanishes);
            per_generator(1, 2, Law::LandsIn21);
            per_generator(2, 1, Law::LandsIn12);
            on_tuples(Law::JordanN, 2);
            break;
        }
    }
    return out;
}

std::uint64_t power_or_max(std::uint64_t base, std::size_t exponent) {
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < exponent; ++i) {
        if (base != 0 && total > UINT64_MAX / base) return UINT64_MAX;
        total *= base;
    }
    return total;
}

class AdditiveSearch {
public:
    AdditiveSearch(const FiniteRing& ring, const MapPredicate& filter, const EnumerationOptions& options)
        : R_(ring), filter_(filter), options_(options), chart_(AdditiveChart::of_ring(ring)) {
        const std::size_t k = chart_.rank();
        const PeirceContext* ctx = filter.context ? &*filter.context : nullptr;
        by_depth_.resize(std::max<std::size_t>(k, 1));
        for (auto& inst : law_instances(ring, filter, chart_.generators())) {
            std::size_t depth = 0;
            instance_holds(R_, inst, filter.n, ctx, [&](Elem x) -> Elem {
                if (auto s = chart_.support_max(x)) depth = std::max(depth, *s);
                return 0;
            });
            inst.depth = depth;
            by_depth_[depth].push_back(std::move(inst));
        }
        subtree_.resize(k + 1);
        for (std::size_t d = 0; d <= k; ++d) subtree_[d] = power_or_max(R_.order(), k - d);
    }

    struct Tally {
        std::uint64_t pruned = 0;
        std::uint64_t rejected = 0;
        std::vector<RingMap> maps;
    };

    std::size_t rank() const { return chart_.rank(); }

    /// Explores every assignment whose first generator image is `first`.
    Tally run_task(Elem first) const {
        Tally tally;
        std::vector<Elem> images(chart_.rank(), 0);
        std::vector<Elem> table(R_.order(), 0);
        if (chart_.rank() == 0) {
            leaf(images, table, tally);
            return tally;
        }
        visit(0, first, images, table, tally);
        return tally;
    }

private:
    void visit(std::size_t depth, Elem y, std::vector<Elem>& images, std::vector<Elem>& table,
               Tally& tally) const {
        images[depth] = y;
        const auto& gen = chart_.generators()[depth];
        if (R_.times(gen.order, y) != 0 || !instances_hold(depth, images)) {
            tally.pruned += subtree_[depth + 1];
            return;
        }
        if (depth + 1 == chart_.rank()) {
            leaf(images, table, tally);
            return;
        }
        for (std::size_t next = 0; next < R_.order(); ++next)
            visit(depth + 1, static_cast<Elem>(next), images, table, tally);
    }

    bool instances_hold(std::size_t depth, std::span<const Elem> images) const {
        const PeirceContext* ctx = filter_.context ? &*filter_.context : nullptr;
        for (const auto& inst : by_depth_[depth])
            if (!instance_holds(R_, inst, filter_.n, ctx,
                                [&](Elem x) { return chart_.evaluate(images, x); }))
                return false;
        return true;
    }

    void leaf(std::span<const Elem> images, std::vector<Elem>& table, Tally& tally) const {
        if (!chart_.extend(images, table)) {
            ++tally.rejected;
            return;
        }
        RingMap candidate(R_, table);
        ScanOptions scan = options_.scan;
        scan.workers = 1;
        if (!filter_.evaluate(candidate, scan)) {
            ++tally.rejected;
            return;
        }
        tally.maps.push_back(std::move(candidate));
    }

    const FiniteRing& R_;
    const MapPredicate& filter_;
    const EnumerationOptions& options_;
    AdditiveChart chart_;
    std::vector<std::vector<LawInstance>> by_depth_;
    std::vector<std::uint64_t> subtree_;
};

}  // namespace

EnumerationResult enumerate_jordan_n_centralizers(const FiniteRing& ring, int n,
                                                  EnumerationOptions options) {
    const auto start = Clock::now();
    if (n < 2) throw StructuralError("enumerate_jordan_n_centralizers: n must be at least 2");
    if (!ring.two_torsion_free())
        throw UnsupportedOperation("enumerate_jordan_n_centralizers: ring '" + ring.name() +
                                   "' has 2-torsion, the half-law no longer pins the map");
    const std::size_t N = ring.order();
    if (N > options.budget) throw BudgetExceeded("centralizer candidates", N, options.budget);

    EnumerationResult result;
    result.class_name = "jordan_n_centralizer";
    result.ring = ring.name();
    result.scanned = N;

    // q_n(x, y, 1, .., 1) = 2^{n−2}(x∘y)
    auto scale = [&](Elem x) { return ring.times(std::uint64_t{1} << (n - 2), x); };

    std::vector<std::vector<RingMap>> per_task(N);
    std::vector<std::uint8_t> outcome(N, 0);  // 0 pruned, 1 rejected, 2 emitted
    parallel::for_each_index(N, options.workers, [&](std::size_t m) {
        const auto mu = static_cast<Elem>(m);
        std::vector<Elem> images(N);
        for (std::size_t t = 0; t < N; ++t)
            images[t] = ring.halve(ring.jordan(mu, static_cast<Elem>(t)));
        RingMap phi(ring, std::move(images));

        for (std::size_t x = 0; x < N; ++x)
            for (std::size_t y = 0; y < N; ++y) {
                const auto ex = static_cast<Elem>(x), ey = static_cast<Elem>(y);
                if (phi(scale(ring.jordan(ex, ey))) != scale(ring.jordan(phi(ex), ey))) return;
            }
        ScanOptions scan = options.scan;
        scan.workers = 1;
        if (!is_jordan_n_centralizer(phi, n, scan)) {
            outcome[m] = 1;
            return;
        }
        outcome[m] = 2;
        per_task[m].push_back(std::move(phi));
    });
    for (auto o : outcome) {
        if (o == 0) ++result.pruned;
        if (o == 1) ++result.rejected;
    }
    finish(result, per_task, options);
    result.elapsed_ms = ms_since(start);
    return result;
}

EnumerationResult enumerate_additive_maps(const FiniteRing& ring, const MapPredicate& filter,
                                          EnumerationOptions options) {
    const auto start = Clock::now();
    if (filter.kind == MapClass::SingularJordanDerivation && !filter.context)
        throw StructuralError("singular_jordan_derivation filter needs an idempotent");
    const AdditiveSearch search(ring, filter, options);
    const std::uint64_t space = power_or_max(ring.order(), search.rank());
    if (space > options.budget)
        throw BudgetExceeded("additive map enumeration over " + ring.name(), space, options.budget);

    EnumerationResult result;
    result.class_name = filter.name() + "_additive";
    result.ring = ring.name();
    result.scanned = space;

    const std::size_t tasks = search.rank() == 0 ? 1 : ring.order();
    std::vector<std::vector<RingMap>> per_task(tasks);
    std::vector<AdditiveSearch::Tally> tallies(tasks);
    parallel::for_each_index(tasks, options.workers, [&](std::size_t i) {
        tallies[i] = search.run_task(static_cast<Elem>(i));
        per_task[i] = std::move(tallies[i].maps);
    });
    for (const auto& t : tallies) {
        result.pruned += t.pruned;
        result.rejected += t.rejected;
    }
    finish(result, per_task, options);
    result.elapsed_ms = ms_since(start);
    return result;
}

}  // namespace ringlab
