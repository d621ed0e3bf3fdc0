#include "ringlab/finite_ring.hpp"

#include <algorithm>
#include <array>
#include <deque>

#include "ringlab/error.hpp"
#include "ringlab/parallel.hpp"

namespace ringlab {

namespace {

struct FlatTables {
    std::size_t n = 0;
    std::vector<Elem> add;
    std::vector<Elem> mul;
    Elem one = 0;
};

std::size_t cyclic_order(std::size_t n, std::span<const Elem> add, Elem a) {
    std::size_t k = 1;
    Elem acc = a;
    while (acc != 0) {
        acc = add[std::size_t{acc} * n + a];
        ++k;
        if (k > n) break;  // not a group; caller validated
    }
    return k;
}

// Structural check and conversion. Returns an error message, or nothing.
std::optional<std::string> flatten(const RingTables& t, FlatTables& out) {
    const std::size_t n = t.add.size();
    if (n == 0) return "ring must have at least one element";
    if (n > kMaxRepresentableOrder)
        return "order " + std::to_string(n) + " exceeds the representable maximum " +
               std::to_string(kMaxRepresentableOrder);
    if (t.mul.size() != n)
        return "mul table has " + std::to_string(t.mul.size()) + " rows, expected " +
               std::to_string(n);
    out.n = n;
    out.add.resize(n * n);
    out.mul.resize(n * n);
    auto copy = [&](const auto& table, std::vector<Elem>& dst,
                    const char* which) -> std::optional<std::string> {
        for (std::size_t i = 0; i < n; ++i) {
            if (table[i].size() != n)
                return std::string(which) + " row " + std::to_string(i) + " has " +
                       std::to_string(table[i].size()) + " entries, expected " +
                       std::to_string(n);
            for (std::size_t j = 0; j < n; ++j) {
                const std::int64_t v = table[i][j];
                if (v < 0 || static_cast<std::size_t>(v) >= n)
                    return std::string(which) + "[" + std::to_string(i) + "][" +
                           std::to_string(j) + "] = " + std::to_string(v) + " out of range";
                dst[i * n + j] = static_cast<Elem>(v);
            }
        }
        return std::nullopt;
    };
    if (auto e = copy(t.add, out.add, "add")) return e;
    if (auto e = copy(t.mul, out.mul, "mul")) return e;
    if (t.one < 0 || static_cast<std::size_t>(t.one) >= n)
        return "one index " + std::to_string(t.one) + " out of range";
    out.one = static_cast<Elem>(t.one);
    if (!t.labels.empty() && t.labels.size() != n)
        return "labels has " + std::to_string(t.labels.size()) + " entries, expected " +
               std::to_string(n);
    return std::nullopt;
}

using Witness = std::vector<std::size_t>;

// Scans all triples (a, b, c) for `violates`, lexicographically smallest first.
template <class Violates>
std::optional<Witness> first_triple(std::size_t n, unsigned workers, Violates violates) {
    return parallel::find_first<Witness>(n, workers, [&](std::size_t a) -> std::optional<Witness> {
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c)
                if (violates(a, b, c)) return Witness{a, b, c};
        return std::nullopt;
    });
}

ValidationReport check_axioms(const FlatTables& t, unsigned workers) {
    const std::size_t n = t.n;
    const Elem* add = t.add.data();
    const Elem* mul = t.mul.data();
    auto A = [&](std::size_t a, std::size_t b) -> std::size_t { return add[a * n + b]; };
    auto M = [&](std::size_t a, std::size_t b) -> std::size_t { return mul[a * n + b]; };

    auto fail = [](Axiom axiom, Witness w) {
        ValidationReport r;
        r.status = ValidationReport::Status::AxiomViolation;
        r.axiom = axiom;
        r.message = std::string(axiom_name(axiom)) + " fails";
        r.witness = std::move(w);
        return r;
    };

    for (std::size_t x = 0; x < n; ++x)
        if (A(0, x) != x || A(x, 0) != x) return fail(Axiom::Zero, {x});

    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            if (A(a, b) != A(b, a)) return fail(Axiom::AdditiveCommutativity, {a, b});

    if (auto w = first_triple(n, workers, [&](auto a, auto b, auto c) {
            return A(A(a, b), c) != A(a, A(b, c));
        }))
        return fail(Axiom::AdditiveAssociativity, *w);

    for (std::size_t a = 0; a < n; ++a) {
        bool found = false;
        for (std::size_t b = 0; b < n && !found; ++b) found = A(a, b) == 0;
        if (!found) return fail(Axiom::AdditiveInverses, {a});
    }

    for (std::size_t x = 0; x < n; ++x)
        if (M(t.one, x) != x || M(x, t.one) != x) return fail(Axiom::Identity, {x});

    if (auto w = first_triple(n, workers, [&](auto a, auto b, auto c) {
            return M(M(a, b), c) != M(a, M(b, c));
        }))
        return fail(Axiom::MultiplicativeAssociativity, *w);

    if (auto w = first_triple(n, workers, [&](auto a, auto b, auto c) {
            return M(a, A(b, c)) != A(M(a, b), M(a, c));
        }))
        return fail(Axiom::LeftDistributivity, *w);

    if (auto w = first_triple(n, workers, [&](auto a, auto b, auto c) {
            return M(A(a, b), c) != A(M(a, c), M(b, c));
        }))
        return fail(Axiom::RightDistributivity, *w);

    return {};
}

}  // namespace

std::string_view axiom_name(Axiom axiom) noexcept {
    switch (axiom) {
        case Axiom::Zero: return "zero axiom";
        case Axiom::AdditiveCommutativity: return "additive commutativity";
        case Axiom::AdditiveAssociativity: return "additive associativity";
        case Axiom::AdditiveInverses: return "additive inverses";
        case Axiom::Identity: return "identity axiom";
        case Axiom::MultiplicativeAssociativity: return "multiplicative associativity";
        case Axiom::LeftDistributivity: return "left distributivity";
        case Axiom::RightDistributivity: return "right distributivity";
    }
    return "unknown axiom";
}

ValidationReport validate_ring(const RingTables& candidate, unsigned workers) {
    FlatTables flat;
    if (auto err = flatten(candidate, flat)) {
        ValidationReport r;
        r.status = ValidationReport::Status::Structural;
        r.message = *err;
        return r;
    }
    return check_axioms(flat, workers);
}

ValidationReport validate_ring(const FiniteRing& ring, unsigned workers) {
    FlatTables flat;
    flat.n = ring.order();
    flat.add.assign(ring.add_table().begin(), ring.add_table().end());
    flat.mul.assign(ring.mul_table().begin(), ring.mul_table().end());
    flat.one = ring.one();
    return check_axioms(flat, workers);
}

FiniteRing FiniteRing::from_tables(const RingTables& tables, std::string name,
                                   std::size_t order_cap) {
    if (tables.add.size() > order_cap)
        throw SizeLimitError("ring order " + std::to_string(tables.add.size()) +
                             " exceeds cap " + std::to_string(order_cap));
    FlatTables flat;
    if (auto err = flatten(tables, flat)) throw StructuralError("malformed ring tables: " + *err);
    const ValidationReport report = check_axioms(flat, 0);
    if (!report.ok()) {
        std::string w;
        for (auto x : report.witness) w += (w.empty() ? "" : ", ") + std::to_string(x);
        throw StructuralError("ring axiom violated: " + report.message + " at (" + w + ")");
    }
    return assemble(flat.n, std::move(flat.add), std::move(flat.mul), flat.one, {},
                    tables.labels, std::move(name));
}

FiniteRing FiniteRing::assemble(std::size_t order, std::vector<Elem> add, std::vector<Elem> mul,
                                Elem one, std::vector<AdditiveGenerator> generators,
                                std::vector<std::string> labels, std::string name) {
    if (order == 0 || order > kMaxRepresentableOrder)
        throw StructuralError("ring order " + std::to_string(order) + " is not representable");
    if (add.size() != order * order || mul.size() != order * order)
        throw StructuralError("ring tables must be order x order");

    FiniteRing r;
    r.order_ = order;
    r.one_ = one;
    r.add_ = std::move(add);
    r.mul_ = std::move(mul);
    r.name_ = std::move(name);

    r.neg_.resize(order);
    for (std::size_t a = 0; a < order; ++a)
        for (std::size_t b = 0; b < order; ++b)
            if (r.add_[a * order + b] == 0) {
                r.neg_[a] = static_cast<Elem>(b);
                break;
            }

    r.jordan_.resize(order * order);
    for (std::size_t a = 0; a < order; ++a)
        for (std::size_t b = 0; b < order; ++b)
            r.jordan_[a * order + b] =
                r.add_[std::size_t{r.mul_[a * order + b]} * order + r.mul_[b * order + a]];

    // Doubling is an endomorphism of a finite group: bijective iff its kernel is trivial.
    std::vector<Elem> half(order, 0);
    std::vector<bool> hit(order, false);
    bool bijective = true;
    for (std::size_t t = 0; t < order && bijective; ++t) {
        const Elem d = r.add_[t * order + t];
        if (hit[d]) bijective = false;
        hit[d] = true;
        half[d] = static_cast<Elem>(t);
    }
    if (bijective) r.half_ = std::move(half);

    if (labels.empty()) {
        labels.reserve(order);
        for (std::size_t i = 0; i < order; ++i) labels.push_back(std::to_string(i));
    }
    r.labels_ = std::move(labels);
    for (std::size_t i = 0; i < order; ++i) {
        if (!r.label_index_.emplace(r.labels_[i], static_cast<Elem>(i)).second)
            throw StructuralError("duplicate element label '" + r.labels_[i] + "'");
    }

    if (generators.empty()) {
        std::vector<Elem> all(order);
        for (std::size_t i = 0; i < order; ++i) all[i] = static_cast<Elem>(i);
        generators = greedy_generators(r, all);
    }
    r.generators_ = std::move(generators);
    return r;
}

Elem FiniteRing::times(std::uint64_t k, Elem a) const noexcept {
    Elem result = 0;
    Elem power = a;
    while (k != 0) {
        if (k & 1) result = add(result, power);
        power = add(power, power);
        k >>= 1;
    }
    return result;
}

Elem FiniteRing::halve(Elem t) const {
    if (half_.empty())
        throw UnsupportedOperation("halve: ring '" + name_ + "' has 2-torsion");
    return half_[t];
}

std::optional<Elem> FiniteRing::find_label(std::string_view label) const {
    auto it = label_index_.find(std::string(label));
    if (it == label_index_.end()) return std::nullopt;
    return it->second;
}

bool FiniteRing::same_structure(const FiniteRing& other) const noexcept {
    return order_ == other.order_ && one_ == other.one_ && add_ == other.add_ &&
           mul_ == other.mul_;
}

RingTables FiniteRing::tables() const {
    RingTables t;
    t.add.assign(order_, std::vector<std::int64_t>(order_));
    t.mul.assign(order_, std::vector<std::int64_t>(order_));
    for (std::size_t a = 0; a < order_; ++a)
        for (std::size_t b = 0; b < order_; ++b) {
            t.add[a][b] = add_[a * order_ + b];
            t.mul[a][b] = mul_[a * order_ + b];
        }
    t.one = one_;
    t.labels = labels_;
    return t;
}

std::vector<Idempotent> find_idempotents(const FiniteRing& ring) {
    std::vector<Idempotent> out;
    for (std::size_t i = 0; i < ring.order(); ++i) {
        const auto e = static_cast<Elem>(i);
        if (ring.mul(e, e) == e) out.push_back({e, e != ring.zero() && e != ring.one()});
    }
    return out;
}

CheckResult is_two_torsion_free(const FiniteRing& ring) {
    for (std::size_t i = 1; i < ring.order(); ++i) {
        const auto t = static_cast<Elem>(i);
        if (ring.add(t, t) == 0) return CheckResult::fail({t});
    }
    return CheckResult::pass();
}

Elem halve(const FiniteRing& ring, Elem t) { return ring.halve(t); }

std::vector<Elem> additive_span(const FiniteRing& ring, std::span<const Elem> elements) {
    std::vector<bool> in(ring.order(), false);
    std::vector<Elem> members{0};
    in[0] = true;
    for (std::size_t head = 0; head < members.size(); ++head) {
        for (Elem g : elements) {
            const Elem s = ring.add(members[head], g);
            if (!in[s]) {
                in[s] = true;
                members.push_back(s);
            }
        }
    }
    std::sort(members.begin(), members.end());
    return members;
}

std::vector<AdditiveGenerator> greedy_generators(const FiniteRing& ring,
                                                 std::span<const Elem> subgroup) {
    const std::size_t n = ring.order();
    std::vector<AdditiveGenerator> gens;
    std::vector<bool> in(n, false);
    std::vector<Elem> span{0};
    in[0] = true;
    for (Elem s : subgroup) {
        if (in[s]) continue;
        const std::size_t ord = cyclic_order(n, ring.add_table(), s);
        gens.push_back({s, ord});
        // span + <s>: adjoining a cyclic subgroup to an abelian subgroup.
        const std::size_t before = span.size();
        for (std::size_t i = 0; i < before; ++i) {
            Elem x = span[i];
            for (std::size_t k = 1; k < ord; ++k) {
                x = ring.add(x, s);
                if (!in[x]) {
                    in[x] = true;
                    span.push_back(x);
                }
            }
        }
    }
    return gens;
}

}  // namespace ringlab
