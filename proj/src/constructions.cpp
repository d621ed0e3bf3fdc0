// Ring families: Z_m, matrix rings over a finite base, upper triangular and
// block upper triangular matrix rings, and direct products.

#include <numeric>

#include "ringlab/error.hpp"
#include "ringlab/finite_ring.hpp"

namespace ringlab {

namespace {

struct Position {
    std::size_t row;
    std::size_t col;
};

std::size_t checked_order(std::size_t base, std::size_t exponent, std::size_t cap,
                          const std::string& what) {
    const std::size_t limit = std::min(cap, kMaxRepresentableOrder);
    std::size_t order = 1;
    for (std::size_t i = 0; i < exponent; ++i) {
        if (order > limit / base)
            throw SizeLimitError(what + ": order " + std::to_string(base) + "^" +
                                 std::to_string(exponent) + " exceeds cap " +
                                 std::to_string(limit));
        order *= base;
    }
    return order;
}

std::vector<std::size_t> block_of_index(std::int64_t size, std::span<const std::int64_t> partition) {
    if (size < 1) throw StructuralError("matrix size must be positive");
    std::vector<std::size_t> block;
    std::int64_t sum = 0;
    for (std::size_t b = 0; b < partition.size(); ++b) {
        if (partition[b] < 1) throw StructuralError("partition blocks must be positive");
        sum += partition[b];
        if (sum > size) break;
        for (std::int64_t i = 0; i < partition[b]; ++i) block.push_back(b);
    }
    if (sum != size)
        throw StructuralError("partition sums to " + std::to_string(sum) + ", expected " +
                              std::to_string(size));
    return block;
}

std::vector<Position> allowed_positions(std::int64_t size, std::span<const std::int64_t> partition) {
    const auto block = block_of_index(size, partition);
    std::vector<Position> positions;
    const auto r = static_cast<std::size_t>(size);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j)
            if (block[i] <= block[j]) positions.push_back({i, j});
    return positions;
}

std::string coefficient_label(const FiniteRing& base, Elem c) {
    if (c == base.one()) return "";
    const std::string& l = base.label(c);
    if (l.find_first_of("+ ") != std::string::npos) return "(" + l + ")";
    return l;
}

std::string matrix_label(const FiniteRing& base, std::size_t r, std::span<const Elem> dense) {
    bool scalar = dense[0] != 0;
    for (std::size_t i = 0; i < r && scalar; ++i)
        for (std::size_t j = 0; j < r && scalar; ++j)
            scalar = (i == j) ? dense[i * r + j] == dense[0] : dense[i * r + j] == 0;
    if (scalar) return coefficient_label(base, dense[0]) + "I";

    std::string label;
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) {
            const Elem c = dense[i * r + j];
            if (c == 0) continue;
            if (!label.empty()) label += "+";
            label += coefficient_label(base, c) + "E" + std::to_string(i + 1) + std::to_string(j + 1);
        }
    return label.empty() ? "0" : label;
}

std::string partition_text(std::span<const std::int64_t> partition) {
    std::string s = "[";
    for (std::size_t i = 0; i < partition.size(); ++i)
        s += (i ? "," : "") + std::to_string(partition[i]);
    return s + "]";
}

FiniteRing build_matrix_family(const FiniteRing& base, std::int64_t size,
                               std::span<const std::int64_t> partition, std::string name,
                               BuildOptions options) {
    const auto positions = allowed_positions(size, partition);
    const auto r = static_cast<std::size_t>(size);
    const std::size_t b = base.order();
    const std::size_t n = checked_order(b, positions.size(), options.order_cap, name);
    const std::size_t p = positions.size();

    // Dense r×r entries of every element, little-endian over allowed positions.
    std::vector<Elem> dense(n * r * r, 0);
    for (std::size_t e = 0; e < n; ++e) {
        std::size_t rest = e;
        for (const auto& pos : positions) {
            dense[e * r * r + pos.row * r + pos.col] = static_cast<Elem>(rest % b);
            rest /= b;
        }
    }
    auto encode = [&](std::span<const Elem> entries) {
        std::size_t idx = 0;
        for (std::size_t k = p; k-- > 0;)
            idx = idx * b + entries[positions[k].row * r + positions[k].col];
        return static_cast<Elem>(idx);
    };
    auto entries_of = [&](std::size_t e) {
        return std::span<const Elem>(dense.data() + e * r * r, r * r);
    };

    std::vector<Elem> add(n * n), mul(n * n);
    std::vector<Elem> scratch(r * r);
    for (std::size_t x = 0; x < n; ++x) {
        const auto ex = entries_of(x);
        for (std::size_t y = 0; y < n; ++y) {
            const auto ey = entries_of(y);
            for (std::size_t k = 0; k < r * r; ++k) scratch[k] = base.add(ex[k], ey[k]);
            add[x * n + y] = encode(scratch);
            for (std::size_t i = 0; i < r; ++i)
                for (std::size_t k = 0; k < r; ++k) {
                    Elem s = 0;
                    for (std::size_t j = 0; j < r; ++j)
                        s = base.add(s, base.mul(ex[i * r + j], ey[j * r + k]));
                    scratch[i * r + k] = s;
                }
            mul[x * n + y] = encode(scratch);
        }
    }

    std::fill(scratch.begin(), scratch.end(), Elem{0});
    for (std::size_t i = 0; i < r; ++i) scratch[i * r + i] = base.one();
    const Elem one = encode(scratch);

    std::vector<AdditiveGenerator> generators;
    for (const auto& pos : positions)
        for (const auto& g : base.additive_generators()) {
            std::fill(scratch.begin(), scratch.end(), Elem{0});
            scratch[pos.row * r + pos.col] = g.element;
            generators.push_back({encode(scratch), g.order});
        }

    std::vector<std::string> labels(n);
    for (std::size_t e = 0; e < n; ++e) labels[e] = matrix_label(base, r, entries_of(e));

    return FiniteRing::assemble(n, std::move(add), std::move(mul), one, std::move(generators),
                                std::move(labels), std::move(name));
}

std::string wrap_name(const std::string& name) {
    return name.find(' ') == std::string::npos ? name : "(" + name + ")";
}

}  // namespace

FiniteRing build_zmod(std::int64_t modulus, BuildOptions options) {
    if (modulus < 2) throw StructuralError("zmod: modulus must be at least 2");
    const auto m = static_cast<std::size_t>(modulus);
    if (m > std::min(options.order_cap, kMaxRepresentableOrder))
        throw SizeLimitError("zmod: order " + std::to_string(m) + " exceeds cap " +
                             std::to_string(options.order_cap));
    std::vector<Elem> add(m * m), mul(m * m);
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b) {
            add[a * m + b] = static_cast<Elem>((a + b) % m);
            mul[a * m + b] = static_cast<Elem>((a * b) % m);
        }
    std::vector<std::string> labels(m);
    for (std::size_t i = 0; i < m; ++i) labels[i] = std::to_string(i);
    return FiniteRing::assemble(m, std::move(add), std::move(mul), 1, {{1, m}}, std::move(labels),
                                "Z_" + std::to_string(m));
}

FiniteRing build_matrix_ring(const FiniteRing& base, std::int64_t size, BuildOptions options) {
    if (size < 2) throw StructuralError("matrix ring: size must be at least 2");
    const std::int64_t whole[] = {size};
    return build_matrix_family(base, size, whole,
                               "M_" + std::to_string(size) + "(" + base.name() + ")", options);
}

FiniteRing build_triangular_ring(const FiniteRing& base, std::int64_t size, BuildOptions options) {
    if (size < 2) throw StructuralError("triangular ring: size must be at least 2");
    const std::vector<std::int64_t> singletons(static_cast<std::size_t>(size), 1);
    return build_matrix_family(base, size, singletons,
                               "T_" + std::to_string(size) + "(" + base.name() + ")", options);
}

FiniteRing build_block_triangular_ring(const FiniteRing& base, std::int64_t size,
                                       std::span<const std::int64_t> partition,
                                       BuildOptions options) {
    return build_matrix_family(
        base, size, partition,
        "B_" + std::to_string(size) + partition_text(partition) + "(" + base.name() + ")",
        options);
}

FiniteRing build_product_ring(const FiniteRing& left, const FiniteRing& right,
                              BuildOptions options) {
    const std::size_t a = left.order();
    const std::size_t b = right.order();
    const std::string name = wrap_name(left.name()) + " x " + wrap_name(right.name());
    const std::size_t limit = std::min(options.order_cap, kMaxRepresentableOrder);
    if (a > limit / b)
        throw SizeLimitError(name + ": order " + std::to_string(a) + "*" + std::to_string(b) +
                             " exceeds cap " + std::to_string(limit));
    const std::size_t n = a * b;
    auto pack = [a](std::size_t x, std::size_t y) { return static_cast<Elem>(x + a * y); };

    std::vector<Elem> add(n * n), mul(n * n);
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = 0; v < n; ++v) {
            const auto ux = static_cast<Elem>(u % a), uy = static_cast<Elem>(u / a);
            const auto vx = static_cast<Elem>(v % a), vy = static_cast<Elem>(v / a);
            add[u * n + v] = pack(left.add(ux, vx), right.add(uy, vy));
            mul[u * n + v] = pack(left.mul(ux, vx), right.mul(uy, vy));
        }

    std::vector<AdditiveGenerator> generators;
    for (const auto& g : left.additive_generators()) generators.push_back({pack(g.element, 0), g.order});
    for (const auto& g : right.additive_generators()) generators.push_back({pack(0, g.element), g.order});

    std::vector<std::string> labels(n);
    for (std::size_t u = 0; u < n; ++u)
        labels[u] = "(" + left.label(static_cast<Elem>(u % a)) + "," +
                    right.label(static_cast<Elem>(u / a)) + ")";

    return FiniteRing::assemble(n, std::move(add), std::move(mul), pack(left.one(), right.one()),
                                std::move(generators), std::move(labels), name);
}

std::vector<Elem> matrix_entries(const FiniteRing& base, std::int64_t size,
                                 std::span<const std::int64_t> partition, Elem element) {
    const auto positions = allowed_positions(size, partition);
    const auto r = static_cast<std::size_t>(size);
    std::vector<Elem> dense(r * r, 0);
    std::size_t rest = element;
    for (const auto& pos : positions) {
        dense[pos.row * r + pos.col] = static_cast<Elem>(rest % base.order());
        rest /= base.order();
    }
    return dense;
}

Elem matrix_unit(const FiniteRing& base, std::int64_t size, std::span<const std::int64_t> partition,
                 std::size_t row, std::size_t col, Elem coefficient) {
    const auto positions = allowed_positions(size, partition);
    std::size_t scale = 1;
    for (const auto& pos : positions) {
        if (pos.row == row && pos.col == col) return static_cast<Elem>(scale * coefficient);
        scale *= base.order();
    }
    throw StructuralError("matrix position (" + std::to_string(row + 1) + "," +
                          std::to_string(col + 1) + ") is not allowed in this ring");
}

}  // namespace ringlab
