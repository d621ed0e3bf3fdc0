#include <fstream>
#include <sstream>

#include "ringlab/spec_io.hpp"

namespace ringlab {

namespace {

const json& field(const json& spec, const char* key, const std::string& where) {
    if (!spec.is_object()) throw SpecError(where + ": expected an object");
    const auto it = spec.find(key);
    if (it == spec.end()) throw SpecError(where + ": missing field '" + key + "'");
    return *it;
}

std::int64_t integer(const json& spec, const char* key, const std::string& where) {
    const json& v = field(spec, key, where);
    if (!v.is_number_integer()) throw SpecError(where + ": field '" + key + "' must be an integer");
    return v.get<std::int64_t>();
}

std::vector<std::vector<std::int64_t>> table(const json& spec, const char* key, const std::string& where) {
    const json& v = field(spec, key, where);
    if (!v.is_array()) throw SpecError(where + ": field '" + key + "' must be an array of arrays");
    std::vector<std::vector<std::int64_t>> rows;
    for (const auto& row : v) {
        if (!row.is_array()) throw SpecError(where + ": field '" + key + "' must be an array of arrays");
        auto& out = rows.emplace_back();
        for (const auto& x : row) {
            if (!x.is_number_integer()) throw SpecError(where + ": '" + key + "' entries must be integers");
            out.push_back(x.get<std::int64_t>());
        }
    }
    return rows;
}

BuildOptions build_options(const json& spec, const std::string& where) {
    BuildOptions o;
    if (spec.contains("max_order")) {
        const auto cap = integer(spec, "max_order", where);
        if (cap < 1 || static_cast<std::size_t>(cap) > kMaxRepresentableOrder)
            throw SpecError(where + ": max_order must be in [1, 65536]");
        o.order_cap = static_cast<std::size_t>(cap);
    }
    return o;
}

}  // namespace

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw SpecError("cannot read '" + path.string() + "'");
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

json parse_json_text(const std::string& text, const std::string& what) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw SpecError(what + ": malformed JSON at byte " + std::to_string(e.byte) + ": " + e.what());
    }
}

std::variant<FiniteRing, ValidationReport> ring_from_spec(const json& spec) {
    const std::string where = "ring spec";
    const json& kind_json = field(spec, "kind", where);
    if (!kind_json.is_string()) throw SpecError(where + ": 'kind' must be a string");
    const std::string kind = kind_json.get<std::string>();
    const BuildOptions options = build_options(spec, where);

    auto sub = [&](const char* key) { return ring_from_json(field(spec, key, where + " (" + kind + ")")); };
    try {
        if (kind == "zmod") return build_zmod(integer(spec, "modulus", where), options);
        if (kind == "matrix") return build_matrix_ring(sub("base"), integer(spec, "size", where), options);
        if (kind == "triangular")
            return build_triangular_ring(sub("base"), integer(spec, "size", where), options);
        if (kind == "block") {
            const json& p = field(spec, "partition", where);
            if (!p.is_array()) throw SpecError(where + ": 'partition' must be an array");
            std::vector<std::int64_t> parts;
            for (const auto& b : p) {
                if (!b.is_number_integer()) throw SpecError(where + ": partition entries must be integers");
                parts.push_back(b.get<std::int64_t>());
            }
            return build_block_triangular_ring(sub("base"), integer(spec, "size", where), parts, options);
        }
        if (kind == "product") return build_product_ring(sub("left"), sub("right"), options);
        if (kind == "tables") {
            RingTables t;
            t.add = table(spec, "add", where);
            t.mul = table(spec, "mul", where);
            t.one = integer(spec, "one", where);
            if (spec.contains("labels")) {
                const json& l = spec["labels"];
                if (!l.is_array()) throw SpecError(where + ": 'labels' must be an array of strings");
                for (const auto& s : l) {
                    if (!s.is_string()) throw SpecError(where + ": 'labels' must be an array of strings");
                    t.labels.push_back(s.get<std::string>());
                }
            }
            std::string name = "tables";
            if (spec.contains("name") && spec["name"].is_string()) name = spec["name"].get<std::string>();
            if (t.add.size() > options.order_cap)
                throw SizeLimitError("ring order " + std::to_string(t.add.size()) + " exceeds cap " +
                                     std::to_string(options.order_cap));
            ValidationReport report = validate_ring(t);
            if (report.status == ValidationReport::Status::Structural) throw SpecError(where + ": " + report.message);
            if (!report.ok()) return report;
            return FiniteRing::from_tables(t, name, options.order_cap);
        }
    } catch (const SizeLimitError&) {
        throw;
    } catch (const StructuralError& e) {
        throw SpecError(where + ": " + e.what());
    }
    throw SpecError(where + ": unknown kind '" + kind + "'");
}

FiniteRing ring_from_json(const json& spec) {
    auto r = ring_from_spec(spec);
    if (auto* report = std::get_if<ValidationReport>(&r)) throw SpecError("ring spec: " + report->message);
    return std::get<FiniteRing>(std::move(r));
}

Elem element_from_json(const FiniteRing& ring, const json& ref) {
    if (ref.is_number_integer()) {
        const auto i = ref.get<std::int64_t>();
        if (i < 0 || static_cast<std::size_t>(i) >= ring.order())
            throw SpecError("element index " + std::to_string(i) + " out of range for " + ring.name());
        return static_cast<Elem>(i);
    }
    if (ref.is_string()) {
        const auto s = ref.get<std::string>();
        if (auto e = ring.find_label(s)) return *e;
        throw SpecError("no element labelled '" + s + "' in " + ring.name());
    }
    throw SpecError("element reference must be an index or a label");
}

RingMap map_from_json(const FiniteRing& ring, const json& spec) {
    const std::string where = "map spec";
    if (!spec.is_object()) throw SpecError(where + ": expected an object");
    if (spec.contains("ring")) {
        const FiniteRing declared = ring_from_json(spec["ring"]);
        if (!declared.same_structure(ring))
            throw SpecError(where + ": declared ring " + declared.name() + " does not match " + ring.name());
    }
    if (spec.contains("images")) {
        const json& images = spec["images"];
        if (!images.is_array()) throw SpecError(where + ": 'images' must be an array");
        if (images.size() != ring.order())
            throw SpecError(where + ": " + std::to_string(images.size()) + " images for a ring of order " +
                            std::to_string(ring.order()));
        std::vector<Elem> table;
        for (const auto& x : images) table.push_back(element_from_json(ring, x));
        return RingMap(ring, std::move(table));
    }
    const json& c = field(spec, "construct", where);
    if (!c.is_string()) throw SpecError(where + ": 'construct' must be a string");
    const std::string construct = c.get<std::string>();
    if (construct == "identity") return identity_map(ring);
    if (construct == "zero") return zero_map(ring);
    if (construct == "inner") return inner_derivation(ring, element_from_json(ring, field(spec, "a", where)));
    if (construct == "scalar") return scalar_map(ring, element_from_json(ring, field(spec, "mu", where)));
    if (construct == "power") {
        const auto k = integer(spec, "exponent", where);
        if (k < 1 || k > 64) throw SpecError(where + ": exponent must be in [1, 64]");
        return power_map(ring, static_cast<unsigned>(k));
    }
    if (construct == "sum" || construct == "difference") {
        const RingMap l = map_from_json(ring, field(spec, "left", where));
        const RingMap r = map_from_json(ring, field(spec, "right", where));
        return construct == "sum" ? map_sum(l, r) : map_difference(l, r);
    }
    if (construct == "perturb") {
        const RingMap base = map_from_json(ring, field(spec, "base", where));
        return perturbed(base, element_from_json(ring, field(spec, "at", where)),
                         element_from_json(ring, field(spec, "to", where)));
    }
    throw SpecError(where + ": unknown construct '" + construct + "'");
}

json element_json(const FiniteRing& ring, Elem e) {
    return json{{"index", e}, {"label", ring.label(e)}};
}

json elements_json(const FiniteRing& ring, std::span<const Elem> es) {
    json out = json::array();
    for (Elem e : es) out.push_back(element_json(ring, e));
    return out;
}

json to_json(const EnumerationResult& result, bool include_maps) {
    json j{{"class", result.class_name}, {"ring", result.ring},     {"count", result.count},
           {"scanned", result.scanned},  {"pruned", result.pruned}, {"rejected", result.rejected},
           {"truncated", result.truncated}};
    if (include_maps) {
        json maps = json::array();
        for (const auto& m : result.maps) maps.push_back(std::vector<Elem>(m.images().begin(), m.images().end()));
        j["maps"] = std::move(maps);
    }
    return j;
}

}  // namespace ringlab
