#pragma once

/**
 * @file spec_io.hpp
 * @brief JSON ring and map specifications, and JSON forms of results.
 *
 * Ring spec:
 *
 *     {"kind": "zmod", "modulus": m}
 *     {"kind": "matrix" | "triangular", "base": <ring>, "size": r}
 *     {"kind": "block", "base": <ring>, "size": r, "partition": [b1, ...]}
 *     {"kind": "product", "left": <ring>, "right": <ring>}
 *     {"kind": "tables", "add": [[...]], "mul": [[...]], "one": i, "labels"?: [...], "name"?: s}
 *
 * Any ring spec may carry "max_order" to change the order cap.
 *
 * Map spec ("ring" is optional and must match the ring it is loaded against):
 *
 *     {"images": [e0, e1, ...]}
 *     {"construct": "identity" | "zero"}
 *     {"construct": "inner", "a": e}
 *     {"construct": "scalar", "mu": e}
 *     {"construct": "power", "exponent": k}
 *     {"construct": "sum" | "difference", "left": <map>, "right": <map>}
 *     {"construct": "perturb", "base": <map>, "at": e, "to": e}
 *
 * An element reference is an index or a label string.
 */

#include <filesystem>
#include <string>
#include <variant>

#include <nlohmann/json.hpp>

#include "ringlab/enumeration.hpp"
#include "ringlab/error.hpp"

namespace ringlab {

using nlohmann::json;

/// Input that cannot be interpreted: bad JSON, missing or mistyped fields,
/// unknown kinds, out-of-range references.
class SpecError : public Error {
public:
    using Error::Error;
};

std::string read_text_file(const std::filesystem::path& path);

/// Parses a ring spec. Tables whose contents violate a ring axiom come back as
/// the failing ValidationReport instead of a ring.
std::variant<FiniteRing, ValidationReport> ring_from_spec(const json& spec);
/// As ring_from_spec, but an axiom violation is a SpecError.
FiniteRing ring_from_json(const json& spec);

Elem element_from_json(const FiniteRing& ring, const json& ref);
RingMap map_from_json(const FiniteRing& ring, const json& spec);

json parse_json_text(const std::string& text, const std::string& what);

/// {"index": i, "label": s}
json element_json(const FiniteRing& ring, Elem e);
json elements_json(const FiniteRing& ring, std::span<const Elem> es);

/// {class, ring, count, scanned, pruned, rejected, truncated, maps?}; timing is left
/// to the caller so the object is deterministic.
json to_json(const EnumerationResult& result, bool include_maps);

}  // namespace ringlab
