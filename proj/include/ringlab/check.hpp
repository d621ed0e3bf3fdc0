#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace ringlab {

/// Ring elements are dense table indices; 0 is always the additive identity.
using Elem = std::uint16_t;

/// Outcome of an exhaustive predicate. On failure `witness` holds the
/// lexicographically smallest violating tuple.
struct CheckResult {
    bool holds = true;
    std::vector<Elem> witness;
    /// Which clause failed, e.g. "additivity" or "leibniz"; empty when it holds.
    std::string law;

    static CheckResult pass() { return {}; }
    static CheckResult fail(std::vector<Elem> witness, std::string law = {}) {
        return {false, std::move(witness), std::move(law)};
    }

    explicit operator bool() const noexcept { return holds; }
};

}  // namespace ringlab
