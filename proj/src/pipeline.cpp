#include <algorithm>

#include "ringlab/enumeration.hpp"
#include "ringlab/error.hpp"
#include "ringlab/splitmix.hpp"

namespace ringlab {

std::string MapPredicate::name() const {
    switch (kind) {
        case MapClass::Additive: return "additive";
        case MapClass::Derivation: return "derivation";
        case MapClass::JordanNDerivation: return "jordan_n_derivation";
        case MapClass::JordanNCentralizer: return "jordan_n_centralizer";
        case MapClass::Centralizer: return "centralizer";
        case MapClass::SingularJordanDerivation: return "singular_jordan_derivation";
        case MapClass::Antiderivation: return "antiderivation";
    }
    return "unknown";
}

CheckResult MapPredicate::evaluate(const RingMap& f, ScanOptions options) const {
    switch (kind) {
        case MapClass::Additive: return is_additive(f, options.workers);
        case MapClass::Derivation: return is_derivation(f, options.workers);
        case MapClass::JordanNDerivation: return is_jordan_n_derivation(f, n, options);
        case MapClass::JordanNCentralizer: return is_jordan_n_centralizer(f, n, options);
        case MapClass::Centralizer: return is_centralizer(f, options.workers);
        case MapClass::SingularJordanDerivation:
            if (!context) throw StructuralError("singular_jordan_derivation needs an idempotent");
            return is_singular_jordan_derivation(f, *context, options.workers);
        case MapClass::Antiderivation: return is_antiderivation(f, options.workers);
    }
    throw StructuralError("unknown map class");
}

FuzzReport fuzz_predicate(const RingMap& base, const MapPredicate& predicate, std::size_t trials,
                          std::uint64_t seed, ScanOptions options) {
    const FiniteRing& R = base.ring();
    if (CheckResult pre = predicate.evaluate(base, options); !pre)
        throw PreconditionError(predicate.name(), "fuzz base map fails " + predicate.name(),
                                pre.witness);
    FuzzReport report;
    report.predicate = predicate.name();
    report.seed = seed;
    report.trials = trials;
    if (R.order() < 2) return report;

    SplitMix64 rng(seed);
    for (std::size_t i = 0; i < trials; ++i) {
        const auto point = static_cast<Elem>(rng.below(R.order()));
        const auto shift = 1 + rng.below(R.order() - 1);
        const auto image = static_cast<Elem>((base(point) + shift) % R.order());
        if (predicate.evaluate(perturbed(base, point, image), options))
            report.siblings.push_back({point, image});
        else
            ++report.failures;
    }
    return report;
}

std::string_view to_string(PipelineStage::Status status) noexcept {
    switch (status) {
        case PipelineStage::Status::Pass: return "pass";
        case PipelineStage::Status::Fail: return "fail";
        case PipelineStage::Status::Skipped: return "skipped";
    }
    return "unknown";
}

bool PipelineReport::hypotheses_met() const {
    return std::all_of(stages.begin(), stages.end(), [](const PipelineStage& s) {
        return s.kind != PipelineStage::Kind::Hypothesis || s.status == PipelineStage::Status::Pass;
    });
}

bool PipelineReport::conclusions_hold() const {
    return std::all_of(stages.begin(), stages.end(), [](const PipelineStage& s) {
        return s.kind != PipelineStage::Kind::Conclusion || s.status == PipelineStage::Status::Pass;
    });
}

const PipelineStage* PipelineReport::first_failure() const {
    for (const auto& s : stages)
        if (s.status != PipelineStage::Status::Pass) return &s;
    return nullptr;
}

namespace {

PipelineStage stage(std::string name, PipelineStage::Kind kind) {
    PipelineStage s;
    s.name = std::move(name);
    s.kind = kind;
    return s;
}

void set(PipelineStage& s, bool ok, std::string detail, std::vector<Elem> witness = {}) {
    s.status = ok ? PipelineStage::Status::Pass : PipelineStage::Status::Fail;
    s.detail = std::move(detail);
    s.witness = std::move(witness);
}

}  // namespace

PipelineReport verify_theorem_pipeline(const FiniteRing& ring, std::optional<Elem> e1, int n,
                                       std::size_t trials, std::uint64_t seed,
                                       ScanOptions options) {
    using Kind = PipelineStage::Kind;
    PipelineReport report;
    report.ring = ring.name();
    report.n = n;
    report.trials = trials;
    report.seed = seed;

    auto& axioms = report.stages.emplace_back(stage("validate_ring", Kind::Hypothesis));
    const ValidationReport validation = validate_ring(ring, options.workers);
    {
        std::vector<Elem> w;
        for (auto x : validation.witness) w.push_back(static_cast<Elem>(x));
        set(axioms, validation.ok(), validation.ok() ? "ring axioms hold" : validation.message, w);
    }

    auto& torsion = report.stages.emplace_back(stage("two_torsion_free", Kind::Hypothesis));
    const CheckResult tf = is_two_torsion_free(ring);
    set(torsion, tf.holds, tf.holds ? "t + t = 0 forces t = 0" : "element of additive order 2",
        tf.witness);
    const bool halving = tf.holds;

    auto& idem = report.stages.emplace_back(stage("nontrivial_idempotent", Kind::Hypothesis));
    std::optional<PeirceContext> ctx;
    if (e1) {
        if (*e1 >= ring.order()) {
            set(idem, false, "idempotent index out of range", {});
        } else if (ring.mul(*e1, *e1) != *e1 || *e1 == ring.zero() || *e1 == ring.one()) {
            set(idem, false, "chosen element is not a nontrivial idempotent", {*e1});
        } else {
            ctx.emplace(ring, *e1);
        }
    } else {
        for (const auto& i : find_idempotents(ring))
            if (i.nontrivial) {
                ctx.emplace(ring, i.element);
                break;
            }
        if (!ctx) set(idem, false, "ring has no nontrivial idempotent");
    }
    if (ctx) {
        report.e1 = ctx->e1();
        set(idem, true, "e1 = " + ring.label(ctx->e1()), {ctx->e1()});
    }

    auto& spade = report.stages.emplace_back(stage("spade", Kind::Hypothesis));
    if (ctx) {
        const CheckResult s = check_spade(*ctx);
        set(spade, s.holds,
            s.holds ? "diagonal components act faithfully on the off-diagonal components"
                    : "nonzero diagonal element annihilates both off-diagonal components",
            s.witness);
    }

    auto& cond = report.stages.emplace_back(stage("condition_2_1", Kind::Hypothesis));
    const CheckResult c21 = check_condition_2_1(ring);
    set(cond, c21.holds,
        c21.holds ? "[t, A] in Z(A) implies t in Z(A)" : "t with central commutators is not central",
        c21.witness);

    const CenterDescription center = center_commutant(ring);
    report.center_size = center.elements.size();

    auto& agree = report.stages.emplace_back(stage("center_agreement", Kind::Conclusion));
    if (ctx) {
        const CenterDescription peirce = center_peirce(*ctx);
        const bool same = peirce.elements == center.elements;
        set(agree, same,
            "|Z| = " + std::to_string(center.elements.size()) + " via commutant, " +
                std::to_string(peirce.elements.size()) + " via Peirce components");
    }

    auto& count = report.stages.emplace_back(stage("centralizer_count", Kind::Conclusion));
    if (halving) {
        EnumerationOptions eo;
        eo.workers = options.workers;
        eo.scan = options;
        eo.max_maps = 0;
        const EnumerationResult er = enumerate_jordan_n_centralizers(ring, n, eo);
        report.centralizer_count = er.count;
        set(count, er.count == center.elements.size(),
            std::to_string(er.count) + " Jordan " + std::to_string(n) + "-centralizers, |Z| = " +
                std::to_string(center.elements.size()));
    }

    auto& roundtrip = report.stages.emplace_back(stage("roundtrip", Kind::Conclusion));
    if (halving && trials > 0) {
        SplitMix64 rng(seed);
        bool ok = true;
        std::string detail = std::to_string(trials) + " round trips recovered mu";
        for (std::size_t i = 0; i < trials && ok; ++i) {
            const Elem mu = center.elements[rng.below(center.elements.size())];
            const auto a = static_cast<Elem>(rng.below(ring.order()));
            const RingMap delta = inner_derivation(ring, a);
            const RingMap F = map_sum(scalar_map(ring, mu), delta);
            try {
                const DecompositionReport d = decompose_generalized(F, delta, n, options);
                if (d.mu != mu || !d.all_verified()) {
                    ok = false;
                    detail = "trial " + std::to_string(i) + ": mu = " + ring.label(mu) +
                             ", a = " + ring.label(a) + " not recovered";
                    set(roundtrip, false, detail, {mu, a});
                }
            } catch (const PreconditionError& e) {
                ok = false;
                set(roundtrip, false,
                    "trial " + std::to_string(i) + ": " + e.predicate() + " failed: " + e.what(),
                    {mu, a});
            }
        }
        if (ok) set(roundtrip, true, detail);
    }
    return report;
}

}  // namespace ringlab
