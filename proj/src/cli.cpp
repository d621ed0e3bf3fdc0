#include "ringlab/cli.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>
#include <openssl/evp.h>

#include "ringlab/identity.hpp"
#include "ringlab/spec_io.hpp"

#ifndef RINGLAB_VERSION
#define RINGLAB_VERSION "0.0.0"
#endif

namespace ringlab::cli {

namespace {

using Clock = std::chrono::steady_clock;

constexpr std::uint64_t kShallowBudget = 10'000'000;
constexpr std::uint64_t kDeepBudget = 10'000'000'000;
constexpr std::size_t kReportedMapLimit = 10'000;

constexpr std::string_view kAdditivityScope =
    "additivity of non-additive multiplicative maps is not enumerated: centralizers are complete via "
    "the half-law, derivation classes are restricted to additive maps and fuzzed";

/// A failed mathematical check; the report is already filled in.
struct CheckFailure {};

/// Exit-1 failure of a named precondition.
struct PreconditionFailure {
    std::string predicate;
    std::string message;
    std::vector<Elem> witness;
};

struct Options {
    std::string ring;
    std::string map;
    std::string delta;
    std::string cls;
    std::string e1;
    std::string out;
    std::string budget;
    std::string identities;
    std::vector<std::string> bindings;
    int n = 2;
    std::size_t trials = 20;
    std::uint64_t seed = 0;
    unsigned workers = 0;
    bool deep = false;
};

std::string sha256_hex(const std::string& data) {
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) != 1)
        throw Error("sha256 failed");
    std::string hex;
    char buf[3];
    for (unsigned i = 0; i < len; ++i) {
        std::snprintf(buf, sizeof buf, "%02x", digest[i]);
        hex += buf;
    }
    return hex;
}

std::uint64_t parse_count(const std::string& text, const char* flag) {
    try {
        std::size_t used = 0;
        const long double v = std::stold(text, &used);
        if (used != text.size() || v < 1 || v > 1.8e19L) throw std::invalid_argument(text);
        return static_cast<std::uint64_t>(v);
    } catch (const std::exception&) {
        throw SpecError(std::string(flag) + ": expected a positive count, got '" + text + "'");
    }
}

class Run {
public:
    Run(std::string command, const Options& options) : options_(options), start_(Clock::now()) {
        report_["schema"] = kReportSchema;
        report_["tool"] = {{"name", "ringlab"}, {"version", RINGLAB_VERSION}};
        report_["command"] = std::move(command);
        report_["inputs"] = json::array();
        report_["results"] = json::object();
        report_["timings"] = json::object();
    }

    json& results() { return report_["results"]; }
    json& report() { return report_; }
    const Options& options() const { return options_; }

    void argument(const char* key, json value) { report_["arguments"][key] = std::move(value); }

    std::string input(const std::string& role, const std::string& path) {
        const std::string text = read_text_file(path);
        report_["inputs"].push_back({{"role", role}, {"path", path}, {"sha256", sha256_hex(text)}});
        return text;
    }

    std::variant<FiniteRing, ValidationReport> ring_or_report() {
        if (options_.ring.empty()) throw SpecError("--ring is required");
        return ring_from_spec(parse_json_text(input("ring", options_.ring), options_.ring));
    }

    const FiniteRing& ring() {
        auto r = ring_or_report();
        if (auto* v = std::get_if<ValidationReport>(&r))
            throw SpecError(options_.ring + ": ring axiom violated: " + v->message);
        return adopt(std::get<FiniteRing>(std::move(r)));
    }

    const FiniteRing& adopt(FiniteRing ring) {
        ring_.emplace(std::move(ring));
        return *ring_;
    }

    /// Witness elements with labels once a ring is loaded, raw indices before.
    json witness(const std::vector<Elem>& w) const {
        if (!ring_) return w;
        return elements_json(*ring_, w);
    }

    RingMap map(const FiniteRing& ring, const std::string& role, const std::string& path) {
        return map_from_json(ring, parse_json_text(input(role, path), path));
    }

    std::optional<Elem> e1(const FiniteRing& ring) const {
        if (options_.e1.empty()) return std::nullopt;
        const std::string& s = options_.e1;
        const bool numeric = !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
        return element_from_json(ring, numeric ? json(std::stoll(s)) : json(s));
    }

    template <class F>
    auto timed(const char* stage, F&& f) {
        const auto t0 = Clock::now();
        if constexpr (std::is_void_v<decltype(f())>) {
            f();
            record(stage, t0);
        } else {
            auto r = f();
            record(stage, t0);
            return r;
        }
    }

    int finish(int code, std::ostream& out, std::ostream& err) {
        static constexpr const char* verdicts[] = {"pass", "check_failed", "malformed_input", "budget", "internal"};
        report_["exit_code"] = code;
        report_["verdict"] = verdicts[code];
        report_["timings"]["total_ms"] = ms_since(start_);
        const std::string text = report_.dump(2) + "\n";
        if (options_.out.empty()) {
            out << text;
        } else {
            std::ofstream file(options_.out, std::ios::binary);
            if (!file) {
                err << "ringlab: cannot write '" << options_.out << "'\n";
                return kInternal;
            }
            file << text;
        }
        return code;
    }

private:
    static double ms_since(Clock::time_point t0) {
        return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
    }
    void record(const char* stage, Clock::time_point t0) { report_["timings"][std::string(stage) + "_ms"] = ms_since(t0); }

    const Options& options_;
    Clock::time_point start_;
    json report_;
    std::optional<FiniteRing> ring_;
};

json witness_json(const FiniteRing& R, const std::vector<Elem>& w) {
    return w.empty() ? json(nullptr) : elements_json(R, w);
}

json check_json(const FiniteRing& R, const CheckResult& c) {
    json j{{"holds", c.holds}, {"witness", witness_json(R, c.witness)}};
    if (!c.holds && !c.law.empty()) j["law"] = c.law;
    return j;
}

json optional_element(const FiniteRing& R, const std::optional<Elem>& e) {
    return e ? element_json(R, *e) : json(nullptr);
}

ScanOptions scan_options(const Options& o) {
    ScanOptions s;
    s.workers = o.workers;
    if (!o.budget.empty()) s.max_tuples = parse_count(o.budget, "--budget");
    return s;
}

std::optional<PeirceContext> smallest_context(const FiniteRing& R) {
    for (const auto& i : find_idempotents(R))
        if (i.nontrivial) return PeirceContext(R, i.element);
    return std::nullopt;
}

// ---------------------------------------------------------------------------

int cmd_analyze(Run& run) {
    const Options& o = run.options();
    json& res = run.results();
    auto loaded = run.ring_or_report();
    if (auto* v = std::get_if<ValidationReport>(&loaded)) {
        res["validation"] = {{"status", "fail"},
                             {"axiom", v->axiom ? json(std::string(axiom_name(*v->axiom))) : json(nullptr)},
                             {"witness", v->witness},
                             {"message", v->message}};
        res["failed_hypotheses"] = {"validate_ring"};
        return kCheckFailed;
    }
    const FiniteRing& R = run.adopt(std::get<FiniteRing>(std::move(loaded)));
    run.argument("e1", o.e1.empty() ? json(nullptr) : json(o.e1));

    json gens = json::array();
    for (const auto& g : R.additive_generators())
        gens.push_back({{"element", element_json(R, g.element)}, {"order", g.order}});
    res["ring"] = {{"name", R.name()}, {"order", R.order()}, {"additive_generators", gens}};

    const ValidationReport v = run.timed("validate", [&] { return validate_ring(R, o.workers); });
    res["validation"] = {{"status", v.ok() ? "pass" : "fail"}};

    const CheckResult torsion = is_two_torsion_free(R);
    res["two_torsion_free"] = check_json(R, torsion);

    const auto idempotents = find_idempotents(R);
    json ids = json::array();
    for (const auto& i : idempotents) ids.push_back({{"element", element_json(R, i.element)}, {"nontrivial", i.nontrivial}});
    res["idempotents"] = ids;

    const CenterDescription center = run.timed("center", [&] { return center_commutant(R); });
    res["center"] = {{"via", "commutant"}, {"size", center.elements.size()}, {"elements", elements_json(R, center.elements)}};

    const CheckResult c21 = run.timed("condition_2_1", [&] { return check_condition_2_1(R); });
    res["condition_2_1"] = check_json(R, c21);

    const PrimeCheck prime = run.timed("prime", [&] { return is_prime(R); });
    res["prime"] = {{"holds", prime.holds},
                    {"witness", prime.witness ? elements_json(R, std::vector<Elem>{prime.witness->first, prime.witness->second})
                                              : json(nullptr)}};

    std::vector<Elem> chosen;
    bool idempotent_ok = true;
    json idempotent_witness = nullptr;
    if (const auto e = run.e1(R)) {
        if (R.mul(*e, *e) != *e || *e == R.zero() || *e == R.one()) {
            idempotent_ok = false;
            idempotent_witness = element_json(R, *e);
        } else {
            chosen.push_back(*e);
        }
    } else {
        for (const auto& i : idempotents)
            if (i.nontrivial) chosen.push_back(i.element);
        idempotent_ok = !chosen.empty();
    }

    bool any_spade = false;
    json spade_witness = nullptr;
    bool centers_agree = true;
    json contexts = json::array();
    run.timed("contexts", [&] {
        for (Elem e : chosen) {
            const PeirceContext ctx(R, e);
            json c;
            c["e1"] = element_json(R, ctx.e1());
            c["e2"] = element_json(R, ctx.e2());
            c["components"] = {{"A11", ctx.component(1, 1).size()},
                               {"A12", ctx.component(1, 2).size()},
                               {"A21", ctx.component(2, 1).size()},
                               {"A22", ctx.component(2, 2).size()}};
            const CheckResult spade = check_spade(ctx);
            any_spade = any_spade || spade.holds;
            if (!spade.holds && spade_witness.is_null()) spade_witness = elements_json(R, spade.witness);
            c["spade"] = check_json(R, spade);
            const CenterDescription peirce = center_peirce(ctx);
            const bool agrees = peirce.elements == center.elements;
            centers_agree = centers_agree && agrees;
            c["center_peirce"] = {{"size", peirce.elements.size()}, {"agrees_with_commutant", agrees}};
            const XiResult xi = compute_xi(ctx);
            static constexpr const char* xi_status[] = {"ok", "no_solution", "multiple_solutions"};
            json table = json::array();
            for (auto [a, b] : xi.table) table.push_back({element_json(R, a), element_json(R, b)});
            c["xi"] = {{"status", xi_status[static_cast<int>(xi.status)]},
                       {"table", table},
                       {"failing_element", optional_element(R, xi.failing_element)},
                       {"solutions_in_codomain", xi.solutions_in_codomain},
                       {"solution_outside_codomain", optional_element(R, xi.solution_outside_codomain)},
                       {"message", xi.message}};
            const Faithfulness f = is_faithful_bimodule(ctx);
            c["faithful"] = {{"left", f.left_faithful},
                             {"right", f.right_faithful},
                             {"left_witness", optional_element(R, f.left_witness)},
                             {"right_witness", optional_element(R, f.right_witness)}};
            c["orthogonality"] = check_json(R, check_orthogonality_hypothesis(ctx));
            contexts.push_back(std::move(c));
        }
    });
    res["contexts"] = contexts;

    json hyp{{"validate_ring", v.ok()},
             {"two_torsion_free", torsion.holds},
             {"nontrivial_idempotent", idempotent_ok},
             {"spade", any_spade},
             {"condition_2_1", c21.holds},
             {"center_agreement", idempotent_ok && centers_agree}};
    if (!idempotent_ok) hyp["nontrivial_idempotent_witness"] = idempotent_witness;
    if (!any_spade) hyp["spade_witness"] = spade_witness;
    res["hypotheses"] = hyp;
    json failed = json::array();
    for (const char* k : {"validate_ring", "two_torsion_free", "nontrivial_idempotent", "spade", "condition_2_1", "center_agreement"})
        if (!hyp[k].get<bool>()) failed.push_back(k);
    res["failed_hypotheses"] = failed;
    return failed.empty() ? kPass : kCheckFailed;
}

// ---------------------------------------------------------------------------

std::optional<MapPredicate> predicate_named(const std::string& name, int n, const std::optional<PeirceContext>& ctx) {
    if (name == "additive") return MapPredicate::additive();
    if (name == "derivation") return MapPredicate::derivation();
    if (name == "jordan_n_derivation") return MapPredicate::jordan_n_derivation(n);
    if (name == "jordan_n_centralizer") return MapPredicate::jordan_n_centralizer(n);
    if (name == "centralizer") return MapPredicate::centralizer();
    if (name == "antiderivation") return MapPredicate::antiderivation();
    if (name == "singular_jordan_derivation") {
        if (!ctx) throw PreconditionFailure{"nontrivial_idempotent", "ring has no nontrivial idempotent", {}};
        return MapPredicate::singular_jordan_derivation(*ctx);
    }
    return std::nullopt;
}

bool known_class(const std::string& name) {
    for (const char* k : {"additive", "derivation", "jordan_n_derivation", "generalized_jordan_n_derivation",
                          "jordan_n_centralizer", "centralizer", "antiderivation", "singular_jordan_derivation"})
        if (name == k) return true;
    return false;
}

std::optional<PeirceContext> context_for(Run& run, const FiniteRing& R) {
    if (const auto e = run.e1(R)) {
        try {
            return PeirceContext(R, *e);
        } catch (const PreconditionError& p) {
            throw PreconditionFailure{p.predicate(), p.what(), {*e}};
        }
    }
    return smallest_context(R);
}

void check_n(int n) {
    if (n < 2) throw SpecError("--n must be at least 2");
}

int cmd_check_map(Run& run) {
    const Options& o = run.options();
    if (o.cls.empty()) throw SpecError("--class is required");
    if (!known_class(o.cls)) throw SpecError("unknown class '" + o.cls + "'");
    check_n(o.n);
    const FiniteRing& R = run.ring();
    if (o.map.empty()) throw SpecError("--map is required");
    const RingMap f = run.map(R, "map", o.map);
    run.argument("class", o.cls);
    run.argument("n", o.n);
    const ScanOptions scan = scan_options(o);
    json& res = run.results();
    res["class"] = o.cls;
    res["n"] = o.n;
    res["ring"] = R.name();
    res["image_of_zero"] = element_json(R, f(0));

    CheckResult c;
    if (o.cls == "generalized_jordan_n_derivation") {
        if (o.delta.empty()) throw SpecError("--delta is required for generalized_jordan_n_derivation");
        const RingMap d = run.map(R, "delta", o.delta);
        try {
            c = run.timed("check", [&] { return is_generalized_jordan_n_derivation(f, d, o.n, scan); });
        } catch (const PreconditionError& p) {
            throw PreconditionFailure{p.predicate(), std::string("delta: ") + p.what(), p.witness()};
        }
    } else {
        std::optional<PeirceContext> ctx;
        if (o.cls == "singular_jordan_derivation") ctx = context_for(run, R);
        const MapPredicate p = *predicate_named(o.cls, o.n, ctx);
        if (ctx) res["e1"] = element_json(R, ctx->e1());
        c = run.timed("check", [&] { return p.evaluate(f, scan); });
    }
    res["holds"] = c.holds;
    res["witness"] = witness_json(R, c.witness);
    if (!c.holds) res["law"] = c.law.empty() ? json(o.cls) : json(c.law);
    return c.holds ? kPass : kCheckFailed;
}

// ---------------------------------------------------------------------------

int cmd_decompose(Run& run) {
    const Options& o = run.options();
    check_n(o.n);
    const FiniteRing& R = run.ring();
    if (o.map.empty()) throw SpecError("--map is required");
    const RingMap F = run.map(R, "map", o.map);
    std::optional<RingMap> delta;
    if (!o.delta.empty()) delta = run.map(R, "delta", o.delta);
    run.argument("n", o.n);
    const ScanOptions scan = scan_options(o);

    json& res = run.results();
    res["mode"] = delta ? "generalized" : "centralizer";
    res["n"] = o.n;
    res["ring"] = R.name();
    if (const CheckResult t = is_two_torsion_free(R); !t)
        throw PreconditionFailure{"two_torsion_free", "ring has 2-torsion", t.witness};
    if (!smallest_context(R))
        throw PreconditionFailure{"nontrivial_idempotent", "ring has no nontrivial idempotent", {}};

    const DecompositionReport d = run.timed("decompose", [&] {
        try {
            return delta ? decompose_generalized(F, *delta, o.n, scan) : decompose_centralizer(F, o.n, scan);
        } catch (const PreconditionError& p) {
            throw PreconditionFailure{p.predicate(), p.what(), p.witness()};
        }
    });
    res["mu"] = element_json(R, d.mu);
    res["mu_is_central"] = d.mu_is_central;
    res["identity_verified"] = d.identity_verified;
    res["additivity_verified"] = d.additivity_verified;
    res["half_law_verified"] = d.half_law_verified;
    res["scalar_form_verified"] = d.scalar_form_verified;
    res["all_verified"] = d.all_verified();
    res["image_of_zero"] = element_json(R, d.image_of_zero);
    res["witnesses"] = {{"identity", witness_json(R, d.identity_witness)},
                        {"additivity", witness_json(R, d.additivity_witness)},
                        {"half_law", optional_element(R, d.half_law_witness)},
                        {"central", optional_element(R, d.central_witness)},
                        {"scalar_form", optional_element(R, d.scalar_form_witness)}};
    res["residual"] = std::vector<Elem>(d.residual.images().begin(), d.residual.images().end());
    return d.all_verified() ? kPass : kCheckFailed;
}

// ---------------------------------------------------------------------------

int cmd_enumerate(Run& run) {
    const Options& o = run.options();
    if (o.cls.empty()) throw SpecError("--class is required");
    check_n(o.n);
    const FiniteRing& R = run.ring();
    run.argument("class", o.cls);
    run.argument("n", o.n);
    run.argument("deep", o.deep);

    EnumerationOptions eo;
    eo.workers = o.workers;
    eo.scan.workers = o.workers;
    eo.max_maps = kReportedMapLimit;
    const std::uint64_t requested = o.budget.empty() ? (o.deep ? kDeepBudget : kShallowBudget)
                                                     : parse_count(o.budget, "--budget");
    eo.budget = o.deep ? requested : std::min(requested, kShallowBudget);
    run.argument("budget", eo.budget);

    json& res = run.results();
    EnumerationResult result;
    bool additive = false;
    if (o.cls == "jordan_n_centralizer") {
        if (const CheckResult t = is_two_torsion_free(R); !t)
            throw PreconditionFailure{"two_torsion_free", "the half-law needs a 2-torsion-free ring", t.witness};
        result = run.timed("enumerate", [&] { return enumerate_jordan_n_centralizers(R, o.n, eo); });
    } else {
        std::string base = o.cls;
        constexpr std::string_view suffix = "_additive";
        if (base.size() > suffix.size() && base.ends_with(suffix)) base.resize(base.size() - suffix.size());
        if (!known_class(base) || base == "generalized_jordan_n_derivation")
            throw SpecError("unknown class '" + o.cls + "'");
        std::optional<PeirceContext> ctx;
        if (base == "singular_jordan_derivation") ctx = context_for(run, R);
        const MapPredicate p = *predicate_named(base, o.n, ctx);
        if (ctx) res["e1"] = element_json(R, ctx->e1());
        try {
            result = run.timed("enumerate", [&] { return enumerate_additive_maps(R, p, eo); });
        } catch (const BudgetExceeded& b) {
            if (!o.deep && b.required() <= kDeepBudget)
                throw BudgetExceeded("additive maps of " + R.name() + " (rerun with --deep)", b.required(), b.budget());
            throw;
        }
        additive = true;
    }
    run.report()["timings"]["search_ms"] = result.elapsed_ms;
    json j = to_json(result, true);
    for (auto it = j.begin(); it != j.end(); ++it) res[it.key()] = it.value();
    if (additive) {
        json flags = json::array();
        bool all = true;
        run.timed("derivation_flags", [&] {
            for (const auto& m : result.maps) {
                const bool d = is_derivation(m, o.workers).holds;
                all = all && d;
                flags.push_back(d);
            }
        });
        res["is_derivation"] = flags;
        res["all_derivations"] = all;
    }
    res["additivity_scope"] = std::string(kAdditivityScope);
    return kPass;
}

// ---------------------------------------------------------------------------

int cmd_verify(Run& run) {
    const Options& o = run.options();
    check_n(o.n);
    const FiniteRing& R = run.ring();
    run.argument("n", o.n);
    run.argument("trials", o.trials);
    run.argument("seed", o.seed);
    run.argument("e1", o.e1.empty() ? json(nullptr) : json(o.e1));
    const auto e1 = run.e1(R);
    const PipelineReport p = run.timed("pipeline", [&] {
        return verify_theorem_pipeline(R, e1, o.n, o.trials, o.seed, scan_options(o));
    });
    json& res = run.results();
    res["ring"] = R.name();
    res["e1"] = optional_element(R, p.e1);
    res["n"] = p.n;
    res["trials"] = p.trials;
    res["seed"] = p.seed;
    res["center_size"] = p.center_size;
    res["centralizer_count"] = p.centralizer_count ? json(*p.centralizer_count) : json(nullptr);
    json stages = json::array();
    for (const auto& s : p.stages)
        stages.push_back({{"name", s.name},
                          {"kind", s.kind == PipelineStage::Kind::Hypothesis ? "hypothesis" : "conclusion"},
                          {"status", std::string(to_string(s.status))},
                          {"detail", s.detail},
                          {"witness", witness_json(R, s.witness)}});
    res["stages"] = stages;
    res["hypotheses_met"] = p.hypotheses_met();
    res["conclusions_hold"] = p.conclusions_hold();
    const PipelineStage* first = p.first_failure();
    res["first_failure"] = first ? json(first->name) : json(nullptr);
    res["additivity_scope"] = std::string(kAdditivityScope);
    return first ? kCheckFailed : kPass;
}

// ---------------------------------------------------------------------------

int cmd_eval(Run& run) {
    const Options& o = run.options();
    const FiniteRing& R = run.ring();
    if (o.identities.empty()) throw SpecError("an identity file is required");
    std::map<std::string, RingMap> bindings;
    for (const auto& b : o.bindings) {
        const auto eq = b.find('=');
        if (eq == std::string::npos || eq == 0 || eq + 1 == b.size())
            throw SpecError("--map for eval must be NAME=PATH, got '" + b + "'");
        const std::string name = b.substr(0, eq);
        if (bindings.count(name)) throw SpecError("map symbol '" + name + "' bound twice");
        bindings.emplace(name, run.map(R, "map:" + name, b.substr(eq + 1)));
    }
    const std::string text = run.input("identities", o.identities);
    const auto lines = parse_identity_file(text);

    EvalOptions eo;
    eo.workers = o.workers;
    if (!o.budget.empty()) eo.budget = parse_count(o.budget, "--budget");

    json& res = run.results();
    res["ring"] = R.name();
    json out = json::array();
    bool all = true;
    run.timed("eval", [&] {
        for (const auto& l : lines) {
            const EvalResult r = eval_identity(R, l.ast, bindings, eo);
            all = all && r.holds;
            json cx = nullptr;
            if (!r.holds) {
                cx = json::object();
                for (std::size_t i = 0; i < r.counterexample.size(); ++i)
                    cx[l.ast.variables[i]] = element_json(R, r.counterexample[i]);
            }
            out.push_back({{"line", l.line},
                           {"text", l.text},
                           {"canonical", print(l.ast)},
                           {"variables", l.ast.variables},
                           {"map_symbols", l.ast.map_symbols},
                           {"assignments", r.assignments},
                           {"holds", r.holds},
                           {"counterexample", cx}});
        }
    });
    res["identities"] = out;
    res["all_hold"] = all;
    return all ? kPass : kCheckFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Finite-ring laboratory for Jordan n-derivations and centralizers", "ringlab"};
    app.set_version_flag("--version", RINGLAB_VERSION);
    app.require_subcommand(1);

    auto common = [&](CLI::App* c) {
        c->add_option("--ring", o.ring, "ring spec (JSON)");
        c->add_option("--workers", o.workers, "worker threads (0 = hardware parallelism)");
        c->add_option("--budget", o.budget, "search-space cap, e.g. 1e8");
        c->add_option("--out", o.out, "write the report here instead of stdout");
    };
    auto* analyze = app.add_subcommand("analyze", "check every hypothesis on a ring");
    common(analyze);
    analyze->add_option("--e1", o.e1, "idempotent (index or label)");

    auto* check = app.add_subcommand("check-map", "run a map-class predicate");
    common(check);
    check->add_option("--map", o.map, "map spec (JSON)");
    check->add_option("--delta", o.delta, "associated Jordan n-derivation");
    check->add_option("--class", o.cls, "map class");
    check->add_option("--n", o.n, "arity of the Jordan identity");
    check->add_option("--e1", o.e1, "idempotent for the singular class");

    auto* decompose = app.add_subcommand("decompose", "extract mu from a centralizer or generalized derivation");
    common(decompose);
    decompose->add_option("--map", o.map, "map spec F (JSON)");
    decompose->add_option("--delta", o.delta, "associated Jordan n-derivation");
    decompose->add_option("--n", o.n, "arity of the Jordan identity");

    auto* enumerate = app.add_subcommand("enumerate", "enumerate a map class");
    common(enumerate);
    enumerate->add_option("--class", o.cls, "jordan_n_centralizer or <class>_additive");
    enumerate->add_option("--n", o.n, "arity of the Jordan identity");
    enumerate->add_option("--e1", o.e1, "idempotent for the singular class");
    enumerate->add_flag("--deep", o.deep, "lift the default search-space gate");

    auto* verify = app.add_subcommand("verify", "run the staged theorem pipeline");
    common(verify);
    verify->add_option("--e1", o.e1, "idempotent (index or label)");
    verify->add_option("--n", o.n, "arity of the Jordan identity");
    verify->add_option("--trials", o.trials, "round-trip trials");
    verify->add_option("--seed", o.seed, "seed for the round trips");

    auto* eval = app.add_subcommand("eval", "evaluate an identity file");
    common(eval);
    eval->add_option("--map", o.bindings, "NAME=PATH map binding")->take_all();
    eval->add_option("identities", o.identities, "identity file")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kPass;
    } catch (const CLI::CallForVersion&) {
        out << RINGLAB_VERSION << "\n";
        return kPass;
    } catch (const CLI::ParseError& e) {
        err << "ringlab: " << e.what() << "\n";
        return kMalformedInput;
    }

    CLI::App* sub = app.get_subcommands().front();
    Run run(sub->get_name(), o);
    if (!o.ring.empty()) run.argument("ring", o.ring);
    try {
        int code = kInternal;
        if (sub == analyze) code = cmd_analyze(run);
        else if (sub == check) code = cmd_check_map(run);
        else if (sub == decompose) code = cmd_decompose(run);
        else if (sub == enumerate) code = cmd_enumerate(run);
        else if (sub == verify) code = cmd_verify(run);
        else if (sub == eval) code = cmd_eval(run);
        return run.finish(code, out, err);
    } catch (const PreconditionFailure& p) {
        run.results()["failed_predicate"] = p.predicate;
        run.results()["message"] = p.message;
        run.results()["witness"] = run.witness(p.witness);
        err << "ringlab: precondition " << p.predicate << " failed: " << p.message << "\n";
        return run.finish(kCheckFailed, out, err);
    } catch (const PreconditionError& p) {
        run.results()["failed_predicate"] = p.predicate();
        run.results()["message"] = p.what();
        run.results()["witness"] = run.witness(p.witness());
        err << "ringlab: precondition " << p.predicate() << " failed: " << p.what() << "\n";
        return run.finish(kCheckFailed, out, err);
    } catch (const UnsupportedOperation& e) {
        run.results()["failed_predicate"] = "two_torsion_free";
        run.results()["message"] = e.what();
        err << "ringlab: " << e.what() << "\n";
        return run.finish(kCheckFailed, out, err);
    } catch (const ParseError& e) {
        run.report()["error"] = {{"kind", "parse"},
                                 {"line", e.line()},
                                 {"offset", e.offset()},
                                 {"expected", e.expected()},
                                 {"found", e.found()},
                                 {"message", e.what()}};
        err << "ringlab: " << e.what() << "\n";
        return run.finish(kMalformedInput, out, err);
    } catch (const SpecError& e) {
        run.report()["error"] = {{"kind", "malformed_input"}, {"message", e.what()}};
        err << "ringlab: " << e.what() << "\n";
        return run.finish(kMalformedInput, out, err);
    } catch (const StructuralError& e) {
        run.report()["error"] = {{"kind", "malformed_input"}, {"message", e.what()}};
        err << "ringlab: " << e.what() << "\n";
        return run.finish(kMalformedInput, out, err);
    } catch (const BudgetExceeded& e) {
        run.report()["error"] = {{"kind", "budget"}, {"required", e.required()}, {"budget", e.budget()}, {"message", e.what()}};
        err << "ringlab: " << e.what() << "\n";
        return run.finish(kBudget, out, err);
    } catch (const SizeLimitError& e) {
        run.report()["error"] = {{"kind", "size_limit"}, {"message", e.what()}};
        err << "ringlab: " << e.what() << "\n";
        return run.finish(kBudget, out, err);
    } catch (const std::exception& e) {
        run.report()["error"] = {{"kind", "internal"}, {"message", e.what()}};
        err << "ringlab: internal error: " << e.what() << "\n";
        return run.finish(kInternal, out, err);
    }
}

}  // namespace ringlab::cli
