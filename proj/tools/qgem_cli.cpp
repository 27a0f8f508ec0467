// Command-line front end: load or name codes, run distance / GEM / bound /
// verification pipelines, emit JSON or CSV reports.

#include <cstdio>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "qgem/bounds.hpp"
#include "qgem/gem.hpp"
#include "qgem/io.hpp"
#include "qgem/verify.hpp"
#include "qgem/zoo.hpp"

using namespace qgem;

namespace {

struct RunConfig {
    std::uint64_t seed = kDefaultSeed;
    int restarts = 32;
    double tol = 1e-12;
    int max_qubits = kDefaultMaxQubits;
    std::string out = "-";
    std::string format = "json";
};

struct LoadedCode {
    std::string name;
    std::variant<StabilizerCode, GeneralCode> code;
    std::optional<int> known_distance;

    bool is_stabilizer() const { return std::holds_alternative<StabilizerCode>(code); }
    const StabilizerCode& stab() const { return std::get<StabilizerCode>(code); }
    const GeneralCode& gen() const { return std::get<GeneralCode>(code); }
    int n() const { return is_stabilizer() ? stab().n : gen().n; }
    int k() const { return is_stabilizer() ? stab().k : gen().k; }
};

bool looks_like_path(const std::string& spec) {
    return spec.find('/') != std::string::npos || spec.find('.') != std::string::npos;
}

LoadedCode load_code(const std::string& spec, const RunConfig& cfg) {
    LoadedCode lc;
    lc.name = spec;
    if (looks_like_path(spec) && spec.find(':') == std::string::npos) {
        const std::string text = read_file(spec);
        if (spec.size() > 5 && spec.substr(spec.size() - 5) == ".json") {
            GeneralCode g = general_code_from_json(ojson::parse(text, nullptr, true, true));
            lc.known_distance = g.claimed_distance;
            lc.code = std::move(g);
        } else {
            lc.code = parse_stabilizer_text(text);
        }
        return lc;
    }
    ZooEntry e = make_zoo_code(spec, cfg.max_qubits);
    lc.known_distance = e.known_distance;
    lc.code = std::move(e.code);
    return lc;
}

GeneralCode as_general(const LoadedCode& lc, const RunConfig& cfg) {
    if (!lc.is_stabilizer()) return lc.gen();
    GeneralCode g = logical_basis(lc.stab(), cfg.max_qubits);
    g.claimed_distance = lc.known_distance;
    return g;
}

void emit(const RunConfig& cfg, const ojson& j, const std::string& csv = "") {
    std::string payload;
    if (cfg.format == "csv" && !csv.empty())
        payload = csv;
    else if (cfg.format == "pretty")
        payload = j.dump(2) + "\n";
    else
        payload = j.dump(2) + "\n";
    if (cfg.out == "-")
        std::fputs(payload.c_str(), stdout);
    else
        write_file(cfg.out, payload);
}

ojson gem_estimate_json(const GemEstimate& est, std::uint64_t seed) {
    ojson j;
    j["best_overlap"] = jnum(est.best_overlap);
    j["e0_upper"] = jnum(est.e0_upper);
    j["converged"] = est.converged;
    j["restarts_used"] = est.restarts_used;
    j["sweeps_used"] = est.sweeps_used;
    j["seed"] = seed;
    ojson prod = ojson::array();
    for (const auto& f : est.best_product.factors)
        prod.push_back({{jnum(f[0].real()), jnum(f[0].imag())},
                        {jnum(f[1].real()), jnum(f[1].imag())}});
    j["product"] = std::move(prod);
    ojson traces = ojson::array();
    for (const auto& t : est.traces) {
        ojson tr = ojson::array();
        for (double v : t) tr.push_back(jnum(v));
        traces.push_back(std::move(tr));
    }
    j["traces"] = std::move(traces);
    return j;
}

int cmd_distance(const std::string& spec, int wmax, double budget, const RunConfig& cfg) {
    LoadedCode lc = load_code(spec, cfg);
    ojson j;
    j["command"] = "distance";
    j["code"] = spec;
    j["n"] = lc.n();
    j["k"] = lc.k();
    if (lc.is_stabilizer()) {
        j["method"] = "symplectic-enumeration";
        auto res = distance(lc.stab(), wmax > 0 ? wmax : lc.n(), budget);
        j["exact"] = res.exact.has_value();
        j["distance"] = res.exact ? ojson(*res.exact) : ojson(nullptr);
        j["lower_bound"] = res.lower_bound;
        j["witness"] = res.witness ? ojson(res.witness->str()) : ojson(nullptr);
        if (res.exact) {
            auto subset = identity_support_subset(lc.stab(), *res.exact);
            j["identity_support_subset"] = subset.qubits;
        }
    } else {
        j["method"] = "knill-laflamme";
        auto res = kl_distance(lc.gen(), wmax > 0 ? wmax : lc.n(), 1e-9);
        j["exact"] = res.exact;
        j["distance"] = res.exact ? ojson(res.verified) : ojson(nullptr);
        j["lower_bound"] = res.verified;
        if (res.witness) {
            ojson w;
            w["pauli"] = res.witness->pauli.str();
            w["element"] = {res.witness->row, res.witness->col};
            j["witness"] = std::move(w);
        } else {
            j["witness"] = nullptr;
        }
    }
    emit(cfg, j);
    return 0;
}

int cmd_gem(const std::string& spec, const std::string& state, int max_sweeps,
            const RunConfig& cfg) {
    LoadedCode lc = load_code(spec, cfg);
    GeneralCode logical = as_general(lc, cfg);
    Rng rng(cfg.seed);
    StateVector psi = state_by_selector(logical, state, rng);
    GemEstimate est = alternating_maximize(psi, cfg.restarts, max_sweeps, cfg.tol, cfg.seed);

    ojson j;
    j["command"] = "gem";
    j["code"] = spec;
    j["state"] = state;
    j["n"] = lc.n();
    j["k"] = lc.k();
    j["estimate"] = gem_estimate_json(est, cfg.seed);

    ojson bounds;
    std::optional<int> d = lc.known_distance;
    if (lc.is_stabilizer() && !d) {
        try {
            auto res = distance(lc.stab(), lc.n(), kDefaultEnumBudget);
            if (res.exact) d = *res.exact;
        } catch (const resource_error&) {
        }
    }
    bool violated = false;
    if (d) {
        bounds["distance"] = *d;
        if (lc.is_stabilizer()) {
            const double floor_e0 = stabilizer_gem_lower_bound(*d);
            const double cap = std::exp2(1.0 - *d);
            bounds["stabilizer_gem_floor"] = jnum(std::max(0.0, floor_e0));
            bounds["stabilizer_overlap_cap"] = jnum(cap);
            violated = violated || est.best_overlap > cap + 1e-9;
            bounds["verdict"] = est.best_overlap > cap + 1e-9 ? "violates-cap"
                                : std::abs(est.e0_upper - floor_e0) <= 1e-6
                                    ? "tight"
                                    : "upper-bound-only";
        }
        if (*d >= 2) {
            bounds["rate_gem_floor"] = jnum(rate_gem_lower_bound(lc.n(), lc.k(), *d, 0));
            const double cap = rate_overlap_upper_bound(lc.n(), lc.k(), *d);
            bounds["rate_overlap_cap"] = jnum(cap);
            violated = violated || est.best_overlap > cap + 1e-9;
        }
        if (!bounds.contains("verdict"))
            bounds["verdict"] = violated ? "violates-cap" : "upper-bound-only";
    } else {
        bounds["verdict"] = "no-distance-available";
    }
    j["bounds"] = std::move(bounds);
    emit(cfg, j);
    return violated ? 1 : 0;
}

int cmd_kl_check(const std::string& spec, int d, const RunConfig& cfg) {
    LoadedCode lc = load_code(spec, cfg);
    GeneralCode logical = as_general(lc, cfg);
    KlReport rep = kl_verify_distance(logical, d);
    ojson j;
    j["command"] = "kl-check";
    j["code"] = spec;
    j["d"] = d;
    j["checked_up_to_weight"] = rep.checked_up_to_weight;
    j["pass"] = rep.pass;
    if (rep.witness) {
        ojson w;
        w["pauli"] = rep.witness->pauli.str();
        w["element"] = {rep.witness->row, rep.witness->col};
        w["value"] = {jnum(rep.witness->value.real()), jnum(rep.witness->value.imag())};
        w["expected"] = {jnum(rep.witness->expected.real()), jnum(rep.witness->expected.imag())};
        j["witness"] = std::move(w);
    } else {
        j["witness"] = nullptr;
    }
    emit(cfg, j);
    return rep.pass ? 0 : 1;
}

int cmd_bounds(const std::string& spec, int n, int k, int d, int h, int s, bool measure,
               const std::string& state, const RunConfig& cfg) {
    std::optional<LoadedCode> lc;
    if (!spec.empty()) {
        lc = load_code(spec, cfg);
        n = lc->n();
        k = lc->k();
        if (lc->known_distance) d = *lc->known_distance;
        if (lc->is_stabilizer()) s = sparsity(lc->stab());
    }
    if (n <= 0 || k <= 0 || d <= 0) throw domain_error("bounds: need n, k, d (code spec or flags)");

    std::optional<double> measured_overlap, measured_e0;
    if (measure) {
        if (!lc) throw domain_error("bounds: --measure needs a code spec");
        GeneralCode logical = as_general(*lc, cfg);
        Rng rng(cfg.seed);
        StateVector psi = state_by_selector(logical, state, rng);
        GemEstimate est = alternating_maximize(psi, cfg.restarts, 500, cfg.tol, cfg.seed);
        measured_overlap = est.best_overlap;
        measured_e0 = est.e0_upper;
    }

    ojson rows = ojson::array();
    std::string csv = "bound,value,measured,slack\n";
    auto push = [&](const std::string& name, double value, std::optional<double> measured,
                    const std::string& direction, ojson extra = ojson::object()) {
        ojson r;
        r["bound"] = name;
        r["inputs"] = {{"n", n}, {"k", k}, {"d", d}, {"h", h}, {"s", s}};
        r["value"] = jnum(value);
        r["measured"] = measured ? jnum(*measured) : ojson(nullptr);
        r["direction"] = direction;
        std::optional<double> slack;
        if (measured) {
            slack = direction == "upper" ? value - *measured : *measured - value;
            r["satisfied"] = *slack >= -1e-9;
        }
        r["slack"] = slack ? jnum(*slack) : ojson(nullptr);
        for (auto& [key, val] : extra.items()) r[key] = val;
        rows.push_back(std::move(r));
        char buf[160];
        std::snprintf(buf, sizeof buf, "%s,%.12g,%s,%s\n", name.c_str(), round_sig(value),
                      measured ? std::to_string(round_sig(*measured)).c_str() : "",
                      slack ? std::to_string(round_sig(*slack)).c_str() : "");
        csv += buf;
    };

    const bool stab = lc && lc->is_stabilizer();
    if (stab) {
        push("stabilizer_gem_floor", stabilizer_gem_lower_bound(d), measured_e0, "lower");
        push("stabilizer_clifford_gem_floor", stabilizer_clifford_gem_lower_bound(d, h),
             std::nullopt, "lower");
        push("stabilizer_overlap_cap", std::exp2(1.0 - d), measured_overlap, "upper");
    }
    if (d >= 2) {
        push("rate_gem_floor", rate_gem_lower_bound(n, k, d, h), measured_e0, "lower");
        push("rate_overlap_cap", rate_overlap_upper_bound(n, k, d), measured_overlap, "upper");
    }
    if (s > 0) {
        LdpcConstants c = ldpc_constants(s);
        auto lb = ldpc_gem_lower_bound(d, s, h);
        ojson extra;
        extra["hypothesis_met"] = lb.hypothesis_met;
        extra["log_value"] = jnum(lb.log_value);
        extra["note"] = "proof-derived surrogate constant";
        push("ldpc_gem_floor", lb.value, measured_e0, "lower", extra);
        ojson cj;
        cj["bound"] = "ldpc_constants";
        cj["inputs"] = {{"s", s}};
        cj["K"] = c.big_k;
        cj["log_x0"] = jnum(c.log_x0);
        cj["log_c"] = jnum(c.log_c);
        cj["log_g"] = jnum(c.log_g);
        cj["x0"] = jnum(c.x0);
        cj["c"] = jnum(c.c);
        cj["g"] = jnum(c.g);
        rows.push_back(std::move(cj));
    }
    ojson j;
    j["command"] = "bounds";
    if (!spec.empty()) j["code"] = spec;
    j["reports"] = std::move(rows);
    emit(cfg, j, csv);
    return 0;
}

int cmd_concat(const std::string& schedule_csv, std::int64_t m, int ell, const RunConfig& cfg) {
    ConcatSchedule sched;
    bool m_schedule = false;
    if (!schedule_csv.empty()) {
        std::vector<std::int64_t> sizes;
        std::string token;
        std::istringstream in(schedule_csv);
        while (std::getline(in, token, ','))
            sizes.push_back(std::stoll(token));
        sched = schedule_from_sizes(sizes);
    } else if (m >= 2 && ell >= 1) {
        sched = concat_schedule(m, ell);
        m_schedule = true;
    } else {
        throw domain_error("concat: give --schedule n1,n2,... or --M and --l");
    }
    ConcatOverlap f = concat_overlap(sched);
    ojson j;
    j["command"] = "concat";
    ojson lv = ojson::array();
    for (const auto& l : sched.levels) {
        ojson e;
        e["log2_n"] = jnum(l.log_n / std::log(2.0));
        e["n"] = l.exact ? ojson(*l.exact) : ojson(nullptr);
        lv.push_back(std::move(e));
    }
    j["levels"] = std::move(lv);
    j["F"] = jnum(f.f);
    j["log2_F"] = jnum(f.log_f / std::log(2.0));
    j["e0_upper"] = jnum(-f.log_f / std::log(2.0));
    j["log2_qubits"] = jnum(concat_log2_qubits(sched));
    auto nexact = concat_exact_qubits(sched);
    j["qubits"] = nexact ? ojson(*nexact) : ojson(nullptr);
    j["distance"] = std::int64_t(1) << sched.ell();
    bool ok = true;
    if (m_schedule) {
        const double floor_log = double(sched.ell()) * std::log1p(-1.0 / double(m));
        j["floor"] = jnum(std::exp(floor_log));
        ok = f.log_f >= floor_log - 1e-12;
        j["floor_satisfied"] = ok;
    }
    if (nexact && *nexact <= cfg.max_qubits && sched.ell() == 2) {
        GeneralCode cc = concat_explicit(int(*sched.levels[0].exact), int(*sched.levels[1].exact),
                                         cfg.max_qubits);
        const double measured = std::norm(cc.basis[0].a[0]);
        ojson ex;
        ex["measured_overlap"] = jnum(measured);
        ex["deviation"] = jnum(std::abs(measured - f.f));
        ex["pass"] = std::abs(measured - f.f) <= 1e-10;
        ok = ok && std::abs(measured - f.f) <= 1e-10;
        j["explicit_check"] = std::move(ex);
    }
    emit(cfg, j);
    return ok ? 0 : 1;
}

int cmd_verify(const std::string& suite, VerifyParams params, const RunConfig& cfg) {
    params.seed = cfg.seed;
    params.max_qubits = cfg.max_qubits;
    VerifyReport rep = run_verify(suite, params);
    ojson j = verify_to_json(rep);
    ojson wrapped;
    wrapped["command"] = "verify";
    wrapped["suite"] = suite;
    wrapped["params"] = {{"seed", params.seed},
                         {"samples", params.samples},
                         {"restarts", params.restarts},
                         {"trials", params.trials},
                         {"perms", params.perms},
                         {"max_qubits", params.max_qubits}};
    for (auto& [key, val] : j.items()) wrapped[key] = val;
    emit(cfg, wrapped, verify_to_csv(rep));
    return rep.pass ? 0 : 1;
}

int cmd_export(const std::string& spec, const std::string& kind, const RunConfig& cfg) {
    LoadedCode lc = load_code(spec, cfg);
    if (cfg.out == "-" || cfg.out.empty())
        throw domain_error("export: --out <file> is required");
    if (kind == "stab") {
        if (!lc.is_stabilizer()) throw domain_error("export: code has no stabilizer form");
        write_file(cfg.out, stabilizer_text(lc.stab()));
    } else if (kind == "json") {
        GeneralCode g = as_general(lc, cfg);
        write_file(cfg.out, general_code_to_json(g).dump(2) + "\n");
    } else {
        throw domain_error("export: format must be stab or json");
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"quantum code distance / geometric-entanglement toolkit"};
    app.require_subcommand(1);
    app.fallthrough();

    RunConfig cfg;
    app.add_option("--seed", cfg.seed, "RNG seed (default 0xC0DE)");
    app.add_option("--restarts", cfg.restarts, "estimator restarts");
    app.add_option("--tol", cfg.tol, "estimator convergence tolerance");
    app.add_option("--max-qubits", cfg.max_qubits, "dense statevector cap (<= 24)")
        ->check(CLI::Range(1, kHardMaxQubits));
    app.add_option("--out", cfg.out, "output path ('-' = stdout)");
    app.add_option("--format", cfg.format, "json | csv | pretty")
        ->check(CLI::IsMember({"json", "csv", "pretty"}));

    std::string spec, state = "zero", suite = "all", schedule, export_kind = "stab";
    int wmax = 0, kl_d = 2, max_sweeps = 500;
    int bn = 0, bk = 0, bd = 0, bh = 0, bs = 0;
    bool measure = false;
    std::int64_t cm = 0;
    int cl = 0;
    double budget = kDefaultEnumBudget;
    VerifyParams vparams;

    auto* sub_distance = app.add_subcommand("distance", "exact code distance or a certified bound");
    sub_distance->add_option("code", spec, "zoo name or file")->required();
    sub_distance->add_option("--wmax", wmax, "search cutoff (default n)");
    sub_distance->add_option("--budget", budget, "enumeration budget");

    auto* sub_gem = app.add_subcommand("gem", "alternating product-state overlap maximization");
    sub_gem->add_option("code", spec, "zoo name or file")->required();
    sub_gem->add_option("--state", state, "zero|one|plus|minus|random");
    sub_gem->add_option("--max-sweeps", max_sweeps, "sweep cap per restart");

    auto* sub_kl = app.add_subcommand("kl-check", "Knill-Laflamme scan at a given distance");
    sub_kl->add_option("code", spec, "zoo name or file")->required();
    sub_kl->add_option("--d", kl_d, "distance to verify")->required();

    auto* sub_bounds = app.add_subcommand("bounds", "evaluate bound formulas");
    sub_bounds->add_option("code", spec, "zoo name or file (optional)");
    sub_bounds->add_option("--n", bn);
    sub_bounds->add_option("--k", bk);
    sub_bounds->add_option("--d", bd);
    sub_bounds->add_option("--depth", bh, "circuit depth h");
    sub_bounds->add_option("--s", bs, "check sparsity");
    sub_bounds->add_flag("--measure", measure, "also run the estimator");
    sub_bounds->add_option("--state", state, "state for --measure");

    auto* sub_concat = app.add_subcommand("concat", "concatenated-code overlap recursion");
    sub_concat->add_option("--schedule", schedule, "comma list n1,n2,...");
    sub_concat->add_option("--M", cm, "doubling schedule parameter");
    sub_concat->add_option("--l", cl, "levels");

    auto* sub_verify = app.add_subcommand("verify", "run a verification suite");
    sub_verify->add_option("suite", suite, "stabilizer|ldpc|rate|zoo|gem|all");
    sub_verify->add_option("--samples", vparams.samples, "random states per code");
    sub_verify->add_option("--trials", vparams.trials, "random circuits per depth");
    sub_verify->add_option("--perms", vparams.perms, "permutation samples");
    sub_verify->add_option("--verify-restarts", vparams.restarts, "estimator restarts per sample");

    auto* sub_export = app.add_subcommand("export", "write a code to a file");
    sub_export->add_option("code", spec, "zoo name or file")->required();
    sub_export->add_option("--as", export_kind, "stab | json");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? 0 : 2;
    }

    try {
        if (sub_distance->parsed()) return cmd_distance(spec, wmax, budget, cfg);
        if (sub_gem->parsed()) return cmd_gem(spec, state, max_sweeps, cfg);
        if (sub_kl->parsed()) return cmd_kl_check(spec, kl_d, cfg);
        if (sub_bounds->parsed()) return cmd_bounds(spec, bn, bk, bd, bh, bs, measure, state, cfg);
        if (sub_concat->parsed()) return cmd_concat(schedule, cm, cl, cfg);
        if (sub_verify->parsed()) return cmd_verify(suite, vparams, cfg);
        if (sub_export->parsed()) return cmd_export(spec, export_kind, cfg);
    } catch (const parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const resource_error& e) {
        std::cerr << "resource error: " << e.what() << "\n";
        return 3;
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
