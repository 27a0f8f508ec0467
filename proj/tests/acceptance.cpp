// End-to-end acceptance suite: one pass/fail line per criterion, nonzero exit
// status when anything fails. Tolerances are pinned in code next to each
// check.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "qgem/bounds.hpp"
#include "qgem/gem.hpp"
#include "qgem/io.hpp"
#include "qgem/reference.hpp"
#include "qgem/zoo.hpp"

using namespace qgem;

namespace {

struct Outcome {
    bool pass = true;
    std::ostringstream detail;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            detail << (detail.str().empty() ? "" : "; ") << what;
        }
    }
};

bool close(double a, double b, double tol) { return std::abs(a - b) <= tol; }

// ---- criterion 1: Shor tightness -----------------------------------------

Outcome criterion_shor_tightness() {
    Outcome out;
    for (int d : {2, 3}) {
        auto code = shor_code(d);
        auto dist = distance(code);
        out.require(dist.exact && *dist.exact == d,
                    "shor:" + std::to_string(d) + " brute-force distance != d");
        GeneralCode basis = logical_basis(code);
        Rng rng(1);
        StateVector plus = state_by_selector(basis, "plus", rng);
        const double cap = std::exp2(1.0 - d);
        out.require(close(std::norm(plus.a[0]), cap, 1e-10),
                    "shor:" + std::to_string(d) + " plus overlap != 2^(1-d)");
        GemEstimate est = alternating_maximize(plus, 32, 500, 1e-12, kDefaultSeed);
        out.require(close(est.best_overlap, cap, 1e-9),
                    "shor:" + std::to_string(d) + " estimator missed the cap");
    }
    out.detail << (out.pass ? "distance, overlap and estimate all meet 2^(1-d)" : "");
    return out;
}

// ---- criterion 2: identity-support subsets and the group-restriction law --

Outcome criterion_subset_eta() {
    Outcome out;
    Rng root(2);
    for (const char* spec : {"shor:3", "five"}) {
        ZooEntry e = make_zoo_code(spec);
        const auto& code = e.stab();
        const int d = *e.known_distance;
        auto subset = identity_support_subset(code, d);
        out.require(int(subset.qubits.size()) == d, std::string(spec) + " |A| != d");
        out.require(restricted_stabilizers(code, subset.qubits).empty(),
                    std::string(spec) + " S(A) != {I}");

        GeneralCode basis = logical_basis(code);
        Rng rng = root.derive(std::string(spec) == "five");
        double max_dev = 0;
        for (int t = 0; t < 100; ++t) {
            std::vector<int> all(code.n);
            for (int i = 0; i < code.n; ++i) all[i] = i;
            rng.shuffle(all);
            all.resize(rng.below(std::uint64_t(code.n) + 1));
            std::sort(all.begin(), all.end());
            auto eta = eta_from_group(code, all);
            Eigen::MatrixXcd avg = Eigen::MatrixXcd::Zero(eta.m.rows(), eta.m.cols());
            for (const auto& b : basis.basis) avg += reduced_density_matrix(b, all).m;
            avg /= double(basis.basis.size());
            max_dev = std::max(max_dev, (eta.m - avg).cwiseAbs().maxCoeff());
        }
        out.require(max_dev <= 1e-10, std::string(spec) + " eta deviates by " +
                                          std::to_string(max_dev));
    }
    out.detail << (out.pass ? "|A| = d with trivial restriction; eta matches the partial trace"
                            : "");
    return out;
}

// ---- criterion 3: shallow Clifford conjugation -----------------------------

Outcome criterion_clifford() {
    Outcome out;
    auto shor = shor_code(3);
    for (int h : {1, 2}) {
        auto rep = clifford_gem_experiment(shor, h, 200, 0xC11F + h);
        const int floor_d = (3 + (1 << h) - 1) / (1 << h);
        out.require(rep.min_image_distance >= floor_d,
                    "depth-" + std::to_string(h) + " image distance below ceil(3/2^h)");
        for (const auto& t : rep.rows) {
            out.require(t.overlap_plus <= t.overlap_cap + 1e-9 &&
                            t.overlap_random <= t.overlap_cap + 1e-9,
                        "depth-" + std::to_string(h) + " overlap above 2^(1-d')");
            if (!out.pass) break;
        }
    }
    out.detail << (out.pass ? "400 random circuits: distances and overlaps inside the caps" : "");
    return out;
}

// ---- criterion 4: permutation-invariant family -----------------------------

Outcome criterion_pi() {
    Outcome out;
    for (int n = 4; n <= 10; ++n) {
        const std::string tag = "pi:" + std::to_string(n);
        GeneralCode pi = pi_code(n);
        out.require(kl_verify_distance(pi, 2).pass, tag + " KL fails at d=2");
        auto fail = kl_verify_distance(pi, 3);
        out.require(!fail.pass && fail.witness && fail.witness->pauli.weight() == 2,
                    tag + " missing weight-2 witness at d=3");
        out.require(close(std::norm(pi.basis[0].a[0]), 1.0 - 2.0 / n, 1e-12),
                    tag + " zero-state overlap != 1-2/n");
        for (int i = 0; i < 2; ++i) {
            for (int q = 0; q < n; ++q) {
                StateVector zs = apply_pauli(pi.basis[i], PauliOperator::single(n, q, 'Z'));
                out.require(close(inner(pi.basis[i], zs).real(), 1.0 - 4.0 / n, 1e-9),
                            tag + " Z expectation != 1-4/n");
            }
        }
        const double r2cap =
            -std::log2((1.0 - 2.0 / n) * (1.0 - 2.0 / n) + (2.0 / n) * (2.0 / n));
        for (std::uint64_t cut = 1; cut + 1 < (std::uint64_t(1) << n); ++cut) {
            if (std::popcount(cut) > n / 2) continue;
            std::vector<int> a;
            for (int q = 0; q < n; ++q)
                if ((cut >> q) & 1) a.push_back(q);
            const double r2 = renyi_entropy(reduced_density_matrix(pi.basis[0], a), 2.0);
            if (r2 > r2cap + 1e-9) {
                out.require(false, tag + " Renyi-2 above the two-point cap");
                break;
            }
        }
    }
    out.detail << (out.pass ? "n=4..10: KL=2, overlaps, Z values and Renyi-2 cuts all match"
                            : "");
    return out;
}

// ---- criterion 5: concatenation -------------------------------------------

Outcome criterion_concat() {
    Outcome out;
    GeneralCode cc = concat_explicit(4, 4);
    const double f = concat_overlap(schedule_from_sizes({4, 4})).f;
    out.require(close(std::norm(cc.basis[0].a[0]), 0.03125, 1e-10), "explicit overlap != 1/32");
    out.require(close(f, 0.03125, 1e-12), "recursion != 1/32");
    out.require(close(std::norm(cc.basis[0].a[0]), f, 1e-10), "explicit != recursion");
    out.require(kl_verify_distance(cc, 4).pass, "KL fails at d=4 on 16 qubits");
    for (std::int64_t m = 2; m <= 64 && out.pass; ++m) {
        for (int ell = 1; ell <= 8; ++ell) {
            const double logf = concat_overlap(concat_schedule(m, ell)).log_f;
            if (logf < double(ell) * std::log1p(-1.0 / double(m)) - 1e-12) {
                out.require(false, "F floor violated at M=" + std::to_string(m) +
                                       " l=" + std::to_string(ell));
                break;
            }
        }
    }
    out.detail << (out.pass ? "explicit 16-qubit overlap matches the recursion; KL >= 4; "
                              "F >= (1-1/M)^l on the full grid"
                            : "");
    return out;
}

// ---- criterion 6: Dicke-state code -----------------------------------------

Outcome criterion_dicke() {
    Outcome out;
    GeneralCode dc = dicke_pi_code(3);
    const double closed = dicke_plus_overlap(3);
    out.require(close(closed, (2.0 + 2.0 * std::sqrt(252.0)) / 64.0, 1e-13),
                "closed form != (2+2*sqrt(252))/64");
    StateVector plus_all(9);
    for (auto& a : plus_all.a) a = std::exp2(-4.5);
    out.require(close(inner(plus_all, dc.basis[0]).real(), closed, 1e-10),
                "9-qubit contraction != closed form");
    auto kd = kl_distance(dc, 4);
    out.require(kd.verified == 3 && kd.exact, "KL distance != 3");
    out.detail << (out.pass ? "closed-form overlap matches the contraction; KL distance = 3"
                            : "");
    return out;
}

// ---- criterion 7: identity and invariance sweep -----------------------------

Outcome criterion_invariance() {
    Outcome out;
    Rng root(7);
    int idx = 0;
    for (const auto& spec : zoo_default_specs()) {
        ZooEntry e = make_zoo_code(spec);
        GeneralCode logical = zoo_logical_code(e);
        const int d = *e.known_distance;
        Rng rng = root.derive(idx++);
        std::vector<StateVector> states;
        for (int t = 0; t < 100; ++t) states.push_back(random_logical_state(logical, rng));

        double bonf = 0, si_spread = 0, e_lo = 1e300, e_hi = -1e300;
        std::size_t min_count = SIZE_MAX;
        double min_entropy = 1e300;
        std::vector<double> si_lo(std::size_t(d) + 1, 1e300), si_hi(std::size_t(d) + 1, -1e300);
        for (const auto& st : states) {
            auto wd = weight_distribution(st);
            for (int dd = 1; dd <= 5; ++dd)
                bonf = std::max(bonf, bonferroni_check(wd, dd).max_deviation);
            for (int i = 1; i < d; ++i) {
                const double si = binomial_moment(wd, i);
                si_lo[i] = std::min(si_lo[i], si);
                si_hi[i] = std::max(si_hi[i], si);
            }
            const double ew = expected_weight(wd);
            e_lo = std::min(e_lo, ew);
            e_hi = std::max(e_hi, ew);
            min_count = std::min(min_count, nonzero_amplitude_count(st));
            min_entropy = std::min(min_entropy, max_single_qubit_entropy(st).second);
        }
        for (int i = 1; i < d; ++i) si_spread = std::max(si_spread, si_hi[i] - si_lo[i]);
        out.require(bonf <= 1e-9, spec + " Bonferroni deviation " + std::to_string(bonf));
        out.require(si_spread <= 1e-9, spec + " S_i spread " + std::to_string(si_spread));
        if (d >= 2)
            out.require(e_hi - e_lo <= 1e-9, spec + " E|x| spread");
        out.require(min_count >= (std::size_t(1) << (d - 1)), spec + " term count below 2^(d-1)");
        if (d >= 2)
            out.require(min_entropy >= double(e.k) / e.n - 1e-9,
                        spec + " max-qubit entropy below k/n");
    }
    // Shor-9 plus state saturates the term-count bound
    GeneralCode shor = zoo_logical_code(make_zoo_code("shor:3"));
    Rng rng(70);
    out.require(nonzero_amplitude_count(state_by_selector(shor, "plus", rng)) == 4,
                "shor:3 plus state term count != 4");
    out.detail << (out.pass ? "identities, invariances, term counts and entropy floors hold "
                              "on 100 states per code"
                            : "");
    return out;
}

// ---- criterion 8: bound satisfaction sweep ----------------------------------

Outcome criterion_bounds() {
    Outcome out;
    Rng root(8);
    int idx = 0;
    for (const auto& spec : zoo_default_specs()) {
        ZooEntry e = make_zoo_code(spec);
        GeneralCode logical = zoo_logical_code(e);
        const int d = *e.known_distance;
        Rng rng = root.derive(idx++);
        std::vector<StateVector> states;
        for (int t = 0; t < 100; ++t) states.push_back(random_logical_state(logical, rng));

        const double rate_cap = d >= 2 ? rate_overlap_upper_bound(e.n, e.k, d) : 1.0;
        const double gem_floor = d >= 2 ? rate_gem_lower_bound(e.n, e.k, d, 0) : 0.0;
        const double stab_cap = e.is_stabilizer() ? std::exp2(1.0 - d) : 2.0;
        double max_overlap = 0, min_e0 = 1e300;
#pragma omp parallel for schedule(dynamic) reduction(max : max_overlap) reduction(min : min_e0)
        for (long long i = 0; i < (long long)states.size(); ++i) {
            GemEstimate est =
                alternating_maximize(states[std::size_t(i)], 8, 300, 1e-12, 800 + i);
            max_overlap = std::max(max_overlap, est.best_overlap);
            min_e0 = std::min(min_e0, est.e0_upper);
        }
        out.require(max_overlap <= rate_cap + 1e-9, spec + " overlap above the rate cap");
        if (e.is_stabilizer())
            out.require(max_overlap <= stab_cap + 1e-9, spec + " overlap above 2^(1-d)");
        out.require(gem_floor <= min_e0 + 1e-9, spec + " rate floor contradicts the estimate");
    }
    out.detail << (out.pass ? "100-state estimator sweeps stay inside every cap" : "");
    return out;
}

// ---- criterion 9: peaked-distribution conclusions ---------------------------

Outcome criterion_weight_moments() {
    Outcome out;
    Rng root(9);
    int idx = 0;
    for (const char* spec : {"shor:2", "shor:3", "five", "repz:5"}) {
        ZooEntry e = make_zoo_code(spec);
        GeneralCode logical = zoo_logical_code(e);
        Rng rng = root.derive(idx++);
        std::vector<StateVector> states;
        for (int t = 0; t < 25; ++t) states.push_back(random_logical_state(logical, rng));
        for (const char* sel : {"zero", "one", "plus", "minus"})
            states.push_back(state_by_selector(logical, sel, rng));
        for (const auto& st : states) {
            auto rep = weight_moment_check(st, e.stab(), e.known_distance);
            out.require(rep.ii_pass, std::string(spec) + " moment bound (ii) violated");
            out.require(rep.iii_pass, std::string(spec) + " tail bound (iii) violated");
            if (!out.pass) break;
        }
    }
    GeneralCode shor = zoo_logical_code(make_zoo_code("shor:3"));
    auto avoid = find_low_weight_avoiding_state(shor, 0);
    out.require(avoid && std::abs(avoid->a[0]) < 1e-12,
                "shor:3 avoiding state has weight-0 support");
    out.detail << (out.pass ? "moment and tail conclusions hold; avoiding state has zero "
                              "overlap with 0^9"
                            : "");
    return out;
}

// ---- criterion 10: CLI determinism ------------------------------------------

Outcome criterion_determinism() {
    Outcome out;
#ifdef QGEM_CLI_PATH
    const std::string cli = QGEM_CLI_PATH;
    const std::string f1 = "acceptance_verify_a.json";
    const std::string f2 = "acceptance_verify_b.json";
    for (const auto& [file, cmd] :
         {std::pair{f1, cli + " verify all --seed 7 --out " + f1},
          std::pair{f2, cli + " verify all --seed 7 --out " + f2}}) {
        const int rc = std::system(cmd.c_str());
        out.require(rc == 0, "verify all exited with " + std::to_string(rc));
        (void)file;
    }
    if (out.pass) {
        const std::string a = read_file(f1);
        const std::string b = read_file(f2);
        out.require(!a.empty() && a == b, "verify outputs differ between runs");
        out.detail << (out.pass ? "two runs of 'verify all --seed 7' are byte-identical ("
                                      + std::to_string(a.size()) + " bytes)"
                                : "");
    }
    std::remove(f1.c_str());
    std::remove(f2.c_str());
#else
    out.require(false, "CLI path not configured");
#endif
    return out;
}

}  // namespace

int main() {
    using Entry = std::pair<const char*, std::function<Outcome()>>;
    const std::vector<Entry> criteria = {
        {"shor tightness (distance, overlap, estimator)", criterion_shor_tightness},
        {"identity-support subsets and group-restriction reduced states", criterion_subset_eta},
        {"shallow Clifford conjugation caps", criterion_clifford},
        {"permutation-invariant code family", criterion_pi},
        {"concatenated codes (explicit and analytic)", criterion_concat},
        {"Dicke-state code", criterion_dicke},
        {"identity and invariance sweep", criterion_invariance},
        {"bound-satisfaction sweep", criterion_bounds},
        {"peaked-distribution conclusions and avoiding state", criterion_weight_moments},
        {"CLI determinism", criterion_determinism},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome out;
        try {
            out = criteria[i].second();
        } catch (const std::exception& e) {
            out.pass = false;
            out.detail << "exception: " << e.what();
        }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::printf("[%s] criterion %02zu (%6.1fs) %s — %s\n", out.pass ? "PASS" : "FAIL",
                    i + 1, secs, criteria[i].first, out.detail.str().c_str());
        std::fflush(stdout);
        if (!out.pass) ++failures;
    }
    std::printf("%zu/%zu criteria passed\n", criteria.size() - failures, criteria.size());
    return failures;
}
