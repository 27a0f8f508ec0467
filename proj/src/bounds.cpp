#include "qgem/bounds.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <numbers>

#include "qgem/stabilizer.hpp"

namespace qgem {

double binary_entropy(double x) {
    if (x < 0.0 || x > 1.0) throw domain_error("binary_entropy: x in [0,1]");
    double h = 0;
    if (x > 0) h -= x * std::log2(x);
    if (x < 1) h -= (1 - x) * std::log2(1 - x);
    return h;
}

double inverse_binary_entropy(double y) {
    if (y < 0.0 || y > 1.0) throw domain_error("inverse_binary_entropy: y in [0,1]");
    double lo = 0.0, hi = 0.5;
    for (int it = 0; it < 100; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (binary_entropy(mid) < y)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

double stabilizer_gem_lower_bound(int d) {
    if (d < 1) throw domain_error("bound needs d >= 1");
    return double(d) - 1.0;
}

double stabilizer_clifford_gem_lower_bound(int d, int h) {
    if (d < 1 || h < 0) throw domain_error("bound needs d >= 1, h >= 0");
    return double(d) / std::exp2(double(h)) - 1.0;
}

double rate_gem_lower_bound(int n, int k, int d, int h) {
    if (k < 1 || k > n || d < 1 || h < 0) throw domain_error("rate bound: bad parameters");
    return (double(d) / std::exp2(double(h)) - 1.0) * inverse_binary_entropy(double(k) / n);
}

double rate_overlap_upper_bound(int n, int k, int d) {
    if (k < 1 || k > n || d < 2) throw domain_error("overlap bound: need 1 <= k <= n, d >= 2");
    double prod = 1;
    for (int i = 0; i <= d - 2; ++i) {
        const double ratio = double(k) / double(n - i);
        if (ratio > 1.0) throw domain_error("overlap bound: k/(n-i) > 1, d too large");
        prod *= 1.0 - inverse_binary_entropy(ratio);
    }
    return prod;
}

LdpcConstants ldpc_constants(int s) {
    if (s < 1) throw domain_error("ldpc_constants: s >= 1");
    LdpcConstants c;
    c.s = s;
    const std::int64_t s2 = std::int64_t(s) * s;
    c.big_k = s2 + s2 * s2;
    c.log_x0 = 1.0 + 1.25 * double(c.big_k + 1);
    // c = (5/4) x0 + 1; the +1 is invisible at these magnitudes but kept exact
    // via log1p for small s
    c.log_c = std::log(1.25) + c.log_x0;
    if (c.log_x0 < 700.0) c.log_c = std::log(1.25 * std::exp(c.log_x0) + 1.0);
    const double log_branch1 = -std::log(double(c.big_k + 1)) - c.log_c;
    const double branch2 = std::log(std::numbers::e - 1.0) / double(c.big_k + 2);
    const double log_branch2 = std::log(branch2);
    c.log_g = std::min(log_branch1, log_branch2) - std::log(std::numbers::ln2);
    c.x0 = std::exp(c.log_x0);
    c.c = std::exp(c.log_c);
    c.g = std::exp(c.log_g);
    return c;
}

LdpcBound ldpc_gem_lower_bound(int d, int s, int h) {
    if (d < 1 || s < 1 || h < 0) throw domain_error("ldpc bound: bad parameters");
    const double eff_s = double(s) * std::exp2(double(h));
    if (eff_s > 65536.0) throw domain_error("ldpc bound: s 2^h too large");
    LdpcConstants c = ldpc_constants(int(eff_s));
    LdpcBound b;
    b.log_value = std::log(double(d)) + c.log_g - double(h) * std::numbers::ln2;
    b.value = std::exp(b.log_value);
    const double s4 = std::pow(double(s), 4.0) * std::exp2(5.0 * h);
    b.hypothesis_met = double(d) > s4;
    return b;
}

BonferroniReport bonferroni_check(const WeightDistribution& wd, int d, double tol) {
    if (d < 1) throw domain_error("bonferroni_check: d >= 1");
    const int n = int(wd.p.size()) - 1;
    BonferroniReport rep;
    double pr_pos = 0;
    for (int t = 1; t <= n; ++t) pr_pos += wd.p[t];
    double alt = 0;
    for (int i = 1; i <= d - 1; ++i) {
        double si = 0;
        for (int t = 0; t <= n; ++t) si += wd.p[t] * binomial(t, i);
        alt += (i % 2 ? 1.0 : -1.0) * si;
    }
    const double sign = (d % 2 ? 1.0 : -1.0);  // (-1)^(d-1)
    rep.lhs = sign * (pr_pos - alt);
    for (int t = d; t <= n; ++t) rep.rhs_tail += binomial(t - 1, d - 1) * wd.p[t];
    rep.max_deviation = std::abs(rep.lhs - rep.rhs_tail);
    if (d >= 2) {
        for (int t = d; t <= n; ++t) {
            double tail = 0;
            for (int u = t; u <= n; ++u) tail += wd.p[u];
            rep.rhs_cumulative += binomial(t - 2, d - 2) * tail;
        }
        rep.max_deviation = std::max(rep.max_deviation, std::abs(rep.lhs - rep.rhs_cumulative));
    } else {
        rep.rhs_cumulative = rep.rhs_tail;
    }
    rep.pass = rep.max_deviation <= tol;
    return rep;
}

WeightMomentReport weight_moment_check(const StateVector& psi, const StabilizerCode& code,
                                       std::optional<int> known_distance) {
    WeightMomentReport rep;
    rep.s = sparsity(code);
    LdpcConstants lc = ldpc_constants(rep.s);
    rep.big_k = lc.big_k;
    if (known_distance)
        rep.hypothesis_met =
            double(*known_distance) > std::pow(double(rep.s), 4.0);

    WeightDistribution wd = weight_distribution(psi);
    rep.expected = expected_weight(wd);
    rep.overlap2 = std::norm(psi.a[0]);
    if (rep.overlap2 <= 0) {
        rep.bound_ii = std::numeric_limits<double>::infinity();
        rep.ii_pass = true;  // vacuous
    } else {
        rep.bound_ii = -double(rep.big_k + 1) * std::log(rep.overlap2);
        rep.ii_pass = rep.expected <= rep.bound_ii + 1e-9;
    }

    // part (iii): applicable t satisfy t >= c(s) E(|x|)
    const int n = psi.n;
    double log_thresh = -std::numeric_limits<double>::infinity();
    if (rep.expected > 0) log_thresh = lc.log_c + std::log(rep.expected);
    if (log_thresh <= std::log(double(n))) {
        const double thresh = rep.expected > 0 ? std::exp(log_thresh) : 0.0;
        rep.iii_first_t = std::max(0, int(std::ceil(thresh - 1e-12)));
        for (int t = rep.iii_first_t; t <= n; ++t) {
            double tail = 0;
            for (std::size_t u = std::size_t(t); u < wd.p.size(); ++u) tail += wd.p[u];
            const double cap = std::exp(rep.expected - t);
            rep.iii_max_excess = std::max(rep.iii_max_excess, tail - cap);
        }
        rep.iii_pass = rep.iii_max_excess <= 1e-9;
    }
    return rep;
}

int low_weight_counting(int n, int k) {
    if (n < 1 || k < 1 || k > n) throw domain_error("low_weight_counting: bad parameters");
    if (n > 62 || k > 62) throw domain_error("low_weight_counting: n, k <= 62");
    // exact Pascal triangle in 64-bit
    std::vector<std::vector<std::uint64_t>> c(n + 1, std::vector<std::uint64_t>(n + 1, 0));
    for (int i = 0; i <= n; ++i) {
        c[i][0] = 1;
        for (int j = 1; j <= i; ++j)
            c[i][j] = c[i - 1][j - 1] + (j <= i - 1 ? c[i - 1][j] : 0);
    }
    const std::uint64_t lim = std::uint64_t(1) << k;
    std::uint64_t sum = 0;
    int a = -1;
    for (int i = 0; i <= n; ++i) {
        sum += c[n][i];
        if (sum < lim)
            a = i;
        else
            break;
    }
    if (a < 0) throw internal_error("low_weight_counting: no valid a (k < 1?)");
    return a;
}

bool counting_chain_holds(int n, int a) {
    if (a < 1 || 2 * a > n) return false;
    double sum = 0;
    for (int i = 0; i <= a; ++i) sum += binomial(n, i);
    return sum < std::exp2(double(n) * binary_entropy(double(a) / n));
}

std::optional<StateVector> find_low_weight_avoiding_state(const GeneralCode& code, int a) {
    std::vector<std::uint64_t> rows;
    for (std::uint64_t b = 0; b < (std::uint64_t(1) << code.n); ++b)
        if (std::popcount(b) <= a) rows.push_back(b);
    const std::size_t nb = code.basis.size();
    Eigen::MatrixXcd m(Eigen::Index(rows.size()), Eigen::Index(nb));
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t j = 0; j < nb; ++j)
            m(Eigen::Index(r), Eigen::Index(j)) = code.basis[j].a[rows[r]];
    Eigen::FullPivLU<Eigen::MatrixXcd> lu(m);
    lu.setThreshold(1e-10);
    if (lu.dimensionOfKernel() < 1) return std::nullopt;
    Eigen::VectorXcd coef = lu.kernel().col(0);
    coef.normalize();
    StateVector out(code.n);
    for (std::size_t j = 0; j < nb; ++j)
        for (std::size_t i = 0; i < out.dim(); ++i)
            out.a[i] += coef(Eigen::Index(j)) * code.basis[j].a[i];
    return out;
}

WeightInvarianceReport expected_weight_invariance(const GeneralCode& code, int samples,
                                                  Rng& rng, double tol) {
    WeightInvarianceReport rep;
    if (!code.claimed_distance || *code.claimed_distance < 2) return rep;
    rep.applicable = true;
    double lo = std::numeric_limits<double>::infinity(), hi = -lo, sum = 0;
    for (int i = 0; i < samples; ++i) {
        StateVector psi = random_logical_state(code, rng);
        const double e = expected_weight(psi);
        lo = std::min(lo, e);
        hi = std::max(hi, e);
        sum += e;
    }
    rep.mean = sum / samples;
    rep.spread = hi - lo;
    rep.pass = rep.spread <= tol;
    return rep;
}

}  // namespace qgem
