#include "qgem/zoo.hpp"

#include <cmath>

namespace qgem {

StabilizerCode shor_code(int d) {
    if (d < 2) throw domain_error("shor_code: d >= 2");
    const int n = d * d;
    auto idx = [d](int row, int col) { return row * d + col; };  // 0-based
    std::vector<PauliOperator> gens;
    // column Z-chains
    for (int col = 0; col < d; ++col) {
        for (int row = 0; row + 1 < d; ++row) {
            PauliOperator g(n);
            g.z.set(idx(row, col));
            g.z.set(idx(row + 1, col));
            gens.push_back(std::move(g));
        }
    }
    // adjacent-column X walls
    for (int col = 0; col + 1 < d; ++col) {
        PauliOperator g(n);
        for (int row = 0; row < d; ++row) {
            g.x.set(idx(row, col));
            g.x.set(idx(row, col + 1));
        }
        gens.push_back(std::move(g));
    }
    StabilizerCode code = StabilizerCode::from_generators(n, std::move(gens));
    // The logical-Z slot is the column-X operator: its +1 eigenstate within
    // the code space is the GHZ-product basis state, which is what the
    // outcome-0 construction should return.
    LogicalPair lp;
    lp.z_bar = PauliOperator(n);
    for (int row = 0; row < d; ++row) lp.z_bar.x.set(idx(row, 0));
    lp.x_bar = PauliOperator(n);
    for (int col = 0; col < d; ++col) lp.x_bar.z.set(idx(0, col));
    code.logicals = {lp};
    validate(code);
    return code;
}

StabilizerCode five_qubit_code() {
    std::vector<PauliOperator> gens;
    for (const char* s : {"XZZXI", "IXZZX", "XIXZZ", "ZXIXZ"}) gens.push_back(parse_pauli(s));
    return StabilizerCode::from_generators(5, std::move(gens));
}

StabilizerCode repetition_zcheck_code(int n) {
    if (n < 2) throw domain_error("repetition_zcheck_code: n >= 2");
    std::vector<PauliOperator> gens;
    for (int i = 0; i + 1 < n; ++i) {
        PauliOperator g(n);
        g.z.set(i);
        g.z.set(i + 1);
        gens.push_back(std::move(g));
    }
    return StabilizerCode::from_generators(n, std::move(gens));
}

GeneralCode pi_code(int n, int max_qubits) {
    if (n < 4) throw domain_error("pi_code: n >= 4 required for distance 2");
    if (n > max_qubits) throw resource_error("pi_code: n exceeds the statevector budget");
    StateVector psi0(n);
    psi0.a[0] = std::sqrt(1.0 - 2.0 / n);
    psi0.a[(std::size_t(1) << n) - 1] = std::sqrt(2.0 / n);
    StateVector psi1(n);
    const double amp = std::sqrt(2.0 / (double(n) * (n - 1)));
    for (std::size_t b = 0; b < psi1.dim(); ++b)
        if (std::popcount(b) == 2) psi1.a[b] = amp;
    GeneralCode code = GeneralCode::from_basis(n, {std::move(psi0), std::move(psi1)}, 2);
    code.labels = {"zero", "one"};
    return code;
}

ConcatSchedule concat_schedule(std::int64_t m, int ell) {
    if (ell < 1) throw domain_error("concat_schedule: levels >= 1");
    if (2 * m < 4) throw domain_error("concat_schedule: need 2M >= 4 (block sizes >= 4)");
    ConcatSchedule s;
    const double log_2m = std::log(double(2 * m));
    for (int i = 1; i <= ell; ++i) {
        ConcatLevel lvl;
        const double e = std::exp2(double(ell - i));  // exponent 2^(l-i)
        lvl.log_n = e * log_2m;
        if (lvl.log_n < 62.0 * std::numbers::ln2) {
            std::int64_t v = 1;
            for (std::int64_t t = 0; t < std::int64_t(e); ++t) v *= 2 * m;
            lvl.exact = v;
        }
        s.levels.push_back(lvl);
    }
    return s;
}

ConcatSchedule schedule_from_sizes(const std::vector<std::int64_t>& sizes) {
    if (sizes.empty()) throw domain_error("schedule needs at least one level");
    ConcatSchedule s;
    for (auto n : sizes) {
        if (n < 4) throw domain_error("schedule: every block size must be >= 4");
        ConcatLevel lvl;
        lvl.log_n = std::log(double(n));
        lvl.exact = n;
        s.levels.push_back(lvl);
    }
    return s;
}

ConcatOverlap concat_overlap(const ConcatSchedule& s) {
    // log F_ell = sum_i prod_i * log1p(-2/n_i), prod_i = n_{i+1} ... n_ell.
    const int ell = s.ell();
    double log_f = 0;
    for (int i = 0; i < ell; ++i) {
        double log_prod = 0;
        for (int j = i + 1; j < ell; ++j) log_prod += s.levels[j].log_n;
        const double log_eps = std::numbers::ln2 - s.levels[i].log_n;  // ln(2/n_i)
        double term;
        if (log_eps < -700.0) {
            // 2/n_i underflows; log1p(-eps) ~ -eps to 300+ digits here
            term = -std::exp(log_prod + log_eps);
        } else {
            const double u = std::log1p(-std::exp(log_eps));  // < 0
            term = -std::exp(log_prod + std::log(-u));
        }
        log_f += term;
    }
    ConcatOverlap out;
    out.log_f = log_f;
    out.f = std::exp(log_f);
    return out;
}

double concat_log2_qubits(const ConcatSchedule& s) {
    double l = 0;
    for (const auto& lvl : s.levels) l += lvl.log_n;
    return l / std::numbers::ln2;
}

std::optional<std::int64_t> concat_exact_qubits(const ConcatSchedule& s) {
    if (concat_log2_qubits(s) > 62.0) return std::nullopt;
    std::int64_t n = 1;
    for (const auto& lvl : s.levels) {
        if (!lvl.exact) return std::nullopt;
        n *= *lvl.exact;
    }
    return n;
}

namespace {

StateVector kron_blocks(const std::vector<const StateVector*>& blocks) {
    // block j occupies bit range [j*nb, (j+1)*nb)
    int n = 0;
    for (auto* b : blocks) n += b->n;
    StateVector out(n);
#pragma omp parallel for schedule(static)
    for (long long ii = 0; ii < (long long)out.dim(); ++ii) {
        std::uint64_t rest = std::uint64_t(ii);
        cplx amp(1, 0);
        for (auto* b : blocks) {
            amp *= b->a[rest & ((std::uint64_t(1) << b->n) - 1)];
            rest >>= b->n;
        }
        out.a[std::size_t(ii)] = amp;
    }
    return out;
}

}  // namespace

GeneralCode concat_explicit(int n1, int n2, int max_qubits) {
    if (n1 < 4 || n2 < 4) throw domain_error("concat_explicit: block sizes >= 4");
    const int n = n1 * n2;
    if (n > max_qubits)
        throw resource_error("concat_explicit: " + std::to_string(n) +
                             " qubits exceeds the statevector budget");
    GeneralCode inner = pi_code(n1, max_qubits);

    // level-2 logical 0: sqrt(1-2/n2) |psi0^(1)>^n2 + sqrt(2/n2) |psi1^(1)>^n2
    std::vector<const StateVector*> all0(n2, &inner.basis[0]);
    std::vector<const StateVector*> all1(n2, &inner.basis[1]);
    StateVector t0 = kron_blocks(all0);
    StateVector t1 = kron_blocks(all1);
    StateVector psi0(n);
    const double a0 = std::sqrt(1.0 - 2.0 / n2), a1 = std::sqrt(2.0 / n2);
    for (std::size_t i = 0; i < psi0.dim(); ++i) psi0.a[i] = a0 * t0.a[i] + a1 * t1.a[i];

    // level-2 logical 1: uniform over the C(n2,2) placements of two psi1 blocks
    StateVector psi1(n);
    const double w = std::sqrt(2.0 / (double(n2) * (n2 - 1)));
    for (int p = 0; p < n2; ++p) {
        for (int q = p + 1; q < n2; ++q) {
            std::vector<const StateVector*> blocks(n2, &inner.basis[0]);
            blocks[p] = &inner.basis[1];
            blocks[q] = &inner.basis[1];
            StateVector term = kron_blocks(blocks);
            for (std::size_t i = 0; i < psi1.dim(); ++i) psi1.a[i] += w * term.a[i];
        }
    }
    GeneralCode code = GeneralCode::from_basis(n, {std::move(psi0), std::move(psi1)}, 4);
    code.labels = {"zero", "one"};
    return code;
}

StateVector dicke_state(int n, int m) {
    if (m < 0 || m > n) throw domain_error("dicke_state: 0 <= m <= n");
    StateVector v(n);
    const double amp = 1.0 / std::sqrt(binomial(n, m));
    for (std::size_t b = 0; b < v.dim(); ++b)
        if (std::popcount(b) == m) v.a[b] = amp;
    return v;
}

GeneralCode dicke_pi_code(int d, int max_qubits) {
    if (d < 3 || d % 2 == 0) throw domain_error("dicke_pi_code: d must be odd and >= 3");
    const int n = d * d;
    if (n > max_qubits) throw resource_error("dicke_pi_code: n exceeds the statevector budget");
    StateVector plus(n), minus(n);
    const double scale = std::exp2(-0.5 * d);
    for (int l = 0; l <= d; ++l) {
        const double c = scale * std::sqrt(binomial(d, l));
        StateVector dk = dicke_state(n, d * l);
        for (std::size_t i = 0; i < plus.dim(); ++i) {
            plus.a[i] += c * dk.a[i];
            minus.a[i] += (l % 2 ? -c : c) * dk.a[i];
        }
    }
    GeneralCode code = GeneralCode::from_basis(n, {std::move(plus), std::move(minus)}, d);
    code.labels = {"plus", "minus"};
    return code;
}

double dicke_plus_overlap(int d) {
    if (d < 3 || d % 2 == 0) throw domain_error("dicke_plus_overlap: d must be odd and >= 3");
    const int n = d * d;
    double sum = 0;
    for (int l = 0; l <= d; ++l) sum += std::sqrt(binomial(d, l) * binomial(n, d * l));
    return std::exp2(-0.5 * (d + n)) * sum;
}

namespace {

std::int64_t parse_int(const std::string& s, const std::string& what) {
    try {
        std::size_t used = 0;
        const long long v = std::stoll(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw parse_error("bad " + what + " in code spec: '" + s + "'");
    }
}

}  // namespace

ZooEntry make_zoo_code(const std::string& spec, int max_qubits) {
    ZooEntry e;
    e.name = spec;
    const auto colon = spec.find(':');
    const std::string head = spec.substr(0, colon);
    const std::string arg = colon == std::string::npos ? "" : spec.substr(colon + 1);
    if (head == "shor") {
        const int d = int(parse_int(arg, "d"));
        auto c = shor_code(d);
        e.n = c.n;
        e.k = c.k;
        e.known_distance = d;
        e.code = std::move(c);
    } else if (head == "five") {
        auto c = five_qubit_code();
        e.n = c.n;
        e.k = c.k;
        e.known_distance = 3;
        e.code = std::move(c);
    } else if (head == "repz") {
        const int n = int(parse_int(arg, "n"));
        auto c = repetition_zcheck_code(n);
        e.n = c.n;
        e.k = c.k;
        e.known_distance = 1;
        e.code = std::move(c);
    } else if (head == "pi") {
        const int n = int(parse_int(arg, "n"));
        auto c = pi_code(n, max_qubits);
        e.n = c.n;
        e.k = c.k;
        e.known_distance = 2;
        e.code = std::move(c);
    } else if (head == "dicke") {
        const int d = int(parse_int(arg, "d"));
        auto c = dicke_pi_code(d, max_qubits);
        e.n = c.n;
        e.k = c.k;
        e.known_distance = d;
        e.code = std::move(c);
    } else if (head == "concat") {
        const auto x = arg.find('x');
        if (x == std::string::npos) throw parse_error("concat spec is concat:<n1>x<n2>");
        const int n1 = int(parse_int(arg.substr(0, x), "n1"));
        const int n2 = int(parse_int(arg.substr(x + 1), "n2"));
        auto c = concat_explicit(n1, n2, max_qubits);
        e.n = c.n;
        e.k = c.k;
        e.known_distance = 4;
        e.code = std::move(c);
    } else {
        throw parse_error("unknown zoo code '" + spec + "'");
    }
    return e;
}

std::vector<std::string> zoo_default_specs() {
    return {"shor:2", "shor:3", "five", "repz:5", "pi:4",
            "pi:6",   "pi:8",   "pi:10", "dicke:3", "concat:4x4"};
}

GeneralCode zoo_logical_code(const ZooEntry& entry, int max_qubits) {
    if (entry.is_stabilizer()) {
        GeneralCode g = logical_basis(entry.stab(), max_qubits);
        g.claimed_distance = entry.known_distance;
        return g;
    }
    return entry.gen();
}

}  // namespace qgem
