#include "qgem/general_code.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

namespace qgem {

GeneralCode GeneralCode::from_basis(int n, std::vector<StateVector> basis,
                                    std::optional<int> claimed) {
    GeneralCode code;
    code.n = n;
    code.basis = std::move(basis);
    code.k = 0;
    while ((std::size_t(1) << code.k) < code.basis.size()) ++code.k;
    code.claimed_distance = claimed;
    validate(code);
    return code;
}

void validate(const GeneralCode& code, double tol) {
    if (code.basis.size() != (std::size_t(1) << code.k))
        throw invalid_code_error("basis size is not 2^k");
    for (const auto& b : code.basis)
        if (b.n != code.n) throw dimension_error("basis state size mismatch");
    for (std::size_t i = 0; i < code.basis.size(); ++i) {
        for (std::size_t j = i; j < code.basis.size(); ++j) {
            const cplx ip = inner(code.basis[i], code.basis[j]);
            const cplx want = i == j ? cplx(1, 0) : cplx(0, 0);
            if (std::abs(ip - want) > tol)
                throw invalid_code_error("basis is not orthonormal");
        }
    }
}

GeneralCode logical_basis(const StabilizerCode& code, int max_qubits) {
    auto lps = logical_operators(code);
    StateVector zero = stabilizer_logical_state(code, 0, max_qubits);
    std::vector<StateVector> basis;
    for (std::uint64_t b = 0; b < (std::uint64_t(1) << code.k); ++b) {
        StateVector v = zero;
        for (int i = 0; i < code.k; ++i)
            if ((b >> i) & 1) v = apply_pauli(v, lps[std::size_t(i)].x_bar);
        basis.push_back(std::move(v));
    }
    GeneralCode out = GeneralCode::from_basis(code.n, std::move(basis));
    return out;
}

StateVector random_logical_state(const GeneralCode& code, Rng& rng) {
    std::vector<cplx> c(code.basis.size());
    double nrm2 = 0;
    for (auto& ci : c) {
        ci = cplx(rng.gauss(), rng.gauss());
        nrm2 += std::norm(ci);
    }
    const double inv = 1.0 / std::sqrt(nrm2);
    StateVector v(code.n);
    for (std::size_t b = 0; b < code.basis.size(); ++b) {
        const cplx w = c[b] * inv;
        for (std::size_t i = 0; i < v.dim(); ++i) v.a[i] += w * code.basis[b].a[i];
    }
    return v;
}

StateVector state_by_selector(const GeneralCode& code, const std::string& selector, Rng& rng) {
    for (std::size_t i = 0; i < code.labels.size() && i < code.basis.size(); ++i)
        if (code.labels[i] == selector) return code.basis[i];
    if (selector == "zero" || selector == "0") return code.basis[0];
    if (selector == "one" || selector == "1") {
        if (code.basis.size() < 2) throw domain_error("code has a single basis state");
        return code.basis[1];
    }
    if (selector == "plus" || selector == "minus") {
        if (code.basis.size() < 2) throw domain_error("code has a single basis state");
        const double s = selector == "plus" ? 1.0 : -1.0;
        StateVector v(code.n);
        const double w = 1.0 / std::sqrt(2.0);
        for (std::size_t i = 0; i < v.dim(); ++i)
            v.a[i] = w * (code.basis[0].a[i] + s * code.basis[1].a[i]);
        return v;
    }
    if (selector == "random") return random_logical_state(code, rng);
    throw domain_error("unknown state selector '" + selector + "'");
}

namespace {

double pow3d(int w) {
    double r = 1;
    for (int i = 0; i < w; ++i) r *= 3;
    return r;
}

std::uint64_t pow3u(int w) {
    std::uint64_t r = 1;
    for (int i = 0; i < w; ++i) r *= 3;
    return r;
}

std::uint64_t binom_u(int n, int w) {
    if (w < 0 || w > n) return 0;
    double r = 1;
    for (int i = 0; i < w; ++i) r = r * double(n - i) / double(i + 1);
    return std::uint64_t(std::llround(r));
}

void unrank_combination(int n, int w, std::uint64_t r, std::vector<int>& out) {
    out.clear();
    int cur = 0;
    for (int slot = 0; slot < w; ++slot) {
        while (true) {
            const std::uint64_t block = binom_u(n - cur - 1, w - slot - 1);
            if (r < block) {
                out.push_back(cur);
                ++cur;
                break;
            }
            r -= block;
            ++cur;
        }
    }
}

bool next_combination(std::vector<int>& c, int n) {
    const int w = int(c.size());
    int i = w - 1;
    while (i >= 0 && c[i] == n - w + i) --i;
    if (i < 0) return false;
    ++c[i];
    for (int j = i + 1; j < w; ++j) c[j] = c[j - 1] + 1;
    return true;
}

struct ScanHit {
    std::uint64_t rank = ~0ull, assign = ~0ull;
    KlViolation v;
    bool better_than(const ScanHit& o) const {
        return rank < o.rank || (rank == o.rank && assign < o.assign);
    }
};

}  // namespace

KlReport kl_verify_distance(const GeneralCode& code, int d, double tol, double op_budget) {
    KlReport rep;
    rep.checked_up_to_weight = std::min(d - 1, code.n);
    const std::size_t nb = code.basis.size();
    const std::size_t dim = std::size_t(1) << code.n;
    static const cplx ipow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

    double spent = 0;
    for (int w = 1; w <= rep.checked_up_to_weight; ++w) {
        const double cls = [&] {
            double r = 1;
            for (int i = 0; i < w; ++i) r = r * double(code.n - i) / double(i + 1);
            return r * pow3d(w);
        }();
        spent += cls * double(dim);
        if (spent > op_budget)
            throw resource_error("kl_verify_distance: sweep budget exceeded at weight " +
                                 std::to_string(w));
        const std::uint64_t ncombs = binom_u(code.n, w);
        const std::uint64_t nassign = pow3u(w);
        const std::uint64_t chunk = 64;
        const std::uint64_t nblocks = (ncombs + chunk - 1) / chunk;

        ScanHit best;
        bool found = false;
#pragma omp parallel
        {
            ScanHit loc;
            bool loc_found = false;
            std::vector<int> qubits;
            std::vector<cplx> M(nb * nb);
#pragma omp for schedule(dynamic)
            for (long long blk = 0; blk < (long long)nblocks; ++blk) {
                const std::uint64_t lo = std::uint64_t(blk) * chunk;
                const std::uint64_t hi = std::min(lo + chunk, ncombs);
                unrank_combination(code.n, w, lo, qubits);
                for (std::uint64_t rank = lo; rank < hi; ++rank) {
                    for (std::uint64_t assign = 0; assign < nassign; ++assign) {
                        // letters: 0 = X, 1 = Z, 2 = Y on sorted qubit slots
                        std::uint64_t xm = 0, zm = 0, digits = assign;
                        for (int j = 0; j < w; ++j) {
                            const int letter = int(digits % 3);
                            digits /= 3;
                            const std::uint64_t bit = std::uint64_t(1) << qubits[j];
                            if (letter == 0 || letter == 2) xm |= bit;
                            if (letter == 1 || letter == 2) zm |= bit;
                        }
                        const cplx scale = ipow[std::popcount(xm & zm) & 3];
                        std::fill(M.begin(), M.end(), cplx(0, 0));
                        if (nb == 2) {
                            // unrolled k = 1 path, the common case
                            const cplx* b0 = code.basis[0].a.data();
                            const cplx* b1 = code.basis[1].a.data();
                            cplx m00(0, 0), m01(0, 0), m11(0, 0);
                            for (std::size_t b = 0; b < dim; ++b) {
                                const double zs = (std::popcount(zm & b) & 1) ? -1.0 : 1.0;
                                const std::size_t tgt = b ^ xm;
                                const cplx bra0 = std::conj(b0[tgt]) * zs;
                                const cplx bra1 = std::conj(b1[tgt]) * zs;
                                m00 += bra0 * b0[b];
                                m01 += bra0 * b1[b];
                                m11 += bra1 * b1[b];
                            }
                            M[0] = m00;
                            M[1] = m01;
                            M[3] = m11;
                        } else {
                            for (std::size_t b = 0; b < dim; ++b) {
                                const double zs = (std::popcount(zm & b) & 1) ? -1.0 : 1.0;
                                const std::size_t tgt = b ^ xm;
                                for (std::size_t i = 0; i < nb; ++i) {
                                    const cplx bra = std::conj(code.basis[i].a[tgt]) * zs;
                                    for (std::size_t j = i; j < nb; ++j)
                                        M[i * nb + j] += bra * code.basis[j].a[b];
                                }
                            }
                        }
                        for (auto& e : M) e *= scale;
                        // violation: off-diagonal nonzero or unequal diagonal
                        cplx bad_v, bad_e;
                        int bi = -1, bj = -1;
                        for (std::size_t i = 0; i < nb && bi < 0; ++i) {
                            for (std::size_t j = i; j < nb; ++j) {
                                const cplx want = (i == j) ? M[0] : cplx(0, 0);
                                if (std::abs(M[i * nb + j] - want) > tol) {
                                    bi = int(i);
                                    bj = int(j);
                                    bad_v = M[i * nb + j];
                                    bad_e = want;
                                    break;
                                }
                            }
                        }
                        if (bi >= 0) {
                            ScanHit h;
                            h.rank = rank;
                            h.assign = assign;
                            h.v.row = bi;
                            h.v.col = bj;
                            h.v.value = bad_v;
                            h.v.expected = bad_e;
                            PauliOperator e(code.n);
                            for (int q = 0; q < code.n; ++q) {
                                if ((xm >> q) & 1) e.x.set(q);
                                if ((zm >> q) & 1) e.z.set(q);
                            }
                            h.v.pauli = std::move(e);
                            if (!loc_found || h.better_than(loc)) {
                                loc = std::move(h);
                                loc_found = true;
                            }
                        }
                    }
                    if (rank + 1 < hi) next_combination(qubits, code.n);
                }
            }
#pragma omp critical
            {
                if (loc_found && (!found || loc.better_than(best))) {
                    best = std::move(loc);
                    found = true;
                }
            }
        }
        if (found) {
            rep.pass = false;
            rep.witness = best.v;
            return rep;
        }
    }
    rep.pass = true;
    return rep;
}

KlDistance kl_distance(const GeneralCode& code, int d_max, double tol, double op_budget) {
    KlDistance out;
    out.verified = 1;
    for (int d = 2; d <= d_max + 1; ++d) {
        KlReport rep;
        try {
            rep = kl_verify_distance(code, d, tol, op_budget);
        } catch (const resource_error&) {
            out.exact = false;
            return out;
        }
        if (!rep.pass) {
            out.exact = true;
            out.witness = rep.witness;
            return out;
        }
        out.verified = d;
    }
    out.exact = false;
    return out;
}

PostselectedCode postselect(const GeneralCode& code, int qubit, int outcome) {
    PostselectedCode out;
    std::vector<Postselected> parts;
    for (const auto& b : code.basis) parts.push_back(postselect(b, qubit, outcome));
    double c = parts[0].prob;
    for (const auto& p : parts) {
        if (std::abs(p.prob - c) > 1e-9)
            throw invalid_code_error("postselect: projection norm differs across the basis");
    }
    if (c < 1e-12) {
        out.status = PostselectStatus::Annihilated;
        return out;
    }
    out.shared_norm = c;
    GeneralCode next;
    next.n = code.n - 1;
    next.k = code.k;
    for (auto& p : parts) next.basis.push_back(std::move(p.state));
    if (code.claimed_distance) next.claimed_distance = std::max(1, *code.claimed_distance - 1);
    validate(next);
    out.code = std::move(next);
    return out;
}

}  // namespace qgem
