#include "qgem/stabilizer.hpp"

#include <algorithm>
#include <cmath>

#include "qgem/clifford.hpp"

namespace qgem {

namespace {

BitVec half_swapped(const PauliOperator& p) {
    // [z | x]; dotting this with another operator's [x | z] vector gives the
    // symplectic form.
    BitVec v(2 * std::size_t(p.n));
    for (int i = 0; i < p.n; ++i) {
        if (p.z.get(i)) v.set(i);
        if (p.x.get(i)) v.set(std::size_t(p.n) + i);
    }
    return v;
}

PauliOperator pauli_from_symplectic(int n, const BitVec& v) {
    PauliOperator p(n);
    for (int i = 0; i < n; ++i) {
        if (v.get(i)) p.x.set(i);
        if (v.get(std::size_t(n) + i)) p.z.set(i);
    }
    return p;
}

}  // namespace

StabilizerCode StabilizerCode::from_generators(int n, std::vector<PauliOperator> gens) {
    StabilizerCode code;
    code.n = n;
    code.generators = std::move(gens);
    code.k = n - int(code.generators.size());
    validate(code);
    return code;
}

void validate(const StabilizerCode& code) {
    const std::size_t m = code.generators.size();
    if (m > std::size_t(code.n)) throw invalid_code_error("more generators than qubits");
    for (const auto& g : code.generators)
        if (g.n != code.n) throw dimension_error("generator size mismatch");
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = a + 1; b < m; ++b)
            if (!commutes(code.generators[a], code.generators[b]))
                throw invalid_code_error("generators do not commute");
    Gf2Eliminator elim(2 * std::size_t(code.n));
    for (const auto& g : code.generators)
        if (!elim.insert(g.symplectic()))
            throw invalid_code_error("generators are dependent over GF(2)");
    if (code.k != code.n - int(m)) throw invalid_code_error("k does not match generator count");
    for (const auto& lp : code.logicals) {
        if (commutes(lp.x_bar, lp.z_bar))
            throw invalid_code_error("preset logical pair commutes");
        for (const auto& g : code.generators)
            if (!commutes(lp.x_bar, g) || !commutes(lp.z_bar, g))
                throw invalid_code_error("preset logical does not commute with generators");
    }
}

GroupMembership in_group(const StabilizerCode& code, const PauliOperator& p) {
    if (p.n != code.n) throw dimension_error("in_group: size mismatch");
    const std::size_t m = code.generators.size();
    Gf2Matrix cols(2 * std::size_t(code.n), m);
    for (std::size_t a = 0; a < m; ++a) {
        BitVec v = code.generators[a].symplectic();
        for (std::size_t r = 0; r < v.size(); ++r)
            if (v.get(r)) cols.set(r, a);
    }
    GroupMembership res;
    res.combination = BitVec(m);
    auto sol = cols.solve(p.symplectic());
    if (!sol) return res;
    res.in_span = true;
    res.combination = *sol;
    res.member = group_element(code, res.combination).sign == p.sign;
    return res;
}

PauliOperator group_element(const StabilizerCode& code, const BitVec& combination) {
    PauliOperator acc = PauliOperator::identity(code.n);
    for (std::size_t a = 0; a < code.generators.size(); ++a)
        if (combination.get(a)) acc = mul(acc, code.generators[a]);
    return acc;
}

std::vector<LogicalPair> logical_operators(const StabilizerCode& code) {
    if (!code.logicals.empty()) return code.logicals;
    const std::size_t m = code.generators.size();
    const std::size_t n2 = 2 * std::size_t(code.n);

    // Normalizer = kernel of the symplectic-form matrix against the group.
    Gf2Matrix form(m, n2);
    for (std::size_t a = 0; a < m; ++a) form.r[a] = half_swapped(code.generators[a]);
    std::vector<BitVec> normalizer = form.kernel();

    // Quotient out the generator span, keeping 2k independent candidates.
    Gf2Eliminator elim(n2);
    for (const auto& g : code.generators) elim.insert(g.symplectic());
    std::vector<BitVec> cand;
    for (const auto& v : normalizer) {
        BitVec red = elim.reduce(v);
        if (red.none()) continue;
        if (elim.insert(red)) cand.push_back(red);
    }
    if (cand.size() != 2 * std::size_t(code.k))
        throw internal_error("logical completion produced wrong rank");

    auto symp = [&](const BitVec& a, const BitVec& b) {
        bool s = false;
        for (int i = 0; i < code.n; ++i)
            s ^= (a.get(i) && b.get(std::size_t(code.n) + i)) ||
                 (a.get(std::size_t(code.n) + i) && b.get(i));
        return s;
    };

    // Symplectic Gram-Schmidt, first-match pairing for determinism.
    std::vector<LogicalPair> pairs;
    std::vector<BitVec> pool = std::move(cand);
    while (!pool.empty()) {
        BitVec u = pool.front();
        pool.erase(pool.begin());
        std::size_t mate = pool.size();
        for (std::size_t i = 0; i < pool.size(); ++i)
            if (symp(u, pool[i])) { mate = i; break; }
        if (mate == pool.size())
            throw internal_error("degenerate symplectic form on the logical quotient");
        BitVec w = pool[mate];
        pool.erase(pool.begin() + mate);
        for (auto& c : pool) {
            if (symp(c, w)) c ^= u;
            if (symp(c, u)) c ^= w;
        }
        pairs.push_back({pauli_from_symplectic(code.n, u), pauli_from_symplectic(code.n, w)});
    }
    return pairs;
}

// ---------------------------------------------------------------------------
// Distance search. Candidates of weight w are C(n,w) qubit subsets times 3^w
// non-identity letter assignments. An operator is an undetectable logical iff
// its generator syndrome vanishes and its syndrome against the logical pairs
// does not (i.e. it is in N(S) but carries a nontrivial logical part).
// ---------------------------------------------------------------------------

namespace {

struct SyndromeTables {
    std::size_t gen_words, log_words;
    // [qubit][letter-1] -> packed anticommutation bits
    std::vector<std::vector<std::uint64_t>> gen, log;
};

SyndromeTables build_tables(const StabilizerCode& code, const std::vector<LogicalPair>& lps) {
    const std::size_t m = code.generators.size();
    const std::size_t l = 2 * lps.size();
    SyndromeTables t;
    t.gen_words = (m + 63) / 64;
    t.log_words = (l + 63) / 64;
    t.gen.assign(std::size_t(code.n) * 3, std::vector<std::uint64_t>(t.gen_words, 0));
    t.log.assign(std::size_t(code.n) * 3, std::vector<std::uint64_t>(t.log_words, 0));
    static const char kinds[3] = {'X', 'Z', 'Y'};
    for (int q = 0; q < code.n; ++q) {
        for (int letter = 0; letter < 3; ++letter) {
            PauliOperator e = PauliOperator::single(code.n, q, kinds[letter]);
            auto& gv = t.gen[std::size_t(q) * 3 + letter];
            for (std::size_t a = 0; a < m; ++a)
                if (!commutes(e, code.generators[a])) gv[a >> 6] |= std::uint64_t(1) << (a & 63);
            auto& lv = t.log[std::size_t(q) * 3 + letter];
            for (std::size_t a = 0; a < lps.size(); ++a) {
                if (!commutes(e, lps[a].x_bar)) lv[(2 * a) >> 6] |= std::uint64_t(1) << ((2 * a) & 63);
                if (!commutes(e, lps[a].z_bar))
                    lv[(2 * a + 1) >> 6] |= std::uint64_t(1) << ((2 * a + 1) & 63);
            }
        }
    }
    return t;
}

double binom_d(int n, int w) {
    double r = 1;
    for (int i = 0; i < w; ++i) r = r * double(n - i) / double(i + 1);
    return r;
}

std::uint64_t binom_u(int n, int w) {
    if (w < 0 || w > n) return 0;
    // n stays at desk scale here; the double is exact well past 2^53
    return std::uint64_t(std::llround(binom_d(n, w)));
}

// Combination with rank `r` in lexicographic order over w-subsets of [0,n).
void unrank_combination(int n, int w, std::uint64_t r, std::vector<int>& out) {
    out.clear();
    int cur = 0;
    for (int slot = 0; slot < w; ++slot) {
        while (true) {
            std::uint64_t block = binom_u(n - cur - 1, w - slot - 1);
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

std::uint64_t pow3(int w) {
    std::uint64_t r = 1;
    for (int i = 0; i < w; ++i) r *= 3;
    return r;
}

}  // namespace

DistanceResult distance(const StabilizerCode& code, int w_max, double budget) {
    if (w_max < 1) throw domain_error("distance: w_max must be >= 1");
    if (code.k < 1) throw domain_error("distance: code has no logical qubits");
    auto lps = logical_operators(code);
    SyndromeTables tables = build_tables(code, lps);

    double spent = 0;
    std::vector<int> comb_seed;
    for (int w = 1; w <= std::min(w_max, code.n); ++w) {
        const double cls = binom_d(code.n, w) * double(pow3(w));
        spent += cls;
        if (spent > budget)
            throw resource_error("distance: enumeration budget exceeded at weight " +
                                 std::to_string(w) + " (need ~" + std::to_string(spent) +
                                 " candidates)");
        const std::uint64_t ncombs = binom_u(code.n, w);
        const std::uint64_t nassign = pow3(w);
        const std::uint64_t chunk = 2048;
        const std::uint64_t nblocks = (ncombs + chunk - 1) / chunk;

        // best (comb_rank, assignment) hit; deterministic regardless of schedule
        std::uint64_t best_comb = ~0ull, best_assign = 0;
#pragma omp parallel
        {
            std::uint64_t loc_comb = ~0ull, loc_assign = 0;
            std::vector<int> qubits;
            std::vector<std::uint64_t> syn(tables.gen_words), lsyn(tables.log_words);
#pragma omp for schedule(dynamic)
            for (long long blk = 0; blk < (long long)nblocks; ++blk) {
                std::uint64_t lo = std::uint64_t(blk) * chunk;
                std::uint64_t hi = std::min(lo + chunk, ncombs);
                unrank_combination(code.n, w, lo, qubits);
                for (std::uint64_t rank = lo; rank < hi; ++rank) {
                    for (std::uint64_t assign = 0; assign < nassign; ++assign) {
                        std::fill(syn.begin(), syn.end(), 0);
                        std::uint64_t digits = assign;
                        for (int j = 0; j < w; ++j) {
                            const auto& gv = tables.gen[std::size_t(qubits[j]) * 3 + digits % 3];
                            for (std::size_t t = 0; t < syn.size(); ++t) syn[t] ^= gv[t];
                            digits /= 3;
                        }
                        bool zero = true;
                        for (auto v : syn)
                            if (v) { zero = false; break; }
                        if (!zero) continue;
                        std::fill(lsyn.begin(), lsyn.end(), 0);
                        digits = assign;
                        for (int j = 0; j < w; ++j) {
                            const auto& lv = tables.log[std::size_t(qubits[j]) * 3 + digits % 3];
                            for (std::size_t t = 0; t < lsyn.size(); ++t) lsyn[t] ^= lv[t];
                            digits /= 3;
                        }
                        bool logical = false;
                        for (auto v : lsyn)
                            if (v) { logical = true; break; }
                        if (logical &&
                            (rank < loc_comb || (rank == loc_comb && assign < loc_assign))) {
                            loc_comb = rank;
                            loc_assign = assign;
                        }
                    }
                    if (rank + 1 < hi) next_combination(qubits, code.n);
                }
            }
#pragma omp critical
            {
                if (loc_comb < best_comb ||
                    (loc_comb == best_comb && loc_assign < best_assign)) {
                    best_comb = loc_comb;
                    best_assign = loc_assign;
                }
            }
        }
        if (best_comb != ~0ull) {
            std::vector<int> qubits;
            unrank_combination(code.n, w, best_comb, qubits);
            PauliOperator witness(code.n);
            static const char kinds[3] = {'X', 'Z', 'Y'};
            std::uint64_t digits = best_assign;
            for (int j = 0; j < w; ++j) {
                witness = mul(witness, PauliOperator::single(code.n, qubits[j], kinds[digits % 3]));
                digits /= 3;
            }
            DistanceResult res;
            res.exact = w;
            res.lower_bound = w;
            res.witness = std::move(witness);
            return res;
        }
    }
    DistanceResult res;
    res.lower_bound = std::min(w_max, code.n) + 1;
    return res;
}

DistanceResult distance(const StabilizerCode& code) { return distance(code, code.n); }

std::optional<PauliOperator> clean(const StabilizerCode& code, const PauliOperator& p,
                                   const std::vector<int>& a) {
    if (p.n != code.n) throw dimension_error("clean: size mismatch");
    for (const auto& g : code.generators)
        if (!commutes(p, g)) throw contract_error("clean: operator is not logical (anticommutes)");
    if (in_group(code, p).in_span)
        throw contract_error("clean: operator is in the stabilizer group");

    const std::size_t m = code.generators.size();
    // One row per (qubit in A) x {x,z} coordinate: sum_a c_a g_a = p on A.
    Gf2Matrix sys(2 * a.size(), m);
    BitVec rhs(2 * a.size());
    for (std::size_t r = 0; r < a.size(); ++r) {
        const int q = a[r];
        for (std::size_t col = 0; col < m; ++col) {
            if (code.generators[col].x.get(q)) sys.set(2 * r, col);
            if (code.generators[col].z.get(q)) sys.set(2 * r + 1, col);
        }
        if (p.x.get(q)) rhs.set(2 * r);
        if (p.z.get(q)) rhs.set(2 * r + 1);
    }
    auto sol = sys.solve(rhs);
    if (!sol) return std::nullopt;
    PauliOperator q = mul(p, group_element(code, *sol));
    for (int qubit : a)
        if (q.acts_on(qubit)) throw internal_error("clean: residual support on A");
    return q;
}

std::vector<PauliOperator> restricted_stabilizers(const StabilizerCode& code,
                                                  const std::vector<int>& a) {
    BitVec mask(code.n);
    for (int q : a) {
        if (q < 0 || q >= code.n) throw dimension_error("restricted_stabilizers: qubit out of range");
        mask.set(q);
    }
    const std::size_t m = code.generators.size();
    // Constrain every coordinate outside A to zero.
    std::vector<int> outside;
    for (int q = 0; q < code.n; ++q)
        if (!mask.get(q)) outside.push_back(q);
    Gf2Matrix sys(2 * outside.size(), m);
    for (std::size_t r = 0; r < outside.size(); ++r) {
        for (std::size_t col = 0; col < m; ++col) {
            if (code.generators[col].x.get(outside[r])) sys.set(2 * r, col);
            if (code.generators[col].z.get(outside[r])) sys.set(2 * r + 1, col);
        }
    }
    std::vector<PauliOperator> basis;
    for (const auto& combo : sys.kernel()) basis.push_back(group_element(code, combo));
    return basis;
}

SubsetResult identity_support_subset(const StabilizerCode& code, int size) {
    if (size < 0 || size > code.n) throw domain_error("identity_support_subset: bad size");
    StabilizerCode work = code;  // local Clifford rotations happen on this copy
    work.logicals = logical_operators(code);

    SubsetResult out;
    while (int(out.qubits.size()) < size) {
        auto cx = clean(work, work.logicals[0].x_bar, out.qubits);
        auto cz = clean(work, work.logicals[0].z_bar, out.qubits);
        if (!cx || !cz)
            throw internal_error("identity_support_subset: cleaning failed below the distance");
        if (commutes(*cx, *cz))
            throw internal_error("identity_support_subset: cleaned pair commutes");
        // They anticommute, so an odd number of qubits hosts anticommuting
        // local actions; take the lowest.
        int pick = -1;
        for (int q = 0; q < work.n; ++q) {
            const int la = cx->local(q), lb = cz->local(q);
            if (la && lb && la != lb) { pick = q; break; }
        }
        if (pick < 0) throw internal_error("identity_support_subset: no anticommuting qubit");

        SubsetStep step;
        step.cleaned_x = *cx;
        step.cleaned_z = *cz;
        step.qubit = pick;
        step.basis_changed = !(cx->local(pick) == 1 && cz->local(pick) == 2);
        if (step.basis_changed) {
            // Rotate the working copy so the pair acts as (X, Z) on `pick`.
            CliffordGate rot = local_basis_change(cx->local(pick), cz->local(pick), pick);
            for (auto& g : work.generators) g = conjugate(g, rot);
            for (auto& lp : work.logicals) {
                lp.x_bar = conjugate(lp.x_bar, rot);
                lp.z_bar = conjugate(lp.z_bar, rot);
            }
        }
        out.qubits.push_back(pick);
        out.steps.push_back(std::move(step));
    }
    std::sort(out.qubits.begin(), out.qubits.end());
    return out;
}

int sparsity(const StabilizerCode& code) {
    std::size_t s = 0;
    for (const auto& g : code.generators) s = std::max(s, g.weight());
    for (int q = 0; q < code.n; ++q) {
        std::size_t cnt = 0;
        for (const auto& g : code.generators)
            if (g.acts_on(q)) ++cnt;
        s = std::max(s, cnt);
    }
    return int(s);
}

}  // namespace qgem
