#include "qgem/clifford.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "qgem/stabilizer.hpp"

namespace qgem {

namespace {

// Local Pauli in bare form i^phase X^x Z^z (phase mod 4).
struct BareLocal {
    std::uint8_t x = 0, z = 0;
    int phase = 0;
};

BareLocal to_bare(const LocalPauli& p) {
    BareLocal b;
    b.x = p.x;
    b.z = p.z;
    b.phase = (p.sign < 0 ? 2 : 0) + std::popcount(unsigned(p.x & p.z));
    b.phase &= 3;
    return b;
}

BareLocal bare_mul(const BareLocal& a, const BareLocal& b) {
    BareLocal r;
    r.x = a.x ^ b.x;
    r.z = a.z ^ b.z;
    r.phase = (a.phase + b.phase + 2 * std::popcount(unsigned(a.z & b.x))) & 3;
    return r;
}

LocalPauli from_code(int code, int sign = +1) {
    LocalPauli p;
    p.x = std::uint8_t(code & 1);
    p.z = std::uint8_t((code >> 1) & 1);
    p.sign = sign;
    return p;
}

}  // namespace

void validate(const CliffordCircuit& c) {
    for (const auto& layer : c.layers) {
        std::vector<bool> used(c.n, false);
        for (const auto& g : layer) {
            if (g.qubits.empty() || g.qubits.size() > 2)
                throw error("circuit: gate must act on 1 or 2 qubits");
            for (int q : g.qubits) {
                if (q < 0 || q >= c.n) throw error("circuit: qubit index out of range");
                if (used[q]) throw error("circuit: overlapping gates within a layer");
                used[q] = true;
            }
            if (g.img.size() != 2 * g.qubits.size())
                throw error("circuit: gate image table has wrong size");
        }
    }
}

CliffordGate gate_named(const std::string& name, int a, int b) {
    CliffordGate g;
    g.name = name;
    auto one = [&](LocalPauli ix, LocalPauli iz) {
        g.qubits = {a};
        g.img = {ix, iz};
    };
    auto X = [](int s = +1) { return from_code(1, s); };
    auto Z = [](int s = +1) { return from_code(2, s); };
    auto Y = [](int s = +1) { return from_code(3, s); };
    if (name == "H") one(Z(), X());
    else if (name == "S") one(Y(), Z());
    else if (name == "Sdg") one(Y(-1), Z());
    else if (name == "X") one(X(), Z(-1));
    else if (name == "Y") one(X(-1), Z(-1));
    else if (name == "Z") one(X(-1), Z());
    else if (name == "CX" || name == "CZ") {
        if (b < 0) throw error("two-qubit gate needs two qubits");
        g.qubits = {a, b};
        auto two = [](std::uint8_t x, std::uint8_t z, int s = +1) {
            LocalPauli p;
            p.x = x;
            p.z = z;
            p.sign = s;
            return p;
        };
        if (name == "CX") {
            // X_a -> X_a X_b, Z_a -> Z_a, X_b -> X_b, Z_b -> Z_a Z_b
            g.img = {two(0b11, 0b00), two(0b00, 0b01), two(0b10, 0b00), two(0b00, 0b11)};
        } else {
            // X_a -> X_a Z_b, Z_a -> Z_a, X_b -> Z_a X_b, Z_b -> Z_b
            g.img = {two(0b01, 0b10), two(0b00, 0b01), two(0b10, 0b01), two(0b00, 0b10)};
        }
    } else {
        throw parse_error("unknown gate '" + name + "'");
    }
    return g;
}

namespace {

// Conjugate a local (bare-form) Pauli through a gate given on the same slots.
BareLocal conjugate_local(const BareLocal& in, const CliffordGate& g) {
    BareLocal out;  // identity
    out.phase = in.phase;
    const int slots = int(g.qubits.size());
    for (int s = 0; s < slots; ++s) {
        if ((in.x >> s) & 1) out = bare_mul(out, to_bare(g.img[2 * s]));
    }
    for (int s = 0; s < slots; ++s) {
        if ((in.z >> s) & 1) out = bare_mul(out, to_bare(g.img[2 * s + 1]));
    }
    return out;
}

}  // namespace

CliffordGate compose(const CliffordGate& g1, const CliffordGate& g2) {
    if (g1.qubits != g2.qubits) throw error("compose: support mismatch");
    CliffordGate g;
    g.qubits = g1.qubits;
    g.name = g1.name + "." + g2.name;
    for (const auto& im : g1.img) {
        BareLocal b = conjugate_local(to_bare(im), g2);
        const int herm = std::popcount(unsigned(b.x & b.z));
        const int rem = (b.phase - herm) & 3;
        if (rem & 1) throw internal_error("compose: non-Hermitian image");
        LocalPauli p;
        p.x = b.x;
        p.z = b.z;
        p.sign = rem == 0 ? +1 : -1;
        g.img.push_back(p);
    }
    return g;
}

CliffordGate promote(const CliffordGate& g, int a, int b) {
    if (g.qubits.size() != 1) throw error("promote: expects a single-qubit gate");
    const int slot = g.qubits[0] == a ? 0 : 1;
    if (g.qubits[0] != a && g.qubits[0] != b) throw error("promote: qubit not in pair");
    CliffordGate out;
    out.qubits = {a, b};
    out.name = g.name;
    auto widen = [&](const LocalPauli& p) {
        LocalPauli w;
        w.x = std::uint8_t(p.x << slot);
        w.z = std::uint8_t(p.z << slot);
        w.sign = p.sign;
        return w;
    };
    const int other = 1 - slot;
    LocalPauli ix, iz;  // identity action on the untouched slot
    ix.x = std::uint8_t(1 << other);
    iz.z = std::uint8_t(1 << other);
    if (slot == 0) {
        out.img = {widen(g.img[0]), widen(g.img[1]), ix, iz};
    } else {
        out.img = {ix, iz, widen(g.img[0]), widen(g.img[1])};
    }
    return out;
}

PauliOperator conjugate(const PauliOperator& p, const CliffordGate& g) {
    // Isolate the support slots in bare form; the rest of the operator and
    // ordering contribute no extra phase because disjoint qubits commute.
    BareLocal loc;
    for (std::size_t s = 0; s < g.qubits.size(); ++s) {
        if (p.x.get(g.qubits[s])) loc.x |= std::uint8_t(1) << s;
        if (p.z.get(g.qubits[s])) loc.z |= std::uint8_t(1) << s;
    }
    BareLocal out = conjugate_local(loc, g);

    PauliOperator r = p;
    const int pc_before = int(BitVec::and_popcount(p.x, p.z) & 3);
    for (std::size_t s = 0; s < g.qubits.size(); ++s) {
        r.x.set(g.qubits[s], (out.x >> s) & 1);
        r.z.set(g.qubits[s], (out.z >> s) & 1);
    }
    const int pc_after = int(BitVec::and_popcount(r.x, r.z) & 3);
    // total phase: sign * i^{pc_before} picked up i^{out.phase}, then the
    // Hermitian form re-absorbs i^{pc_after}
    int t = (pc_before + out.phase - pc_after) & 3;
    if (p.sign < 0) t = (t + 2) & 3;
    if (t & 1) throw internal_error("conjugate: non-Hermitian result");
    r.sign = t == 0 ? +1 : -1;
    return r;
}

PauliOperator conjugate(const PauliOperator& p, const CliffordCircuit& c) {
    if (p.n != c.n) throw dimension_error("conjugate: size mismatch");
    PauliOperator r = p;
    for (const auto& layer : c.layers)
        for (const auto& g : layer) r = conjugate(r, g);
    return r;
}

StabilizerCode conjugate(const StabilizerCode& code, const CliffordCircuit& c) {
    if (code.n != c.n) throw dimension_error("conjugate: size mismatch");
    StabilizerCode out = code;
    for (auto& g : out.generators) g = conjugate(g, c);
    for (auto& lp : out.logicals) {
        lp.x_bar = conjugate(lp.x_bar, c);
        lp.z_bar = conjugate(lp.z_bar, c);
    }
    return out;
}

CliffordGate local_basis_change(int from_x, int from_z, int qubit) {
    if (from_x < 1 || from_x > 3 || from_z < 1 || from_z > 3 || from_x == from_z)
        throw domain_error("local_basis_change: need an anticommuting pair");
    // Search the 24 single-qubit Cliffords for the one mapping the pair to
    // (+X, +Z) exactly.
    for (int cx = 1; cx <= 3; ++cx) {
        for (int sx = 0; sx < 2; ++sx) {
            for (int cz = 1; cz <= 3; ++cz) {
                if (cz == cx) continue;
                for (int sz = 0; sz < 2; ++sz) {
                    CliffordGate g;
                    g.qubits = {qubit};
                    g.name = "L";
                    g.img = {from_code(cx, sx ? -1 : +1), from_code(cz, sz ? -1 : +1)};
                    BareLocal fx = conjugate_local(to_bare(from_code(from_x)), g);
                    BareLocal fz = conjugate_local(to_bare(from_code(from_z)), g);
                    // want +X and +Z
                    if (fx.x == 1 && fx.z == 0 && fx.phase == 0 && fz.x == 0 && fz.z == 1 &&
                        fz.phase == 0)
                        return g;
                }
            }
        }
    }
    throw internal_error("local_basis_change: no Clifford found");
}

CliffordGate random_single_clifford(Rng& rng, int qubit) {
    // imgX: any of 6 signed Paulis; imgZ: any signed Pauli on a different axis
    const int cx = 1 + int(rng.below(3));
    const int sx = rng.below(2) ? -1 : +1;
    int cz = 1 + int(rng.below(2));
    if (cz >= cx) ++cz;
    const int sz = rng.below(2) ? -1 : +1;
    CliffordGate g;
    g.qubits = {qubit};
    g.name = "C1";
    g.img = {from_code(cx, sx), from_code(cz, sz)};
    return g;
}

CliffordGate random_two_qubit_clifford(Rng& rng, int a, int b) {
    CliffordGate pre = compose(promote(random_single_clifford(rng, a), a, b),
                               promote(random_single_clifford(rng, b), a, b));
    const std::uint64_t cls = rng.below(20);
    // CX with control/target swapped, expressed on the canonical {a,b} support
    auto cx_reversed = [&]() {
        CliffordGate hh = compose(promote(gate_named("H", a), a, b),
                                  promote(gate_named("H", b), a, b));
        return compose(compose(hh, gate_named("CX", a, b)), hh);
    };
    CliffordGate mid;
    if (cls == 0) {
        mid = compose(gate_named("CX", a, b), gate_named("CX", a, b));  // identity
        mid.name = "I2";
    } else if (cls <= 9) {
        mid = gate_named("CX", a, b);
    } else if (cls <= 18) {
        mid = compose(gate_named("CX", a, b), cx_reversed());
        mid.name = "DCX";
    } else {
        mid = compose(compose(gate_named("CX", a, b), cx_reversed()), gate_named("CX", a, b));
        mid.name = "SWAP";
    }
    CliffordGate post = compose(promote(random_single_clifford(rng, a), a, b),
                                promote(random_single_clifford(rng, b), a, b));
    CliffordGate g = compose(compose(pre, mid), post);
    g.name = "C2";
    return g;
}

CliffordCircuit random_circuit(int n, int h, Rng& rng) {
    CliffordCircuit c;
    c.n = n;
    for (int layer = 0; layer < h; ++layer) {
        std::vector<int> order(n);
        for (int i = 0; i < n; ++i) order[i] = i;
        rng.shuffle(order);
        std::vector<CliffordGate> gates;
        for (int i = 0; i + 1 < n; i += 2)
            gates.push_back(random_two_qubit_clifford(rng, order[i], order[i + 1]));
        c.layers.push_back(std::move(gates));
    }
    validate(c);
    return c;
}

CliffordCircuit parse_circuit(const std::string& text, int n) {
    CliffordCircuit c;
    c.n = n;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        for (auto& ch : line)
            if (ch == ';' || ch == ',') ch = ' ';
        std::istringstream ls(line);
        std::vector<std::string> tok;
        std::string t;
        while (ls >> t) tok.push_back(t);
        if (tok.empty()) continue;
        std::vector<CliffordGate> layer;
        std::size_t i = 0;
        while (i < tok.size()) {
            const std::string& name = tok[i];
            const bool two = name == "CX" || name == "CZ";
            const std::size_t need = two ? 2 : 1;
            if (i + need >= tok.size())
                throw parse_error("line " + std::to_string(lineno) + ": truncated gate '" +
                                  name + "'");
            try {
                int a = std::stoi(tok[i + 1]);
                int b = two ? std::stoi(tok[i + 2]) : -1;
                layer.push_back(gate_named(name, a, b));
            } catch (const std::invalid_argument&) {
                throw parse_error("line " + std::to_string(lineno) + ": bad qubit index");
            }
            i += need + 1;
        }
        c.layers.push_back(std::move(layer));
    }
    try {
        validate(c);
    } catch (const error& e) {
        throw parse_error(std::string("circuit: ") + e.what());
    }
    return c;
}

std::string circuit_str(const CliffordCircuit& c) {
    std::ostringstream out;
    for (const auto& layer : c.layers) {
        bool first = true;
        for (const auto& g : layer) {
            if (!first) out << " ; ";
            first = false;
            out << (g.name.empty() ? std::string("?") : g.name);
            for (int q : g.qubits) out << ' ' << q;
        }
        out << '\n';
    }
    return out.str();
}

}  // namespace qgem
