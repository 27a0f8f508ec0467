#include "qgem/io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace qgem {

double round_sig(double v, int digits) {
    if (v == 0.0 || !std::isfinite(v)) return v;
    const double mag = std::floor(std::log10(std::abs(v)));
    const double scale = std::pow(10.0, digits - 1 - mag);
    return std::round(v * scale) / scale;
}

ojson jnum(double v) {
    if (std::isnan(v)) return nullptr;
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    return round_sig(v);
}

StabilizerCode parse_stabilizer_text(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    int n = -1, k = -1;
    std::vector<PauliOperator> gens;
    while (std::getline(in, line)) {
        ++lineno;
        // strip comments and whitespace
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        while (!line.empty() && (line.back() == ' ' || line.back() == '\r' || line.back() == '\t'))
            line.pop_back();
        std::size_t start = line.find_first_not_of(" \t");
        if (start == std::string::npos) continue;
        line = line.substr(start);
        if (n < 0) {
            int got = std::sscanf(line.c_str(), "n=%d k=%d", &n, &k);
            if (got != 2 || n < 1 || k < 0 || k > n)
                throw parse_error("line " + std::to_string(lineno) +
                                  ": expected header 'n=<int> k=<int>'");
            continue;
        }
        PauliOperator p;
        try {
            p = parse_pauli(line);
        } catch (const parse_error& e) {
            throw parse_error("line " + std::to_string(lineno) + ": " + e.what());
        }
        if (p.n != n)
            throw parse_error("line " + std::to_string(lineno) + ": generator has length " +
                              std::to_string(p.n) + ", expected " + std::to_string(n));
        gens.push_back(std::move(p));
    }
    if (n < 0) throw parse_error("missing 'n=<int> k=<int>' header");
    if (int(gens.size()) != n - k)
        throw parse_error("expected " + std::to_string(n - k) + " generators, found " +
                          std::to_string(gens.size()));
    try {
        return StabilizerCode::from_generators(n, std::move(gens));
    } catch (const invalid_code_error& e) {
        throw parse_error(std::string("invalid stabilizer code: ") + e.what());
    }
}

std::string stabilizer_text(const StabilizerCode& code) {
    std::ostringstream out;
    out << "n=" << code.n << " k=" << code.k << "\n";
    for (const auto& g : code.generators) out << g.str() << "\n";
    return out.str();
}

GeneralCode general_code_from_json(const ojson& j) {
    GeneralCode code;
    try {
        code.n = j.at("n").get<int>();
        code.k = j.at("k").get<int>();
        if (code.n < 1 || code.n > kHardMaxQubits) throw parse_error("n out of range");
        const auto& basis = j.at("basis");
        for (const auto& vec : basis) {
            StateVector v(code.n);
            if (vec.size() != v.dim()) throw parse_error("basis vector has wrong length");
            for (std::size_t i = 0; i < v.dim(); ++i)
                v.a[i] = cplx(vec[i][0].get<double>(), vec[i][1].get<double>());
            code.basis.push_back(std::move(v));
        }
        if (j.contains("claimed_distance") && !j["claimed_distance"].is_null())
            code.claimed_distance = j["claimed_distance"].get<int>();
    } catch (const ojson::exception& e) {
        throw parse_error(std::string("general code JSON: ") + e.what());
    }
    try {
        validate(code);
    } catch (const invalid_code_error& e) {
        throw parse_error(std::string("general code JSON: ") + e.what());
    }
    return code;
}

ojson general_code_to_json(const GeneralCode& code) {
    ojson j;
    j["n"] = code.n;
    j["k"] = code.k;
    ojson basis = ojson::array();
    for (const auto& v : code.basis) {
        ojson vec = ojson::array();
        for (const auto& amp : v.a) vec.push_back({jnum(amp.real()), jnum(amp.imag())});
        basis.push_back(std::move(vec));
    }
    j["basis"] = std::move(basis);
    if (code.claimed_distance)
        j["claimed_distance"] = *code.claimed_distance;
    else
        j["claimed_distance"] = nullptr;
    return j;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw parse_error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw error("cannot write '" + path + "'");
    out << contents;
}

}  // namespace qgem
