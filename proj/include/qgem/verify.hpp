#pragma once

#include <string>
#include <vector>

#include "qgem/io.hpp"

namespace qgem {

// One verified inequality/identity. `provenance` records where the reference
// value comes from: "literature" (stated in the source material), "derived"
// (recomputed by an independent route here) or "trivial".
struct CheckRow {
    std::string check;
    std::string item;
    std::string provenance;
    double value = 0;
    double reference = 0;
    std::string relation;  // "<=", ">=", "==", "info"
    bool pass = true;
};

struct SuiteReport {
    std::string suite;
    std::vector<CheckRow> rows;
    bool pass = true;
};

struct VerifyReport {
    std::uint64_t seed = 0;
    std::vector<SuiteReport> suites;
    bool pass = true;
};

struct VerifyParams {
    std::uint64_t seed = kDefaultSeed;
    int samples = 100;   // random logical states per code
    int restarts = 8;    // estimator restarts per sampled state
    int trials = 50;     // random circuits per depth
    int perms = 50;      // permutation-invariance samples
    int max_qubits = kDefaultMaxQubits;
};

SuiteReport verify_stabilizer(const VerifyParams& p);
SuiteReport verify_ldpc(const VerifyParams& p);
SuiteReport verify_rate(const VerifyParams& p);
SuiteReport verify_zoo(const VerifyParams& p);
SuiteReport verify_gem(const VerifyParams& p);

// suite in {stabilizer, ldpc, rate, zoo, gem, all}
VerifyReport run_verify(const std::string& suite, const VerifyParams& p);

ojson verify_to_json(const VerifyReport& rep);
std::string verify_to_csv(const VerifyReport& rep);

}  // namespace qgem
