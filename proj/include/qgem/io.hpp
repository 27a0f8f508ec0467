#pragma once

#include <string>

#include "json.hpp"
#include "qgem/general_code.hpp"
#include "qgem/stabilizer.hpp"

namespace qgem {

using ojson = nlohmann::ordered_json;

// Round to `digits` significant decimal digits; keeps JSON output stable
// across runs and platforms.
double round_sig(double v, int digits = 12);

// number for JSON reports (12 significant digits)
ojson jnum(double v);

// Text format: first line "n=<int> k=<int>", then one generator per line as a
// string over {I,X,Y,Z} with an optional leading '-'.
StabilizerCode parse_stabilizer_text(const std::string& text);
std::string stabilizer_text(const StabilizerCode& code);

// { "n": int, "k": int, "basis": [[[re, im], ...], ...],
//   "claimed_distance": int? }
GeneralCode general_code_from_json(const ojson& j);
ojson general_code_to_json(const GeneralCode& code);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

}  // namespace qgem
