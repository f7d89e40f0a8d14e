#pragma once

#include <string>

#include <json.hpp>

#include "kmstab/braid.hpp"
#include "kmstab/gcm.hpp"
#include "kmstab/matrix.hpp"
#include "kmstab/navigate.hpp"
#include "kmstab/numeric.hpp"

namespace kmstab::io {

using Json = nlohmann::ordered_json;

// All wire formats use 1-based generator/vertex indices and canonical "p/q"
// rational strings; plain JSON integers are accepted as input shorthand.

Json load_file(const std::string& path);

/// {"vertices": n, "arrows": [[s,t],...]} or {"gcm": [[...],...]} - exactly one.
Gcm parse_gcm_input(const Json& j);

/// {"z": [[re,im],...]} with entries as "p/q" strings or integers.
Charge parse_charge(const Json& j);

/// {"waypoints": [charge,...]}; each waypoint a charge object or bare z-array.
ChargePath parse_path(const Json& j);

/// "1,-2,3" means sigma_1 sigma_2^-1 sigma_3.
BraidWord parse_braid_shorthand(const std::string& s, int rank);

/// {"letters": [[i,e],...], "shift": 2k}
BraidWord parse_braid_json(const Json& j, int rank);

Json rational_json(const Rat& r);
Json gauss_json(const GaussRat& z);
Json charge_json(const Charge& z);
Json intvec_json(const IntVec& v);
Json ratvec_json(const RatVec& v);
Json matrix_json(const IntMat& m);
Json word_json(const Word& w);          // 1-based letters
Json braid_letters_json(const BraidWord& b);

} // namespace kmstab::io
