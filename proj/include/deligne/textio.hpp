#pragma once
// Text grammar, canonical formatting, JSON schema and the LR cache file.
#include <string>

#include "deligne/capdiagrams.hpp"
#include "deligne/grothendieck.hpp"
#include "deligne/schur.hpp"
#include "json.hpp"

namespace deligne {

inline constexpr const char* kSchema = "deligne-gl/1";

// "(3,2|3,1)", "(2|)", "(|)"; whitespace ignored. ParseError carries the position.
Bipartition parse_bipartition(const std::string& s);
// "t", "p", "p/q"
Delta parse_delta(const std::string& s);

nlohmann::json bipartition_json(const Bipartition& b);
Bipartition bipartition_from_json(const nlohmann::json& j);

nlohmann::json vector_json(const RingVector& v);
RingVector vector_from_json(const nlohmann::json& j);
RingVector parse_vector_json(const std::string& s);
// one "<coeff> <bipartition>" line per term, or "0"
std::string vector_text(const RingVector& v);

nlohmann::json polynomial_json(const LaurentPolynomial& p);
nlohmann::json caps_json(const WeightDiagram& x, const std::vector<Cap>& caps);

// LR cache file: header line, then "(nu|lam|mu) -> c" records. A file that
// fails to parse anywhere is ignored entirely. Returns records loaded.
std::size_t load_lr_cache(const std::string& path);
void save_lr_cache(const std::string& path);

}  // namespace deligne
