#pragma once

#include <string>

#include "leibniz/cohomology.hpp"
#include "leibniz/invariants.hpp"

namespace leibniz {

// On-disk JSON schema (1-based basis indices, rationals as strings):
//   {"name": str, "dim": int, "basis": [str, ...],
//    "brackets": [{"left": i, "right": j,
//                  "value": [[k, "p/q"], ...]}, ...]}
// Omitted brackets are zero; duplicate (left, right) pairs are rejected.
struct AlgebraFile {
  std::string name;
  Algebra algebra{0};
};

AlgebraFile parse_algebra_json(const std::string& text);
std::string emit_algebra_json(const AlgebraFile& f);
AlgebraFile read_algebra_file(const std::string& path);
void write_algebra_file(const std::string& path, const AlgebraFile& f);

// Whitespace-separated rationals, one matrix row per line.
Matrix parse_matrix_text(const std::string& text);
Matrix read_matrix_file(const std::string& path);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

// Report rendering. Text forms are line-oriented; json forms are pretty
// printed with a trailing newline and deterministic key order.
std::string defects_text(const Algebra& a, const std::vector<LeibnizDefect>& defects);
std::string defects_json(const std::vector<LeibnizDefect>& defects);
std::string fingerprint_text(const Fingerprint& fp);
std::string fingerprint_json(const std::string& name, const Fingerprint& fp);
std::string cohomology_text(const CohomologyReport& r);
std::string cohomology_json(const std::string& name, const CohomologyReport& r);

}  // namespace leibniz
