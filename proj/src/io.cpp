#include "leibniz/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace leibniz {

namespace {

using ordered_json = nlohmann::ordered_json;

const nlohmann::json& field(const nlohmann::json& j, const char* key) {
  const auto it = j.find(key);
  if (it == j.end())
    throw parse_error(std::string("algebra file: missing field '") + key + "'");
  return *it;
}

int index_in_range(const nlohmann::json& j, int dim, const char* what) {
  if (!j.is_number_integer())
    throw parse_error(std::string("algebra file: ") + what + " is not an integer");
  const long long v = j.get<long long>();
  if (v < 1 || v > dim)
    throw parse_error(std::string("algebra file: ") + what + " " +
                      std::to_string(v) + " out of range 1.." + std::to_string(dim));
  return int(v);
}

std::string series_str(const std::vector<int>& dims) {
  std::string out;
  for (size_t i = 0; i < dims.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(dims[i]);
  }
  return out;
}

}  // namespace

AlgebraFile parse_algebra_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw parse_error(std::string("algebra file: ") + e.what());
  }
  if (!j.is_object()) throw parse_error("algebra file: top level is not an object");
  const auto& jname = field(j, "name");
  if (!jname.is_string()) throw parse_error("algebra file: 'name' is not a string");
  const auto& jdim = field(j, "dim");
  if (!jdim.is_number_integer() || jdim.get<long long>() < 0)
    throw parse_error("algebra file: 'dim' is not a non-negative integer");
  const int dim = int(jdim.get<long long>());
  const auto& jbasis = field(j, "basis");
  if (!jbasis.is_array() || int(jbasis.size()) != dim)
    throw parse_error("algebra file: 'basis' must list exactly dim labels");
  std::vector<std::string> labels;
  for (const auto& l : jbasis) {
    if (!l.is_string()) throw parse_error("algebra file: basis label is not a string");
    labels.push_back(l.get<std::string>());
  }
  const auto& jbr = field(j, "brackets");
  if (!jbr.is_array()) throw parse_error("algebra file: 'brackets' is not an array");

  AlgebraFile out;
  out.name = jname.get<std::string>();
  out.algebra = Algebra(dim, std::move(labels));
  std::set<std::pair<int, int>> seen;
  for (const auto& b : jbr) {
    if (!b.is_object()) throw parse_error("algebra file: bracket entry is not an object");
    const int left = index_in_range(field(b, "left"), dim, "bracket left index");
    const int right = index_in_range(field(b, "right"), dim, "bracket right index");
    if (!seen.insert({left, right}).second)
      throw parse_error("algebra file: duplicate bracket (" + std::to_string(left) +
                        "," + std::to_string(right) + ")");
    const auto& jval = field(b, "value");
    if (!jval.is_array()) throw parse_error("algebra file: bracket value is not an array");
    Terms terms;
    for (const auto& pair : jval) {
      if (!pair.is_array() || pair.size() != 2)
        throw parse_error("algebra file: bracket value entry is not an [index, rational] pair");
      const int k = index_in_range(pair[0], dim, "bracket value index");
      if (!pair[1].is_string())
        throw parse_error("algebra file: bracket coefficient is not a string");
      terms.emplace_back(k - 1, rat_parse(pair[1].get<std::string>()));
    }
    out.algebra.set_bracket(left - 1, right - 1, std::move(terms));
  }
  return out;
}

std::string emit_algebra_json(const AlgebraFile& f) {
  ordered_json j;
  j["name"] = f.name;
  j["dim"] = f.algebra.dim();
  j["basis"] = f.algebra.labels();
  ordered_json brackets = ordered_json::array();
  for (const auto& [key, terms] : f.algebra.table()) {
    ordered_json entry;
    entry["left"] = key.first + 1;
    entry["right"] = key.second + 1;
    ordered_json value = ordered_json::array();
    for (const auto& [k, c] : terms)
      value.push_back(ordered_json::array({k + 1, rat_str(c)}));
    entry["value"] = std::move(value);
    brackets.push_back(std::move(entry));
  }
  j["brackets"] = std::move(brackets);
  return j.dump(2) + "\n";
}

AlgebraFile read_algebra_file(const std::string& path) {
  return parse_algebra_json(read_text_file(path));
}

void write_algebra_file(const std::string& path, const AlgebraFile& f) {
  write_text_file(path, emit_algebra_json(f));
}

Matrix parse_matrix_text(const std::string& text) {
  std::vector<Vec> rows;
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    std::istringstream fields(line);
    Vec row;
    std::string tok;
    while (fields >> tok) row.push_back(rat_parse(tok));
    if (row.empty()) continue;
    if (!rows.empty() && rows.front().size() != row.size())
      throw parse_error("matrix file: rows have differing lengths");
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw parse_error("matrix file: no entries");
  Matrix m(int(rows.size()), int(rows.front().size()));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) m.at(i, j) = rows[i][j];
  return m;
}

Matrix read_matrix_file(const std::string& path) {
  return parse_matrix_text(read_text_file(path));
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw parse_error("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw validation_error("cannot write file: " + path);
  out << text;
}

std::string defects_text(const Algebra& a, const std::vector<LeibnizDefect>& defects) {
  if (defects.empty()) return "identity holds: no defects\n";
  std::string out = "defects: " + std::to_string(defects.size()) + "\n";
  for (const auto& d : defects) {
    out += "defect (" + std::to_string(d.i + 1) + "," + std::to_string(d.j + 1) +
           "," + std::to_string(d.k + 1) + "):";
    for (int w = 0; w < a.dim(); ++w)
      if (sgn(d.value[w]) != 0)
        out += " " + rat_str(d.value[w]) + "*" + a.labels()[w];
    out += "\n";
  }
  return out;
}

std::string defects_json(const std::vector<LeibnizDefect>& defects) {
  ordered_json j;
  j["defect_count"] = defects.size();
  ordered_json list = ordered_json::array();
  for (const auto& d : defects) {
    ordered_json entry;
    entry["i"] = d.i + 1;
    entry["j"] = d.j + 1;
    entry["k"] = d.k + 1;
    ordered_json value = ordered_json::array();
    for (int w = 0; w < int(d.value.size()); ++w)
      if (sgn(d.value[w]) != 0)
        value.push_back(ordered_json::array({w + 1, rat_str(d.value[w])}));
    entry["value"] = std::move(value);
    list.push_back(std::move(entry));
  }
  j["defects"] = std::move(list);
  return j.dump(2) + "\n";
}

std::string fingerprint_text(const Fingerprint& fp) {
  std::string out;
  out += "dim: " + std::to_string(fp.dim) + "\n";
  out += std::string("nilpotent: ") +
         (fp.nilpotent ? "yes (index " + std::to_string(fp.lcs_dims.size()) + ")"
                       : "no") +
         "\n";
  out += std::string("solvable: ") +
         (fp.solvable ? "yes (index " + std::to_string(fp.ds_dims.size()) + ")"
                      : "no") +
         "\n";
  out += "lcs_dims: " + series_str(fp.lcs_dims) + "\n";
  out += "ds_dims: " + series_str(fp.ds_dims) + "\n";
  out += "dim_ann_r: " + std::to_string(fp.dim_ann_r) + "\n";
  out += "dim_center: " + std::to_string(fp.dim_center) + "\n";
  out += "dim_der: " + std::to_string(fp.dim_der) + "\n";
  out += "char_seq: " + (fp.char_seq ? series_str(*fp.char_seq) : std::string("-")) +
         "\n";
  return out;
}

std::string fingerprint_json(const std::string& name, const Fingerprint& fp) {
  ordered_json j;
  j["name"] = name;
  j["dim"] = fp.dim;
  j["nilpotent"] = fp.nilpotent;
  if (fp.nilpotent)
    j["nilpotency_index"] = fp.lcs_dims.size();
  else
    j["nilpotency_index"] = nullptr;
  j["solvable"] = fp.solvable;
  if (fp.solvable)
    j["solvability_index"] = fp.ds_dims.size();
  else
    j["solvability_index"] = nullptr;
  j["lcs_dims"] = fp.lcs_dims;
  j["ds_dims"] = fp.ds_dims;
  j["dim_ann_r"] = fp.dim_ann_r;
  j["dim_center"] = fp.dim_center;
  j["dim_der"] = fp.dim_der;
  if (fp.char_seq)
    j["char_seq"] = *fp.char_seq;
  else
    j["char_seq"] = nullptr;
  return j.dump(2) + "\n";
}

std::string cohomology_text(const CohomologyReport& r) {
  std::string out;
  out += "cocycle_dim: " + std::to_string(r.zl2) + "\n";
  out += "coboundary_dim: " + std::to_string(r.bl2) + "\n";
  out += "hl2_dim: " + std::to_string(r.hl2) + "\n";
  out += std::string("rigidity: ") +
         (r.rigidity == Rigidity::certified_rigid ? "certified_rigid" : "unknown") +
         "\n";
  return out;
}

std::string cohomology_json(const std::string& name, const CohomologyReport& r) {
  ordered_json j;
  j["name"] = name;
  j["cocycle_dim"] = r.zl2;
  j["coboundary_dim"] = r.bl2;
  j["hl2_dim"] = r.hl2;
  j["rigidity"] =
      r.rigidity == Rigidity::certified_rigid ? "certified_rigid" : "unknown";
  return j.dump(2) + "\n";
}

}  // namespace leibniz
