// Command-line surface. Exit codes: 0 success/holds, 1 mathematical failure,
// 2 parse error, 3 validation or precondition error.

#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "leibniz/catalog.hpp"
#include "leibniz/cohomology.hpp"
#include "leibniz/derivations.hpp"
#include "leibniz/io.hpp"

namespace {

using namespace leibniz;
using ordered_json = nlohmann::ordered_json;

Vec split_rationals(const std::string& s) {
  Vec out;
  std::string tok;
  std::istringstream in(s);
  while (std::getline(in, tok, ',')) out.push_back(rat_parse(tok));
  return out;
}

Rational rat_or_zero(const std::string& s) {
  return s.empty() ? Rational(0) : rat_parse(s);
}

void write_output(const std::string& out_path, const std::string& bytes) {
  if (out_path.empty())
    std::cout << bytes;
  else
    write_text_file(out_path, bytes);
}

int run_verify(const std::string& path, bool json) {
  const AlgebraFile f = read_algebra_file(path);
  const auto defects = verify_leibniz(f.algebra);
  std::cout << (json ? defects_json(defects) : defects_text(f.algebra, defects));
  return defects.empty() ? 0 : 1;
}

int run_invariants(const std::string& path, unsigned seed, bool json) {
  const AlgebraFile f = read_algebra_file(path);
  const Fingerprint fp = fingerprint(f.algebra, 8, seed);
  std::cout << (json ? fingerprint_json(f.name, fp) : fingerprint_text(fp));
  return 0;
}

int run_cohomology(const std::string& path, bool json, bool rigid_mode) {
  const AlgebraFile f = read_algebra_file(path);
  if (!verify_leibniz(f.algebra).empty()) {
    std::cerr << "error: the algebra does not satisfy the Leibniz identity\n";
    return 1;
  }
  const CohomologyReport r = cohomology(f.algebra);
  std::cout << (json ? cohomology_json(f.name, r) : cohomology_text(r));
  if (rigid_mode) return r.rigidity == Rigidity::certified_rigid ? 0 : 1;
  return 0;
}

struct CatalogFlags {
  std::string family, subfamily, output;
  int n = 0, k = 0, t = 0;
  std::string alpha, beta, gamma, a;
  std::string a1, a2, a_top, a_high, b1, b2, delta2, delta3, theta_n;
};

CatalogSpec assemble_spec(const CatalogFlags& fl) {
  CatalogSpec spec;
  const auto fam = family_from_name(fl.family);
  if (!fam) throw validation_error("unknown family: " + fl.family);
  spec.family = *fam;
  spec.n = fl.n;
  spec.k = fl.k;
  spec.t = fl.t;
  if (!fl.subfamily.empty()) {
    const auto sf = subfamily_from_name(fl.subfamily);
    if (!sf) throw validation_error("unknown subfamily: " + fl.subfamily);
    spec.subfamily = *sf;
  }
  switch (spec.family) {
    case Family::RAkk:
      spec.params = split_rationals(fl.alpha);
      break;
    case Family::Rmu1:
      spec.params = split_rationals(fl.a);
      break;
    case Family::Rmu2:
      spec.params = {rat_or_zero(fl.alpha), rat_or_zero(fl.beta),
                     rat_or_zero(fl.gamma)};
      break;
    case Family::Rmu3: {
      Vec high = split_rationals(fl.a_high);
      if (high.empty() && spec.n - 2 * spec.k - 3 > 0)
        high.assign(spec.n - 2 * spec.k - 3, Rational(0));
      switch (spec.subfamily) {
        case Subfamily::I1:
          spec.params = high;
          spec.params.push_back(rat_or_zero(fl.beta));
          spec.params.push_back(rat_or_zero(fl.gamma));
          spec.params.push_back(rat_or_zero(fl.delta2));
          break;
        case Subfamily::I2:
          spec.params = high;
          spec.params.push_back(rat_or_zero(fl.b2));
          spec.params.push_back(rat_or_zero(fl.beta));
          spec.params.push_back(rat_or_zero(fl.delta3));
          spec.params.push_back(rat_or_zero(fl.theta_n));
          break;
        case Subfamily::I3:
          spec.params.push_back(rat_or_zero(fl.a2));
          for (const auto& v : high) spec.params.push_back(v);
          spec.params.push_back(rat_or_zero(fl.beta));
          break;
        case Subfamily::I4:
          spec.params = {rat_or_zero(fl.a1),     rat_or_zero(fl.a2),
                         rat_or_zero(fl.a_top),  rat_or_zero(fl.b1),
                         rat_or_zero(fl.delta2), rat_or_zero(fl.delta3),
                         rat_or_zero(fl.theta_n)};
          break;
        case Subfamily::none:
          break;
      }
      break;
    }
    default:
      break;
  }
  return spec;
}

int run_catalog(const CatalogFlags& fl) {
  const CatalogSpec spec = assemble_spec(fl);
  AlgebraFile f;
  f.name = spec_name(spec);
  f.algebra = make(spec);
  write_output(fl.output, emit_algebra_json(f));
  return 0;
}

int run_change_basis(const std::string& path, const std::string& matrix_path,
                     const std::string& out_path) {
  AlgebraFile f = read_algebra_file(path);
  const Matrix g = read_matrix_file(matrix_path);
  f.algebra = change_basis(f.algebra, g);
  write_output(out_path, emit_algebra_json(f));
  return 0;
}

int run_compare(const std::string& path_a, const std::string& path_b,
                unsigned seed, bool json) {
  const AlgebraFile fa = read_algebra_file(path_a);
  const AlgebraFile fb = read_algebra_file(path_b);
  std::string field = fingerprint_difference(fingerprint(fa.algebra, 8, seed),
                                             fingerprint(fb.algebra, 8, seed));
  if (field.empty() && verify_leibniz(fa.algebra).empty() &&
      verify_leibniz(fb.algebra).empty()) {
    const CohomologyReport ca = cohomology(fa.algebra);
    const CohomologyReport cb = cohomology(fb.algebra);
    if (ca.zl2 != cb.zl2)
      field = "cocycle_dim";
    else if (ca.bl2 != cb.bl2)
      field = "coboundary_dim";
    else if (ca.hl2 != cb.hl2)
      field = "hl2_dim";
  }
  if (json) {
    ordered_json j;
    j["verdict"] = field.empty() ? "indistinguishable" : "distinguished";
    if (field.empty())
      j["field"] = nullptr;
    else
      j["field"] = field;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << (field.empty() ? "indistinguishable"
                                : "distinguished(" + field + ")")
              << "\n";
  }
  return 0;
}

Vec terms_to_vec(const nlohmann::json& j, int dim, const std::string& what) {
  if (!j.is_array())
    throw parse_error("extension data: " + what + " is not an array");
  Vec v(dim, Rational(0));
  for (const auto& pair : j) {
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_integer() ||
        !pair[1].is_string())
      throw parse_error("extension data: " + what +
                        " entry is not an [index, rational] pair");
    const long long idx = pair[0].get<long long>();
    if (idx < 1 || idx > dim)
      throw parse_error("extension data: " + what + " index " +
                        std::to_string(idx) + " out of range 1.." +
                        std::to_string(dim));
    v[idx - 1] += rat_parse(pair[1].get<std::string>());
  }
  return v;
}

std::vector<std::vector<Vec>> vec_table(const nlohmann::json& j, int rows,
                                        int cols, int dim,
                                        const std::string& what) {
  if (!j.is_array() || int(j.size()) != rows)
    throw parse_error("extension data: '" + what + "' must list " +
                      std::to_string(rows) + " rows");
  std::vector<std::vector<Vec>> out;
  for (int r = 0; r < rows; ++r) {
    if (!j[r].is_array() || int(j[r].size()) != cols)
      throw parse_error("extension data: '" + what + "' row " +
                        std::to_string(r + 1) + " must list " +
                        std::to_string(cols) + " term lists");
    std::vector<Vec> row;
    for (int c = 0; c < cols; ++c)
      row.push_back(terms_to_vec(j[r][c], dim, what));
    out.push_back(std::move(row));
  }
  return out;
}

ExtensionSpec parse_extension_data(const std::string& text,
                                   const Algebra& nilradical,
                                   std::string& name_out) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw parse_error(std::string("extension data: ") + e.what());
  }
  if (!j.is_object())
    throw parse_error("extension data: top level is not an object");
  ExtensionSpec spec;
  spec.nilradical = nilradical;
  const int m = nilradical.dim();
  const auto js = j.find("s");
  if (js == j.end() || !js->is_number_integer() || js->get<long long>() < 1)
    throw parse_error("extension data: 's' must be a positive integer");
  spec.s = int(js->get<long long>());
  if (const auto it = j.find("name"); it != j.end()) {
    if (!it->is_string())
      throw parse_error("extension data: 'name' is not a string");
    name_out = it->get<std::string>();
  }
  if (const auto it = j.find("q_labels"); it != j.end()) {
    if (!it->is_array() || int(it->size()) != spec.s)
      throw parse_error("extension data: 'q_labels' must list s labels");
    for (const auto& l : *it) {
      if (!l.is_string())
        throw parse_error("extension data: q label is not a string");
      spec.q_labels.push_back(l.get<std::string>());
    }
  }
  const auto jr = j.find("right_action");
  if (jr == j.end() || !jr->is_array() || int(jr->size()) != spec.s)
    throw parse_error("extension data: 'right_action' must list s matrices");
  for (const auto& jm : *jr) {
    if (!jm.is_array() || int(jm.size()) != m)
      throw parse_error("extension data: right action matrix must have " +
                        std::to_string(m) + " rows");
    Matrix mat(m, m);
    for (int r = 0; r < m; ++r) {
      if (!jm[r].is_array() || int(jm[r].size()) != m)
        throw parse_error("extension data: right action row must have " +
                          std::to_string(m) + " entries");
      for (int c = 0; c < m; ++c) {
        if (!jm[r][c].is_string())
          throw parse_error(
              "extension data: right action entry is not a rational string");
        mat.at(r, c) = rat_parse(jm[r][c].get<std::string>());
      }
    }
    spec.right_action.push_back(std::move(mat));
  }
  if (const auto it = j.find("left_action"); it != j.end())
    spec.left_action = vec_table(*it, spec.s, m, m, "left_action");
  if (const auto it = j.find("qq_products"); it != j.end())
    spec.qq_products = vec_table(*it, spec.s, spec.s, m, "qq_products");
  if (const auto it = j.find("q_on_q"); it != j.end())
    spec.q_on_q = vec_table(*it, spec.s, spec.s, spec.s, "q_on_q");
  return spec;
}

int run_extend(const std::string& nilradical_path, const std::string& data_path,
               const std::string& out_path, bool json) {
  const AlgebraFile nf = read_algebra_file(nilradical_path);
  std::string name = nf.name + "-ext";
  const ExtensionSpec spec =
      parse_extension_data(read_text_file(data_path), nf.algebra, name);
  const ExtensionResult res = build_extension(spec);
  AlgebraFile out;
  out.name = name;
  out.algebra = res.algebra;
  if (out_path.empty())
    std::cout << emit_algebra_json(out);
  else
    write_text_file(out_path, emit_algebra_json(out));
  std::cout << (json ? defects_json(res.leibniz_report)
                     : defects_text(res.algebra, res.leibniz_report));
  return res.leibniz_report.empty() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  if (const char* tv = std::getenv("LEIBNIZ_LAB_THREADS")) {
    const int t = std::atoi(tv);
    if (t > 0) leibniz::set_threads(t);
  }

  CLI::App app{"exact-arithmetic laboratory for right Leibniz algebras"};
  app.require_subcommand(1);
  int exit_code = 0;

  std::string v_path;
  bool v_json = false;
  auto* verify = app.add_subcommand("verify", "check the Leibniz identity");
  verify->add_option("path", v_path, "algebra file")->required();
  verify->add_flag("--json", v_json, "machine-readable report");
  verify->callback([&] { exit_code = run_verify(v_path, v_json); });

  std::string i_path;
  unsigned i_seed = 0;
  bool i_json = false;
  auto* invariants =
      app.add_subcommand("invariants", "fingerprint and series report");
  invariants->add_option("path", i_path, "algebra file")->required();
  invariants->add_option("--seed", i_seed,
                         "seed for randomized candidate sets");
  invariants->add_flag("--json", i_json, "machine-readable report");
  invariants->callback([&] { exit_code = run_invariants(i_path, i_seed, i_json); });

  std::string c_path;
  bool c_json = false;
  auto* cohomology_cmd =
      app.add_subcommand("cohomology", "second cohomology dimensions");
  cohomology_cmd->add_option("path", c_path, "algebra file")->required();
  cohomology_cmd->add_flag("--json", c_json, "machine-readable report");
  cohomology_cmd->callback(
      [&] { exit_code = run_cohomology(c_path, c_json, false); });

  std::string r_path;
  bool r_json = false;
  auto* rigid = app.add_subcommand("rigid", "rigidity certificate");
  rigid->add_option("path", r_path, "algebra file")->required();
  rigid->add_flag("--json", r_json, "machine-readable report");
  rigid->callback([&] { exit_code = run_cohomology(r_path, r_json, true); });

  CatalogFlags fl;
  auto* catalog = app.add_subcommand("catalog", "emit a catalog algebra file");
  catalog->add_option("family", fl.family, "family name")->required();
  catalog->add_option("--n", fl.n, "defining dimension n");
  catalog->add_option("--k", fl.k, "family index k");
  catalog->add_option("--t", fl.t, "family index t");
  catalog->add_option("--subfamily", fl.subfamily, "I1|I2|I3|I4");
  catalog->add_option("--alpha", fl.alpha,
                      "alpha list (RAkk) or alpha value (Rmu2)");
  catalog->add_option("--beta", fl.beta, "beta value");
  catalog->add_option("--gamma", fl.gamma, "gamma value");
  catalog->add_option("--a", fl.a, "a_2..a_{n-2k+1} list (Rmu1)");
  catalog->add_option("--a1", fl.a1, "a_1 value");
  catalog->add_option("--a2", fl.a2, "a_2 value");
  catalog->add_option("--a-top", fl.a_top, "a_{n-2k} value");
  catalog->add_option("--a-high", fl.a_high, "a_4..a_{n-2k} list");
  catalog->add_option("--b1", fl.b1, "b_1 value");
  catalog->add_option("--b2", fl.b2, "b_2 value");
  catalog->add_option("--delta2", fl.delta2, "delta_2 value");
  catalog->add_option("--delta3", fl.delta3, "delta_3 value");
  catalog->add_option("--theta-n", fl.theta_n, "theta_n value");
  catalog->add_option("-o,--output", fl.output, "output file (default stdout)");
  catalog->callback([&] { exit_code = run_catalog(fl); });

  std::string cb_path, cb_matrix, cb_out;
  auto* change = app.add_subcommand("change-basis", "apply a basis change");
  change->alias("change_basis");
  change->add_option("path", cb_path, "algebra file")->required();
  change->add_option("matrix", cb_matrix, "matrix file, row-major rationals")
      ->required();
  change->add_option("-o,--output", cb_out, "output file (default stdout)");
  change->callback(
      [&] { exit_code = run_change_basis(cb_path, cb_matrix, cb_out); });

  std::string cmp_a, cmp_b;
  unsigned cmp_seed = 0;
  bool cmp_json = false;
  auto* compare = app.add_subcommand("compare", "invariant-based comparison");
  compare->add_option("path_a", cmp_a, "first algebra file")->required();
  compare->add_option("path_b", cmp_b, "second algebra file")->required();
  compare->add_option("--seed", cmp_seed, "seed for randomized candidate sets");
  compare->add_flag("--json", cmp_json, "machine-readable verdict");
  compare->callback(
      [&] { exit_code = run_compare(cmp_a, cmp_b, cmp_seed, cmp_json); });

  std::string e_nil, e_data, e_out;
  bool e_json = false;
  auto* extend =
      app.add_subcommand("extend", "solvable extension of a nilpotent algebra");
  extend->add_option("nilradical", e_nil, "nilpotent algebra file")->required();
  extend->add_option("data", e_data, "extension data file")->required();
  extend->add_option("-o,--output", e_out, "output file (default stdout)");
  extend->add_flag("--json", e_json, "machine-readable report");
  extend->callback(
      [&] { exit_code = run_extend(e_nil, e_data, e_out, e_json); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const leibniz::parse_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const leibniz::validation_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return exit_code;
}
