#include "leibniz/derivations.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace leibniz {

namespace {

Vec unit_vec(int dim, int i) {
  Vec v(dim);
  v[i] = 1;
  return v;
}

}  // namespace

bool is_derivation(const Algebra& a, const Matrix& d) {
  const int n = a.dim();
  if (d.rows() != n || d.cols() != n)
    throw std::invalid_argument("is_derivation: matrix size does not match dimension");
  std::vector<Vec> cols(n), units(n);
  for (int i = 0; i < n; ++i) {
    cols[i] = d.col(i);
    units[i] = unit_vec(n, i);
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Vec lhs = d.apply(a.bracket_basis(i, j));
      Vec rhs = a.bracket(cols[i], units[j]);
      vec_axpy(rhs, rat(1), a.bracket(units[i], cols[j]));
      if (lhs != rhs) return false;
    }
  return true;
}

DerivationBasis derivation_space(const Algebra& a) {
  const int n = a.dim();
  RowReducer red(n * n);
  // Unknown u(w, v) = D[w][v] sits at index w*n + v. For each pair (i, j) the
  // constraint rows, one per output coordinate z, encode
  // D [b_i, b_j] = [D b_i, b_j] + [b_i, D b_j].
  std::vector<std::vector<std::pair<int, Rational>>> rows_by_z(n);
  std::vector<std::vector<std::pair<int, Rational>>> batch;
  for (int i = 0; i < n; ++i) {
    batch.clear();
    for (int j = 0; j < n; ++j) {
      for (auto& row : rows_by_z) row.clear();
      if (const Terms* t = a.entry(i, j))
        for (const auto& [v, c] : *t)
          for (int z = 0; z < n; ++z) rows_by_z[z].emplace_back(z * n + v, c);
      for (int w = 0; w < n; ++w) {
        if (const Terms* t = a.entry(w, j))
          for (const auto& [z, c] : *t) rows_by_z[z].emplace_back(w * n + i, -c);
        if (const Terms* t = a.entry(i, w))
          for (const auto& [z, c] : *t) rows_by_z[z].emplace_back(w * n + j, -c);
      }
      for (int z = 0; z < n; ++z)
        if (!rows_by_z[z].empty()) batch.push_back(std::move(rows_by_z[z]));
    }
    red.add_rows(std::move(batch));
    batch = {};
  }
  DerivationBasis out;
  out.n = n;
  for (const Vec& v : red.nullspace()) {
    Matrix d(n, n);
    for (int w = 0; w < n; ++w)
      for (int col = 0; col < n; ++col) d.at(w, col) = v[std::size_t(w) * n + col];
    out.basis.push_back(std::move(d));
  }
  return out;
}

namespace {

void check_square_same_size(const std::vector<Matrix>& mats) {
  for (const Matrix& m : mats)
    if (m.rows() != m.cols() || m.rows() != mats.front().rows())
      throw std::invalid_argument("nil_independence: matrices must be square and equally sized");
}

NilIndependenceVerdict commuting_exact_verdict(const std::vector<Matrix>& mats) {
  const int m = int(mats.size());
  NilIndependenceVerdict v;
  if (m == 0) {
    v.kind = NilIndependenceVerdict::Kind::certified_independent;
    return v;
  }
  check_square_same_size(mats);
  const int n = mats.front().rows();
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      if (mats[i] * mats[j] != mats[j] * mats[i])
        throw std::invalid_argument("nil_independence: matrices do not commute");
  std::vector<std::vector<Rational>> roots(m);
  for (int i = 0; i < m; ++i) {
    const RootReport rep = rational_roots(char_poly(mats[i]));
    if (!rep.splits)
      throw std::invalid_argument(
          "nil_independence: a characteristic polynomial does not split over Q");
    for (const auto& [root, mult] : rep.roots) roots[i].push_back(root);
  }
  // K[i][r] = (M_i - lambda I)^n, whose kernel is the generalized eigenspace.
  std::vector<std::vector<Matrix>> kernels(m);
  Matrix id(n, n);
  for (int i = 0; i < n; ++i) id.at(i, i) = 1;
  for (int i = 0; i < m; ++i)
    for (const Rational& lam : roots[i])
      kernels[i].push_back((mats[i] - id.scaled(lam)).power(n));
  // Joint generalized eigenspaces across all eigenvalue tuples partition Q^n;
  // each nonzero one contributes its eigenvalue tuple as a row.
  std::vector<Vec> spectrum_rows;
  std::vector<int> idx(m, 0);
  int covered = 0;
  for (;;) {
    RowReducer red(n);
    for (int i = 0; i < m; ++i)
      for (int r = 0; r < n; ++r) red.add_row(kernels[i][idx[i]].row(r));
    const int d = n - red.rank();
    if (d > 0) {
      covered += d;
      Vec row(m);
      for (int i = 0; i < m; ++i) row[i] = roots[i][idx[i]];
      spectrum_rows.push_back(std::move(row));
    }
    int pos = m - 1;
    while (pos >= 0 && ++idx[pos] == int(roots[pos].size())) idx[pos--] = 0;
    if (pos < 0) break;
  }
  if (covered != n)
    throw std::logic_error("nil_independence: joint eigenspaces do not exhaust the space");
  // A combination is nilpotent exactly when every joint eigenvalue vanishes.
  RowReducer spectrum(m);
  for (Vec& r : spectrum_rows) spectrum.add_row(r);
  const std::vector<Vec> kernel = spectrum.nullspace();
  if (kernel.empty()) {
    v.kind = NilIndependenceVerdict::Kind::certified_independent;
  } else {
    v.kind = NilIndependenceVerdict::Kind::dependent;
    v.witness = kernel.front();
  }
  return v;
}

NilIndependenceVerdict randomized_verdict(const std::vector<Matrix>& mats, int samples,
                                          unsigned seed) {
  const int m = int(mats.size());
  NilIndependenceVerdict v;
  if (m == 0) return v;
  check_square_same_size(mats);
  const int n = mats.front().rows();
  std::set<Vec> seen;
  const auto test = [&](const Vec& w) -> bool {
    if (vec_is_zero(w) || !seen.insert(w).second) return false;
    Matrix combo(n, n);
    for (int i = 0; i < m; ++i)
      if (sgn(w[i]) != 0) combo = combo + mats[i].scaled(w[i]);
    return is_nilpotent_matrix(combo);
  };
  std::vector<Vec> candidates;
  for (int i = 0; i < m; ++i) candidates.push_back(unit_vec(m, i));
  if (m <= 8) {
    const long digits[3] = {1, -1, 0};
    std::vector<int> idx(m, 0);
    for (;;) {
      Vec w(m);
      for (int i = 0; i < m; ++i) w[i] = rat(digits[idx[i]]);
      candidates.push_back(std::move(w));
      int pos = m - 1;
      while (pos >= 0 && ++idx[pos] == 3) idx[pos--] = 0;
      if (pos < 0) break;
    }
  }
  std::mt19937 rng(seed);
  for (int t = 0; t < samples; ++t) {
    Vec w(m);
    for (int i = 0; i < m; ++i) w[i] = rat(int(rng() % 9) - 4);
    candidates.push_back(std::move(w));
  }
  for (const Vec& w : candidates)
    if (test(w)) {
      v.kind = NilIndependenceVerdict::Kind::dependent;
      v.witness = w;
      return v;
    }
  v.kind = NilIndependenceVerdict::Kind::no_dependence_found;
  return v;
}

}  // namespace

NilIndependenceVerdict nil_independence(const std::vector<Matrix>& mats,
                                        NilIndependenceMode mode, int samples,
                                        unsigned seed) {
  if (mode == NilIndependenceMode::commuting_exact) return commuting_exact_verdict(mats);
  return randomized_verdict(mats, samples, seed);
}

ExtensionResult build_extension(const ExtensionSpec& spec) {
  const Algebra& nil = spec.nilradical;
  const int m = nil.dim();
  const int s = spec.s;
  if (s < 0) throw std::invalid_argument("build_extension: negative complement dimension");
  if (int(spec.right_action.size()) != s)
    throw std::invalid_argument("build_extension: right_action must hold one matrix per q");
  const auto check_block = [&](const std::vector<std::vector<Vec>>& block, int inner,
                               int veclen, const char* name) {
    if (block.empty()) return;
    if (int(block.size()) != s)
      throw std::invalid_argument(std::string("build_extension: bad outer size of ") + name);
    for (const auto& per_j : block) {
      if (per_j.empty()) continue;
      if (int(per_j.size()) != inner)
        throw std::invalid_argument(std::string("build_extension: bad inner size of ") + name);
      for (const Vec& v : per_j) {
        if (v.empty()) continue;
        if (int(v.size()) != veclen)
          throw std::invalid_argument(std::string("build_extension: bad vector size in ") + name);
      }
    }
  };
  check_block(spec.left_action, m, m, "left_action");
  check_block(spec.qq_products, s, m, "qq_products");
  check_block(spec.q_on_q, s, s, "q_on_q");
  for (int j = 0; j < s; ++j) {
    const Matrix& d = spec.right_action[j];
    if (d.rows() != m || d.cols() != m)
      throw std::invalid_argument("build_extension: right_action matrix size mismatch");
    if (!is_derivation(nil, d))
      throw validation_error("build_extension: right action " + std::to_string(j + 1) +
                             " is not a derivation of the nilradical");
  }
  if (!spec.q_labels.empty() && int(spec.q_labels.size()) != s)
    throw std::invalid_argument("build_extension: q_labels size mismatch");
  std::vector<std::string> labels = nil.labels();
  if (!spec.q_labels.empty()) {
    labels.insert(labels.end(), spec.q_labels.begin(), spec.q_labels.end());
  } else if (s == 1) {
    labels.push_back("x");
  } else {
    for (int j = 0; j < s; ++j) labels.push_back("x" + std::to_string(j + 1));
  }
  Algebra out(m + s, labels);
  for (const auto& [key, terms] : nil.table()) out.set_bracket(key.first, key.second, terms);
  for (int j = 0; j < s; ++j)
    for (int i = 0; i < m; ++i) {
      out.set_bracket(i, m + j, to_terms(spec.right_action[j].col(i)));
      if (!spec.left_action.empty() && !spec.left_action[j].empty() &&
          !spec.left_action[j][i].empty())
        out.set_bracket(m + j, i, to_terms(spec.left_action[j][i]));
    }
  for (int j = 0; j < s; ++j)
    for (int t = 0; t < s; ++t) {
      Terms terms;
      if (!spec.qq_products.empty() && !spec.qq_products[j].empty() &&
          !spec.qq_products[j][t].empty())
        terms = to_terms(spec.qq_products[j][t]);
      if (!spec.q_on_q.empty() && !spec.q_on_q[j].empty() && !spec.q_on_q[j][t].empty())
        for (const auto& [idx, c] : to_terms(spec.q_on_q[j][t]))
          terms.emplace_back(m + idx, c);
      if (!terms.empty()) out.set_bracket(m + j, m + t, std::move(terms));
    }
  ExtensionResult res{std::move(out), {}};
  res.leibniz_report = verify_leibniz(res.algebra);
  return res;
}

}  // namespace leibniz
