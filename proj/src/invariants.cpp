#include "leibniz/invariants.hpp"

#include <algorithm>
#include <random>

#include "leibniz/derivations.hpp"

namespace leibniz {

namespace {

int lead_index(const Vec& v) {
  for (int i = 0; i < int(v.size()); ++i)
    if (sgn(v[i]) != 0) return i;
  return -1;
}

Vec unit_vec(int dim, int i) {
  Vec v(dim);
  v[i] = 1;
  return v;
}

}  // namespace

Subspace Subspace::whole(int ambient) {
  std::vector<Vec> units;
  units.reserve(ambient);
  for (int i = 0; i < ambient; ++i) units.push_back(unit_vec(ambient, i));
  return span(ambient, units);
}

Subspace Subspace::span(int ambient, const std::vector<Vec>& vectors) {
  RowReducer red(ambient);
  for (const Vec& v : vectors) {
    if (int(v.size()) != ambient)
      throw std::invalid_argument("Subspace: vector size does not match ambient dimension");
    red.add_row(v);
  }
  Subspace s(ambient);
  s.basis_ = red.rref_basis();
  return s;
}

bool Subspace::contains(const Vec& v) const {
  if (int(v.size()) != ambient_)
    throw std::invalid_argument("Subspace: vector size does not match ambient dimension");
  Vec w = v;
  for (const Vec& row : basis_) {
    const int l = lead_index(row);
    if (sgn(w[l]) == 0) continue;
    const Rational c = w[l];
    for (int i = l; i < ambient_; ++i)
      if (sgn(row[i]) != 0) w[i] -= c * row[i];
  }
  return vec_is_zero(w);
}

bool Subspace::contains(const Subspace& other) const {
  for (const Vec& v : other.basis_)
    if (!contains(v)) return false;
  return true;
}

Subspace Subspace::sum(const Subspace& other) const {
  if (ambient_ != other.ambient_)
    throw std::invalid_argument("Subspace: ambient dimensions differ");
  std::vector<Vec> all = basis_;
  all.insert(all.end(), other.basis_.begin(), other.basis_.end());
  return span(ambient_, all);
}

Subspace subspace_product(const Algebra& a, const Subspace& u, const Subspace& v) {
  if (u.ambient() != a.dim() || v.ambient() != a.dim())
    throw std::invalid_argument("subspace_product: ambient dimension mismatch");
  std::vector<Vec> products;
  products.reserve(std::size_t(u.dim()) * v.dim());
  for (const Vec& x : u.basis())
    for (const Vec& y : v.basis()) products.push_back(a.bracket(x, y));
  return Subspace::span(a.dim(), products);
}

namespace {

std::vector<Subspace> descending_series(const Algebra& a, bool derived) {
  const Subspace whole = Subspace::whole(a.dim());
  std::vector<Subspace> series{whole};
  while (series.back().dim() > 0) {
    const Subspace& prev = series.back();
    Subspace next = subspace_product(a, prev, derived ? prev : whole);
    const bool repeated = next == prev;
    series.push_back(std::move(next));
    if (repeated) break;
  }
  return series;
}

}  // namespace

std::vector<Subspace> lower_central_series(const Algebra& a) {
  return descending_series(a, false);
}

std::vector<Subspace> derived_series(const Algebra& a) {
  return descending_series(a, true);
}

NilpotencyStatus nilpotency_status(const Algebra& a) {
  const auto series = lower_central_series(a);
  NilpotencyStatus st;
  st.nilpotent = series.back().dim() == 0;
  if (st.nilpotent) st.index = int(series.size());
  return st;
}

SolvabilityStatus solvability_status(const Algebra& a) {
  const auto series = derived_series(a);
  SolvabilityStatus st;
  st.solvable = series.back().dim() == 0;
  if (st.solvable) st.index = int(series.size());
  return st;
}

Matrix right_mult(const Algebra& a, const Vec& x) {
  if (int(x.size()) != a.dim())
    throw std::invalid_argument("right_mult: vector size does not match dimension");
  Matrix m(a.dim(), a.dim());
  for (const auto& [key, terms] : a.table()) {
    if (sgn(x[key.second]) == 0) continue;
    for (const auto& [z, c] : terms) m.at(z, key.first) += x[key.second] * c;
  }
  return m;
}

Matrix left_mult(const Algebra& a, const Vec& x) {
  if (int(x.size()) != a.dim())
    throw std::invalid_argument("left_mult: vector size does not match dimension");
  Matrix m(a.dim(), a.dim());
  for (const auto& [key, terms] : a.table()) {
    if (sgn(x[key.first]) == 0) continue;
    for (const auto& [z, c] : terms) m.at(z, key.second) += x[key.first] * c;
  }
  return m;
}

Subspace right_annihilator(const Algebra& a) {
  const int n = a.dim();
  RowReducer red(n);
  for (int i = 0; i < n; ++i) {
    const Matrix li = left_mult(a, unit_vec(n, i));
    for (int z = 0; z < n; ++z) red.add_row(li.row(z));
  }
  return Subspace::span(n, red.nullspace());
}

Subspace center(const Algebra& a) {
  const int n = a.dim();
  RowReducer red(n);
  for (int i = 0; i < n; ++i) {
    const Vec u = unit_vec(n, i);
    const Matrix li = left_mult(a, u);
    const Matrix ri = right_mult(a, u);
    for (int z = 0; z < n; ++z) {
      red.add_row(li.row(z));
      red.add_row(ri.row(z));
    }
  }
  return Subspace::span(n, red.nullspace());
}

CharSeq char_seq_at(const Algebra& a, const Vec& x) {
  if (int(x.size()) != a.dim())
    throw std::invalid_argument("char_seq_at: vector size does not match dimension");
  const Subspace whole = Subspace::whole(a.dim());
  const Subspace l2 = subspace_product(a, whole, whole);
  if (l2.contains(x)) throw std::invalid_argument("char_seq_at: vector lies in L^2");
  const Matrix r = right_mult(a, x);
  if (!is_nilpotent_matrix(r))
    throw std::invalid_argument("char_seq_at: right multiplication is not nilpotent");
  return jordan_blocks_nilpotent(r);
}

CharSeq char_seq_max(const Algebra& a, int extra_candidates, unsigned seed) {
  if (!nilpotency_status(a).nilpotent)
    throw std::invalid_argument("char_seq_max: algebra is not nilpotent");
  const int n = a.dim();
  if (n == 0) return {};
  const Subspace whole = Subspace::whole(n);
  const Subspace l2 = subspace_product(a, whole, whole);
  std::vector<Vec> candidates;
  std::vector<int> outside;
  for (int i = 0; i < n; ++i) {
    Vec u = unit_vec(n, i);
    if (!l2.contains(u)) {
      outside.push_back(i);
      candidates.push_back(std::move(u));
    }
  }
  for (std::size_t p = 0; p < outside.size(); ++p)
    for (std::size_t q = p + 1; q < outside.size(); ++q) {
      Vec v(n);
      v[outside[p]] = 1;
      v[outside[q]] = 1;
      if (!l2.contains(v)) candidates.push_back(std::move(v));
    }
  std::mt19937 rng(seed);
  for (int t = 0; t < extra_candidates; ++t)
    for (int attempt = 0; attempt < 100; ++attempt) {
      Vec v(n);
      for (int i = 0; i < n; ++i) v[i] = rat(int(rng() % 7) - 3);
      if (!vec_is_zero(v) && !l2.contains(v)) {
        candidates.push_back(std::move(v));
        break;
      }
    }
  CharSeq best;
  for (const Vec& v : candidates) {
    CharSeq c = jordan_blocks_nilpotent(right_mult(a, v));
    if (c > best) best = std::move(c);
  }
  return best;
}

bool is_p_filiform(const Algebra& a, int p, int extra_candidates, unsigned seed) {
  const int n = a.dim();
  if (p < 0 || n - p < 1) return false;
  CharSeq expected{n - p};
  for (int i = 0; i < p; ++i) expected.push_back(1);
  return char_seq_max(a, extra_candidates, seed) == expected;
}

Algebra associated_graded(const Algebra& a) {
  const auto series = lower_central_series(a);
  if (series.back().dim() != 0)
    throw std::invalid_argument("associated_graded: algebra is not nilpotent");
  const int n = a.dim();
  std::vector<Vec> adapted;
  std::vector<int> degree;  // parallel to adapted, 1-based series degree
  for (std::size_t i = 0; i + 1 < series.size(); ++i) {
    RowReducer red(n);
    for (const Vec& b : series[i + 1].basis()) red.add_row(b);
    for (const Vec& row : series[i].basis())
      if (!red.reduces_to_zero(row)) {
        red.add_row(row);
        adapted.push_back(row);
        degree.push_back(int(i) + 1);
      }
  }
  Matrix b(n, n);
  for (int t = 0; t < n; ++t) b.set_col(t, adapted[t]);
  const Matrix binv = *inverse(b);
  std::vector<std::string> labels;
  for (int t = 0; t < n; ++t) labels.push_back("g" + std::to_string(t + 1));
  Algebra out(n, labels);
  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t) {
      const Vec w = a.bracket(adapted[s], adapted[t]);
      if (vec_is_zero(w)) continue;
      const Vec coords = binv.apply(w);
      Terms terms;
      for (int k = 0; k < n; ++k)
        if (degree[k] == degree[s] + degree[t] && sgn(coords[k]) != 0)
          terms.emplace_back(k, coords[k]);
      out.set_bracket(s, t, std::move(terms));
    }
  return out;
}

Fingerprint fingerprint(const Algebra& a, int extra_candidates, unsigned seed) {
  Fingerprint f;
  f.dim = a.dim();
  const auto lcs = lower_central_series(a);
  const auto ds = derived_series(a);
  for (const auto& s : lcs) f.lcs_dims.push_back(s.dim());
  for (const auto& s : ds) f.ds_dims.push_back(s.dim());
  f.nilpotent = lcs.back().dim() == 0;
  f.solvable = ds.back().dim() == 0;
  f.dim_ann_r = right_annihilator(a).dim();
  f.dim_center = center(a).dim();
  f.dim_der = derivation_space(a).dim();
  if (f.nilpotent) f.char_seq = char_seq_max(a, extra_candidates, seed);
  return f;
}

std::string fingerprint_difference(const Fingerprint& x, const Fingerprint& y) {
  if (x.dim != y.dim) return "dim";
  if (x.nilpotent != y.nilpotent) return "nilpotent";
  if (x.solvable != y.solvable) return "solvable";
  if (x.lcs_dims != y.lcs_dims) return "lcs_dims";
  if (x.ds_dims != y.ds_dims) return "ds_dims";
  if (x.dim_ann_r != y.dim_ann_r) return "dim_ann_r";
  if (x.dim_center != y.dim_center) return "dim_center";
  if (x.dim_der != y.dim_der) return "dim_der";
  if (x.char_seq != y.char_seq) return "char_seq";
  return "";
}

namespace {

bool series_reaches_zero(const Algebra& a, const Subspace& s) {
  Subspace cur = s;
  while (cur.dim() > 0) {
    Subspace next = subspace_product(a, cur, s);
    if (next == cur) return false;
    cur = std::move(next);
  }
  return true;
}

}  // namespace

NilradicalVerdict check_nilradical_candidate(const Algebra& a, const Subspace& n) {
  if (n.ambient() != a.dim())
    throw std::invalid_argument("check_nilradical_candidate: ambient dimension mismatch");
  NilradicalVerdict v;
  const Subspace whole = Subspace::whole(a.dim());
  v.two_sided_ideal = n.contains(subspace_product(a, n, whole)) &&
                      n.contains(subspace_product(a, whole, n));
  const bool closed = n.contains(subspace_product(a, n, n));
  v.nilpotent_subalgebra = closed && series_reaches_zero(a, n);
  if (n.dim() == a.dim()) {
    v.maximality_vacuous = true;
    v.maximality_probe = true;
    return v;
  }
  std::vector<bool> is_pivot(a.dim(), false);
  for (const Vec& row : n.basis()) is_pivot[lead_index(row)] = true;
  v.maximality_probe = true;
  for (int c = 0; c < a.dim() && v.maximality_probe; ++c) {
    if (is_pivot[c]) continue;
    Subspace s = n.sum(Subspace::span(a.dim(), {unit_vec(a.dim(), c)}));
    for (;;) {
      Subspace t = s.sum(subspace_product(a, s, whole)).sum(subspace_product(a, whole, s));
      if (t == s) break;
      s = std::move(t);
    }
    if (series_reaches_zero(a, s)) v.maximality_probe = false;
  }
  return v;
}

}  // namespace leibniz
