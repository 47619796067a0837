#include "leibniz/algebra.hpp"

#include <algorithm>

namespace leibniz {

Terms to_terms(const Vec& v) {
  Terms t;
  for (int i = 0; i < int(v.size()); ++i)
    if (sgn(v[i]) != 0) t.emplace_back(i, v[i]);
  return t;
}

Vec to_dense(const Terms& t, int dim) {
  Vec v(dim);
  for (const auto& [k, c] : t) v[k] = c;
  return v;
}

Algebra::Algebra(int dim) : dim_(dim) {
  if (dim < 0) throw std::invalid_argument("Algebra: negative dimension");
  labels_.reserve(dim);
  for (int i = 0; i < dim; ++i) labels_.push_back("b" + std::to_string(i + 1));
}

Algebra::Algebra(int dim, std::vector<std::string> labels) : Algebra(dim) {
  set_labels(std::move(labels));
}

void Algebra::set_labels(std::vector<std::string> labels) {
  if (int(labels.size()) != dim_)
    throw std::invalid_argument("Algebra: label count does not match dimension");
  labels_ = std::move(labels);
}

void Algebra::check_index(int i) const {
  if (i < 0 || i >= dim_) throw std::invalid_argument("Algebra: basis index out of range");
}

void Algebra::set_bracket(int i, int j, Terms terms) {
  check_index(i);
  check_index(j);
  std::sort(terms.begin(), terms.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  Terms merged;
  for (auto& [k, c] : terms) {
    check_index(k);
    if (!merged.empty() && merged.back().first == k)
      merged.back().second += c;
    else
      merged.emplace_back(k, c);
  }
  std::erase_if(merged, [](const auto& e) { return sgn(e.second) == 0; });
  if (merged.empty())
    table_.erase({i, j});
  else
    table_[{i, j}] = std::move(merged);
}

void Algebra::add_term(int i, int j, int k, const Rational& c) {
  check_index(i);
  check_index(j);
  check_index(k);
  if (sgn(c) == 0) return;
  Terms t = table_.count({i, j}) ? table_[{i, j}] : Terms{};
  t.emplace_back(k, c);
  set_bracket(i, j, std::move(t));
}

const Terms* Algebra::entry(int i, int j) const {
  const auto it = table_.find({i, j});
  return it == table_.end() ? nullptr : &it->second;
}

Vec Algebra::bracket_basis(int i, int j) const {
  check_index(i);
  check_index(j);
  Vec v(dim_);
  if (const Terms* t = entry(i, j))
    for (const auto& [k, c] : *t) v[k] = c;
  return v;
}

Vec Algebra::bracket(const Vec& u, const Vec& v) const {
  if (int(u.size()) != dim_ || int(v.size()) != dim_)
    throw std::invalid_argument("bracket: vector size does not match dimension");
  Vec out(dim_);
  for (const auto& [key, terms] : table_) {
    if (sgn(u[key.first]) == 0 || sgn(v[key.second]) == 0) continue;
    const Rational c = u[key.first] * v[key.second];
    for (const auto& [k, d] : terms) out[k] += c * d;
  }
  return out;
}

namespace {

// L(b_i, b_j, b_k) accumulated sparsely; empty result means the identity holds.
Vec leibniz_value(const Algebra& a, int i, int j, int k) {
  Vec acc(a.dim());
  if (const Terms* t = a.entry(j, k))
    for (const auto& [m, c] : *t)
      if (const Terms* u = a.entry(i, m))
        for (const auto& [w, d] : *u) acc[w] += c * d;
  if (const Terms* t = a.entry(i, j))
    for (const auto& [m, c] : *t)
      if (const Terms* u = a.entry(m, k))
        for (const auto& [w, d] : *u) acc[w] -= c * d;
  if (const Terms* t = a.entry(i, k))
    for (const auto& [m, c] : *t)
      if (const Terms* u = a.entry(m, j))
        for (const auto& [w, d] : *u) acc[w] += c * d;
  return acc;
}

void collect_defects_for_pair(const Algebra& a, int i, int j,
                              std::vector<LeibnizDefect>& out) {
  for (int k = 0; k < a.dim(); ++k) {
    if (a.entry(j, k) == nullptr && a.entry(i, j) == nullptr &&
        a.entry(i, k) == nullptr)
      continue;
    Vec val = leibniz_value(a, i, j, k);
    if (!vec_is_zero(val)) out.push_back({i, j, k, std::move(val)});
  }
}

}  // namespace

std::vector<LeibnizDefect> verify_leibniz(const Algebra& a) {
  const int n = a.dim();
  const int nt = effective_threads();
  std::vector<LeibnizDefect> out;
  if (nt == 1) {
    // serial reference path
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) collect_defects_for_pair(a, i, j, out);
    return out;
  }
  std::vector<std::vector<LeibnizDefect>> slots(std::size_t(n) * n);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 4) num_threads(nt)
#endif
  for (long p = 0; p < long(slots.size()); ++p)
    collect_defects_for_pair(a, int(p / n), int(p % n), slots[p]);
  for (auto& s : slots)
    out.insert(out.end(), std::make_move_iterator(s.begin()),
               std::make_move_iterator(s.end()));
  return out;
}

Algebra change_basis(const Algebra& a, const Matrix& g) {
  if (g.rows() != a.dim() || g.cols() != a.dim())
    throw std::invalid_argument("change_basis: matrix size does not match dimension");
  const auto gi = inverse(g);
  if (!gi) throw std::invalid_argument("change_basis: singular basis matrix");
  Algebra out(a.dim(), a.labels());
  for (int i = 0; i < a.dim(); ++i) {
    const Vec u = g.col(i);
    for (int j = 0; j < a.dim(); ++j) {
      const Vec w = a.bracket(u, g.col(j));
      if (vec_is_zero(w)) continue;
      out.set_bracket(i, j, to_terms(gi->apply(w)));
    }
  }
  return out;
}

Algebra direct_sum(const Algebra& a, const Algebra& b) {
  std::vector<std::string> labels = a.labels();
  labels.insert(labels.end(), b.labels().begin(), b.labels().end());
  Algebra out(a.dim() + b.dim(), std::move(labels));
  for (const auto& [key, terms] : a.table()) {
    Terms t = terms;
    out.set_bracket(key.first, key.second, std::move(t));
  }
  const int off = a.dim();
  for (const auto& [key, terms] : b.table()) {
    Terms t;
    t.reserve(terms.size());
    for (const auto& [k, c] : terms) t.emplace_back(k + off, c);
    out.set_bracket(key.first + off, key.second + off, std::move(t));
  }
  return out;
}

}  // namespace leibniz
