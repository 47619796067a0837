#include "leibniz/cohomology.hpp"

namespace leibniz {

namespace {

Vec unit_vec(int dim, int i) {
  Vec v(dim);
  v[i] = 1;
  return v;
}

Vec cochain_slice(const Vec& c, int n, int u, int v) {
  const std::size_t base = (std::size_t(u) * n + v) * n;
  return Vec(c.begin() + base, c.begin() + base + n);
}

// d1 generators E_{wv} (u(b_v) = b_w) feed a reducer over n^3 columns.
RowReducer coboundary_reducer(const Algebra& a) {
  const int n = a.dim();
  RowReducer red(n * n * n);
  std::vector<std::vector<std::pair<int, Rational>>> batch;
  for (int w = 0; w < n; ++w) {
    batch.clear();
    for (int v = 0; v < n; ++v) {
      std::vector<std::pair<int, Rational>> row;
      for (int b = 0; b < n; ++b)
        if (const Terms* t = a.entry(w, b))
          for (const auto& [z, c] : *t) row.emplace_back(((v * n + b) * n) + z, c);
      for (int x = 0; x < n; ++x)
        if (const Terms* t = a.entry(x, w))
          for (const auto& [z, c] : *t) row.emplace_back(((x * n + v) * n) + z, c);
      for (const auto& [key, terms] : a.table())
        for (const auto& [vv, c] : terms)
          if (vv == v) row.emplace_back(((key.first * n + key.second) * n) + w, -c);
      if (!row.empty()) batch.push_back(std::move(row));
    }
    red.add_rows(std::move(batch));
    batch = {};
  }
  return red;
}

void require_leibniz(const Algebra& a, const char* who) {
  if (!verify_leibniz(a).empty())
    throw validation_error(std::string(who) + ": the algebra does not satisfy the Leibniz identity");
}

}  // namespace

Vec coboundary_of(const Algebra& a, const Matrix& u) {
  const int n = a.dim();
  if (u.rows() != n || u.cols() != n)
    throw std::invalid_argument("coboundary_of: matrix size does not match dimension");
  Vec out(std::size_t(n) * n * n);
  for (int x = 0; x < n; ++x) {
    const Vec ux = u.col(x);
    for (int y = 0; y < n; ++y) {
      Vec val = a.bracket(ux, unit_vec(n, y));
      vec_axpy(val, rat(1), a.bracket(unit_vec(n, x), u.col(y)));
      vec_axpy(val, rat(-1), u.apply(a.bracket_basis(x, y)));
      const std::size_t base = (std::size_t(x) * n + y) * n;
      for (int z = 0; z < n; ++z) out[base + z] = val[z];
    }
  }
  return out;
}

int coboundary_dim(const Algebra& a) { return coboundary_reducer(a).rank(); }

std::vector<Vec> coboundary_basis(const Algebra& a) {
  return coboundary_reducer(a).rref_basis();
}

bool is_cocycle(const Algebra& a, const Vec& c) {
  const int n = a.dim();
  if (int(c.size()) != n * n * n)
    throw std::invalid_argument("is_cocycle: cochain size does not match dimension");
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        Vec val = a.bracket(unit_vec(n, x), cochain_slice(c, n, y, z));
        vec_axpy(val, rat(-1), a.bracket(cochain_slice(c, n, x, y), unit_vec(n, z)));
        vec_axpy(val, rat(1), a.bracket(cochain_slice(c, n, x, z), unit_vec(n, y)));
        if (const Terms* t = a.entry(y, z))
          for (const auto& [v, cc] : *t) vec_axpy(val, cc, cochain_slice(c, n, x, v));
        if (const Terms* t = a.entry(x, y))
          for (const auto& [u, cc] : *t) vec_axpy(val, -cc, cochain_slice(c, n, u, z));
        if (const Terms* t = a.entry(x, z))
          for (const auto& [u, cc] : *t) vec_axpy(val, cc, cochain_slice(c, n, u, y));
        if (!vec_is_zero(val)) return false;
      }
  return true;
}

int cocycle_dim(const Algebra& a) {
  require_leibniz(a, "cocycle_dim");
  const int n = a.dim();
  RowReducer red(n * n * n);
  // Row block per triple (x, y, z_out): the closedness condition split into
  // coordinates. Unknown c(u, v, w) sits at (u*n + v)*n + w.
  std::vector<std::vector<std::pair<int, Rational>>> rows_by_z(n);
  std::vector<std::vector<std::pair<int, Rational>>> batch;
  for (int x = 0; x < n; ++x) {
    batch.clear();
    for (int y = 0; y < n; ++y)
      for (int zi = 0; zi < n; ++zi) {
        for (auto& row : rows_by_z) row.clear();
        for (int w = 0; w < n; ++w) {
          if (const Terms* t = a.entry(x, w))  // [x, c(y,zi)]
            for (const auto& [zo, cc] : *t)
              rows_by_z[zo].emplace_back(((y * n + zi) * n) + w, cc);
          if (const Terms* t = a.entry(w, zi))  // -[c(x,y), zi]
            for (const auto& [zo, cc] : *t)
              rows_by_z[zo].emplace_back(((x * n + y) * n) + w, -cc);
          if (const Terms* t = a.entry(w, y))  // +[c(x,zi), y]
            for (const auto& [zo, cc] : *t)
              rows_by_z[zo].emplace_back(((x * n + zi) * n) + w, cc);
        }
        if (const Terms* t = a.entry(y, zi))  // +c(x, [y,zi])
          for (const auto& [v, cc] : *t)
            for (int zo = 0; zo < n; ++zo)
              rows_by_z[zo].emplace_back(((x * n + v) * n) + zo, cc);
        if (const Terms* t = a.entry(x, y))  // -c([x,y], zi)
          for (const auto& [u, cc] : *t)
            for (int zo = 0; zo < n; ++zo)
              rows_by_z[zo].emplace_back(((u * n + zi) * n) + zo, -cc);
        if (const Terms* t = a.entry(x, zi))  // +c([x,zi], y)
          for (const auto& [u, cc] : *t)
            for (int zo = 0; zo < n; ++zo)
              rows_by_z[zo].emplace_back(((u * n + y) * n) + zo, cc);
        for (int zo = 0; zo < n; ++zo)
          if (!rows_by_z[zo].empty()) batch.push_back(std::move(rows_by_z[zo]));
      }
    red.add_rows(std::move(batch));
    batch = {};
  }
  return n * n * n - red.rank();
}

CohomologyReport cohomology(const Algebra& a) {
  require_leibniz(a, "cohomology");
  CohomologyReport rep;
  rep.zl2 = cocycle_dim(a);
  rep.bl2 = coboundary_dim(a);
  rep.hl2 = rep.zl2 - rep.bl2;
  rep.rigidity = rep.hl2 == 0 ? Rigidity::certified_rigid : Rigidity::unknown;
  return rep;
}

}  // namespace leibniz
