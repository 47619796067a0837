#include <doctest.h>

#include <random>

#include "leibniz/invariants.hpp"

using namespace leibniz;

namespace {

Vec unit(int n, int i) {
  Vec v(n);
  v[i] = 1;
  return v;
}

// nilpotent 6-dim algebra: [e_i, e_1] = e_{i+1} for i = 1..3, [e_1, f_1] = f_2,
// basis order e1..e4, f1, f2
Algebra nilpotent6() {
  Algebra a(6, {"e1", "e2", "e3", "e4", "f1", "f2"});
  a.set_bracket(0, 0, {{1, rat(1)}});
  a.set_bracket(1, 0, {{2, rat(1)}});
  a.set_bracket(2, 0, {{3, rat(1)}});
  a.set_bracket(0, 4, {{5, rat(1)}});
  return a;
}

// [f_i, x] = f_i + f_{i+1}, [f_k, x] = f_k on basis f1, f2, x
Algebra solvable_r1() {
  Algebra a(3, {"f1", "f2", "x"});
  a.set_bracket(0, 2, {{0, rat(1)}, {1, rat(1)}});
  a.set_bracket(1, 2, {{1, rat(1)}});
  return a;
}

Algebra solvable_r2() {
  Algebra a = solvable_r1();
  a.set_bracket(2, 0, {{0, rat(-1)}, {1, rat(-1)}});
  a.set_bracket(2, 1, {{1, rat(-1)}});
  return a;
}

Algebra abelian(int n) { return Algebra(n); }

}  // namespace

TEST_CASE("subspace span is canonical") {
  Subspace a = Subspace::span(3, {{rat(1), rat(1), rat(0)}, {rat(0), rat(1), rat(1)}});
  Subspace b = Subspace::span(3, {{rat(1), rat(0), rat(-1)}, {rat(0), rat(1), rat(1)}});
  CHECK(a == b);
  CHECK(a.dim() == 2);
  CHECK(a.basis()[0] == Vec{rat(1), rat(0), rat(-1)});
  CHECK(a.basis()[1] == Vec{rat(0), rat(1), rat(1)});

  CHECK(Subspace::whole(4).dim() == 4);
  CHECK(Subspace::span(4, {Vec(4)}).dim() == 0);
  CHECK_THROWS_AS(Subspace::span(3, {Vec(2)}), std::invalid_argument);
}

TEST_CASE("subspace membership and sum") {
  Subspace s = Subspace::span(3, {{rat(1), rat(0), rat(-1)}, {rat(0), rat(1), rat(1)}});
  CHECK(s.contains(Vec{rat(2), rat(3), rat(1)}));
  CHECK(!s.contains(Vec{rat(0), rat(0), rat(1)}));
  CHECK(s.contains(Subspace::span(3, {{rat(1), rat(1), rat(0)}})));
  CHECK(!s.contains(Subspace::whole(3)));
  CHECK(Subspace::whole(3).contains(s));

  Subspace line = Subspace::span(3, {{rat(0), rat(0), rat(1)}});
  CHECK(s.sum(line) == Subspace::whole(3));
  CHECK(s.sum(s) == s);
  CHECK_THROWS_AS(s.sum(Subspace::whole(2)), std::invalid_argument);
}

TEST_CASE("subspace product of the whole algebra") {
  Algebra a = nilpotent6();
  Subspace whole = Subspace::whole(6);
  Subspace l2 = subspace_product(a, whole, whole);
  CHECK(l2.dim() == 4);
  CHECK(l2 == Subspace::span(6, {unit(6, 1), unit(6, 2), unit(6, 3), unit(6, 5)}));
}

TEST_CASE("lower central and derived series") {
  Algebra a = nilpotent6();
  auto lcs = lower_central_series(a);
  std::vector<int> lcs_dims;
  for (const auto& s : lcs) lcs_dims.push_back(s.dim());
  CHECK(lcs_dims == std::vector<int>{6, 4, 2, 1, 0});
  for (std::size_t i = 0; i + 1 < lcs.size(); ++i) CHECK(lcs[i].contains(lcs[i + 1]));

  auto ds = derived_series(a);
  std::vector<int> ds_dims;
  for (const auto& s : ds) ds_dims.push_back(s.dim());
  CHECK(ds_dims == std::vector<int>{6, 4, 0});

  auto st = nilpotency_status(a);
  CHECK(st.nilpotent);
  CHECK(st.index == 5);
  auto so = solvability_status(a);
  CHECK(so.solvable);
  CHECK(so.index == 3);
}

TEST_CASE("series stop at the first repeated term") {
  Algebra r1 = solvable_r1();
  auto lcs = lower_central_series(r1);
  std::vector<int> dims;
  for (const auto& s : lcs) dims.push_back(s.dim());
  CHECK(dims == std::vector<int>{3, 2, 2});
  CHECK(lcs[1] == lcs[2]);
  CHECK(!nilpotency_status(r1).nilpotent);
  CHECK(!nilpotency_status(r1).index.has_value());

  auto ds = derived_series(r1);
  dims.clear();
  for (const auto& s : ds) dims.push_back(s.dim());
  CHECK(dims == std::vector<int>{3, 2, 0});
  CHECK(solvability_status(r1).index == 3);

  auto ab = nilpotency_status(abelian(3));
  CHECK(ab.nilpotent);
  CHECK(ab.index == 2);
}

TEST_CASE("annihilator and center") {
  Algebra a = nilpotent6();
  Subspace ann = right_annihilator(a);
  CHECK(ann == Subspace::span(6, {unit(6, 1), unit(6, 2), unit(6, 3), unit(6, 5)}));
  Subspace z = center(a);
  CHECK(z == Subspace::span(6, {unit(6, 3), unit(6, 5)}));
  CHECK(ann.contains(z));

  CHECK(right_annihilator(solvable_r1()).dim() == 2);
  CHECK(right_annihilator(solvable_r2()).dim() == 0);
  CHECK(center(abelian(4)).dim() == 4);
}

TEST_CASE("multiplication operators") {
  Algebra a = nilpotent6();
  std::mt19937 rng(11);
  for (int t = 0; t < 5; ++t) {
    Vec x(6), y(6);
    for (int i = 0; i < 6; ++i) {
      x[i] = rat(int(rng() % 7) - 3);
      y[i] = rat(int(rng() % 7) - 3);
    }
    CHECK(right_mult(a, x).apply(y) == a.bracket(y, x));
    CHECK(left_mult(a, x).apply(y) == a.bracket(x, y));
  }
  CHECK_THROWS_AS(right_mult(a, Vec(2)), std::invalid_argument);
}

TEST_CASE("characteristic sequence at a vector") {
  Algebra a = nilpotent6();
  CHECK(char_seq_at(a, unit(6, 0)) == CharSeq{4, 1, 1});
  CHECK(char_seq_at(a, unit(6, 4)) == CharSeq{2, 1, 1, 1, 1});
  Vec mix = unit(6, 0);
  mix[4] = 1;
  CHECK(char_seq_at(a, mix) == CharSeq{4, 1, 1});

  CHECK_THROWS_AS(char_seq_at(a, unit(6, 1)), std::invalid_argument);  // inside L^2
  CHECK_THROWS_AS(char_seq_at(solvable_r1(), unit(3, 2)), std::invalid_argument);
}

TEST_CASE("maximal characteristic sequence") {
  Algebra a = nilpotent6();
  CHECK(char_seq_max(a) == CharSeq{4, 1, 1});
  CHECK(char_seq_max(a, 16, 7) == CharSeq{4, 1, 1});  // candidate set independent
  CHECK(is_p_filiform(a, 2));
  CHECK(!is_p_filiform(a, 1));
  CHECK(!is_p_filiform(a, 3));

  CHECK(char_seq_max(abelian(3)) == CharSeq{1, 1, 1});
  CHECK(is_p_filiform(abelian(3), 2));
  CHECK(char_seq_max(Algebra(0)) == CharSeq{});
  CHECK_THROWS_AS(char_seq_max(solvable_r1()), std::invalid_argument);
}

TEST_CASE("associated graded algebra") {
  Algebra a = nilpotent6();
  Algebra gr = associated_graded(a);
  CHECK(gr.labels()[0] == "g1");

  // adapted basis permutation: degrees 1,1,2,2,3,4 pick e1,f1,e2,f2,e3,e4
  const int perm[6] = {0, 4, 1, 5, 2, 3};
  Matrix p(6, 6);
  for (int t = 0; t < 6; ++t) p.at(perm[t], t) = 1;
  Algebra expected = change_basis(a, p);
  expected.set_labels(gr.labels());
  CHECK(gr == expected);

  // the graded algebra keeps the series dimensions
  auto lcs_a = lower_central_series(a);
  auto lcs_g = lower_central_series(gr);
  REQUIRE(lcs_a.size() == lcs_g.size());
  for (std::size_t i = 0; i < lcs_a.size(); ++i) CHECK(lcs_a[i].dim() == lcs_g[i].dim());
  CHECK(verify_leibniz(gr).empty());

  CHECK_THROWS_AS(associated_graded(solvable_r1()), std::invalid_argument);
}

TEST_CASE("fingerprint fields and comparison order") {
  Algebra a = nilpotent6();
  Fingerprint f = fingerprint(a);
  CHECK(f.dim == 6);
  CHECK(f.lcs_dims == std::vector<int>{6, 4, 2, 1, 0});
  CHECK(f.ds_dims == std::vector<int>{6, 4, 0});
  CHECK(f.dim_ann_r == 4);
  CHECK(f.dim_center == 2);
  CHECK(f.dim_der == 9);
  CHECK(f.nilpotent);
  CHECK(f.solvable);
  REQUIRE(f.char_seq.has_value());
  CHECK(*f.char_seq == CharSeq{4, 1, 1});

  Fingerprint f1 = fingerprint(solvable_r1());
  Fingerprint f2 = fingerprint(solvable_r2());
  CHECK(!f1.nilpotent);
  CHECK(!f1.char_seq.has_value());
  CHECK(fingerprint_difference(f1, f2) == "dim_ann_r");
  CHECK(fingerprint_difference(f1, f1) == "");
  CHECK(fingerprint_difference(f1, f) == "dim");

  Fingerprint g = f;
  g.nilpotent = false;
  CHECK(fingerprint_difference(f, g) == "nilpotent");
  g = f;
  g.lcs_dims.back() = 1;
  CHECK(fingerprint_difference(f, g) == "lcs_dims");
}

TEST_CASE("nilradical candidate verdicts") {
  Algebra r1 = solvable_r1();
  Subspace nil = Subspace::span(3, {unit(3, 0), unit(3, 1)});
  NilradicalVerdict v = check_nilradical_candidate(r1, nil);
  CHECK(v.two_sided_ideal);
  CHECK(v.nilpotent_subalgebra);
  CHECK(v.maximality_probe);
  CHECK(!v.maximality_vacuous);
  CHECK(v.all_hold());

  // the whole algebra, when nilpotent, is its own nilradical
  NilradicalVerdict w = check_nilradical_candidate(abelian(3), Subspace::whole(3));
  CHECK(w.all_hold());
  CHECK(w.maximality_vacuous);

  // whole solvable algebra: ideal but not nilpotent
  NilradicalVerdict bad = check_nilradical_candidate(r1, Subspace::whole(3));
  CHECK(bad.two_sided_ideal);
  CHECK(!bad.nilpotent_subalgebra);
  CHECK(!bad.all_hold());

  // too small: f1 alone is not even an ideal, and the f-plane extends it
  NilradicalVerdict small = check_nilradical_candidate(r1, Subspace::span(3, {unit(3, 0)}));
  CHECK(!small.two_sided_ideal);
  CHECK(small.nilpotent_subalgebra);
  CHECK(!small.maximality_probe);

  // proper nilpotent ideal of a nilpotent algebra: maximality probe fails
  Algebra a = nilpotent6();
  Subspace l2 = Subspace::span(6, {unit(6, 1), unit(6, 2), unit(6, 3), unit(6, 5)});
  NilradicalVerdict inner = check_nilradical_candidate(a, l2);
  CHECK(inner.two_sided_ideal);
  CHECK(inner.nilpotent_subalgebra);
  CHECK(!inner.maximality_probe);
  CHECK(!inner.all_hold());

  CHECK_THROWS_AS(check_nilradical_candidate(a, Subspace::whole(3)), std::invalid_argument);
}
