#include "leibniz/catalog.hpp"

#include <algorithm>
#include <array>
#include <random>

namespace leibniz {

namespace {

void require(bool ok, const std::string& msg) {
  if (!ok) throw validation_error(msg);
}

std::vector<std::string> numbered(const std::string& stem, int count) {
  std::vector<std::string> out;
  out.reserve(count);
  for (int i = 1; i <= count; ++i) out.push_back(stem + std::to_string(i));
  return out;
}

std::vector<std::string> ef_labels(int ne, int nf, bool with_x = false) {
  std::vector<std::string> out = numbered("e", ne);
  std::vector<std::string> fs = numbered("f", nf);
  out.insert(out.end(), fs.begin(), fs.end());
  if (with_x) out.push_back("x");
  return out;
}

Rational pow_rat(const Rational& x, int e) {
  Rational out = rat(1);
  for (int i = 0; i < e; ++i) out *= x;
  return out;
}

std::string join_rats(const Vec& v) {
  std::string out;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += rat_str(v[i]);
  }
  return out;
}

// Shared nilpotent rows; e count is n-2k, f count is 2k.
void mu1_rows(Algebra& a, int n, int k) {
  const int m = n - 2 * k;
  for (int i = 1; i <= m - 1; ++i) a.set_bracket(i - 1, 0, {{i, rat(1)}});
  for (int j = 1; j <= k; ++j)
    a.set_bracket(0, m + j - 1, {{m + k + j - 1, rat(1)}});
}

void mu2_rows(Algebra& a, int n, int k) {
  const int m = n - 2 * k;
  for (int i = 1; i <= m - 1; ++i) a.set_bracket(i - 1, 0, {{i, rat(1)}});
  a.set_bracket(0, m, {{1, rat(1)}, {m + k, rat(1)}});
  for (int i = 2; i <= m - 1; ++i) a.set_bracket(i - 1, m, {{i, rat(1)}});
  for (int j = 2; j <= k; ++j)
    a.set_bracket(0, m + j - 1, {{m + k + j - 1, rat(1)}});
}

void check_mu_params(const std::string& who, int n, int k, int p_offset) {
  require(k >= 1, who + ": k >= 1 violated");
  require(n - 2 * k - p_offset >= 4,
          who + ": n-2k" + (p_offset ? "-1" : "") + " >= 4 violated");
}

}  // namespace

std::string family_name(Family f) {
  switch (f) {
    case Family::A: return "A";
    case Family::l2: return "l2";
    case Family::r2: return "r2";
    case Family::Lt: return "Lt";
    case Family::R1: return "R1";
    case Family::R2: return "R2";
    case Family::RAkk: return "RAkk";
    case Family::mu1: return "mu1";
    case Family::mu2: return "mu2";
    case Family::mu3: return "mu3";
    case Family::mu3_original: return "mu3_original";
    case Family::Rmu1: return "Rmu1";
    case Family::Rmu2: return "Rmu2";
    case Family::Rmu3: return "Rmu3";
  }
  throw std::logic_error("family_name: unhandled family");
}

std::optional<Family> family_from_name(const std::string& s) {
  static const Family all[] = {
      Family::A,    Family::l2,   Family::r2,           Family::Lt,
      Family::R1,   Family::R2,   Family::RAkk,         Family::mu1,
      Family::mu2,  Family::mu3,  Family::mu3_original, Family::Rmu1,
      Family::Rmu2, Family::Rmu3};
  for (Family f : all)
    if (family_name(f) == s) return f;
  return std::nullopt;
}

std::string subfamily_name(Subfamily s) {
  switch (s) {
    case Subfamily::none: return "none";
    case Subfamily::I1: return "I1";
    case Subfamily::I2: return "I2";
    case Subfamily::I3: return "I3";
    case Subfamily::I4: return "I4";
  }
  throw std::logic_error("subfamily_name: unhandled subfamily");
}

std::optional<Subfamily> subfamily_from_name(const std::string& s) {
  for (Subfamily sf :
       {Subfamily::none, Subfamily::I1, Subfamily::I2, Subfamily::I3, Subfamily::I4})
    if (subfamily_name(sf) == s) return sf;
  return std::nullopt;
}

Algebra make_abelian(int k) {
  require(k >= 1, "A: k >= 1 violated");
  return Algebra(k, numbered("f", k));
}

Algebra make_l2() {
  Algebra a(2, {"e", "x"});
  a.set_bracket(0, 1, {{0, rat(1)}});
  return a;
}

Algebra make_r2() {
  Algebra a = make_l2();
  a.set_bracket(1, 0, {{0, rat(-1)}});
  return a;
}

Algebra make_lt(int k, int t) {
  require(k >= 1, "Lt: k >= 1 violated");
  require(t >= 0 && t <= k, "Lt: 0 <= t <= k violated");
  const int s = k - t;
  std::vector<std::string> labels = numbered("e", t);
  for (const auto& l : numbered("x", t)) labels.push_back(l);
  for (const auto& l : numbered("y", s)) labels.push_back(l);
  for (const auto& l : numbered("f", s)) labels.push_back(l);
  Algebra a(2 * k, std::move(labels));
  for (int i = 1; i <= t; ++i)
    a.set_bracket(i - 1, t + i - 1, {{i - 1, rat(1)}});
  for (int j = 1; j <= s; ++j) {
    const int y = 2 * t + j - 1, f = 2 * t + s + j - 1;
    a.set_bracket(f, y, {{f, rat(1)}});
    a.set_bracket(y, f, {{f, rat(-1)}});
  }
  return a;
}

Algebra make_r1(int k) {
  require(k >= 1, "R1: k >= 1 violated");
  Algebra a(k + 1, ef_labels(0, k, true));
  for (int i = 1; i <= k - 1; ++i)
    a.set_bracket(i - 1, k, {{i - 1, rat(1)}, {i, rat(1)}});
  a.set_bracket(k - 1, k, {{k - 1, rat(1)}});
  return a;
}

Algebra make_r2k(int k) {
  Algebra a = make_r1(k);
  for (int i = 1; i <= k - 1; ++i)
    a.set_bracket(k, i - 1, {{i - 1, rat(-1)}, {i, rat(-1)}});
  a.set_bracket(k, k - 1, {{k - 1, rat(-1)}});
  return a;
}

Algebra make_rakk(int k, const Vec& alpha) {
  require(k >= 1, "RAkk: k >= 1 violated");
  require(int(alpha.size()) == k, "RAkk: expected k alpha parameters");
  std::vector<std::string> labels = numbered("f", k);
  for (const auto& l : numbered("x", k)) labels.push_back(l);
  Algebra a(2 * k, std::move(labels));
  for (int i = 1; i <= k; ++i) {
    const Rational& al = alpha[i - 1];
    require(al == rat(0) || al == rat(-1),
            "RAkk: alpha_" + std::to_string(i) + " in {0,-1} violated");
    a.set_bracket(i - 1, k + i - 1, {{i - 1, rat(1)}});
    if (sgn(al) != 0) a.set_bracket(k + i - 1, i - 1, {{i - 1, al}});
  }
  return a;
}

Algebra make_mu1(int n, int k) {
  check_mu_params("mu1", n, k, 0);
  Algebra a(n, ef_labels(n - 2 * k, 2 * k));
  mu1_rows(a, n, k);
  return a;
}

Algebra make_mu2(int n, int k) {
  check_mu_params("mu2", n, k, 0);
  Algebra a(n, ef_labels(n - 2 * k, 2 * k));
  mu2_rows(a, n, k);
  return a;
}

Algebra make_mu3(int n, int k) {
  check_mu_params("mu3", n, k, 1);
  const int m = n - 2 * k;
  Algebra a(n, ef_labels(m, 2 * k));
  a.set_bracket(0, 0, {{2, rat(1)}});
  for (int i = 2; i <= m - 1; ++i) a.set_bracket(i - 1, 0, {{i, rat(1)}});
  for (int j = 1; j <= k; ++j) {
    a.set_bracket(0, m + j - 1, {{m + k + j - 1, rat(1)}});
    a.set_bracket(1, m + j - 1, {{m + k + j - 1, rat(1)}});
  }
  return a;
}

Algebra make_mu3_original(int n, int k) {
  check_mu_params("mu3_original", n, k, 1);
  const int m = n - 2 * k - 1;
  Algebra a(n, ef_labels(m, 2 * k + 1));
  for (int i = 1; i <= m - 1; ++i) a.set_bracket(i - 1, 0, {{i, rat(1)}});
  for (int j = 1; j <= k; ++j)
    a.set_bracket(0, m + j - 1, {{m + k + j, rat(1)}});
  for (int i = 1; i <= m - 1; ++i)
    a.set_bracket(i - 1, m + k, {{i, rat(1)}});
  return a;
}

Algebra make_rmu1(int n, int k, const Vec& a_params) {
  check_mu_params("Rmu1", n, k, 0);
  const int m = n - 2 * k;
  require(int(a_params.size()) == m,
          "Rmu1: expected n-2k parameters a_2..a_{n-2k+1}");
  const auto ap = [&](int idx) -> const Rational& { return a_params[idx - 2]; };
  Algebra a(n + 1, ef_labels(m, 2 * k, true));
  mu1_rows(a, n, k);
  const int x = n;
  for (int i = 1; i <= m; ++i) {
    Terms t;
    for (int j = i + 1; j <= m; ++j) t.emplace_back(j - 1, ap(j - i + 1));
    a.set_bracket(i - 1, x, std::move(t));
  }
  for (int i = 1; i <= 2 * k; ++i) {
    Terms t{{m + i - 1, rat(1)}};
    if (i != k && i != 2 * k) t.emplace_back(m + i, rat(1));
    a.set_bracket(m + i - 1, x, std::move(t));
  }
  for (int i = 1; i <= k; ++i) {
    Terms t{{m + i - 1, rat(-1)}};
    if (i != k) t.emplace_back(m + i, rat(-1));
    a.set_bracket(x, m + i - 1, std::move(t));
  }
  a.set_bracket(x, x, {{m - 1, ap(m + 1)}});
  return a;
}

Algebra make_rmu2(int n, int k, const Rational& alpha, const Rational& beta,
                  const Rational& gamma) {
  check_mu_params("Rmu2", n, k, 0);
  const int m = n - 2 * k;
  Algebra a(n + 1, ef_labels(m, 2 * k, true));
  mu2_rows(a, n, k);
  const int x = n;
  a.set_bracket(0, x, {{m, rat(1)}, {m + k, alpha}});
  a.set_bracket(1, x, {{1, rat(1)}, {m + k, rat(1)}});
  for (int i = 3; i <= m; ++i) a.set_bracket(i - 1, x, {{i - 1, rat(i - 1)}});
  for (int i = 1; i <= k; ++i) {
    Terms t{{m + i - 1, rat(1)}};
    if (i != k) t.emplace_back(m + i, rat(1));
    a.set_bracket(m + i - 1, x, Terms(t));
    for (auto& [w, c] : t) c = -c;
    a.set_bracket(x, m + i - 1, std::move(t));
  }
  // The second f-block rows collapse at k = 1: the Leibniz identity on
  // (e_1, f_1, x) forces [f_2, x] = 0 there.
  if (k >= 2) {
    a.set_bracket(m + k, x, {{m + k + 1, rat(1)}});
    for (int i = k + 2; i <= 2 * k - 1; ++i)
      a.set_bracket(m + i - 1, x, {{m + i - 1, rat(1)}, {m + i, rat(1)}});
    a.set_bracket(m + 2 * k - 1, x, {{m + 2 * k - 1, rat(1)}});
  }
  Terms xe{{m, rat(-1)}};
  for (int i = 1; i <= k; ++i)
    xe.emplace_back(m + k + i - 1, (i % 2 ? beta : -beta));
  a.set_bracket(x, 0, std::move(xe));
  a.set_bracket(x, x, {{m + k, gamma}});
  return a;
}

std::vector<std::string> validate_I(int n, int k, const Rmu3Params& p) {
  const int m = n - 2 * k;
  if (int(p.a_high.size()) != std::max(0, m - 3) || int(p.theta.size()) != k)
    throw std::invalid_argument("validate_I: parameter vector sizes do not match (n,k)");
  std::vector<std::string> out;
  const Rational theta_n = p.theta[k - 1];
  const Rational a_top = p.a_high.back();
  if (sgn((p.a1 + p.a2) * p.gamma) != 0) out.push_back("(a1+a2)*gamma = 0");
  if (sgn(rat(m - 2) * p.a1 * p.gamma) != 0)
    out.push_back("(n-2k-2)*a1*gamma = 0");
  if (p.delta1 != -p.a1 * a_top) out.push_back("delta1 = -a1*a(n-2k)");
  const Rational rhs = pow_rat(rat(-1), k - 1) * pow_rat(p.a2 + rat(1), k) * theta_n;
  if (p.a1 * p.b2 != rhs)
    out.push_back("a1*b2 = (-1)^(k-1)*(a2+1)^k*theta(n)");
  for (int i = 1; i <= k - 1; ++i)
    if (p.theta[k - 1 - i] != pow_rat(-(p.a2 + rat(1)), i) * theta_n)
      out.push_back("theta(n-i) = (-1)^i*(a2+1)^i*theta(n) at i=" +
                    std::to_string(i));
  return out;
}

Rmu3Params rmu3_subfamily_params(int n, int k, Subfamily sf, const Vec& params) {
  check_mu_params("Rmu3", n, k, 1);
  const int m = n - 2 * k;
  const int nh = m - 3;  // a_4..a_{n-2k}
  Rmu3Params p;
  p.a1 = p.a2 = p.b1 = p.b2 = p.beta = p.gamma = rat(0);
  p.delta1 = p.delta2 = p.delta3 = rat(0);
  p.a_high.assign(nh, rat(0));
  p.theta.assign(k, rat(0));
  size_t pos = 0;
  const auto next = [&]() -> const Rational& {
    if (pos >= params.size())
      throw validation_error("Rmu3: too few subfamily parameters");
    return params[pos++];
  };
  switch (sf) {
    case Subfamily::I1:
      for (int i = 0; i < nh; ++i) p.a_high[i] = next();
      p.beta = next();
      p.gamma = next();
      p.delta2 = next();
      break;
    case Subfamily::I2:
      p.a2 = rat(-1);
      for (int i = 0; i < nh; ++i) p.a_high[i] = next();
      p.b2 = next();
      p.beta = next();
      p.delta3 = next();
      p.theta[k - 1] = next();
      break;
    case Subfamily::I3:
      p.a2 = next();
      require(p.a2 != rat(0) && p.a2 != rat(-1),
              "Rmu3 I3: a2 outside {-1,0} violated");
      for (int i = 0; i < nh; ++i) p.a_high[i] = next();
      p.beta = next();
      break;
    case Subfamily::I4: {
      p.a1 = next();
      require(sgn(p.a1) != 0, "Rmu3 I4: a1 nonzero violated");
      p.a2 = next();
      p.a_high[nh - 1] = next();
      p.b1 = next();
      p.delta2 = next();
      p.delta3 = next();
      const Rational theta_n = next();
      p.theta[k - 1] = theta_n;
      for (int i = 1; i <= k - 1; ++i)
        p.theta[k - 1 - i] = pow_rat(-(p.a2 + rat(1)), i) * theta_n;
      p.delta1 = -p.a1 * p.a_high[nh - 1];
      p.b2 = pow_rat(rat(-1), k - 1) * pow_rat(p.a2 + rat(1), k) * theta_n / p.a1;
      break;
    }
    case Subfamily::none:
      throw validation_error("Rmu3: subfamily required");
  }
  if (pos != params.size())
    throw validation_error("Rmu3: too many subfamily parameters");
  return p;
}

Algebra make_rmu3(int n, int k, const Rmu3Params& p) {
  check_mu_params("Rmu3", n, k, 1);
  const std::vector<std::string> violated = validate_I(n, k, p);
  if (!violated.empty()) {
    std::string msg = "Rmu3: violated";
    for (const auto& v : violated) msg += " [" + v + "]";
    throw validation_error(msg);
  }
  const int m = n - 2 * k;
  const auto ah = [&](int idx) -> const Rational& { return p.a_high[idx - 4]; };
  Algebra a(n + 1, ef_labels(m, 2 * k, true));
  const int x = n;
  for (int i = 2; i <= m - 1; ++i) a.set_bracket(i - 1, 0, {{i, rat(1)}});
  for (int i = 1; i <= k; ++i)
    a.set_bracket(1, m + i - 1, {{m + k + i - 1, rat(1)}});
  a.set_bracket(0, x, {{0, p.a1}, {m - 1, ah(m)}, {m, p.b1}, {m + k, p.b2}});
  {
    Terms t{{1, p.a1 + p.a2}};
    for (int i = 4; i <= m - 1; ++i) t.emplace_back(i - 1, ah(i));
    t.emplace_back(m - 1, p.beta);
    a.set_bracket(1, x, std::move(t));
  }
  {
    Terms t{{2, rat(2) * p.a1 + p.a2}};
    for (int i = 5; i <= m; ++i) t.emplace_back(i - 1, ah(i - 1));
    t.emplace_back(m + k, p.b1);
    a.set_bracket(2, x, std::move(t));
  }
  for (int i = 4; i <= m; ++i) {
    Terms t{{i - 1, rat(i - 1) * p.a1 + p.a2}};
    for (int j = i + 2; j <= m; ++j) t.emplace_back(j - 1, ah(j - i + 2));
    a.set_bracket(i - 1, x, std::move(t));
  }
  for (int i = 1; i <= k; ++i) {
    Terms t{{m + i - 1, rat(1)}};
    if (i != k) t.emplace_back(m + i, rat(1));
    a.set_bracket(m + i - 1, x, Terms(t));
    for (auto& [w, c] : t) c = -c;
    a.set_bracket(x, m + i - 1, std::move(t));
  }
  const Rational diag = p.a1 + p.a2 + rat(1);
  for (int i = 1; i <= k - 1; ++i)
    a.set_bracket(m + k + i - 1, x, {{m + k + i - 1, diag}, {m + k + i, rat(1)}});
  a.set_bracket(m + 2 * k - 1, x, {{m + 2 * k - 1, diag}});
  {
    Terms t{{0, -p.a1}, {m, -p.b1}};
    for (int i = 1; i <= k; ++i) t.emplace_back(m + k + i - 1, p.theta[i - 1]);
    a.set_bracket(x, 0, std::move(t));
  }
  a.set_bracket(x, 1, {{m - 1, p.gamma}});
  a.set_bracket(x, x, {{m - 2, p.delta1}, {m - 1, p.delta2}, {m + k, p.delta3}});
  return a;
}

Algebra make(const CatalogSpec& spec) {
  switch (spec.family) {
    case Family::A: return make_abelian(spec.k);
    case Family::l2: return make_l2();
    case Family::r2: return make_r2();
    case Family::Lt: return make_lt(spec.k, spec.t);
    case Family::R1: return make_r1(spec.k);
    case Family::R2: return make_r2k(spec.k);
    case Family::RAkk: return make_rakk(spec.k, spec.params);
    case Family::mu1: return make_mu1(spec.n, spec.k);
    case Family::mu2: return make_mu2(spec.n, spec.k);
    case Family::mu3: return make_mu3(spec.n, spec.k);
    case Family::mu3_original: return make_mu3_original(spec.n, spec.k);
    case Family::Rmu1: return make_rmu1(spec.n, spec.k, spec.params);
    case Family::Rmu2:
      require(spec.params.size() == 3, "Rmu2: expected 3 parameters alpha,beta,gamma");
      return make_rmu2(spec.n, spec.k, spec.params[0], spec.params[1],
                       spec.params[2]);
    case Family::Rmu3:
      return make_rmu3(spec.n, spec.k,
                       rmu3_subfamily_params(spec.n, spec.k, spec.subfamily,
                                             spec.params));
  }
  throw std::logic_error("make: unhandled family");
}

std::string spec_name(const CatalogSpec& spec) {
  const std::string nk =
      "n=" + std::to_string(spec.n) + ",k=" + std::to_string(spec.k);
  switch (spec.family) {
    case Family::A: return "A(k=" + std::to_string(spec.k) + ")";
    case Family::l2: return "l2";
    case Family::r2: return "r2";
    case Family::Lt:
      return "Lt(k=" + std::to_string(spec.k) + ",t=" + std::to_string(spec.t) + ")";
    case Family::R1: return "R1(k=" + std::to_string(spec.k) + ")";
    case Family::R2: return "R2(k=" + std::to_string(spec.k) + ")";
    case Family::RAkk:
      return "RAkk(k=" + std::to_string(spec.k) + ",alpha=" + join_rats(spec.params) + ")";
    case Family::mu1: return "mu1(" + nk + ")";
    case Family::mu2: return "mu2(" + nk + ")";
    case Family::mu3: return "mu3(" + nk + ")";
    case Family::mu3_original: return "mu3_original(" + nk + ")";
    case Family::Rmu1: return "Rmu1(" + nk + ",a=" + join_rats(spec.params) + ")";
    case Family::Rmu2:
      return "Rmu2(" + nk + ",alpha=" + rat_str(spec.params[0]) + ",beta=" +
             rat_str(spec.params[1]) + ",gamma=" + rat_str(spec.params[2]) + ")";
    case Family::Rmu3:
      return "Rmu3(" + nk + "," + subfamily_name(spec.subfamily) +
             ",params=" + join_rats(spec.params) + ")";
  }
  throw std::logic_error("spec_name: unhandled family");
}

std::vector<int> nilradical_indices(const CatalogSpec& spec) {
  const auto range = [](int lo, int count) {
    std::vector<int> out;
    for (int i = 0; i < count; ++i) out.push_back(lo + i);
    return out;
  };
  switch (spec.family) {
    case Family::A: return range(0, spec.k);
    case Family::l2:
    case Family::r2: return {0};
    case Family::Lt: {
      const int t = spec.t, s = spec.k - t;
      std::vector<int> out = range(0, t);
      for (int i = 0; i < s; ++i) out.push_back(2 * t + s + i);
      return out;
    }
    case Family::R1:
    case Family::R2:
    case Family::RAkk: return range(0, spec.k);
    case Family::mu1:
    case Family::mu2:
    case Family::mu3:
    case Family::mu3_original: return range(0, spec.n);
    case Family::Rmu1:
    case Family::Rmu2:
    case Family::Rmu3: return range(0, spec.n);
  }
  throw std::logic_error("nilradical_indices: unhandled family");
}

namespace {

Rational draw_small(std::mt19937& rng) { return rat(int(rng() % 7) - 3); }

}  // namespace

std::vector<CatalogSpec> list_family_instances(Family family, const Grid& grid) {
  std::vector<CatalogSpec> out;
  std::mt19937 rng(grid.seed);
  const auto mu_grid = [&](int p_offset) {
    std::vector<std::pair<int, int>> nk;
    for (int n = 6 + p_offset; n <= grid.max_n; ++n)
      for (int k = 1; n - 2 * k - p_offset >= 4; ++k) nk.emplace_back(n, k);
    return nk;
  };
  switch (family) {
    case Family::A:
      for (int k = 1; k <= grid.max_n; ++k)
        out.push_back({family, 0, k, 0, Subfamily::none, {}});
      break;
    case Family::l2:
    case Family::r2:
      out.push_back({family, 0, 0, 0, Subfamily::none, {}});
      break;
    case Family::Lt:
      for (int k = 1; k <= std::min(grid.max_k, grid.max_n / 2); ++k)
        for (int t = 0; t <= k; ++t)
          out.push_back({family, 0, k, t, Subfamily::none, {}});
      break;
    case Family::R1:
    case Family::R2:
      for (int k = 1; k <= std::min(grid.max_k, grid.max_n - 1); ++k)
        out.push_back({family, 0, k, 0, Subfamily::none, {}});
      break;
    case Family::RAkk:
      for (int k = 1; k <= std::min(grid.max_k, grid.max_n / 2); ++k) {
        if (k <= 4) {
          for (int b = 0; b < (1 << k); ++b) {
            Vec alpha;
            for (int i = 1; i <= k; ++i)
              alpha.push_back((b >> (k - i)) & 1 ? rat(-1) : rat(0));
            out.push_back({family, 0, k, 0, Subfamily::none, std::move(alpha)});
          }
        } else {
          for (int s = 0; s < grid.samples; ++s) {
            Vec alpha;
            for (int i = 0; i < k; ++i)
              alpha.push_back(rng() % 2 ? rat(-1) : rat(0));
            out.push_back({family, 0, k, 0, Subfamily::none, std::move(alpha)});
          }
        }
      }
      break;
    case Family::mu1:
    case Family::mu2:
      for (auto [n, k] : mu_grid(0))
        out.push_back({family, n, k, 0, Subfamily::none, {}});
      break;
    case Family::mu3:
    case Family::mu3_original:
      for (auto [n, k] : mu_grid(1))
        out.push_back({family, n, k, 0, Subfamily::none, {}});
      break;
    case Family::Rmu1:
      for (auto [n, k] : mu_grid(0))
        for (int s = 0; s < grid.samples; ++s) {
          Vec a;
          for (int i = 0; i < n - 2 * k; ++i) a.push_back(draw_small(rng));
          out.push_back({family, n, k, 0, Subfamily::none, std::move(a)});
        }
      break;
    case Family::Rmu2:
      for (auto [n, k] : mu_grid(0))
        for (int s = 0; s < grid.samples; ++s) {
          Vec params;
          for (int i = 0; i < 3; ++i) params.push_back(draw_small(rng));
          out.push_back({family, n, k, 0, Subfamily::none, std::move(params)});
        }
      break;
    case Family::Rmu3: {
      int rot = 0;
      for (auto [n, k] : mu_grid(1))
        for (int s = 0; s < grid.samples; ++s) {
          const int nh = n - 2 * k - 3;
          const Subfamily sf = std::array{Subfamily::I1, Subfamily::I2,
                                          Subfamily::I3, Subfamily::I4}[rot++ % 4];
          Vec params;
          switch (sf) {
            case Subfamily::I1:
              for (int i = 0; i < nh + 3; ++i) params.push_back(draw_small(rng));
              break;
            case Subfamily::I2:
              for (int i = 0; i < nh + 4; ++i) params.push_back(draw_small(rng));
              break;
            case Subfamily::I3: {
              Rational a2 = draw_small(rng);
              while (sgn(a2) == 0 || a2 == rat(-1)) a2 = draw_small(rng);
              params.push_back(a2);
              for (int i = 0; i < nh + 1; ++i) params.push_back(draw_small(rng));
              break;
            }
            case Subfamily::I4: {
              Rational a1 = draw_small(rng);
              while (sgn(a1) == 0) a1 = draw_small(rng);
              params.push_back(a1);
              for (int i = 0; i < 6; ++i) params.push_back(draw_small(rng));
              break;
            }
            case Subfamily::none: break;
          }
          out.push_back({family, n, k, 0, sf, std::move(params)});
        }
      break;
    }
  }
  return out;
}

}  // namespace leibniz
