#include "pa/analysis.hpp"

#include <cmath>
#include <set>

#include "pa/gns.hpp"
#include "pa/tl.hpp"

namespace pa {

namespace {

void need(bool ok, const std::string& msg) {
  if (!ok) throw PreconditionError(msg);
}

Ring numeric_ring(const Ring& r) { return r.mode() == Mode::symbolic ? Ring::floating(2.5) : r; }

Element to_numeric(const Element& x, const Ring& target) {
  if (x.ring().mode() == Mode::symbolic) return x.specialize(target);
  return x;
}

std::string ring_param(const Ring& r) { return r.describe(); }

// Linear maps P_k -> P_t agree on every basis diagram.
bool maps_agree(const Tangle& a, const Tangle& b, const Ring& ring, int in_colour, const Scalar& scale) {
  for (const auto& d : enumerate_diagrams(in_colour)) {
    Element x = Element::of(ring, d);
    if (evaluate(a, x) != evaluate(b, x) * scale) return false;
  }
  return true;
}

// Caps box points {lo, lo+1} of a colour-t output.
Tangle cap_pair(int t, int lo) {
  Tangle c(t - 1, {t});
  c.join({1, lo}, {1, lo + 1});
  for (int p = 1; p < lo; ++p) c.join({0, p}, {1, p});
  for (int p = lo + 2; p <= 2 * t; ++p) c.join({0, p - 2}, {1, p});
  return c;
}

// Caps {1,2}, {3,6}, {4,5} of a colour k+3 output.
Tangle triple_cap(int k) {
  Tangle c(k, {k + 3});
  c.join({1, 1}, {1, 2});
  c.join({1, 3}, {1, 6});
  c.join({1, 4}, {1, 5});
  for (int j = 1; j <= 2 * k; ++j) c.join({0, j}, {1, 6 + j});
  return c;
}

std::vector<std::vector<mpq_class>> rational_matrix(const std::vector<Element>& cols, int n) {
  const auto& basis = enumerate_diagrams(n);
  std::vector<std::vector<mpq_class>> m(basis.size(), std::vector<mpq_class>(cols.size(), 0));
  for (size_t j = 0; j < cols.size(); ++j) {
    for (const auto& [d, c] : cols[j].terms()) m[diagram_index(d)][j] = c.rational().value;
  }
  return m;
}

double graded_hk_norm_sq(const GradedElement& x) {
  double s = 0;
  for (const auto& [n, c] : x.components()) s += hk_norm_sq(c, x.level());
  return s;
}

}  // namespace

Element apply(const AnnularSpec& spec, const Element& x) { return evaluate(annular(spec), x); }

// ---------------------------------------------------------------- estimates

Tangle estimate_tangle(int p, int q) {
  need(p >= 0 && q >= 0 && q <= 2 * p, "estimate tangle needs 0 <= q <= 2p");
  const int w = 2 * p - q;
  Tangle t(w, {p, p});
  for (int j = 1; j <= q; ++j) t.join({1, w + j}, {2, q + 1 - j});
  for (int e = 1; e <= w; ++e) t.join({0, e}, {1, e});
  for (int e = 1; e <= w; ++e) t.join({0, w + e}, {2, q + e});
  return t;
}

Element estimate_element(const Element& a, int q, int i) {
  const int w = 2 * a.n() - q;
  need(i >= 0 && i <= w, "estimate element needs 0 <= i <= 2p-q");
  std::vector<Element> in{star(a), a};
  Element b = evaluate(estimate_tangle(a.n(), q), in);
  return i == 0 ? b : evaluate(left_expectation_tangle(w, i), b);
}

Report estimate_lemma_verify(const Element& a, int k, int q, int i) {
  const int p = a.n();
  Report r;
  r.check = "estimate_lemma";
  r.params = {{"p", p}, {"k", k}, {"q", q}, {"i", i}, {"delta", a.ring().delta_value()}};
  need(p >= k && q >= 0 && q <= 2 * p && i >= 0 && i <= 2 * p - q, "estimate_lemma_verify: parameters out of range");
  need(a.ring().mode() == Mode::floating, "estimate_lemma_verify needs float mode");
  const double delta = a.ring().float_delta();
  Element L = estimate_element(a, q, i);
  const double lam = min_eigenvalue(L);
  r.details["min_eigenvalue"] = lam;
  const bool psd = is_psd(L);
  r.expect("positive", psd);
  if (!psd) {
    r.details["falsification"] = "tangle image is not positive";
    return r;
  }
  Element c = psd_sqrt(L);
  const double square_res = Element::distance(multiply(c, c), L);
  r.residual(square_res);
  r.expect("square_root", square_res <= 1e-9 * std::max(1.0, op_norm(L)));
  const double lhs = hk_norm_sq(c, k);
  const double rhs = std::pow(delta, i) * hk_norm_sq(a, k);
  const double res = std::abs(lhs - rhs);
  r.residual(res / std::max(1.0, rhs));
  r.details["c_norm_sq"] = lhs;
  r.details["a_norm_sq_scaled"] = rhs;
  r.expect("norm_identity", res <= 1e-9 * std::max(1.0, rhs));
  return r;
}

double boundedness_constant(const Element& a, int k) {
  const int m = a.n();
  const double delta = a.ring().float_delta();
  double K = 0;
  for (int u = 2 * k; u <= 2 * m; ++u) {
    Element cu = psd_sqrt(estimate_element(a, 2 * m - u, 0));
    K = std::max(K, std::pow(delta, k / 2.0) * op_norm(cu));
  }
  return K;
}

Report boundedness_verify(const Element& a, int k, int trials, uint64_t seed) {
  const int m = a.n();
  Report r;
  r.check = "boundedness";
  r.params = {{"m", m}, {"k", k}, {"trials", trials}, {"seed", seed}, {"delta", a.ring().delta_value()}};
  need(m >= k, "boundedness_verify needs colour >= level");
  need(a.ring().mode() == Mode::floating, "boundedness_verify needs float mode");
  const double K = boundedness_constant(a, k);
  const double C = K * (1 + 2 * (m - k));
  r.details["K"] = K;
  r.details["C"] = C;
  Rng rng(seed);
  GradedElement ga = GradedElement::of(a, k);
  int violations = 0;
  double worst = 0;
  for (int trial = 0; trial < trials; ++trial) {
    GradedElement b(a.ring(), k);
    const int top = k + rand_int(rng, 0, 2);
    for (int n = k; n <= top; ++n) b.add(rand_element(a.ring(), n, rng, 3));
    const double nb = std::sqrt(graded_hk_norm_sq(b));
    const double nab = std::sqrt(graded_hk_norm_sq(sharp(ga, b)));
    worst = std::max(worst, nb > 0 ? nab / nb : 0.0);
    if (nab > C * nb * (1 + 1e-9) + 1e-12) {
      ++violations;
      r.residual(nab - C * nb);
    }
  }
  r.details["violations"] = violations;
  r.details["worst_ratio"] = worst;
  r.expect("bound", violations == 0);
  return r;
}

Report sum_square_verify(const Ring& ring, int n, int vectors, int trials, uint64_t seed) {
  Report r;
  r.check = "sum_square";
  r.params = {{"n", n}, {"vectors", vectors}, {"trials", trials}, {"seed", seed}};
  need(ring.mode() == Mode::floating, "sum_square_verify needs float mode");
  Rng rng(seed);
  int violations = 0;
  for (int trial = 0; trial < trials; ++trial) {
    Element sum(ring, n);
    double total = 0;
    for (int i = 0; i < vectors; ++i) {
      Element v = rand_element(ring, n, rng, 4);
      sum += v;
      total += tau(multiply(star(v), v)).to_double();
    }
    const double lhs = tau(multiply(star(sum), sum)).to_double();
    if (lhs > vectors * total * (1 + 1e-12)) ++violations;
  }
  r.details["violations"] = violations;
  r.expect("inequality", violations == 0);
  return r;
}

// ------------------------------------------------------------------ C^n_k

Element cnk_project(const Element& x, int k) {
  const int n = x.n();
  need(n >= k && k >= 0, "C^n_k needs n >= k");
  return evaluate(x_tangle(n, k), evaluate(cap_tangle(n, k), x)).times_delta_pow(k - n);
}

bool in_x_image(const Element& x, int k) {
  const int n = x.n();
  need(n >= k && k >= 0, "C^n_k needs n >= k");
  Tangle X = x_tangle(n, k);
  std::set<Diagram> image;
  for (const auto& d : enumerate_diagrams(k)) {
    Element y = evaluate(X, Element::of(x.ring(), d));
    for (const auto& [e, c] : y.terms()) image.insert(e);
  }
  for (const auto& [d, c] : x.terms()) {
    if (!image.count(d)) return false;
  }
  return true;
}

bool satisfies_capping(const Element& x, int k) { return evaluate(cap_tangle(x.n(), k), x).is_zero(); }

const char* cnk_status_name(CnkStatus s) {
  switch (s) {
    case CnkStatus::member: return "member";
    case CnkStatus::perp: return "perp";
    case CnkStatus::neither: return "neither";
  }
  return "?";
}

CnkMembership cnk_membership(const Element& x, int k) {
  CnkMembership out;
  out.member_part = cnk_project(x, k);
  out.perp_part = x - out.member_part;
  const bool a_member = in_x_image(x, k);
  const bool b_perp = satisfies_capping(x, k);
  out.status = a_member ? CnkStatus::member : (b_perp ? CnkStatus::perp : CnkStatus::neither);
  const Scalar cross = inner(out.member_part, out.perp_part);
  out.routes_agree = a_member == out.perp_part.is_zero() && b_perp == out.member_part.is_zero() &&
                     in_x_image(out.member_part, k) && satisfies_capping(out.perp_part, k) &&
                     cross == x.ring().zero();
  return out;
}

Element random_perp(const Ring& ring, int n, int k, Rng& rng) {
  for (int attempt = 0; attempt < 16; ++attempt) {
    Element w = rand_element(ring, n, rng, 4);
    Element x = w - cnk_project(w, k);
    if (!x.is_zero() || n == k) return x;
  }
  return Element(ring, n);
}

// ---------------------------------------------------------- c-commutant

Element c_commutator(const Element& x, int k) {
  const Element c = element_c(x.ring(), k).component(k + 1);
  const int n = x.n();
  return sharp_component(c, x, k, n + 1) - sharp_component(x, c, k, n + 1);
}

Element ccommlem_invert(const Element& z, int n, int k) {
  need(n >= k && z.n() == n + 1, "ccommlem_invert needs z of colour n+1, n >= k");
  Element x(z.ring(), n);
  for (int t = 1; t <= n - k; ++t) {
    auto spec = AnnularSpec::T(k, interval(1, n + 1 - t - k), interval(t + 1, n - k + 1), n, n + 1);
    x += apply(spec, z).times_delta_pow(-t);
  }
  return x;
}

Report ccommlem_verify(const Element& x, int k) {
  const int n = x.n();
  Report r;
  r.check = "ccommlem";
  r.params = {{"n", n}, {"k", k}, {"ring", ring_param(x.ring())}};
  r.expect("input_perp", satisfies_capping(x, k));
  const Element z = c_commutator(x, k);
  const Element back = ccommlem_invert(z, n, k);
  r.residual(Element::distance(back, x));
  r.expect("round_trip", back == x);
  r.expect("injective", x.is_zero() || !z.is_zero());

  const Ring num = numeric_ring(x.ring());
  const double delta = num.delta_value();
  const Element zf = to_numeric(z, num);
  const double nz = std::sqrt(hk_norm_sq(zf, k));
  bool bounds = true;
  for (int t = 1; t <= n - k; ++t) {
    const auto A = interval(1, n + 1 - t - k);
    auto spec = AnnularSpec::T(k, A, interval(t + 1, n - k + 1), n, n + 1);
    const double ny = std::sqrt(hk_norm_sq(apply(spec, zf), k));
    const double bound = std::pow(delta, (2 * n + 1) / 2.0 - (static_cast<double>(A.size()) + k)) * nz;
    if (ny > bound * (1 + 1e-9) + 1e-12) {
      bounds = false;
      r.residual(ny - bound);
    }
  }
  r.expect("norm_bounds", bounds);
  return r;
}

// ---------------------------------------------------------- d-commutant

Report dcomm_replay(int k) {
  const Ring ring = Ring::symbolic();
  Report r;
  r.check = "dcomm_replay";
  r.params = {{"k", k}};
  const CupPlacement placements[] = {CupPlacement::first, CupPlacement::second, CupPlacement::last,
                                     CupPlacement::second_to_last};
  const int N = k + 4;
  const int tmax = k + 6;

  // (iii) input: ξ = Σ_n X^n_k(y^n) with distinct y^n.
  Rng rng(0x5eed + static_cast<uint64_t>(k));
  std::map<int, Element> y;
  GradedElement xi(ring, k);
  for (int n = k; n <= N; ++n) {
    y[n] = rand_dense(ring, k, rng);
    xi.add(evaluate(x_tangle(n, k), y[n]));
  }
  struct DChoice {
    const char* name;
    Element d2;
  };
  const DChoice ds[] = {{"identity", unit(ring, 2)},
                        {"cap", Element::of(ring, Diagram::from_pairs(2, {{1, 2}, {3, 4}}))}};
  std::map<std::string, GradedElement> commutators;
  for (const auto& dc : ds) {
    GradedElement d = include_to(GradedElement::of(dc.d2, 0), k);
    commutators[dc.name] = sharp(d, xi) - sharp(xi, d);
  }

  auto sub_i = [&](CupPlacement py, CupPlacement pz) {
    for (int t = k + 4; t <= tmax; ++t) {
      Tangle c = cap_pair(t, 4);
      if (!maps_agree(substitute(c, {{1, y_tangle(t, k, py)}}), y_tangle(t - 1, k, py), ring, k, ring.one())) return false;
      if (!maps_agree(substitute(c, {{1, z_tangle(t, k, pz)}}), z_tangle(t - 1, k, pz), ring, k, ring.one())) return false;
    }
    return true;
  };
  auto sub_ii = [&](CupPlacement py, CupPlacement pz) {
    Tangle c = triple_cap(k);
    Tangle id = identity_tangle(k);
    return maps_agree(substitute(c, {{1, y_tangle(k + 3, k, py)}}), id, ring, k, ring.delta_pow(1)) &&
           maps_agree(substitute(c, {{1, z_tangle(k + 3, k, pz)}}), id, ring, k, ring.delta_pow(3));
  };
  auto sub_iii = [&](CupPlacement py, CupPlacement pz, const GradedElement& comm) {
    for (int t = k + 3; t <= N + 2; ++t) {
      Element s(ring, k);
      if (y.count(t - 1)) s += y[t - 1];
      if (y.count(t - 2)) s += y[t - 2];
      Element rhs = evaluate(y_tangle(t, k, py), s) - evaluate(z_tangle(t, k, pz), s);
      if (rhs != comm.component(t)) return false;
    }
    return true;
  };

  json table = json::array();
  json passing = json::array();
  for (auto py : placements) {
    for (auto pz : placements) {
      const bool i_ok = sub_i(py, pz);
      const bool ii_ok = sub_ii(py, pz);
      for (const auto& dc : ds) {
        const bool iii_ok = sub_iii(py, pz, commutators[dc.name]);
        json row = {{"Y", placement_name(py)}, {"Z", placement_name(pz)}, {"d", dc.name},
                    {"i", i_ok}, {"ii", ii_ok}, {"iii", iii_ok}};
        table.push_back(row);
        if (i_ok && ii_ok && iii_ok) passing.push_back(row);
      }
    }
  }
  r.details["placements"] = table;
  r.details["passing"] = passing;
  r.expect("unique_placement", passing.size() == 1);
  return r;
}

// --------------------------------------------------------------- x_n, x_m

Element xnxm_formula(const Element& xm, int n, int k, int d) {
  const int m = n + 2 * d;
  need(d >= 1 && n >= k && xm.n() == m, "xnxm_formula needs x of colour n+2d, d >= 1");
  Element x(xm.ring(), n);
  for (int t = 1; t <= n - k; ++t) {
    const auto A = interval(1, n + 1 - t - k);
    Element term = apply(AnnularSpec::T(k, A, interval(t + d, n - k + d), n, m), xm) -
                   apply(AnnularSpec::T(k, A, interval(t + d + 1, n - k + d + 1), n, m), xm);
    x += term.times_delta_pow(-(t + d - 1));
  }
  return x;
}

namespace {

Element t_expression(const Element& x2, int n, int k) {
  return apply(AnnularSpec::T(k, interval(1, n - k + 1), interval(1, n - k + 1), n + 1, n + 2), x2) -
         apply(AnnularSpec::T(k, interval(1, n - k + 1), interval(2, n - k + 2), n + 1, n + 2), x2);
}

// Exact nullspace basis of a rational matrix (columns are unknowns).
std::vector<std::vector<mpq_class>> rational_nullspace(std::vector<std::vector<mpq_class>> m, size_t cols) {
  const size_t rows = m.size();
  std::vector<size_t> pivots;
  size_t rank = 0;
  for (size_t c = 0; c < cols && rank < rows; ++c) {
    size_t piv = rank;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[rank]);
    const mpq_class lead = m[rank][c];
    for (size_t j = 0; j < cols; ++j) m[rank][j] /= lead;
    for (size_t i = 0; i < rows; ++i) {
      if (i == rank || m[i][c] == 0) continue;
      const mpq_class f = m[i][c];
      for (size_t j = 0; j < cols; ++j) m[i][j] -= f * m[rank][j];
    }
    pivots.push_back(c);
    ++rank;
  }
  std::vector<std::vector<mpq_class>> basis;
  std::vector<char> is_pivot(cols, 0);
  for (size_t c : pivots) is_pivot[c] = 1;
  for (size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<mpq_class> v(cols, 0);
    v[free] = 1;
    for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][free];
    basis.push_back(v);
  }
  return basis;
}

Element combine(const std::vector<Element>& vs, const std::vector<mpq_class>& coeffs, size_t offset, const Ring& ring, int n) {
  Element x(ring, n);
  for (size_t j = 0; j < vs.size(); ++j) {
    if (coeffs[offset + j] != 0) x += vs[j] * ring.from_rational(coeffs[offset + j]);
  }
  return x;
}

}  // namespace

// Pairs (x_n, x_{n+2}) of perpendicular elements whose P_{n+1} component of
// the c-commutator vanishes: the hypothesis under which x_n is recovered.
std::pair<Element, Element> admissible_pair(const Ring& ring, int k, int n, Rng& rng) {
  need(ring.mode() == Mode::rational, "admissible_pair needs rational mode");
  std::vector<Element> hi, lo;
  for (const auto& d : enumerate_diagrams(n + 2)) {
    Element v = Element::of(ring, d);
    v -= cnk_project(v, k);
    if (!v.is_zero()) hi.push_back(v);
  }
  for (const auto& d : enumerate_diagrams(n)) {
    Element v = Element::of(ring, d);
    v -= cnk_project(v, k);
    if (!v.is_zero()) lo.push_back(v);
  }
  std::vector<Element> cols;
  for (const auto& v : hi) cols.push_back(t_expression(v, n, k));
  for (const auto& v : lo) cols.push_back(-c_commutator(v, k));
  const auto null = rational_nullspace(rational_matrix(cols, n + 1), cols.size());
  std::vector<mpq_class> coeffs(cols.size(), 0);
  for (const auto& b : null) {
    const mpq_class w(rand_int(rng, -3, 3));
    for (size_t j = 0; j < cols.size(); ++j) coeffs[j] += w * b[j];
  }
  return {combine(lo, coeffs, hi.size(), ring, n), combine(hi, coeffs, 0, ring, n + 2)};
}

Report xnxm_verify(const Ring& ring, int k, int n, uint64_t seed) {
  Report r;
  r.check = "xnxm";
  r.params = {{"k", k}, {"n", n}, {"seed", seed}, {"ring", ring_param(ring)}};
  need(n > k, "xnxm_verify needs n > k");
  Rng rng(seed);
  const Element c = element_c(ring, k).component(k + 1);

  // Unconstrained perpendicular x_{n+2}: the two-term expression is the
  // P_{n+1} component of x#c - c#x, and the formula matches the lemma.
  const Element x2 = random_perp(ring, n + 2, k, rng);
  const Element z = t_expression(x2, n, k);
  r.expect("commutator_expression",
           z == sharp_component(x2, c, k, n + 1) - sharp_component(c, x2, k, n + 1));
  const Element xn = xnxm_formula(x2, n, k, 1);
  r.expect("lemma_route", ccommlem_invert(z, n, k) == xn);
  r.details["unconstrained_relation"] = c_commutator(xn, k) == z;
  const Element x1 = random_perp(ring, n + 1, k, rng);
  r.expect("middle_term_vanishes", sharp_component(c, x1, k, n + 1) == sharp_component(x1, c, k, n + 1));
  r.expect("zero", xnxm_formula(Element(ring, n + 2), n, k, 1).is_zero());

  // Defining relation on pairs satisfying the commutation hypothesis.
  const Ring q = ring.mode() == Mode::rational ? ring : Ring::rational(mpq_class(5, 2));
  const auto [lo, hi] = admissible_pair(q, k, n, rng);
  const Element zq = t_expression(hi, n, k);
  const Element xq = xnxm_formula(hi, n, k, 1);
  r.details["admissible_nontrivial"] = !zq.is_zero();
  r.details["x_n_terms"] = xq.size();
  r.residual(Element::distance(c_commutator(xq, k), zq));
  r.expect("defining_relation", c_commutator(xq, k) == zq);
  r.expect("recovers_x_n", xq == lo);
  return r;
}

Report telescoping_verify(const Ring& ring, int k, int n, int d, uint64_t seed) {
  Report r;
  r.check = "telescoping";
  r.params = {{"k", k}, {"n", n}, {"d", d}, {"seed", seed}, {"ring", ring_param(ring)}};
  need(d >= 2 && n >= k, "telescoping_verify needs d >= 2");
  const int m = n + 2 * d;
  Rng rng(seed);
  const Element xm = random_perp(ring, m, k, rng);
  const Element direct = xnxm_formula(xm, n, k, d);
  const Element nested = xnxm_formula(xnxm_formula(xm, n + 2, k, d - 1), n, k, 1);

  Element composed(ring, n);
  for (int t = 1; t <= n - k; ++t) {
    const auto A = interval(1, n + 1 - t - k);
    const AnnularSpec outer[2] = {AnnularSpec::T(k, A, interval(t + 1, n - k + 1), n, n + 2),
                                  AnnularSpec::T(k, A, interval(t + 2, n - k + 2), n, n + 2)};
    for (int s = 1; s <= n + 2 - k; ++s) {
      const auto As = interval(1, n + 3 - s - k);
      const AnnularSpec inner[2] = {AnnularSpec::T(k, As, interval(s + d - 1, n - k + d + 1), n + 2, m),
                                    AnnularSpec::T(k, As, interval(s + d, n - k + d + 2), n + 2, m)};
      for (int a = 0; a < 2; ++a) {
        for (int b = 0; b < 2; ++b) {
          const TComposition tc = compose_t(outer[a], inner[b]);
          Element term = apply(tc.spec, xm).times_delta_pow(tc.delta_exponent - (t + s + d - 2));
          if ((a + b) % 2) term = -term;
          composed += term;
        }
      }
    }
  }
  r.residual(std::max(Element::distance(direct, nested), Element::distance(direct, composed)));
  r.expect("nested_equals_direct", nested == direct);
  r.expect("composed_equals_direct", composed == direct);
  r.details["x_n_terms"] = direct.size();
  return r;
}

// -------------------------------------------------------------- positivity

int rational_rank(std::vector<std::vector<mpq_class>> m) {
  if (m.empty()) return 0;
  const size_t rows = m.size(), cols = m[0].size();
  size_t rank = 0;
  for (size_t c = 0; c < cols && rank < rows; ++c) {
    size_t piv = rank;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[rank]);
    for (size_t i = 0; i < rows; ++i) {
      if (i == rank || m[i][c] == 0) continue;
      const mpq_class f = m[i][c] / m[rank][c];
      for (size_t j = c; j < cols; ++j) m[i][j] -= f * m[rank][j];
    }
    ++rank;
  }
  return static_cast<int>(rank);
}

Report positivity_verify(int k, const mpq_class& delta, int max_n) {
  Report r;
  r.check = "positivity";
  r.params = {{"k", k}, {"delta", rational_str(delta)}, {"max_n", max_n}};
  const Ring ring = Ring::rational(delta);
  std::vector<GradedElement> basis;
  for (int n = k; n <= k + 3; ++n) {
    for (const auto& d : enumerate_diagrams(n)) basis.push_back(GradedElement::of(Element::of(ring, d), k));
  }
  const size_t N = basis.size();
  std::vector<std::vector<mpq_class>> g(N, std::vector<mpq_class>(N));
  bool symmetric = true, graded_orthogonal = true;
  for (size_t i = 0; i < N; ++i) {
    for (size_t j = 0; j < N; ++j) g[i][j] = inner_product(basis[i], basis[j]).rational().value;
  }
  for (size_t i = 0; i < N; ++i) {
    for (size_t j = 0; j < N; ++j) {
      symmetric = symmetric && g[i][j] == g[j][i];
      if (basis[i].max_colour() != basis[j].max_colour() && g[i][j] != 0) graded_orthogonal = false;
    }
  }
  // LDL^T by symmetric elimination; pivots are the entries of D.
  mpq_class min_pivot = 0;
  bool positive = true;
  auto a = g;
  for (size_t p = 0; p < N; ++p) {
    const mpq_class piv = a[p][p];
    if (p == 0 || piv < min_pivot) min_pivot = piv;
    if (piv <= 0) {
      positive = false;
      break;
    }
    for (size_t i = p + 1; i < N; ++i) {
      if (a[i][p] == 0) continue;
      const mpq_class f = a[i][p] / piv;
      for (size_t j = p; j < N; ++j) a[i][j] -= f * a[p][j];
    }
  }
  r.details["dimension"] = N;
  r.details["min_pivot"] = rational_str(min_pivot);
  r.expect("symmetric", symmetric);
  r.expect("graded_orthogonal", graded_orthogonal);
  r.expect("ldl_positive", positive);

  const Ring fr = Ring::floating(delta.get_d());
  json table = json::array();
  bool eig_ok = true;
  for (int n = 0; n <= max_n; ++n) {
    Eigen::SelfAdjointEigenSolver<Matrix> es(gram(fr, n), Eigen::EigenvaluesOnly);
    const double lo = es.eigenvalues().minCoeff();
    eig_ok = eig_ok && lo > 0;
    table.push_back({{"n", n}, {"min_eigenvalue", lo}});
  }
  r.details["min_eigenvalues"] = table;
  r.expect("eigenvalues_positive", eig_ok);
  return r;
}

// ------------------------------------------------------ commutant pieces

Report el_fixed_point_verify(const Ring& ring, int k, int i, uint64_t seed) {
  Report r;
  r.check = "el_fixed_point";
  r.params = {{"k", k}, {"i", i}, {"seed", seed}, {"ring", ring_param(ring)}};
  need(i >= 0 && i <= k, "EL(i)^k_k needs 0 <= i <= k");
  const Tangle el = left_expectation_tangle(k, i);
  Rng rng(seed);
  bool fixed = true;
  for (int trial = 0; trial < 10; ++trial) {
    const Element x = evaluate(el, rand_element(ring, k, rng, 4));
    fixed = fixed && evaluate(el, x) == x.times_delta_pow(i);
  }
  r.expect("fixed_on_range", fixed);

  const Ring q = ring.mode() == Mode::rational ? ring : Ring::rational(mpq_class(5, 2));
  std::vector<Element> cols, shifted;
  for (const auto& d : enumerate_diagrams(k)) {
    Element x = Element::of(q, d);
    Element y = evaluate(el, x);
    cols.push_back(y);
    shifted.push_back(y - x.times_delta_pow(i));
  }
  const int rank = rational_rank(rational_matrix(cols, k));
  const int eigenspace = static_cast<int>(cols.size()) - rational_rank(rational_matrix(shifted, k));
  r.details["rank"] = rank;
  r.details["fixed_dimension"] = eigenspace;
  r.expect("rank_matches", rank == eigenspace);
  return r;
}

Element extremality_map(const Element& x) {
  need(x.n() == 1, "extremality map is defined on P_1");
  Tangle t(2, {1});
  t.join({0, 1}, {0, 4});
  t.join({1, 1}, {0, 3});
  t.join({1, 2}, {0, 2});
  return evaluate(t, x);
}

Report extremality_verify(const Ring& ring) {
  Report r;
  r.check = "extremality";
  r.params = {{"ring", ring_param(ring)}};
  const Tangle el = left_expectation_tangle(2, 1);
  bool traces = true, lands = true;
  for (const auto& x : {unit(ring, 1), unit(ring, 1) * ring.integer(3), unit(ring, 1) * ring.delta_pow(-1)}) {
    const Element z = extremality_map(x);
    traces = traces && tau(z) == tau(x);
    lands = lands && evaluate(el, z) == z.times_delta_pow(1);
  }
  r.expect("trace_preserving", traces);
  r.expect("lands_in_P12", lands);
  return r;
}

Report commutant_verify(const Ring& ring, int k) {
  Report r;
  r.check = "commutant";
  r.params = {{"k", k}, {"ring", ring_param(ring)}};
  const GradedElement c = element_c(ring, k), d = element_d(ring, k);
  bool with_c = true, with_d = true;
  for (const auto& diag : enumerate_diagrams(k)) {
    GradedElement x = GradedElement::of(Element::of(ring, diag), k);
    with_c = with_c && sharp(x, c) == sharp(c, x);
    with_d = with_d && sharp(x, d) == sharp(d, x);
  }
  r.details["basis_size"] = enumerate_diagrams(k).size();
  r.expect("commutes_with_c", with_c);
  r.expect("commutes_with_d", with_d);
  return r;
}

}  // namespace pa
