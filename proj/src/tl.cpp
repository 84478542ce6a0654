#include "pa/tl.hpp"

namespace pa {

namespace {

void need(bool ok, const std::string& msg) {
  if (!ok) throw PreconditionError(msg);
}

}  // namespace

Tangle mult_tangle(int n) {
  need(n >= 0, "colour must be non-negative");
  Tangle t(n, {n, n});
  for (int i = 1; i <= n; ++i) {
    t.join({1, i}, {2, 2 * n + 1 - i});
    t.join({0, i}, {2, i});
    t.join({0, n + i}, {1, n + i});
  }
  return t;
}

Tangle incl_tangle(int n) {
  need(n >= 0, "colour must be non-negative");
  Tangle t(n + 1, {n});
  for (int i = 1; i <= n; ++i) {
    t.join({0, i}, {1, i});
    t.join({0, n + 2 + i}, {1, n + i});
  }
  t.join({0, n + 1}, {0, n + 2});
  return t;
}

Tangle trace_tangle(int n) {
  need(n >= 0, "colour must be non-negative");
  Tangle t(0, {n});
  for (int i = 1; i <= n; ++i) t.join({1, i}, {1, 2 * n + 1 - i});
  return t;
}

Tangle unit_tangle(int n) {
  need(n >= 0, "colour must be non-negative");
  Tangle t(n, {});
  for (int i = 1; i <= n; ++i) t.join({0, i}, {0, 2 * n + 1 - i});
  return t;
}

Tangle identity_tangle(int n) {
  need(n >= 0, "colour must be non-negative");
  Tangle t(n, {n});
  for (int i = 1; i <= 2 * n; ++i) t.join({0, i}, {1, i});
  return t;
}

Tangle rotation_tangle(int n) {
  need(n >= 1, "rotation needs colour >= 1");
  Tangle t(n, {n});
  for (int p = 1; p <= 2 * n; ++p) t.join({0, (p + 2 * n - 3) % (2 * n) + 1}, {1, p});
  return t;
}

Tangle right_expectation_tangle(int n, int i) {
  need(n >= 0 && i >= 0, "expectation parameters must be non-negative");
  const int N = n + i;
  Tangle t(n, {N});
  for (int c = n + 1; c <= N; ++c) t.join({1, c}, {1, 2 * N + 1 - c});
  for (int p = 1; p <= n; ++p) {
    t.join({0, p}, {1, p});
    t.join({0, n + p}, {1, N + i + p});
  }
  return t;
}

Tangle left_expectation_tangle(int n, int i) {
  need(i >= 0 && i <= n, "EL(i) needs 0 <= i <= n");
  Tangle t(n, {n});
  for (int c = 1; c <= n; ++c) {
    if (c <= i) {
      t.join({1, c}, {1, 2 * n + 1 - c});
      t.join({0, c}, {0, 2 * n + 1 - c});
    } else {
      t.join({0, c}, {1, c});
      t.join({0, 2 * n + 1 - c}, {1, 2 * n + 1 - c});
    }
  }
  return t;
}

Tangle jones_tangle(int n) {
  need(n >= 2, "Jones projection tangle needs colour >= 2");
  Tangle t(n, {});
  for (int c = 1; c <= n - 2; ++c) t.join({0, c}, {0, 2 * n + 1 - c});
  t.join({0, n - 1}, {0, n});
  t.join({0, n + 1}, {0, n + 2});
  return t;
}

Tangle standard_tangle(StandardKind kind, int n, int i) {
  switch (kind) {
    case StandardKind::M: return mult_tangle(n);
    case StandardKind::I: return incl_tangle(n);
    case StandardKind::TR: return trace_tangle(n);
    case StandardKind::R: return rotation_tangle(n);
    case StandardKind::EL: return left_expectation_tangle(n, i);
    case StandardKind::ER: return right_expectation_tangle(n, i);
    case StandardKind::E: return jones_tangle(n);
    case StandardKind::UNIT: return unit_tangle(n);
    case StandardKind::ID: return identity_tangle(n);
  }
  throw PreconditionError("unknown tangle kind");
}

StandardKind parse_standard_kind(const std::string& s) {
  if (s == "M") return StandardKind::M;
  if (s == "I") return StandardKind::I;
  if (s == "TR") return StandardKind::TR;
  if (s == "R") return StandardKind::R;
  if (s == "EL") return StandardKind::EL;
  if (s == "ER") return StandardKind::ER;
  if (s == "E") return StandardKind::E;
  if (s == "UNIT") return StandardKind::UNIT;
  if (s == "ID") return StandardKind::ID;
  throw PreconditionError("unknown standard tangle '" + s + "'");
}

Element unit(const Ring& ring, int n) { return Element::of(ring, Diagram::identity(n)); }

Element star(const Element& x) {
  return x.map_diagrams([](const Diagram& d) { return d.reflected(); });
}

Element multiply(const Element& x, const Element& y) {
  need(x.colour().n() == y.colour().n(), "multiply: colour mismatch " + x.colour().str() + " vs " + y.colour().str());
  return evaluate(mult_tangle(x.colour().n()), x, y);
}

Scalar tau(const Element& x) {
  const int n = x.colour().n();
  Element z = evaluate(trace_tangle(n), x);
  return z.coeff(Diagram::identity(0)).times_delta_pow(-n);
}

Scalar inner(const Element& x, const Element& y) { return tau(multiply(star(y), x)); }

Element rotate(const Element& x, int times) {
  const int n = x.colour().n();
  if (n == 0) return x;
  const int shift = ((-2 * times) % (2 * n) + 2 * n) % (2 * n);
  return x.map_diagrams([shift](const Diagram& d) { return d.rotated(shift); });
}

Element jones_projection(const Ring& ring, int n) {
  return evaluate(jones_tangle(n), ring).times_delta_pow(-1);
}

Element include_tl(const Element& x) { return evaluate(incl_tangle(x.colour().n()), x); }

}  // namespace pa
