#include "pa/tower.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <sstream>

#include "pa/annular.hpp"
#include "pa/tl.hpp"

namespace pa {

namespace {

void need(bool ok, const std::string& msg) {
  if (!ok) throw PreconditionError(msg);
}

void same_level(const GradedElement& a, const GradedElement& b, const char* op) {
  if (a.level() != b.level()) {
    throw PreconditionError(std::string(op) + ": level mismatch " + std::to_string(a.level()) + " vs " +
                            std::to_string(b.level()));
  }
}

}  // namespace

// ------------------------------------------------------- GradedElement

GradedElement::GradedElement(Ring ring, int level) : ring_(std::move(ring)), level_(level) {
  need(level >= 0, "level must be non-negative");
}

GradedElement GradedElement::of(const Element& x, int level) {
  GradedElement g(x.ring(), level);
  g.add(x);
  return g;
}

Element GradedElement::component(int n) const {
  auto it = comps_.find(n);
  return it == comps_.end() ? Element(ring_, n) : it->second;
}

int GradedElement::max_colour() const { return comps_.empty() ? level_ : comps_.rbegin()->first; }

void GradedElement::add(const Element& x) {
  need(x.n() >= level_, "component of colour " + x.colour().str() + " below level " + std::to_string(level_));
  if (x.ring() != ring_) throw ModeMismatch("graded element over a different ring");
  if (x.is_zero()) return;
  auto it = comps_.find(x.n());
  if (it == comps_.end()) {
    comps_.emplace(x.n(), x);
    return;
  }
  it->second += x;
  if (it->second.is_zero()) comps_.erase(it);
}

void GradedElement::check_compatible(const GradedElement& o) const {
  same_level(*this, o, "graded arithmetic");
  if (o.ring_ != ring_) throw ModeMismatch("graded elements over different rings");
}

GradedElement& GradedElement::operator+=(const GradedElement& o) {
  check_compatible(o);
  for (const auto& [n, x] : o.comps_) add(x);
  return *this;
}

GradedElement& GradedElement::operator-=(const GradedElement& o) {
  check_compatible(o);
  for (const auto& [n, x] : o.comps_) add(-x);
  return *this;
}

GradedElement GradedElement::operator+(const GradedElement& o) const {
  GradedElement r = *this;
  r += o;
  return r;
}

GradedElement GradedElement::operator-(const GradedElement& o) const {
  GradedElement r = *this;
  r -= o;
  return r;
}

GradedElement GradedElement::operator-() const {
  GradedElement r(ring_, level_);
  for (const auto& [n, x] : comps_) r.add(-x);
  return r;
}

GradedElement GradedElement::operator*(const Scalar& c) const {
  GradedElement r(ring_, level_);
  for (const auto& [n, x] : comps_) r.add(x * c);
  return r;
}

GradedElement GradedElement::times_delta_pow(int e) const {
  GradedElement r(ring_, level_);
  for (const auto& [n, x] : comps_) r.add(x.times_delta_pow(e));
  return r;
}

bool GradedElement::operator==(const GradedElement& o) const {
  if (level_ != o.level_ || ring_ != o.ring_) return false;
  if (ring_.mode() != Mode::floating) return comps_ == o.comps_;
  std::set<int> keys;
  for (const auto& [n, x] : comps_) keys.insert(n);
  for (const auto& [n, x] : o.comps_) keys.insert(n);
  for (int n : keys) {
    if (component(n) != o.component(n)) return false;
  }
  return true;
}

double GradedElement::distance(const GradedElement& a, const GradedElement& b) {
  std::set<int> keys;
  for (const auto& [n, x] : a.comps_) keys.insert(n);
  for (const auto& [n, x] : b.comps_) keys.insert(n);
  double d = 0;
  for (int n : keys) d = std::max(d, Element::distance(a.component(n), b.component(n)));
  return d;
}

GradedElement GradedElement::specialize(const Ring& target) const {
  GradedElement r(target, level_);
  for (const auto& [n, x] : comps_) r.add(x.specialize(target));
  return r;
}

std::string GradedElement::str() const {
  std::ostringstream os;
  os << "F_" << level_ << "[";
  bool first = true;
  for (const auto& [n, x] : comps_) {
    os << (first ? "" : "; ") << "P_" << n << ": " << x.str();
    first = false;
  }
  os << "]";
  return os.str();
}

// ---------------------------------------------------------------- sharp

Tangle sharp_tangle(int m, int n, int k, int t) {
  need(k >= 0 && m >= k && n >= k, "sharp: colours must be at least the level");
  need(t >= std::abs(m - n) + k && t <= m + n - k,
       "sharp: t=" + std::to_string(t) + " outside [" + std::to_string(std::abs(m - n) + k) + "," +
           std::to_string(m + n - k) + "]");
  const int r = m + n - k - t;
  const int ta = 2 * (m - k), tb = 2 * (n - k);
  Tangle tg(t, {m, n});
  for (int j = 1; j <= r; ++j) tg.join({1, ta + 1 - j}, {2, j});
  for (int c = 1; c <= k; ++c) tg.join({1, ta + c}, {2, 2 * n + 1 - c});
  for (int p = 1; p <= ta - r; ++p) tg.join({0, p}, {1, p});
  for (int s = 1; s <= tb - r; ++s) tg.join({0, ta - r + s}, {2, r + s});
  for (int c = 1; c <= k; ++c) {
    tg.join({0, 2 * (t - k) + c}, {2, tb + c});
    tg.join({0, 2 * t - k + c}, {1, 2 * m - k + c});
  }
  return tg;
}

Element sharp_component(const Element& a, const Element& b, int k, int t) {
  std::vector<Element> in{a, b};
  return evaluate(sharp_tangle(a.n(), b.n(), k, t), in);
}

GradedElement sharp(const GradedElement& a, const GradedElement& b) {
  same_level(a, b, "sharp");
  const int k = a.level();
  GradedElement out(a.ring(), k);
  for (const auto& [m, x] : a.components()) {
    for (const auto& [n, y] : b.components()) {
      for (int t = std::abs(m - n) + k; t <= m + n - k; ++t) out.add(sharp_component(x, y, k, t));
    }
  }
  return out;
}

GradedElement bullet(const GradedElement& a, const GradedElement& b) {
  same_level(a, b, "bullet");
  const int k = a.level();
  GradedElement out(a.ring(), k);
  for (const auto& [m, x] : a.components()) {
    for (const auto& [n, y] : b.components()) out.add(sharp_component(x, y, k, m + n - k));
  }
  return out;
}

// --------------------------------------------------------------- dagger

Element dagger(const Element& a, int k) { return rotate(star(a), k); }

GradedElement dagger(const GradedElement& a) {
  GradedElement out(a.ring(), a.level());
  for (const auto& [n, x] : a.components()) out.add(dagger(x, a.level()));
  return out;
}

// --------------------------------------------------------------- traces

Scalar trace_tk(const GradedElement& a) { return tau(a.component(a.level())); }

Scalar inner_product(const GradedElement& a, const GradedElement& b) {
  same_level(a, b, "inner_product");
  const int k = a.level();
  Scalar s = a.ring().zero();
  for (const auto& [n, y] : b.components()) {
    auto it = a.components().find(n);
    if (it == a.components().end()) continue;
    s += tau(sharp_component(dagger(y, k), it->second, k, k));
  }
  return s;
}

Scalar inner_product_formula(const GradedElement& a, const GradedElement& b) {
  same_level(a, b, "inner_product");
  Scalar s = a.ring().zero();
  for (const auto& [n, y] : b.components()) {
    auto it = a.components().find(n);
    if (it == a.components().end()) continue;
    s += tau(multiply(star(y), it->second)).times_delta_pow(n - a.level());
  }
  return s;
}

// ------------------------------------------------- inclusion, expectation

Tangle include_tangle(int n, int k) {
  need(k >= 1 && n >= k, "include: needs n >= k >= 1");
  Tangle t(n, {n - 1});
  for (int p = 1; p <= 2 * (n - 1); ++p) t.join({1, p}, {0, p <= 2 * n - k - 1 ? p : p + 2});
  t.join({0, 2 * n - k}, {0, 2 * n - k + 1});
  return t;
}

Element include_component(const Element& x, int k) { return evaluate(include_tangle(x.n() + 1, k), x); }

GradedElement include(const GradedElement& a) {
  const int k = a.level() + 1;
  GradedElement out(a.ring(), k);
  for (const auto& [n, x] : a.components()) out.add(include_component(x, k));
  return out;
}

GradedElement include_to(const GradedElement& a, int level) {
  need(level >= a.level(), "include_to: target level below source level");
  GradedElement out = a;
  while (out.level() < level) out = include(out);
  return out;
}

Tangle expectation_tangle(int n, int k) {
  need(k >= 1 && n >= k, "cond_expect: needs n >= k >= 1");
  Tangle t(n - 1, {n});
  t.join({1, 2 * n - k}, {1, 2 * n - k + 1});
  for (int p = 1; p <= 2 * n - k - 1; ++p) t.join({1, p}, {0, p});
  for (int p = 2 * n - k + 2; p <= 2 * n; ++p) t.join({1, p}, {0, p - 2});
  return t;
}

Element cond_expect_component(const Element& x, int k) {
  return evaluate(expectation_tangle(x.n(), k), x).times_delta_pow(-1);
}

GradedElement cond_expect(const GradedElement& a) {
  const int k = a.level();
  need(k >= 1, "cond_expect needs level >= 1");
  GradedElement out(a.ring(), k - 1);
  for (const auto& [n, x] : a.components()) out.add(cond_expect_component(x, k));
  return out;
}

// ------------------------------------------------------ special elements

GradedElement element_c(const Ring& ring, int k) {
  return include_to(GradedElement::of(unit(ring, 1), 0), k);
}

GradedElement element_d(const Ring& ring, int k) {
  return include_to(GradedElement::of(unit(ring, 2), 0), k);
}

GradedElement jones_e(const Ring& ring, int k) {
  need(k >= 1, "jones_e needs k >= 1");
  return GradedElement::of(jones_projection(ring, k + 1), k + 1);
}

Scalar trace_Tr(const GradedElement& a) {
  const int k = a.level();
  Scalar s = a.ring().zero();
  for (const auto& [m, x] : a.components()) {
    const int L = m - k;
    for (const auto& d : enumerate_diagrams(L)) {
      Tangle t(0, {m});
      for (auto [p, q] : d.pairs()) t.join({1, p}, {1, q});
      for (int c = 1; c <= k; ++c) t.join({1, 2 * L + c}, {1, 2 * m + 1 - c});
      s += evaluate(t, x).coeff(Diagram::identity(0));
    }
  }
  return s;
}

namespace {

GradedElement annular_sum(const GradedElement& a, bool excellent) {
  const int k = a.level();
  GradedElement out(a.ring(), k);
  for (const auto& [j, x] : a.components()) {
    for (int i = k; i <= j; ++i) {
      Element part(a.ring(), i);
      for (const auto& t : enumerate_good(k, j, i, excellent)) part += evaluate(t, x);
      if (excellent && (i + j) % 2 != 0) part = -part;
      out.add(part);
    }
  }
  return out;
}

}  // namespace

GradedElement phi(const GradedElement& a) { return annular_sum(a, false); }

GradedElement psi(const GradedElement& a) { return annular_sum(a, true); }

// ----------------------------------------------------------- dot action

Tangle dot_tangle(int m, int n, int k, int t) {
  need(k >= 1, "dot action needs k >= 1");
  need(m >= k + 1 && n >= k, "dot action: colours below level");
  const int ta = 2 * (m - k - 1), tb = 2 * (n - k);
  need(t >= std::abs(m - n - 1) + k && t <= m + n - k - 1, "dot action: t out of range");
  const int r = m + n - k - 1 - t;
  Tangle tg(t, {m, n});
  for (int j = 1; j <= r; ++j) tg.join({1, ta + 1 - j}, {2, j});
  for (int c = 1; c <= k; ++c) tg.join({1, ta + c}, {2, 2 * n + 1 - c});
  tg.join({1, ta + k + 1}, {2, tb + k});
  for (int p = 1; p <= ta - r; ++p) tg.join({0, p}, {1, p});
  for (int s = 1; s <= tb - r; ++s) tg.join({0, ta - r + s}, {2, r + s});
  for (int c = 1; c < k; ++c) tg.join({0, 2 * (t - k) + c}, {2, tb + c});
  tg.join({0, 2 * t - k}, {1, 2 * m - k});
  for (int c = 1; c <= k; ++c) tg.join({0, 2 * t + 1 - c}, {1, 2 * m + 1 - c});
  return tg;
}

Element dot_component(const Element& a, const Element& b, int k, int t) {
  std::vector<Element> in{a, b};
  return evaluate(dot_tangle(a.n(), b.n(), k, t), in);
}

GradedElement dot_action(const GradedElement& a, const GradedElement& b) {
  need(a.level() == b.level() + 1, "dot action: a must sit one level above b");
  const int k = b.level();
  GradedElement out(a.ring(), k);
  for (const auto& [m, x] : a.components()) {
    for (const auto& [n, y] : b.components()) {
      for (int t = std::abs(m - n - 1) + k; t <= m + n - k - 1; ++t) out.add(dot_component(x, y, k, t));
    }
  }
  return out;
}

GradedElement dot_action_via_expectation(const GradedElement& a, const GradedElement& b) {
  need(a.level() == b.level() + 1, "dot action: a must sit one level above b");
  const int k = b.level();
  auto prod = sharp(sharp(a, include(b)), jones_e(a.ring(), k));
  return cond_expect(prod).times_delta_pow(2);
}

// ------------------------------------------------------------ index sets

IndexSet index_set_I(int m, int n, int p, int k) {
  IndexSet out;
  for (int t = std::abs(m - n) + k; t <= m + n - k; ++t) {
    for (int s = std::abs(t - p) + k; s <= t + p - k; ++s) out.emplace_back(t, s);
  }
  return out;
}

IndexSet index_set_J(int m, int n, int p, int k) {
  IndexSet out;
  for (int v = std::abs(n - p) + k; v <= n + p - k; ++v) {
    for (int u = std::abs(m - v) + k; u <= m + v - k; ++u) out.emplace_back(v, u);
  }
  return out;
}

std::pair<int, int> index_map_T(int m, int n, int p, std::pair<int, int> ts) {
  return {std::max(m + p, n + ts.second) - ts.first, ts.second};
}

IndexSet index_set_I_dot(int m, int n, int p, int k) {
  IndexSet out;
  for (int t = std::abs(m - n) + k + 1; t <= m + n - k - 1; ++t) {
    for (int s = std::abs(t - p - 1) + k; s <= t + p - k - 1; ++s) out.emplace_back(t, s);
  }
  return out;
}

IndexSet index_set_J_dot(int m, int n, int p, int k) {
  IndexSet out;
  for (int v = std::abs(n - p - 1) + k; v <= n + p - k - 1; ++v) {
    for (int u = std::abs(m - v - 1) + k; u <= m + v - k - 1; ++u) out.emplace_back(v, u);
  }
  return out;
}

}  // namespace pa
