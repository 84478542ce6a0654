#include "pa/scalar.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace pa {

std::string to_string(Mode m) {
  switch (m) {
    case Mode::symbolic: return "symbolic";
    case Mode::rational: return "rational";
    case Mode::floating: return "float";
  }
  return "?";
}

mpq_class parse_rational(const std::string& s) {
  mpq_class q;
  if (s.empty() || q.set_str(s, 10) != 0) {
    throw PreconditionError("not a rational number: '" + s + "'");
  }
  if (q.get_den() == 0) throw PreconditionError("zero denominator: " + s);
  q.canonicalize();
  return q;
}

std::string rational_str(const mpq_class& q) {
  mpq_class c(q);
  c.canonicalize();
  return c.get_str();
}

namespace {

mpq_class qpow(const mpq_class& d, int e) {
  mpq_class base = e >= 0 ? d : mpq_class(1) / d;
  mpq_class r = 1;
  for (int i = 0; i < std::abs(e); ++i) r *= base;
  return r;
}

bool float_eq(double a, double b) {
  double scale = std::max({1.0, std::fabs(a), std::fabs(b)});
  return std::fabs(a - b) <= kFloatTolerance * scale;
}

Laurent add(const Laurent& a, const Laurent& b, bool subtract) {
  Laurent r;
  r.terms.reserve(a.terms.size() + b.terms.size());
  auto i = a.terms.begin();
  auto j = b.terms.begin();
  while (i != a.terms.end() || j != b.terms.end()) {
    if (j == b.terms.end() || (i != a.terms.end() && i->first < j->first)) {
      r.terms.push_back(*i++);
    } else if (i == a.terms.end() || j->first < i->first) {
      r.terms.emplace_back(j->first, subtract ? mpq_class(-j->second) : j->second);
      ++j;
    } else {
      mpq_class c = subtract ? mpq_class(i->second - j->second) : mpq_class(i->second + j->second);
      if (c != 0) r.terms.emplace_back(i->first, std::move(c));
      ++i;
      ++j;
    }
  }
  return r;
}

Laurent mul(const Laurent& a, const Laurent& b) {
  if (a.terms.empty() || b.terms.empty()) return {};
  if (a.terms.size() == 1 && b.terms.size() == 1) {
    return Laurent{{{a.terms[0].first + b.terms[0].first, a.terms[0].second * b.terms[0].second}}};
  }
  int lo = a.terms.front().first + b.terms.front().first;
  int hi = a.terms.back().first + b.terms.back().first;
  std::vector<mpq_class> acc(static_cast<size_t>(hi - lo + 1), mpq_class(0));
  for (const auto& [ea, ca] : a.terms) {
    for (const auto& [eb, cb] : b.terms) acc[static_cast<size_t>(ea + eb - lo)] += ca * cb;
  }
  Laurent r;
  for (size_t i = 0; i < acc.size(); ++i) {
    if (acc[i] != 0) r.terms.emplace_back(lo + static_cast<int>(i), std::move(acc[i]));
  }
  return r;
}

[[noreturn]] void mismatch(const Scalar& a, const Scalar& b) {
  throw ModeMismatch("scalar mode mismatch: " + to_string(a.mode()) + " vs " + to_string(b.mode()));
}

void check_delta(const mpq_class& a, const mpq_class& b) {
  if (a != b) throw ModeMismatch("rational scalars with different delta");
}
void check_delta(double a, double b) {
  if (a != b) throw ModeMismatch("float scalars with different delta");
}

}  // namespace

// ---------------------------------------------------------------- Ring

Ring Ring::symbolic() { return Ring{}; }

Ring Ring::rational(const mpq_class& delta) {
  if (delta == 0) throw PreconditionError("delta must be nonzero");
  Ring r;
  r.mode_ = Mode::rational;
  r.delta_q_ = delta;
  r.delta_q_.canonicalize();
  return r;
}

Ring Ring::floating(double delta) {
  if (delta == 0.0 || !std::isfinite(delta)) throw PreconditionError("delta must be finite and nonzero");
  Ring r;
  r.mode_ = Mode::floating;
  r.delta_f_ = delta;
  return r;
}

double Ring::delta_value() const {
  switch (mode_) {
    case Mode::rational: return delta_q_.get_d();
    case Mode::floating: return delta_f_;
    default: throw PreconditionError("delta is symbolic");
  }
}

Scalar Ring::zero() const { return integer(0); }
Scalar Ring::one() const { return integer(1); }
Scalar Ring::integer(long v) const { return from_rational(mpq_class(v)); }

Scalar Ring::from_rational(const mpq_class& q) const {
  switch (mode_) {
    case Mode::symbolic:
      return q == 0 ? Scalar(Laurent{}) : Scalar::monomial(q, 0);
    case Mode::rational:
      return Scalar(RationalAt{q, delta_q_});
    case Mode::floating:
      return Scalar(FloatAt{q.get_d(), delta_f_});
  }
  return {};
}

Scalar Ring::delta_pow(int e) const {
  switch (mode_) {
    case Mode::symbolic: return Scalar::monomial(1, e);
    case Mode::rational: return Scalar(RationalAt{qpow(delta_q_, e), delta_q_});
    case Mode::floating: return Scalar(FloatAt{std::pow(delta_f_, e), delta_f_});
  }
  return {};
}

bool Ring::operator==(const Ring& o) const {
  if (mode_ != o.mode_) return false;
  if (mode_ == Mode::rational) return delta_q_ == o.delta_q_;
  if (mode_ == Mode::floating) return delta_f_ == o.delta_f_;
  return true;
}

std::string Ring::describe() const {
  switch (mode_) {
    case Mode::symbolic: return "symbolic";
    case Mode::rational: return "rational delta=" + rational_str(delta_q_);
    case Mode::floating: {
      std::ostringstream os;
      os.precision(17);
      os << "float delta=" << delta_f_;
      return os.str();
    }
  }
  return "";
}

// -------------------------------------------------------------- Scalar

Scalar::Scalar(Laurent p) : v_(std::move(p)) {}
Scalar::Scalar(RationalAt r) : v_(std::move(r)) {}
Scalar::Scalar(FloatAt f) : v_(f) {}

Scalar Scalar::monomial(const mpq_class& c, int e) {
  Laurent p;
  if (c != 0) p.terms.emplace_back(e, c);
  return Scalar(std::move(p));
}

Mode Scalar::mode() const {
  switch (v_.index()) {
    case 0: return Mode::symbolic;
    case 1: return Mode::rational;
    default: return Mode::floating;
  }
}

bool Scalar::is_zero() const {
  if (auto* p = std::get_if<Laurent>(&v_)) return p->terms.empty();
  if (auto* r = std::get_if<RationalAt>(&v_)) return r->value == 0;
  return std::get<FloatAt>(v_).value == 0.0;
}

Scalar Scalar::operator+(const Scalar& o) const {
  Scalar r = *this;
  r += o;
  return r;
}
Scalar Scalar::operator-(const Scalar& o) const {
  Scalar r = *this;
  r -= o;
  return r;
}
Scalar Scalar::operator*(const Scalar& o) const {
  Scalar r = *this;
  r *= o;
  return r;
}

Scalar Scalar::operator-() const {
  if (auto* p = std::get_if<Laurent>(&v_)) {
    Laurent q = *p;
    for (auto& t : q.terms) t.second = -t.second;
    return Scalar(std::move(q));
  }
  if (auto* r = std::get_if<RationalAt>(&v_)) return Scalar(RationalAt{-r->value, r->delta});
  const auto& f = std::get<FloatAt>(v_);
  return Scalar(FloatAt{-f.value, f.delta});
}

Scalar& Scalar::operator+=(const Scalar& o) {
  if (v_.index() != o.v_.index()) mismatch(*this, o);
  if (auto* p = std::get_if<Laurent>(&v_)) {
    *p = add(*p, std::get<Laurent>(o.v_), false);
  } else if (auto* r = std::get_if<RationalAt>(&v_)) {
    const auto& s = std::get<RationalAt>(o.v_);
    check_delta(r->delta, s.delta);
    r->value += s.value;
  } else {
    auto& f = std::get<FloatAt>(v_);
    const auto& g = std::get<FloatAt>(o.v_);
    check_delta(f.delta, g.delta);
    f.value += g.value;
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  if (v_.index() != o.v_.index()) mismatch(*this, o);
  if (auto* p = std::get_if<Laurent>(&v_)) {
    *p = add(*p, std::get<Laurent>(o.v_), true);
  } else if (auto* r = std::get_if<RationalAt>(&v_)) {
    const auto& s = std::get<RationalAt>(o.v_);
    check_delta(r->delta, s.delta);
    r->value -= s.value;
  } else {
    auto& f = std::get<FloatAt>(v_);
    const auto& g = std::get<FloatAt>(o.v_);
    check_delta(f.delta, g.delta);
    f.value -= g.value;
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  if (v_.index() != o.v_.index()) mismatch(*this, o);
  if (auto* p = std::get_if<Laurent>(&v_)) {
    *p = mul(*p, std::get<Laurent>(o.v_));
  } else if (auto* r = std::get_if<RationalAt>(&v_)) {
    const auto& s = std::get<RationalAt>(o.v_);
    check_delta(r->delta, s.delta);
    r->value *= s.value;
  } else {
    auto& f = std::get<FloatAt>(v_);
    const auto& g = std::get<FloatAt>(o.v_);
    check_delta(f.delta, g.delta);
    f.value *= g.value;
  }
  return *this;
}

Scalar Scalar::times_delta_pow(int e) const {
  if (e == 0) return *this;
  if (auto* p = std::get_if<Laurent>(&v_)) {
    Laurent q = *p;
    for (auto& t : q.terms) t.first += e;
    return Scalar(std::move(q));
  }
  if (auto* r = std::get_if<RationalAt>(&v_)) return Scalar(RationalAt{r->value * qpow(r->delta, e), r->delta});
  const auto& f = std::get<FloatAt>(v_);
  return Scalar(FloatAt{f.value * std::pow(f.delta, e), f.delta});
}

bool Scalar::operator==(const Scalar& o) const {
  if (v_.index() != o.v_.index()) mismatch(*this, o);
  if (auto* p = std::get_if<Laurent>(&v_)) return *p == std::get<Laurent>(o.v_);
  if (auto* r = std::get_if<RationalAt>(&v_)) {
    const auto& s = std::get<RationalAt>(o.v_);
    check_delta(r->delta, s.delta);
    return r->value == s.value;
  }
  const auto& f = std::get<FloatAt>(v_);
  const auto& g = std::get<FloatAt>(o.v_);
  check_delta(f.delta, g.delta);
  return float_eq(f.value, g.value);
}

Scalar Scalar::specialize(const mpq_class& delta) const {
  if (delta == 0) throw PreconditionError("cannot specialize at delta = 0");
  const auto& p = laurent();
  mpq_class v = 0;
  for (const auto& [e, c] : p.terms) v += c * qpow(delta, e);
  mpq_class d = delta;
  d.canonicalize();
  return Scalar(RationalAt{v, d});
}

Scalar Scalar::specialize(double delta) const {
  if (delta == 0.0) throw PreconditionError("cannot specialize at delta = 0");
  const auto& p = laurent();
  double v = 0;
  for (const auto& [e, c] : p.terms) v += c.get_d() * std::pow(delta, e);
  return Scalar(FloatAt{v, delta});
}

const Laurent& Scalar::laurent() const {
  if (auto* p = std::get_if<Laurent>(&v_)) return *p;
  throw ModeMismatch("expected a symbolic scalar, got " + to_string(mode()));
}
const RationalAt& Scalar::rational() const {
  if (auto* p = std::get_if<RationalAt>(&v_)) return *p;
  throw ModeMismatch("expected a rational scalar, got " + to_string(mode()));
}
const FloatAt& Scalar::floating() const {
  if (auto* p = std::get_if<FloatAt>(&v_)) return *p;
  throw ModeMismatch("expected a float scalar, got " + to_string(mode()));
}

double Scalar::to_double() const {
  if (auto* r = std::get_if<RationalAt>(&v_)) return r->value.get_d();
  if (auto* f = std::get_if<FloatAt>(&v_)) return f->value;
  throw ModeMismatch("symbolic scalar has no numeric value");
}

double Scalar::distance(const Scalar& a, const Scalar& b) {
  if (a.mode() == Mode::symbolic) return a == b ? 0.0 : 1.0;
  return std::fabs((a - b).to_double());
}

std::string Scalar::str() const {
  std::ostringstream os;
  if (auto* p = std::get_if<Laurent>(&v_)) {
    if (p->terms.empty()) return "0";
    bool first = true;
    for (auto it = p->terms.rbegin(); it != p->terms.rend(); ++it) {
      const auto& [e, c] = *it;
      mpq_class a = abs(c);
      if (!first) os << (c < 0 ? " - " : " + ");
      else if (c < 0) os << "-";
      first = false;
      bool unit = a == 1;
      if (!unit || e == 0) os << a.get_str();
      if (e != 0) {
        if (!unit) os << "*";
        os << "d";
        if (e != 1) os << "^" << e;
      }
    }
    return os.str();
  }
  if (auto* r = std::get_if<RationalAt>(&v_)) return r->value.get_str();
  os.precision(17);
  os << std::get<FloatAt>(v_).value;
  return os.str();
}

}  // namespace pa
