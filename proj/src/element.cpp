#include "pa/element.hpp"

#include <algorithm>
#include <sstream>

namespace pa {

Element::Element(Ring ring, Colour colour) : ring_(std::move(ring)), colour_(colour) {}

Element Element::of(const Ring& ring, const Diagram& d, Scalar coeff) {
  Element e(ring, Colour(d.colour()));
  e.add_term(d, coeff);
  return e;
}

Element Element::of(const Ring& ring, const Diagram& d) { return of(ring, d, ring.one()); }

Scalar Element::coeff(const Diagram& d) const {
  auto it = terms_.find(d);
  return it == terms_.end() ? ring_.zero() : it->second;
}

void Element::add_term(const Diagram& d, const Scalar& c) {
  if (d.colour() != colour_.n()) {
    throw PreconditionError("diagram of colour " + std::to_string(d.colour()) + " added to element of colour " +
                            colour_.str());
  }
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(d, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void Element::check_compatible(const Element& o) const {
  if (colour_ != o.colour_) throw PreconditionError("colour mismatch: " + colour_.str() + " vs " + o.colour_.str());
  if (ring_ != o.ring_) throw ModeMismatch("elements over different rings");
}

Element& Element::operator+=(const Element& o) {
  check_compatible(o);
  for (const auto& [d, c] : o.terms_) add_term(d, c);
  return *this;
}

Element& Element::operator-=(const Element& o) {
  check_compatible(o);
  for (const auto& [d, c] : o.terms_) add_term(d, -c);
  return *this;
}

Element Element::operator+(const Element& o) const {
  Element r = *this;
  r += o;
  return r;
}
Element Element::operator-(const Element& o) const {
  Element r = *this;
  r -= o;
  return r;
}

Element Element::operator-() const {
  Element r(ring_, colour_);
  for (const auto& [d, c] : terms_) r.terms_.emplace(d, -c);
  return r;
}

Element Element::operator*(const Scalar& s) const {
  Element r(ring_, colour_);
  for (const auto& [d, c] : terms_) r.add_term(d, c * s);
  return r;
}

Element Element::times_delta_pow(int e) const {
  Element r(ring_, colour_);
  for (const auto& [d, c] : terms_) r.add_term(d, c.times_delta_pow(e));
  return r;
}

Element Element::map_diagrams(const std::function<Diagram(const Diagram&)>& f) const {
  Element r(ring_, colour_);
  for (const auto& [d, c] : terms_) r.add_term(f(d), c);
  return r;
}

bool Element::operator==(const Element& o) const {
  check_compatible(o);
  if (ring_.mode() != Mode::floating) return terms_ == o.terms_;
  for (const auto& [d, c] : terms_) {
    if (c != o.coeff(d)) return false;
  }
  for (const auto& [d, c] : o.terms_) {
    if (c != coeff(d)) return false;
  }
  return true;
}

double Element::distance(const Element& a, const Element& b) {
  a.check_compatible(b);
  if (a.ring_.mode() == Mode::symbolic) return a == b ? 0.0 : 1.0;
  double worst = 0.0;
  Element diff = a - b;
  for (const auto& [d, c] : diff.terms_) worst = std::max(worst, std::abs(c.to_double()));
  return worst;
}

Element Element::specialize(const Ring& target) const {
  Element r(target, colour_);
  for (const auto& [d, c] : terms_) {
    switch (target.mode()) {
      case Mode::symbolic: r.add_term(d, c); break;
      case Mode::rational: r.add_term(d, c.specialize(target.rational_delta())); break;
      case Mode::floating: r.add_term(d, c.specialize(target.float_delta())); break;
    }
  }
  return r;
}

std::string Element::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [d, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")" << d.str();
  }
  return os.str();
}

}  // namespace pa
