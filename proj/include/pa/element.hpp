#pragma once

#include <functional>
#include <map>
#include <string>

#include "pa/diagram.hpp"
#include "pa/scalar.hpp"

namespace pa {

/// A vector of P_n in the Temperley-Lieb model: a finitely supported
/// combination of diagrams of one colour. Zero coefficients are never stored.
class Element {
 public:
  using Terms = std::map<Diagram, Scalar>;

  Element() = default;
  Element(Ring ring, Colour colour);
  static Element of(const Ring& ring, const Diagram& d, Scalar coeff);
  static Element of(const Ring& ring, const Diagram& d);

  const Ring& ring() const { return ring_; }
  Colour colour() const { return colour_; }
  int n() const { return colour_.n(); }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t size() const { return terms_.size(); }

  /// Coefficient of d (zero if absent).
  Scalar coeff(const Diagram& d) const;
  void add_term(const Diagram& d, const Scalar& c);

  Element& operator+=(const Element& o);
  Element& operator-=(const Element& o);
  Element operator+(const Element& o) const;
  Element operator-(const Element& o) const;
  Element operator-() const;
  Element operator*(const Scalar& c) const;
  Element times_delta_pow(int e) const;

  /// Applies f to every diagram, keeping coefficients.
  Element map_diagrams(const std::function<Diagram(const Diagram&)>& f) const;

  /// Exact in symbolic/rational mode; coefficientwise tolerance in float mode.
  bool operator==(const Element& o) const;
  bool operator!=(const Element& o) const { return !(*this == o); }
  /// Largest coefficient difference (0/1 in symbolic mode).
  static double distance(const Element& a, const Element& b);

  /// Converts a symbolic element to the given numeric ring.
  Element specialize(const Ring& target) const;

  std::string str() const;

 private:
  void check_compatible(const Element& o) const;

  Ring ring_;
  Colour colour_;
  Terms terms_;
};

}  // namespace pa
