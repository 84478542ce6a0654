#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "pa/element.hpp"
#include "pa/tangle.hpp"

namespace pa {

// Level convention for an element of colour m at level k: points
// 1..2(m-k) run along the top, the right cable is 2(m-k)+1..2m-k (top to
// bottom) and the left cable is 2m-k+1..2m (bottom to top).

/// An element of F_k(P) (or Gr_k(P)): components in P_n for n >= k.
class GradedElement {
 public:
  GradedElement() = default;
  GradedElement(Ring ring, int level);
  static GradedElement of(const Element& x, int level);

  int level() const { return level_; }
  const Ring& ring() const { return ring_; }
  const std::map<int, Element>& components() const { return comps_; }
  Element component(int n) const;
  bool is_zero() const { return comps_.empty(); }
  int max_colour() const;

  void add(const Element& x);
  GradedElement& operator+=(const GradedElement& o);
  GradedElement& operator-=(const GradedElement& o);
  GradedElement operator+(const GradedElement& o) const;
  GradedElement operator-(const GradedElement& o) const;
  GradedElement operator-() const;
  GradedElement operator*(const Scalar& c) const;
  GradedElement times_delta_pow(int e) const;

  bool operator==(const GradedElement& o) const;
  bool operator!=(const GradedElement& o) const { return !(*this == o); }
  static double distance(const GradedElement& a, const GradedElement& b);
  GradedElement specialize(const Ring& target) const;
  std::string str() const;

 private:
  void check_compatible(const GradedElement& o) const;

  Ring ring_ = Ring::symbolic();
  int level_ = 0;
  std::map<int, Element> comps_;
};

/// Two-box tangle giving the P_t component of a#b, a in P_m, b in P_n.
Tangle sharp_tangle(int m, int n, int k, int t);
Element sharp_component(const Element& a, const Element& b, int k, int t);
GradedElement sharp(const GradedElement& a, const GradedElement& b);
/// Top component only: the product of Gr_k(P).
GradedElement bullet(const GradedElement& a, const GradedElement& b);

Element dagger(const Element& a, int k);
GradedElement dagger(const GradedElement& a);

/// τ of the level-k component.
Scalar trace_tk(const GradedElement& a);
/// ⟨a|b⟩ = t_k(b† # a), computed from the product.
Scalar inner_product(const GradedElement& a, const GradedElement& b);
/// δ^{-k} Σ_n δ^n τ(b_n* a_n).
Scalar inner_product_formula(const GradedElement& a, const GradedElement& b);

/// P_{n-1} ⊂ F_{k-1} to P_n ⊂ F_k.
Tangle include_tangle(int n, int k);
Element include_component(const Element& x, int k);
GradedElement include(const GradedElement& a);
GradedElement include_to(const GradedElement& a, int level);

/// δ^{-1} times the capping tangle, P_n ⊂ F_k to P_{n-1} ⊂ F_{k-1}.
Tangle expectation_tangle(int n, int k);
Element cond_expect_component(const Element& x, int k);
GradedElement cond_expect(const GradedElement& a);

GradedElement element_c(const Ring& ring, int k);
GradedElement element_d(const Ring& ring, int k);

/// e_{k+1} ∈ P_{k+1} ⊂ F_{k+1}(P), k >= 1.
GradedElement jones_e(const Ring& ring, int k);

/// Closure through T_{m-k}, the sum of all TL diagrams.
Scalar trace_Tr(const GradedElement& a);

GradedElement phi(const GradedElement& a);
GradedElement psi(const GradedElement& a);

/// Two-box tangle for the P_t component of a.b, a in P_m ⊂ F_{k+1},
/// b in P_n ⊂ F_k.
Tangle dot_tangle(int m, int n, int k, int t);
Element dot_component(const Element& a, const Element& b, int k, int t);
GradedElement dot_action(const GradedElement& a, const GradedElement& b);
/// δ² E_k(a # include(b) # e_{k+1}).
GradedElement dot_action_via_expectation(const GradedElement& a, const GradedElement& b);

/// Index sets of the two bracketings of a#b#c and the bijection between them.
using IndexSet = std::vector<std::pair<int, int>>;
IndexSet index_set_I(int m, int n, int p, int k);
IndexSet index_set_J(int m, int n, int p, int k);
std::pair<int, int> index_map_T(int m, int n, int p, std::pair<int, int> ts);
/// Same for (a#b).c and a.(b.c): a, b at level k+1, c at level k.
IndexSet index_set_I_dot(int m, int n, int p, int k);
IndexSet index_set_J_dot(int m, int n, int p, int k);

}  // namespace pa
