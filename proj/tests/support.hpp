#pragma once

#include <map>
#include <ostream>
#include <random>
#include <vector>

#include "pa/diagram.hpp"
#include "pa/element.hpp"
#include "pa/scalar.hpp"

namespace pa {

inline void PrintTo(const Scalar& s, std::ostream* os) { *os << s.str(); }
inline void PrintTo(const Element& x, std::ostream* os) { *os << x.str(); }
inline void PrintTo(const Diagram& d, std::ostream* os) { *os << d.str(); }

}  // namespace pa

namespace pa::testing {

using Rng = std::mt19937_64;

inline int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

inline Diagram random_diagram(int n, Rng& rng) {
  const auto& all = enumerate_diagrams(n);
  return all[static_cast<size_t>(uniform(rng, 0, static_cast<int>(all.size()) - 1))];
}

inline Scalar random_scalar(const Ring& ring, Rng& rng) {
  if (ring.mode() == Mode::symbolic) {
    Scalar s = ring.zero();
    int terms = uniform(rng, 1, 2);
    for (int i = 0; i < terms; ++i) {
      int c = uniform(rng, -3, 3);
      if (c == 0) c = 1;
      s += Scalar::monomial(mpq_class(c), uniform(rng, -1, 2));
    }
    return s.is_zero() ? ring.one() : s;
  }
  int c = uniform(rng, -4, 4);
  return ring.integer(c == 0 ? 1 : c);
}

inline Element random_element(const Ring& ring, int n, Rng& rng, int max_terms = 3) {
  Element x(ring, n);
  int terms = uniform(rng, 1, max_terms);
  for (int i = 0; i < terms; ++i) x.add_term(random_diagram(n, rng), random_scalar(ring, rng));
  if (x.is_zero()) x.add_term(Diagram::identity(n), ring.one());
  return x;
}

// Stacking oracle for TL products written in row/column language. A diagram
// of colour n has top nodes T1..Tn (points 1..n) and bottom nodes B1..Bn
// (point 2n+1-c is Bc). xy puts y above x.
struct Stack {
  static int node(int n, int p) { return p <= n ? p - 1 : n + (2 * n - p); }  // T: 0..n-1, B: n..2n-1
  static int point(int n, int v) { return v < n ? v + 1 : 2 * n - (v - n); }

  static std::pair<Diagram, int> glue(const Diagram& x, const Diagram& y) {
    const int n = x.colour();
    // vertices: y nodes 0..2n-1, x nodes 2n..4n-1. y bottom c == x top c.
    std::vector<int> adj1(4 * n), adj2(4 * n, -1);
    for (int p = 1; p <= 2 * n; ++p) {
      adj1[node(n, p)] = node(n, y.partner(p));
      adj1[2 * n + node(n, p)] = 2 * n + node(n, x.partner(p));
    }
    for (int c = 0; c < n; ++c) {
      adj2[n + c] = 2 * n + c;
      adj2[2 * n + c] = n + c;
    }
    std::vector<char> seen(4 * n, 0);
    std::vector<std::pair<int, int>> pairs;
    auto outer = [&](int v) { return v < n || v >= 3 * n; };
    auto label = [&](int v) { return v < n ? point(n, v) : point(n, v - 2 * n); };
    for (int v = 0; v < 4 * n; ++v) {
      if (!outer(v) || seen[v]) continue;
      int cur = v;
      seen[cur] = 1;
      for (;;) {
        int w = adj1[cur];
        seen[w] = 1;
        if (outer(w)) {
          pairs.emplace_back(label(v), label(w));
          break;
        }
        cur = adj2[w];
        seen[cur] = 1;
      }
    }
    int loops = 0;
    for (int v = 0; v < 4 * n; ++v) {
      if (seen[v]) continue;
      ++loops;
      int cur = v;
      while (!seen[cur]) {
        seen[cur] = 1;
        int w = adj1[cur];
        seen[w] = 1;
        cur = adj2[w];
      }
    }
    return {Diagram::from_pairs(n, pairs), loops};
  }

  static Element product(const Element& x, const Element& y) {
    Element out(x.ring(), x.colour());
    for (const auto& [dx, cx] : x.terms()) {
      for (const auto& [dy, cy] : y.terms()) {
        auto [d, loops] = glue(dx, dy);
        out.add_term(d, (cx * cy).times_delta_pow(loops));
      }
    }
    return out;
  }
};

}  // namespace pa::testing

#include "pa/tower.hpp"

namespace pa::testing {

inline GradedElement random_graded(const Ring& ring, int k, int max_extra, Rng& rng, int max_terms = 2) {
  GradedElement g(ring, k);
  int comps = uniform(rng, 1, 2);
  for (int i = 0; i < comps; ++i) g.add(random_element(ring, k + uniform(rng, 0, max_extra), rng, max_terms));
  if (g.is_zero()) g.add(Element::of(ring, Diagram::identity(k)));
  return g;
}

inline GradedElement single(const Element& x, int k) { return GradedElement::of(x, k); }

}  // namespace pa::testing

namespace pa {
inline void PrintTo(const GradedElement& x, std::ostream* os) { *os << x.str(); }
}  // namespace pa
