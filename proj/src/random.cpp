#include "pa/random.hpp"

#include <algorithm>
#include <numeric>

namespace pa {

int rand_int(Rng& rng, int lo, int hi) {
  // Modulo reduction keeps sequences identical across standard libraries.
  const auto span = static_cast<uint64_t>(hi - lo + 1);
  return lo + static_cast<int>(rng() % span);
}

Scalar rand_scalar(const Ring& ring, Rng& rng) {
  int c = rand_int(rng, -3, 3);
  if (c == 0) c = 1;
  if (ring.mode() == Mode::symbolic) return Scalar::monomial(mpq_class(c), rand_int(rng, -1, 1));
  return ring.integer(c);
}

Element rand_element(const Ring& ring, int n, Rng& rng, int max_terms) {
  const auto& basis = enumerate_diagrams(n);
  Element x(ring, n);
  const int terms = rand_int(rng, 1, max_terms);
  for (int i = 0; i < terms; ++i) {
    x.add_term(basis[static_cast<size_t>(rand_int(rng, 0, static_cast<int>(basis.size()) - 1))], rand_scalar(ring, rng));
  }
  if (x.is_zero()) x.add_term(Diagram::identity(n), ring.one());
  return x;
}

Element rand_dense(const Ring& ring, int n, Rng& rng) {
  Element x(ring, n);
  for (const auto& d : enumerate_diagrams(n)) {
    const int c = rand_int(rng, -3, 3);
    if (c != 0) x.add_term(d, ring.integer(c));
  }
  if (x.is_zero()) x.add_term(Diagram::identity(n), ring.one());
  return x;
}

GradedElement rand_graded(const Ring& ring, int k, int max_colour, Rng& rng, int max_terms) {
  GradedElement g(ring, k);
  const int comps = rand_int(rng, 1, 2);
  for (int i = 0; i < comps; ++i) g.add(rand_element(ring, rand_int(rng, k, max_colour), rng, max_terms));
  if (g.is_zero()) g.add(Element::of(ring, Diagram::identity(k)));
  return g;
}

std::vector<int> rand_subset(int n, int size, Rng& rng) {
  std::vector<int> all(static_cast<size_t>(n));
  std::iota(all.begin(), all.end(), 1);
  // partial Fisher-Yates with the portable rand_int
  for (int i = 0; i < size; ++i) std::swap(all[static_cast<size_t>(i)], all[static_cast<size_t>(rand_int(rng, i, n - 1))]);
  std::vector<int> out(all.begin(), all.begin() + size);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace pa
