#pragma once

#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "pa/annular.hpp"
#include "pa/element.hpp"
#include "pa/random.hpp"
#include "pa/report.hpp"
#include "pa/tangle.hpp"
#include "pa/tower.hpp"

namespace pa {

// Finite checks of the analytic estimates and of the relative commutant
// computation. Float mode only where a spectral decomposition is needed.

Element apply(const AnnularSpec& spec, const Element& x);

/// Two boxes a*, a of colour p joined along q strands; colour 2p-q outside.
Tangle estimate_tangle(int p, int q);
/// Z_{EL(i)}(Z_{estimate_tangle}(a*, a)) in P_{2p-q}.
Element estimate_element(const Element& a, int q, int i);
Report estimate_lemma_verify(const Element& a, int k, int q, int i);

/// K = max over 2k <= u <= 2m of δ^{k/2} ||c_u||_op.
double boundedness_constant(const Element& a, int k);
Report boundedness_verify(const Element& a, int k, int trials, uint64_t seed);
/// ||Σ a_i||^2 <= N Σ ||a_i||^2 on random vectors of P_n.
Report sum_square_verify(const Ring& ring, int n, int vectors, int trials, uint64_t seed);

/// Orthogonal projection onto C^n_k = range Z_{X^n_k}: δ^{k-n} X ∘ Cap.
Element cnk_project(const Element& x, int k);
/// True when every diagram of x lies in the image of X^n_k.
bool in_x_image(const Element& x, int k);
/// Capping condition: the first 2(n-k) points capped in pairs give zero.
bool satisfies_capping(const Element& x, int k);

enum class CnkStatus { member, perp, neither };
const char* cnk_status_name(CnkStatus s);
struct CnkMembership {
  CnkStatus status = CnkStatus::neither;
  bool routes_agree = false;
  Element member_part;
  Element perp_part;
};
CnkMembership cnk_membership(const Element& x, int k);
/// A random element of (C^n_k)^⊥.
Element random_perp(const Ring& ring, int n, int k, Rng& rng);

/// (c#x - x#c)_{n+1} with c = element_c(k).
Element c_commutator(const Element& x, int k);
Element ccommlem_invert(const Element& z, int n, int k);
/// Round trip on x ∈ (C^n_k)^⊥ plus the summand norm bounds.
Report ccommlem_verify(const Element& x, int k);

/// d-commutant replay over every Y/Z placement and both readings of d.
Report dcomm_replay(int k);

/// x_n from x_m, m = n + 2d, by the closed formula.
Element xnxm_formula(const Element& xm, int n, int k, int d);
/// (x_n, x_{n+2}) in the perpendicular spaces with vanishing P_{n+1}
/// component of the c-commutator; rational mode.
std::pair<Element, Element> admissible_pair(const Ring& ring, int k, int n, Rng& rng);
Report xnxm_verify(const Ring& ring, int k, int n, uint64_t seed);
/// Four-term expansion of the induction step against the closed formula.
Report telescoping_verify(const Ring& ring, int k, int n, int d, uint64_t seed);

/// Exact LDL^T of the Gram matrix of ⊕_{n=k}^{k+3} P_n under <a|b> at a
/// rational δ, plus float eigenvalues of gram(n) for n <= max_n.
Report positivity_verify(int k, const mpq_class& delta, int max_n);

/// Z_{EL(i)^k_k} fixes P_{i,k} up to δ^i, and its δ^i-eigenspace has the
/// dimension of its range.
Report el_fixed_point_verify(const Ring& ring, int k, int i, uint64_t seed);
/// P_1 -> P_{1,2}: x goes to a through strand beside x; traces agree.
Element extremality_map(const Element& x);
Report extremality_verify(const Ring& ring);
/// Every diagram of P_k commutes under # with c and d at level k.
Report commutant_verify(const Ring& ring, int k);

/// Exact rank of a rational matrix.
int rational_rank(std::vector<std::vector<mpq_class>> m);

}  // namespace pa
