#pragma once

#include <string>
#include <vector>

#include "pa/tangle.hpp"

namespace pa {

// Annular tangles have one internal box. Through strands to the last 2k
// points of both boxes play the role of the side cables.

enum class CupPlacement { first, second, last, second_to_last };
const char* placement_name(CupPlacement p);
CupPlacement parse_placement(const std::string& s);

struct AnnularSpec {
  enum class Family { T, X, Y, Z };
  Family family = Family::T;
  int k = 0;
  int m = 0;  // external colour (t for Y, Z; n for X)
  int n = 0;  // internal colour
  std::vector<int> A, B;
  CupPlacement placement = CupPlacement::first;

  static AnnularSpec T(int k, std::vector<int> A, std::vector<int> B, int m, int n);
  static AnnularSpec X(int n, int k);
  static AnnularSpec Y(int t, int k, CupPlacement p = CupPlacement::first);
  static AnnularSpec Z(int t, int k, CupPlacement p = CupPlacement::last);
  bool operator==(const AnnularSpec&) const = default;
  std::string str() const;
};

/// [lo, hi] as a vector; empty when hi < lo.
std::vector<int> interval(int lo, int hi);

Tangle annular(const AnnularSpec& spec);
Tangle t_tangle(int k, const std::vector<int>& A, const std::vector<int>& B, int m, int n);
/// X^n_k: colour k inside, n-k cups outside.
Tangle x_tangle(int n, int k);
/// T(k,∅,∅)^k_n: caps the first 2(n-k) points of a colour-n box.
Tangle cap_tangle(int n, int k);
/// The double cup sits after `singles_before` single cups.
Tangle double_cup_tangle(int t, int k, int singles_before);
Tangle y_tangle(int t, int k, CupPlacement p = CupPlacement::first);
Tangle z_tangle(int t, int k, CupPlacement p = CupPlacement::last);
int singles_before(CupPlacement p, int t, int k);

/// Z_{T(k,A,B)^m_n} ∘ Z_{T(k,C,D)^n_p} = δ^{delta_exponent} Z_{T(k,E,F)^m_p}.
struct TComposition {
  int delta_exponent = 0;
  AnnularSpec spec;
};
TComposition compose_t(const AnnularSpec& first, const AnnularSpec& second);

/// All k-good (or k-excellent) annular tangles from colour j (inside) to
/// colour i (outside), in lexicographic order of through points then caps.
std::vector<Tangle> enumerate_good(int k, int j, int i, bool excellent);

}  // namespace pa
