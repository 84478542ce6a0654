#pragma once

#include <string>

#include "pa/tangle.hpp"

namespace pa {

// Point conventions for a box of colour n: * at the top left, points 1..n
// along the top left to right, n+1..2n along the bottom right to left.
// Column c joins top point c to bottom point 2n+1-c.

/// M^n_{n,n}. Box 2 sits above box 1, so Z_M(x, y) = xy.
Tangle mult_tangle(int n);
/// I^{n+1}_n: adds a through strand on the right.
Tangle incl_tangle(int n);
/// TR^0_n.
Tangle trace_tangle(int n);
/// 1^n.
Tangle unit_tangle(int n);
/// I^n_n.
Tangle identity_tangle(int n);
/// R^n_n: internal point p is joined to external point p-2 (mod 2n).
Tangle rotation_tangle(int n);
/// ER^n_{n+i}: caps the i rightmost columns.
Tangle right_expectation_tangle(int n, int i = 1);
/// EL(i)^n_n: caps the i leftmost columns and redraws them outside.
Tangle left_expectation_tangle(int n, int i);
/// E^n for n >= 2: cups on the last two columns, no inputs.
Tangle jones_tangle(int n);

enum class StandardKind { M, I, TR, R, EL, ER, E, UNIT, ID };
/// Dispatch by kind; `n` is the colour parameter, `i` the EL/ER depth.
Tangle standard_tangle(StandardKind kind, int n, int i = 1);
StandardKind parse_standard_kind(const std::string& s);

Element unit(const Ring& ring, int n);
Element star(const Element& x);
Element multiply(const Element& x, const Element& y);
/// Normalized trace δ^{-n} Z_TR(x).
Scalar tau(const Element& x);
/// ⟨x, y⟩ = τ(y* x).
Scalar inner(const Element& x, const Element& y);
/// Z_{R^n_n}(x) applied `times` times (negative allowed).
Element rotate(const Element& x, int times = 1);
/// e_n = δ^{-1} Z_{E^n}(1), n >= 2.
Element jones_projection(const Ring& ring, int n);
/// Z_{I^{n+1}_n}(x).
Element include_tl(const Element& x);

}  // namespace pa
