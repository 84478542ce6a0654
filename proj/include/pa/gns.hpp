#pragma once

#include <Eigen/Dense>

#include "pa/element.hpp"

namespace pa {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

/// Coordinates in enumerate_diagrams order. Float or rational mode.
Vector coords(const Element& x);
Element from_coords(const Ring& ring, int n, const Vector& v);

/// G[i][j] = τ(d_j* d_i). Throws ModeMismatch in symbolic mode.
Matrix gram(const Ring& ring, int n);
/// Exact Gram matrix in any mode (symbolic entries allowed).
std::vector<std::vector<Scalar>> gram_exact(const Ring& ring, int n);

/// Left multiplication by x on P_n in diagram coordinates.
Matrix gns_matrix(const Element& x);
/// G^{1/2} M G^{-1/2}: left multiplication in an orthonormal frame.
Matrix gns_symmetric(const Element& x);

double op_norm(const Element& x);
/// Smallest eigenvalue of the self-adjoint part of x in the GNS frame.
double min_eigenvalue(const Element& x);
bool is_psd(const Element& x, double tol = kFloatTolerance);
/// Positive square root; throws PreconditionError if x is not PSD.
Element psd_sqrt(const Element& x);

/// ||x||^2_{H_k} = δ^{n-k} τ(x* x) for x in P_n.
double hk_norm_sq(const Element& x, int k);

}  // namespace pa
