#include "pa/gns.hpp"

#include <cmath>
#include <mutex>
#include <map>

#include "pa/tl.hpp"

namespace pa {

namespace {

void require_numeric(const Ring& ring, const char* op) {
  if (ring.mode() == Mode::symbolic) throw ModeMismatch(std::string(op) + " needs a fixed numeric delta");
}

struct Frame {
  Matrix G, half, inv_half;
};

// Gram square roots are cached per (delta, n).
const Frame& frame(const Ring& ring, int n) {
  static std::mutex mu;
  static std::map<std::pair<double, int>, Frame> cache;
  const double d = ring.delta_value();
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find({d, n});
  if (it != cache.end()) return it->second;
  Frame f;
  f.G = gram(ring, n);
  Eigen::SelfAdjointEigenSolver<Matrix> es(f.G);
  Vector ev = es.eigenvalues();
  if (ev.minCoeff() <= 0) throw PreconditionError("Gram matrix is not positive definite at this delta");
  f.half = es.eigenvectors() * ev.cwiseSqrt().asDiagonal() * es.eigenvectors().transpose();
  f.inv_half = es.eigenvectors() * ev.cwiseSqrt().cwiseInverse().asDiagonal() * es.eigenvectors().transpose();
  return cache.emplace(std::make_pair(d, n), std::move(f)).first->second;
}

}  // namespace

Vector coords(const Element& x) {
  require_numeric(x.ring(), "coords");
  const auto& basis = enumerate_diagrams(x.n());
  Vector v = Vector::Zero(static_cast<Eigen::Index>(basis.size()));
  for (const auto& [d, c] : x.terms()) v(diagram_index(d)) = c.to_double();
  return v;
}

Element from_coords(const Ring& ring, int n, const Vector& v) {
  require_numeric(ring, "from_coords");
  const auto& basis = enumerate_diagrams(n);
  Element x(ring, n);
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (v(i) == 0) continue;
    Scalar c = ring.mode() == Mode::floating ? Scalar(FloatAt{v(i), ring.float_delta()})
                                             : throw ModeMismatch("from_coords produces float elements only");
    x.add_term(basis[static_cast<size_t>(i)], c);
  }
  return x;
}

std::vector<std::vector<Scalar>> gram_exact(const Ring& ring, int n) {
  const auto& basis = enumerate_diagrams(n);
  const size_t N = basis.size();
  std::vector<std::vector<Scalar>> g(N, std::vector<Scalar>(N, ring.zero()));
  for (size_t i = 0; i < N; ++i) {
    for (size_t j = i; j < N; ++j) {
      Scalar v = tau(multiply(Element::of(ring, basis[j].reflected()), Element::of(ring, basis[i])));
      g[i][j] = v;
      g[j][i] = v;
    }
  }
  return g;
}

Matrix gram(const Ring& ring, int n) {
  require_numeric(ring, "gram");
  auto g = gram_exact(ring, n);
  const auto N = static_cast<Eigen::Index>(g.size());
  Matrix m(N, N);
  for (Eigen::Index i = 0; i < N; ++i) {
    for (Eigen::Index j = 0; j < N; ++j) m(i, j) = g[static_cast<size_t>(i)][static_cast<size_t>(j)].to_double();
  }
  return m;
}

Matrix gns_matrix(const Element& x) {
  require_numeric(x.ring(), "gns_matrix");
  const auto& basis = enumerate_diagrams(x.n());
  const auto N = static_cast<Eigen::Index>(basis.size());
  Matrix m(N, N);
  for (Eigen::Index j = 0; j < N; ++j) {
    m.col(j) = coords(multiply(x, Element::of(x.ring(), basis[static_cast<size_t>(j)])));
  }
  return m;
}

Matrix gns_symmetric(const Element& x) {
  const Frame& f = frame(x.ring(), x.n());
  return f.half * gns_matrix(x) * f.inv_half;
}

double op_norm(const Element& x) {
  if (x.ring().mode() != Mode::floating) throw ModeMismatch("op_norm needs float mode");
  Eigen::JacobiSVD<Matrix> svd(gns_symmetric(x));
  return svd.singularValues().size() ? svd.singularValues()(0) : 0.0;
}

double min_eigenvalue(const Element& x) {
  Matrix s = gns_symmetric(x);
  Matrix h = 0.5 * (s + s.transpose());
  Eigen::SelfAdjointEigenSolver<Matrix> es(h, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

bool is_psd(const Element& x, double tol) {
  Matrix s = gns_symmetric(x);
  if ((s - s.transpose()).cwiseAbs().maxCoeff() > tol * std::max(1.0, s.cwiseAbs().maxCoeff())) return false;
  return min_eigenvalue(x) >= -tol;
}

Element psd_sqrt(const Element& x) {
  if (x.ring().mode() != Mode::floating) throw ModeMismatch("psd_sqrt needs float mode");
  Matrix s = gns_symmetric(x);
  Matrix h = 0.5 * (s + s.transpose());
  if ((s - h).cwiseAbs().maxCoeff() > kFloatTolerance * std::max(1.0, s.cwiseAbs().maxCoeff())) {
    throw PreconditionError("psd_sqrt: element is not self-adjoint");
  }
  Eigen::SelfAdjointEigenSolver<Matrix> es(h);
  Vector ev = es.eigenvalues();
  if (ev.size() && ev.minCoeff() < -kFloatTolerance) {
    throw PreconditionError("psd_sqrt: element is not positive (min eigenvalue " + std::to_string(ev.minCoeff()) + ")");
  }
  const double floor = 1e-13 * std::max(1.0, ev.cwiseAbs().maxCoeff());
  Vector root = ev.unaryExpr([floor](double v) { return v < floor ? 0.0 : std::sqrt(v); });
  Matrix rs = es.eigenvectors() * root.asDiagonal() * es.eigenvectors().transpose();
  const Frame& f = frame(x.ring(), x.n());
  Matrix mc = f.inv_half * rs * f.half;
  Vector c = mc * coords(unit(x.ring(), x.n()));
  for (Eigen::Index i = 0; i < c.size(); ++i) {
    if (std::abs(c(i)) < 1e-14) c(i) = 0;
  }
  return from_coords(x.ring(), x.n(), c);
}

double hk_norm_sq(const Element& x, int k) {
  return tau(multiply(star(x), x)).times_delta_pow(x.n() - k).to_double();
}

}  // namespace pa
