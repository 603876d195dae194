#include "minkdiff/numerics.hpp"

#include <cmath>

#include "minkdiff/errors.hpp"

namespace minkdiff {

TangentBasis tangent_basis(const Vec3& n) {
  int k = 0;
  double best = std::abs(n[0]);
  for (int i = 1; i < 3; ++i) {
    if (std::abs(n[i]) < best) {
      best = std::abs(n[i]);
      k = i;
    }
  }
  Vec3 axis = Vec3::Unit(k);
  Vec3 e1 = (axis - n * n.dot(axis)).normalized();
  Vec3 e2 = n.cross(e1);  // unit, and {e1, e2, n} right-handed
  return {e1, e2};
}

std::vector<Vec3> fibonacci_sphere(int n) {
  std::vector<Vec3> out;
  out.reserve(n);
  const double golden = M_PI * (3.0 - std::sqrt(5.0));
  for (int i = 0; i < n; ++i) {
    double z = 1.0 - 2.0 * (i + 0.5) / n;
    double r = std::sqrt(std::max(0.0, 1.0 - z * z));
    double phi = golden * i;
    out.emplace_back(r * std::cos(phi), r * std::sin(phi), z);
  }
  return out;
}

Quadrature1D gauss_legendre(int order) {
  if (order < 1) throw std::invalid_argument("gauss_legendre: order must be >= 1");
  Quadrature1D q;
  q.nodes.resize(order);
  q.weights.resize(order);
  for (int k = 0; k < (order + 1) / 2; ++k) {
    double x = std::cos(M_PI * (k + 0.75) / (order + 0.5));
    double dp = 0;
    for (int it = 0; it < 100; ++it) {
      // Legendre recurrence for P_order(x) and its derivative
      double p0 = 1.0, p1 = x;
      for (int j = 2; j <= order; ++j) {
        double p2 = ((2 * j - 1) * x * p1 - (j - 1) * p0) / j;
        p0 = p1;
        p1 = p2;
      }
      dp = order * (x * p1 - p0) / (x * x - 1.0);
      double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    double w = 2.0 / ((1.0 - x * x) * dp * dp);
    q.nodes[k] = -x;
    q.weights[k] = w;
    q.nodes[order - 1 - k] = x;
    q.weights[order - 1 - k] = w;
  }
  if (order % 2 == 1) q.nodes[order / 2] = 0.0;
  return q;
}

Eig2 real_eigen_2x2(const Mat2& a, double imag_tol) {
  Eig2 e;
  const double tr = a.trace();
  const double det = a.determinant();
  double disc = 0.25 * tr * tr - det;
  if (disc < 0) {
    double imag = std::sqrt(-disc);
    double radius = std::hypot(0.5 * tr, imag);
    if (imag > imag_tol * std::max(radius, 1e-300))
      throw NumericFailure("real_eigen_2x2: eigenvalues are not real (imag=" +
                           std::to_string(imag) + ", radius=" + std::to_string(radius) + ")");
    disc = 0;
  }
  double s = std::sqrt(disc);
  e.lambda1 = 0.5 * tr + s;
  e.lambda2 = 0.5 * tr - s;

  auto eigvec = [&a](double lambda) -> Vec2 {
    // a nonzero row of (A - lambda I) is orthogonal to the eigenvector
    Vec2 r1(a(0, 0) - lambda, a(0, 1));
    Vec2 r2(a(1, 0), a(1, 1) - lambda);
    Vec2 r = (r1.norm() >= r2.norm()) ? r1 : r2;
    if (r.norm() < 1e-14 * (std::abs(lambda) + a.norm() + 1e-300))
      return Vec2::UnitX();  // A ~ lambda I, any direction works
    return Vec2(-r[1], r[0]).normalized();
  };
  e.v1 = eigvec(e.lambda1);
  e.v2 = eigvec(e.lambda2);
  if (s == 0 && e.v1 == e.v2) e.v2 = Vec2(-e.v1[1], e.v1[0]);
  return e;
}

double spectral_norm_2x2(const Mat2& a) {
  Eigen::JacobiSVD<Mat2> svd(a);
  return svd.singularValues()(0);
}

}  // namespace minkdiff
