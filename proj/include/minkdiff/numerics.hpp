#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

namespace minkdiff {

using Vec2 = Eigen::Vector2d;
using Vec3 = Eigen::Vector3d;
using Mat2 = Eigen::Matrix2d;
using Mat3 = Eigen::Matrix3d;

/// Deterministic orthonormal frame on n-perp: {e1, e2, n} is right-handed,
/// e1 is built by Gram-Schmidt from the coordinate axis least aligned with n.
struct TangentBasis {
  Vec3 e1, e2;
};

TangentBasis tangent_basis(const Vec3& n);

/// n roughly equidistributed unit directions (golden-angle spiral).
std::vector<Vec3> fibonacci_sphere(int n);

struct Quadrature1D {
  std::vector<double> nodes;  // on [-1, 1]
  std::vector<double> weights;
};

Quadrature1D gauss_legendre(int order);

// splitmix64. The exact update is documented in the README so that
// alternate-language ports reproduce every sampling fixture.
struct SplitMix64 {
  uint64_t state;
  explicit SplitMix64(uint64_t seed) : state(seed) {}
  uint64_t next() {
    uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  double uniform(double a, double b) { return a + (b - a) * uniform(); }
  int uniform_int(int n) { return static_cast<int>(next() % static_cast<uint64_t>(n)); }
};

struct Eig2 {
  double lambda1 = 0, lambda2 = 0;  // sorted descending
  Vec2 v1 = Vec2::UnitX(), v2 = Vec2::UnitY();
};

/// Real eigenvalues of a 2x2 matrix via the trace/determinant quadratic.
/// A slightly negative discriminant (imaginary part below imag_tol times the
/// spectral radius) is clipped to zero; anything larger throws NumericFailure.
Eig2 real_eigen_2x2(const Mat2& a, double imag_tol = 1e-7);

double spectral_norm_2x2(const Mat2& a);

}  // namespace minkdiff
