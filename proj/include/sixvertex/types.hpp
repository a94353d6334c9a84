#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace sixvertex {

using Complex = std::complex<double>;
using Mat2 = Eigen::Matrix2cd;
using Mat4 = Eigen::Matrix4cd;
using MatX = Eigen::MatrixXcd;
using VecX = Eigen::VectorXcd;

// Parameter draws with any guarded denominator below this are rejected.
inline constexpr double kSingularGuard = 1e-9;

// Largest chain length for which 2^L x 2^L dense matrices may be materialized.
inline constexpr int kDenseCutoff = 10;

// Absolute floor for relative residual normalization.
inline constexpr double kResidualFloor = 1e-14;

inline const char* kArtifactVersion = "0.1.0";

struct SingularPoint : std::runtime_error { using std::runtime_error::runtime_error; };
struct LengthMismatch : std::runtime_error { using std::runtime_error::runtime_error; };
struct IndexOutOfRange : std::runtime_error { using std::runtime_error::runtime_error; };
struct EqualSlots : std::runtime_error { using std::runtime_error::runtime_error; };
struct DimensionMismatch : std::runtime_error { using std::runtime_error::runtime_error; };
struct DenseCutoffExceeded : std::runtime_error { using std::runtime_error::runtime_error; };
struct NonInvertible : std::runtime_error { using std::runtime_error::runtime_error; };
struct DegenerateRapidities : std::runtime_error { using std::runtime_error::runtime_error; };
struct OffShellInput : std::runtime_error { using std::runtime_error::runtime_error; };
struct NoConvergence : std::runtime_error { using std::runtime_error::runtime_error; };
struct ConfigError : std::runtime_error { using std::runtime_error::runtime_error; };

inline Eigen::Index dim_of(int sites) { return Eigen::Index{1} << sites; }

// Site s in 1..L occupies bit (L - s); site 1 is the most significant bit,
// up = (1,0)^T = bit value 0.
inline int site_bit(Eigen::Index basis_index, int site, int L) {
  return static_cast<int>((basis_index >> (L - site)) & 1);
}
inline Eigen::Index with_site_bit(Eigen::Index basis_index, int site, int L, int bit) {
  const Eigen::Index mask = Eigen::Index{1} << (L - site);
  return bit ? (basis_index | mask) : (basis_index & ~mask);
}

MatX kron(const MatX& a, const MatX& b);
double max_abs(const MatX& m);

// Max-norm difference scaled by the larger operand, floored at kResidualFloor.
double rel_diff(const MatX& a, const MatX& b);
double rel_diff(const VecX& a, const VecX& b);
double rel_diff(Complex a, Complex b);

Mat2 unit22(int i, int j);  // 2x2 matrix unit with 1 at entry (i,j), 1-based
Mat2 diag2(Complex top, Complex bottom);

}  // namespace sixvertex
