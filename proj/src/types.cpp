#include "sixvertex/types.hpp"

#include <algorithm>

namespace sixvertex {

MatX kron(const MatX& a, const MatX& b) {
  MatX out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

double max_abs(const MatX& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

double rel_diff(const MatX& a, const MatX& b) {
  const double scale = std::max({kResidualFloor, max_abs(a), max_abs(b)});
  return max_abs(a - b) / scale;
}

double rel_diff(const VecX& a, const VecX& b) {
  const double scale =
      std::max({kResidualFloor, a.cwiseAbs().maxCoeff(), b.cwiseAbs().maxCoeff()});
  return (a - b).cwiseAbs().maxCoeff() / scale;
}

double rel_diff(Complex a, Complex b) {
  const double scale = std::max({kResidualFloor, std::abs(a), std::abs(b)});
  return std::abs(a - b) / scale;
}

Mat2 unit22(int i, int j) {
  Mat2 m = Mat2::Zero();
  m(i - 1, j - 1) = 1.0;
  return m;
}

Mat2 diag2(Complex top, Complex bottom) {
  Mat2 m = Mat2::Zero();
  m(0, 0) = top;
  m(1, 1) = bottom;
  return m;
}

}  // namespace sixvertex
