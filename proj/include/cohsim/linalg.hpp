#pragma once

#include <Eigen/Dense>

namespace cohsim {

/// Kronecker product of two 2x2 matrices, block convention
/// (i,k),(j,l) -> (2i+k, 2j+l). Index 2*nA + nB for product kets.
inline Eigen::Matrix4cd kron2(const Eigen::Matrix2cd& x, const Eigen::Matrix2cd& y) {
  Eigen::Matrix4cd out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) out.block<2, 2>(2 * i, 2 * j) = x(i, j) * y;
  return out;
}

}  // namespace cohsim
