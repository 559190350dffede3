#pragma once

// Numeric rank, nullspace and span residuals. Every case split in the
// classification reduces to one of these.

#include <Eigen/Dense>

#include <algorithm>

namespace mink::linalg {

inline constexpr double kRankTol = 1e-9;

/// Singular values below tol * max(sigma_max, 1) count as zero.
inline double rank_cutoff(const Eigen::VectorXd& sv, double tol) {
  const double smax = sv.size() ? sv(0) : 0.0;
  return tol * std::max(smax, 1.0);
}

inline int numeric_rank(const Eigen::MatrixXd& M, double tol = kRankTol) {
  if (M.size() == 0) return 0;
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(M);
  const auto& sv = svd.singularValues();
  const double cut = rank_cutoff(sv, tol);
  return static_cast<int>((sv.array() > cut).count());
}

/// Orthonormal basis (columns) of the column space of M.
inline Eigen::MatrixXd range(const Eigen::MatrixXd& M, double tol = kRankTol) {
  if (M.cols() == 0) return Eigen::MatrixXd(M.rows(), 0);
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(M, Eigen::ComputeFullU);
  const auto& sv = svd.singularValues();
  const double cut = rank_cutoff(sv, tol);
  const int r = static_cast<int>((sv.array() > cut).count());
  return svd.matrixU().leftCols(r);
}

/// Orthonormal basis (columns) of the nullspace of M.
inline Eigen::MatrixXd nullspace(const Eigen::MatrixXd& M, double tol = kRankTol) {
  if (M.cols() == 0) return Eigen::MatrixXd(0, 0);
  if (M.rows() == 0) return Eigen::MatrixXd::Identity(M.cols(), M.cols());
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(M, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const double cut = rank_cutoff(sv, tol);
  const int r = static_cast<int>((sv.array() > cut).count());
  return svd.matrixV().rightCols(M.cols() - r);
}

/// Least-squares coefficients of b in the column span of A.
inline Eigen::VectorXd solve_ls(const Eigen::MatrixXd& A, const Eigen::VectorXd& b) {
  if (A.cols() == 0) return Eigen::VectorXd(0);
  Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd> cod;
  cod.setThreshold(kRankTol);
  cod.compute(A);
  return cod.solve(b);
}

/// Distance from b to the column span of A.
inline double span_residual(const Eigen::MatrixXd& A, const Eigen::VectorXd& b) {
  if (A.cols() == 0) return b.norm();
  return (A * solve_ls(A, b) - b).norm();
}

/// Ratio of smallest to largest singular value (0 for rank-deficient input).
inline double conditioning(const Eigen::MatrixXd& M) {
  if (M.cols() == 0) return 1.0;
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(M);
  const auto& sv = svd.singularValues();
  if (sv(0) == 0.0) return 0.0;
  return sv(sv.size() - 1) / sv(0);
}

inline double operator_norm(const Eigen::MatrixXd& M) {
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(M);
  return svd.singularValues()(0);
}

}  // namespace mink::linalg
