#include "subcluster/gaussian_model.hpp"

#include <Eigen/Eigenvalues>

namespace subcluster {

namespace {
constexpr double kSpdTolerance = 1e-9;
}

GaussianModel::GaussianModel(Eigen::MatrixXd covariance) : cov_(std::move(covariance)) {
  if (cov_.rows() < 1 || cov_.rows() != cov_.cols()) {
    throw InputError("covariance must be a square matrix with at least one row");
  }
  const double asym = (cov_ - cov_.transpose()).cwiseAbs().maxCoeff();
  if (asym > 1e-12 * std::max(1.0, cov_.cwiseAbs().maxCoeff())) {
    throw InputError("covariance must be symmetric");
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(cov_, Eigen::EigenvaluesOnly);
  if (eig.info() != Eigen::Success || eig.eigenvalues().minCoeff() <= kSpdTolerance) {
    throw InputError("covariance must be positive definite (min eigenvalue > 1e-9)");
  }
}

double GaussianModel::log_det_submatrix(const ElementSet& s) const {
  if (s.empty()) return 0.0;
  const auto k = static_cast<Eigen::Index>(s.size());
  Eigen::MatrixXd sub(k, k);
  for (Eigen::Index i = 0; i < k; ++i) {
    for (Eigen::Index j = 0; j < k; ++j) {
      sub(i, j) = cov_(s[static_cast<std::size_t>(i)], s[static_cast<std::size_t>(j)]);
    }
  }
  // principal submatrices of an SPD matrix are SPD, so Cholesky applies
  Eigen::LLT<Eigen::MatrixXd> llt(sub);
  if (llt.info() != Eigen::Success) {
    throw InputError("submatrix Cholesky failed; covariance too ill-conditioned");
  }
  return 2.0 * llt.matrixL().toDenseMatrix().diagonal().array().log().sum();
}

double gaussian_mi_value(const GaussianModel& model, const ElementSet& s) {
  const int n = model.dimension();
  if (!is_sorted_unique(s)) throw InputError("element set must be sorted and duplicate-free");
  if (!s.empty() && (s.front() < 0 || s.back() >= n)) {
    throw InputError("element id out of range for mutual information evaluation");
  }
  const ElementSet rest = complement_of(s, n);
  return 0.5 * (model.log_det_submatrix(s) + model.log_det_submatrix(rest) -
                model.log_det_submatrix(make_range_set(n)));
}

}  // namespace subcluster
