#pragma once

#include <Eigen/Dense>

#include "subcluster/common.hpp"

namespace subcluster {

/// Covariance matrix over N jointly Gaussian variables. Must be symmetric
/// positive definite (smallest eigenvalue above 1e-9).
class GaussianModel {
 public:
  explicit GaussianModel(Eigen::MatrixXd covariance);

  int dimension() const { return static_cast<int>(cov_.rows()); }
  const Eigen::MatrixXd& covariance() const { return cov_; }

  /// log det of the principal submatrix indexed by s; 0 for the empty set.
  double log_det_submatrix(const ElementSet& s) const;

  friend bool operator==(const GaussianModel& a, const GaussianModel& b) {
    return a.cov_ == b.cov_;
  }

 private:
  Eigen::MatrixXd cov_;
};

/// Mutual information between the variables in s and the rest:
///   0.5 * (logdet Sigma_S + logdet Sigma_{D\S} - logdet Sigma).
/// Zero at the empty and full sets; symmetric under complement by construction.
double gaussian_mi_value(const GaussianModel& model, const ElementSet& s);

}  // namespace subcluster
