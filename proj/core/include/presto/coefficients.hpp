#pragma once

#include <Eigen/Core>

namespace presto {

/// Parameters of a cumulative-logit model with K-1 decision boundaries,
/// stored in the fused parameterization: theta stacks the first boundary's
/// slopes followed by the adjacent-boundary differences,
///
///   theta = (beta_1, psi_2, ..., psi_{K-1}),  psi_k = beta_k - beta_{k-1},
///
/// so an L1 penalty on theta is exactly the fused penalty on the expanded
/// slope matrix. Intercepts are never penalized and live separately.
///
/// Note: increasing intercepts are a property of generating parameters, not
/// an invariant here; fitted nonparallel models only need the per-point
/// feasibility that the probability queries check.
struct CoefficientSet {
    Eigen::VectorXd alphas;  // size K-1
    Eigen::VectorXd theta;   // size p*(K-1)
    int num_classes = 0;     // K
    int num_features = 0;    // p

    static CoefficientSet zeros(int num_classes, int num_features);

    int boundaries() const { return num_classes - 1; }

    /// View of theta as a p x (K-1) matrix whose column 0 is beta_1 and
    /// column k-1 is psi_k for k >= 2.
    Eigen::Map<const Eigen::MatrixXd> theta_blocks() const;
};

/// Expands theta to the p x (K-1) matrix of per-boundary slopes: column k-1
/// holds beta_k = beta_1 + sum_{2<=k'<=k} psi_k'.
Eigen::MatrixXd theta_to_beta(const CoefficientSet& coeffs);

/// Inverse of theta_to_beta: rebuilds the fused parameterization from the
/// per-boundary slope matrix. Round-trips exactly.
CoefficientSet beta_to_theta(const Eigen::VectorXd& alphas,
                             const Eigen::MatrixXd& boundary_slopes);

}  // namespace presto
