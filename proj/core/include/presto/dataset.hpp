#pragma once

#include <Eigen/Core>
#include <vector>

namespace presto {

/// Design matrix plus ordinal labels in 1..K. Immutable after construction;
/// safe to share across threads.
struct Dataset {
    Eigen::MatrixXd X;   // n x p
    Eigen::VectorXi y;   // labels in 1..K
    int num_classes = 0; // K

    int n() const { return static_cast<int>(X.rows()); }
    int p() const { return static_cast<int>(X.cols()); }

    /// Validates and returns the dataset: K >= 2, n >= 1, labels in 1..K,
    /// all features finite.
    static Dataset create(Eigen::MatrixXd X, Eigen::VectorXi y, int num_classes);

    /// Count of observations per class, indexed 0..K-1.
    std::vector<int> class_counts() const;

    /// Subset of rows, in the given order.
    Dataset rows(const std::vector<int>& indices) const;
};

}  // namespace presto
