#include "presto/dataset.hpp"

#include <cmath>
#include <string>

#include "presto/errors.hpp"

namespace presto {

Dataset Dataset::create(Eigen::MatrixXd X, Eigen::VectorXi y, int num_classes) {
    if (num_classes < 2) throw DimensionMismatch("num_classes must be >= 2");
    if (X.rows() < 1) throw DimensionMismatch("dataset needs at least one row");
    if (X.rows() != y.size())
        throw DimensionMismatch("X has " + std::to_string(X.rows()) +
                                " rows but y has " + std::to_string(y.size()));
    for (int i = 0; i < y.size(); ++i) {
        if (y[i] < 1 || y[i] > num_classes)
            throw DimensionMismatch("label out of range 1.." +
                                    std::to_string(num_classes) + " at row " +
                                    std::to_string(i));
    }
    if (!X.allFinite()) throw DimensionMismatch("non-finite feature value");
    Dataset d;
    d.X = std::move(X);
    d.y = std::move(y);
    d.num_classes = num_classes;
    return d;
}

std::vector<int> Dataset::class_counts() const {
    std::vector<int> counts(static_cast<std::size_t>(num_classes), 0);
    for (int i = 0; i < y.size(); ++i) ++counts[static_cast<std::size_t>(y[i] - 1)];
    return counts;
}

Dataset Dataset::rows(const std::vector<int>& indices) const {
    Eigen::MatrixXd sub_x(static_cast<Eigen::Index>(indices.size()), X.cols());
    Eigen::VectorXi sub_y(static_cast<Eigen::Index>(indices.size()));
    for (std::size_t i = 0; i < indices.size(); ++i) {
        sub_x.row(static_cast<Eigen::Index>(i)) = X.row(indices[i]);
        sub_y[static_cast<Eigen::Index>(i)] = y[indices[i]];
    }
    return Dataset::create(std::move(sub_x), std::move(sub_y), num_classes);
}

}  // namespace presto
