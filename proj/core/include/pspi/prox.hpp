#pragma once

#include <Eigen/Dense>

#include "pspi/errors.hpp"

namespace pspi {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

/// Nonnegative matrix whose rows and columns each sum to one (an element of
/// the Birkhoff polytope, up to the projection tolerance used to produce it).
class DoublyStochasticMatrix {
public:
    explicit DoublyStochasticMatrix(Matrix data, bool converged = true)
        : data_(std::move(data)), converged_(converged) {
        if (data_.rows() != data_.cols()) {
            throw ParameterError("doubly stochastic matrix must be square");
        }
    }

    int size() const { return static_cast<int>(data_.rows()); }
    const Matrix& data() const { return data_; }
    /// False when the projection that produced this matrix hit its iteration cap.
    bool converged() const { return converged_; }

    /// Max row/column sum deviation from 1 and most negative entry (as a
    /// positive violation); both 0 for an exact member of the polytope.
    double max_sum_violation() const;
    double max_negativity() const;
    bool is_valid(double sum_tol = 1e-6, double entry_tol = 1e-9) const {
        return max_sum_violation() <= sum_tol && max_negativity() <= entry_tol;
    }

private:
    Matrix data_;
    bool converged_;
};

/// Shrink the pair toward zero: [1 - t/||a||]+ * a; the zero vector when
/// ||a|| <= t. Minimizes t*||x|| + 0.5*||x - a||^2.
Eigen::Vector2d group_soft_threshold(const Eigen::Vector2d& a, double t);

/// Minimizer of (l1/rho)*||c||_1 + (l2/rho)*||c||_2 + 0.5*||c - v||^2:
/// elementwise soft-threshold by l1/rho, then group-shrink by l2/rho.
Vector sparse_group_lasso_prox(const Vector& v, double l1, double l2, double rho);

/// Literal shrink formula [(||a|| - mu) / (nu * ||a||)]+ * a, kept for
/// comparison with the composed prox above; not the exact minimizer.
Vector sparse_group_lasso_shrink_literal(const Vector& a, double mu, double nu);

/// Euclidean projection onto the Birkhoff polytope by Dykstra's alternating
/// projections between the row/column-sum affine set and the nonnegative
/// orthant. Stops when successive iterates differ by < tol in Frobenius norm.
DoublyStochasticMatrix project_birkhoff(const Matrix& m, double tol = 1e-6, int max_iter = 1000);

/// Clamp entries to [0,1], then symmetrize: (R + R')/2. Output is exactly
/// symmetric with entries in [0,1].
Matrix project_box_symmetric(const Matrix& z);

/// The clamp half of project_box_symmetric (entries into [0,1], no symmetrization).
Matrix clamp_unit_interval(const Matrix& z);

/// Exact symmetrization (Z + Z')/2.
Matrix symmetrize(const Matrix& z);

}  // namespace pspi
