#include "pspi/prox.hpp"

namespace pspi {

double DoublyStochasticMatrix::max_sum_violation() const {
    const double row = (data_.rowwise().sum().array() - 1.0).abs().maxCoeff();
    const double col = (data_.colwise().sum().array() - 1.0).abs().maxCoeff();
    return std::max(row, col);
}

double DoublyStochasticMatrix::max_negativity() const {
    return std::max(0.0, -data_.minCoeff());
}

Eigen::Vector2d group_soft_threshold(const Eigen::Vector2d& a, double t) {
    if (t < 0.0) throw ParameterError("group_soft_threshold: threshold must be >= 0");
    const double norm = a.norm();
    if (norm <= t) return Eigen::Vector2d::Zero();
    return (1.0 - t / norm) * a;
}

Vector sparse_group_lasso_prox(const Vector& v, double l1, double l2, double rho) {
    if (!(rho > 0.0)) throw ParameterError("sparse_group_lasso_prox: rho must be > 0");
    if (l1 < 0.0 || l2 < 0.0) {
        throw ParameterError("sparse_group_lasso_prox: weights must be >= 0");
    }
    const double t1 = l1 / rho;
    Vector u = v.unaryExpr([t1](double x) {
        if (x > t1) return x - t1;
        if (x < -t1) return x + t1;
        return 0.0;
    });
    const double t2 = l2 / rho;
    const double norm = u.norm();
    if (norm <= t2) return Vector::Zero(v.size());
    return (1.0 - t2 / norm) * u;
}

Vector sparse_group_lasso_shrink_literal(const Vector& a, double mu, double nu) {
    if (!(nu > 0.0)) {
        throw ParameterError("sparse_group_lasso_shrink_literal: nu must be > 0");
    }
    const double norm = a.norm();
    if (norm == 0.0) return Vector::Zero(a.size());
    const double factor = (norm - mu) / (nu * norm);
    if (factor <= 0.0) return Vector::Zero(a.size());
    return factor * a;
}

namespace {

// Euclidean projection onto {A : A 1 = 1, A' 1 = 1}. The normal space of the
// affine set is {u 1' + 1 v'}, which gives the closed form below.
Matrix project_affine_sums(const Matrix& m) {
    const auto n = static_cast<double>(m.rows());
    const Vector r = m.rowwise().sum().array() - 1.0;
    const Vector c = m.colwise().sum().transpose().array() - 1.0;
    const double s = m.sum() - n;
    Matrix out = m;
    out.noalias() -= (r / n) * Matrix::Ones(1, m.cols());
    out.noalias() -= Matrix::Ones(m.rows(), 1) * (c.transpose() / n);
    out.array() += s / (n * n);
    return out;
}

}  // namespace

DoublyStochasticMatrix project_birkhoff(const Matrix& m, double tol, int max_iter) {
    if (m.rows() != m.cols()) throw ParameterError("project_birkhoff: matrix must be square");
    if (!(tol > 0.0)) throw ParameterError("project_birkhoff: tol must be > 0");
    if (max_iter < 1) throw ParameterError("project_birkhoff: max_iter must be >= 1");

    Matrix x = m;
    Matrix p = Matrix::Zero(m.rows(), m.cols());
    Matrix q = Matrix::Zero(m.rows(), m.cols());
    bool converged = false;
    for (int it = 0; it < max_iter; ++it) {
        const Matrix y = project_affine_sums(x + p);
        p += x - y;
        const Matrix x_next = (y + q).cwiseMax(0.0);
        q += y - x_next;
        const double delta = (x_next - x).norm();
        x = x_next;
        if (delta < tol) {
            converged = true;
            break;
        }
    }
    return DoublyStochasticMatrix(std::move(x), converged);
}

Matrix clamp_unit_interval(const Matrix& z) {
    return z.cwiseMax(0.0).cwiseMin(1.0);
}

Matrix symmetrize(const Matrix& z) {
    // (a+b)/2 is evaluated with identical operands for (i,j) and (j,i), so the
    // result is exactly symmetric.
    Matrix sum = z + z.transpose();
    return 0.5 * sum;
}

Matrix project_box_symmetric(const Matrix& z) {
    if (z.rows() != z.cols()) throw ParameterError("project_box_symmetric: matrix must be square");
    return symmetrize(clamp_unit_interval(z));
}

}  // namespace pspi
