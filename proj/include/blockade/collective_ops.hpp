#pragma once

#include <Eigen/Dense>

#include "blockade/basis.hpp"

namespace blockade {

/// Matrix representations of the nine collective operators on one
/// blockade-restricted irrep basis. All entries are real in this convention;
/// the z operators are diagonal and X_minus is the transpose of X_plus for
/// X in {T, U, V}. T_plus/T_minus act within a row; U_plus/V_plus map
/// row 1 to row 0, their adjoints the other way.
struct CollectiveOps {
    Eigen::MatrixXd t_plus;
    Eigen::MatrixXd t_minus;
    Eigen::MatrixXd u_plus;
    Eigen::MatrixXd u_minus;
    Eigen::MatrixXd v_plus;
    Eigen::MatrixXd v_minus;
    Eigen::VectorXd t_z;
    Eigen::VectorXd u_z;
    Eigen::VectorXd v_z;
};

CollectiveOps collective_operators(const IrrepBasis& basis);

}  // namespace blockade
