#pragma once

#include <Eigen/Dense>
#include <Eigen/Sparse>

namespace rdnet {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;
using IntVector = Eigen::VectorXi;
using IntMatrix = Eigen::MatrixXi;
using SparseMatrix = Eigen::SparseMatrix<double>;
using Index = Eigen::Index;

}  // namespace rdnet
