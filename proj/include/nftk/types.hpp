#pragma once

#include <Eigen/Dense>

namespace nftk {

using Eigen::Index;
using Eigen::MatrixXd;
using Eigen::VectorXd;

using VecRef = Eigen::Ref<const Eigen::VectorXd>;

} // namespace nftk
