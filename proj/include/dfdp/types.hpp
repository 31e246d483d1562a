#ifndef DFDP_TYPES_HPP
#define DFDP_TYPES_HPP

#include <Eigen/Dense>

#include <stdexcept>

namespace dfdp {

template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using DenseVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

// Working precision of the pipeline.
using Matrix = DenseMatrix<double>;
using Vector = DenseVector<double>;
using IndexVector = Eigen::VectorXi;
using BoolArray = Eigen::Array<bool, Eigen::Dynamic, 1>;
using Index = Eigen::Index;

/// Input file could not be read or failed validation (ragged rows,
/// non-numeric cells, no data). Messages carry the offending line number.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The entropy curve carries no information: every sigma is equivalent
/// (all points coincident, or a configuration so symmetric the potentials
/// are uniform for every sigma). No minimizer exists.
class DegenerateFieldError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace dfdp

#endif  // DFDP_TYPES_HPP
