#pragma once

#include <Eigen/Dense>

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

namespace discokit {

using Eigen::Index;
using Eigen::MatrixXd;
using Eigen::VectorXd;
using Complex = std::complex<double>;

template <typename Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

template <typename T>
struct is_complex : std::false_type {};
template <typename T>
struct is_complex<std::complex<T>> : std::true_type {};
template <typename T>
inline constexpr bool is_complex_v = is_complex<T>::value;

template <typename Scalar>
concept SampleScalar = std::is_same_v<Scalar, double> || std::is_same_v<Scalar, Complex>;

namespace tol {
/// Numeric rank threshold, relative to the largest singular value.
inline constexpr double rank = 1e-10;
/// Below this, ||B^T u|| is treated as zero (u orthogonal to the disc).
inline constexpr double degenerate = 1e-10;
/// Accepted deviation of a direction from unit length.
inline constexpr double unit = 1e-12;
inline constexpr double tangency = 1e-9;
/// Preimage of a boundary point must have unit norm to this tolerance.
inline constexpr double boundary = 1e-8;
}  // namespace tol

inline constexpr const char* version = "0.3.1";

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed construction input (ragged matrices, rank deficiency, dimension mismatch).
class InvalidInput : public Error {
public:
    using Error::Error;
};

/// The direction is orthogonal to one or more discs, so the exposed face is not a point.
class DegenerateDirection : public Error {
public:
    explicit DegenerateDirection(std::vector<std::size_t> discs)
        : Error(make_message(discs)), discs_(std::move(discs)) {}

    /// Zero-based indices of the discs whose span is orthogonal to the direction.
    const std::vector<std::size_t>& discs() const noexcept { return discs_; }

private:
    static std::string make_message(const std::vector<std::size_t>& discs) {
        std::string msg = "direction is orthogonal to disc(s)";
        for (auto j : discs) msg += " " + std::to_string(j + 1);
        return msg;
    }
    std::vector<std::size_t> discs_;
};

class NotTwoDiscs : public Error {
public:
    using Error::Error;
};

class ConditionViolated : public Error {
public:
    using Error::Error;
};

class SamplingExhausted : public Error {
public:
    using Error::Error;
};

class InvalidBoundaryPoint : public Error {
public:
    using Error::Error;
};

class ZeroDirection : public Error {
public:
    using Error::Error;
};

class InsufficientSamples : public Error {
public:
    InsufficientSamples(std::size_t have, std::size_t need)
        : Error("cloud has " + std::to_string(have) + " points, at least " + std::to_string(need) +
                " required"),
          have_(have),
          need_(need) {}
    std::size_t have() const noexcept { return have_; }
    std::size_t need() const noexcept { return need_; }

private:
    std::size_t have_;
    std::size_t need_;
};

}  // namespace discokit
