#pragma once

// Dense-vector statistics shared by the Zipf, power-law and Benford fits.

#include <algorithm>
#include <cmath>
#include <optional>

#include <Eigen/Core>

#include "zipfben/error.hpp"

namespace zipfben {

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

/// Product-moment correlation of two equally sized vectors.
///
/// Computed from centered vectors so large common offsets do not cancel.
/// Throws UndefinedCorrelation when either vector is constant and
/// AnalysisError when sizes differ or fewer than two points are given.
template <typename DerivedX, typename DerivedY>
typename DerivedX::Scalar pearson(const Eigen::MatrixBase<DerivedX>& x,
                                  const Eigen::MatrixBase<DerivedY>& y) {
  using Scalar = typename DerivedX::Scalar;
  if (x.size() != y.size()) {
    throw AnalysisError("correlation: vectors differ in length");
  }
  if (x.size() < 2) {
    throw AnalysisError("correlation: at least two points are required");
  }
  const auto xc = (x.array() - x.mean()).matrix().eval();
  const auto yc = (y.array() - y.mean()).matrix().eval();
  const Scalar sxx = xc.squaredNorm();
  const Scalar syy = yc.squaredNorm();
  if (!(sxx > Scalar(0)) || !(syy > Scalar(0))) {
    throw UndefinedCorrelation("correlation: zero variance in input vector");
  }
  const Scalar r = xc.dot(yc) / std::sqrt(sxx * syy);
  // Rounding can push |r| a hair past one.
  return std::clamp(r, Scalar(-1), Scalar(1));
}

template <typename Scalar>
struct LineFit {
  Scalar slope{};
  Scalar intercept{};
  /// Absent when the response is constant (the fit is exact and flat).
  std::optional<Scalar> r;
};

/// Unweighted ordinary least squares of y on x.
template <typename DerivedX, typename DerivedY>
LineFit<typename DerivedX::Scalar> ols_line(const Eigen::MatrixBase<DerivedX>& x,
                                            const Eigen::MatrixBase<DerivedY>& y) {
  using Scalar = typename DerivedX::Scalar;
  if (x.size() != y.size()) {
    throw AnalysisError("least squares: vectors differ in length");
  }
  if (x.size() < 2) {
    throw AnalysisError("least squares: at least two points are required");
  }
  const Scalar mx = x.mean();
  const Scalar my = y.mean();
  const auto xc = (x.array() - mx).matrix().eval();
  const auto yc = (y.array() - my).matrix().eval();
  const Scalar sxx = xc.squaredNorm();
  if (!(sxx > Scalar(0))) {
    throw AnalysisError("least squares: abscissa has zero variance");
  }
  LineFit<Scalar> fit;
  fit.slope = xc.dot(yc) / sxx;
  fit.intercept = my - fit.slope * mx;
  const Scalar syy = yc.squaredNorm();
  if (syy > Scalar(0)) {
    fit.r = std::clamp(xc.dot(yc) / std::sqrt(sxx * syy), Scalar(-1), Scalar(1));
  }
  return fit;
}

} // namespace zipfben
