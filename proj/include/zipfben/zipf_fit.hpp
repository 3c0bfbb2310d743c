#pragma once

#include <cmath>
#include <cstdint>
#include <iosfwd>
#include <span>

#include <Eigen/Core>

#include "zipfben/error.hpp"
#include "zipfben/freq_table.hpp"
#include "zipfben/stats.hpp"

namespace zipfben {

/// Normalized Zipf prediction C / n^alpha over ranks 1..N, where
/// C = 1 / sum_{n=1..N} n^-alpha so the predictions sum to one.
template <typename Scalar>
class BasicZipfCurve {
public:
  BasicZipfCurve(std::size_t n, Scalar alpha) : n_(n), alpha_(alpha) {
    if (n == 0) {
      throw ConfigError("Zipf curve: N must be at least 1");
    }
    if (!(alpha > Scalar(0)) || !std::isfinite(static_cast<double>(alpha))) {
      throw ConfigError("Zipf curve: alpha must be positive");
    }
    // Smallest terms first.
    Scalar harmonic(0);
    for (std::size_t k = n; k >= 1; --k) {
      harmonic += std::pow(static_cast<Scalar>(k), -alpha);
    }
    c_ = Scalar(1) / harmonic;
  }

  std::size_t n() const { return n_; }
  Scalar alpha() const { return alpha_; }
  Scalar normalization() const { return c_; }

  Scalar predicted(std::size_t rank) const {
    return c_ * std::pow(static_cast<Scalar>(rank), -alpha_);
  }

  Vector<Scalar> predicted(const RankWindow& window) const {
    Vector<Scalar> out(static_cast<Eigen::Index>(window.size()));
    for (std::size_t rank = window.lo(); rank <= window.hi(); ++rank) {
      out(static_cast<Eigen::Index>(rank - window.lo())) = predicted(rank);
    }
    return out;
  }

private:
  std::size_t n_;
  Scalar alpha_;
  Scalar c_{};
};

using ZipfCurve = BasicZipfCurve<double>;

inline ZipfCurve zipf_curve(std::size_t n, double alpha = 1.0) { return ZipfCurve(n, alpha); }

struct ZipfFitResult {
  RankWindow window;
  double r;
  ZipfCurve curve;
};

/// Product-moment correlation between actual and predicted frequencies over
/// `window`. Ranks are the view's original labels.
ZipfFitResult zipf_correlation(const RankedView& table, const ZipfCurve& curve,
                               const RankWindow& window);

/// Plot data: rank, actual_frequency, predicted_frequency over `window`.
void write_zipf_tsv(std::ostream& out, const RankedView& table, const ZipfCurve& curve,
                    const RankWindow& window);

/// Noiseless Zipf sample: count(n) = max(1, round(total * C * n^-alpha)),
/// labels w000001, w000002, ... With noise > 0 each expected count is first
/// scaled by exp(noise * z), z standard normal drawn from `seed`.
FrequencyTable sample_zipf_table(std::size_t n, Count total, double alpha, std::uint64_t seed = 0,
                                 double noise = 0.0);

/// One regime of a piecewise power law: exponent `alpha` from rank `from`
/// until the next regime starts.
struct PowerSegment {
  std::size_t from;
  double alpha;
};

/// Like sample_zipf_table, but the expected frequency follows a continuous
/// piecewise power law normalized over n ranks. The first regime must start
/// at rank 1 and regimes must be ascending.
FrequencyTable sample_piecewise_table(std::size_t n, Count total,
                                      std::span<const PowerSegment> segments);

/// Expands a table into a token stream holding every occurrence, shuffled
/// deterministically by `seed`.
TokenStream expand_to_stream(const FrequencyTable& table, std::uint64_t seed);

} // namespace zipfben
