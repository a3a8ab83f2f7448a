#ifndef GAZEDP_DP_HPP
#define GAZEDP_DP_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "gazedp/features.hpp"
#include "gazedp/rng.hpp"

namespace gazedp {

/// Per-feature global [min, max] across all participants, documents and
/// windows; delta = max - min drives the sensitivity.
struct FeatureRange {
  Vector min;
  Vector max;

  Vector delta() const { return max - min; }
};

/// Calibration of the per-feature exponential mechanism.
struct SanitizerParams {
  Vector epsilon_per_feature;  // eps_i > 0
  int subsample_window = 10;   // w >= 1
  FeatureRange ranges;
  Eigen::Index t_max = 1;  // database-wide maximum post-subsampling length
};

/// What sanitize_dataset was configured with; ranges are estimated from the
/// input unless supplied here (e.g. from a training portion).
struct SanitizerConfig {
  Vector epsilon_per_feature;  // broadcast from one value or full length m
  int subsample_window = 10;
  std::uint64_t seed = 1;
  bool has_ranges = false;
  FeatureRange ranges;
  std::string range_source = "full";
};

/// Release record: the composed budget and everything needed to audit it.
struct PrivacyReceipt {
  std::vector<double> epsilon_per_feature;
  double total_epsilon = 0.0;  // sum of per-feature budgets
  int subsample_window = 1;
  Eigen::Index t_max = 1;
  FeatureRange ranges;
  std::uint64_t seed = 0;
  std::string range_source = "full";
  std::vector<std::string> constant_features;  // delta == 0, passed through
  std::vector<std::string> feature_names;
};

/// Naive left-to-right sum; the composition theorem total is computed this
/// way everywhere so receipts and tests agree bit for bit.
double compose_epsilon(const std::vector<double>& eps);

/// Global per-feature min/max over every series and window. A catalogue
/// theoretical_range overrides the empirical range when it is wider.
FeatureRange estimate_ranges(const FeatureDataset& ds);

/// lambda_i = eps_i / (2 * t_max * delta_i)
double compute_lambda(double eps, Eigen::Index t_max, double delta);

/// Draws one element uniformly from each non-overlapping length-w index
/// block, per feature independently; a trailing partial block contributes
/// one draw. Output length ceil(T/w); w = 1 returns the input unchanged.
FeatureSeries subsample(const FeatureSeries& s, int w, std::uint64_t seed);

/// r_j = p_j + sign_j * log(y) / (lambda * t_max), one sign per element.
Vector perturb_feature(const Vector& p, double y, double lambda,
                       Eigen::Index t_max, RngStream& sign_rng);

/// Applies the exponential mechanism to an already-subsampled series: per
/// feature, one y ~ Exp(rate lambda_i) and per-element random signs.
/// Constant features (delta == 0) pass through unchanged.
FeatureSeries sanitize_series(const FeatureSeries& p,
                              const SanitizerParams& params,
                              std::uint64_t seed);

/// Subsamples and sanitizes every series; t_max is the maximum
/// post-subsampling length over the dataset. Labels pass through untouched.
std::pair<FeatureDataset, PrivacyReceipt> sanitize_dataset(
    const FeatureDataset& ds, const SanitizerConfig& cfg);

void write_receipt(std::ostream& out, const PrivacyReceipt& r);
void write_receipt_file(const std::string& path, const PrivacyReceipt& r);

}  // namespace gazedp

#endif  // GAZEDP_DP_HPP
