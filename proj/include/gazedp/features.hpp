#ifndef GAZEDP_FEATURES_HPP
#define GAZEDP_FEATURES_HPP

#include <Eigen/Dense>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "gazedp/types.hpp"

namespace gazedp {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

/// Optional theoretical [lo, hi] bound for one feature, in feature units.
struct FeatureBound {
  double lo = 0.0;
  double hi = 0.0;
};

struct CatalogueEntry {
  std::string name;
  int extractor = 0;  // index into the extractor table, see features.cpp
  std::optional<FeatureBound> theoretical_range;
};

/// Ordered, named feature list. Column order of every dataset follows it.
struct FeatureCatalogue {
  std::vector<CatalogueEntry> entries;

  Eigen::Index size() const {
    return static_cast<Eigen::Index>(entries.size());
  }
  int index_of(const std::string& name) const;  // -1 if absent
};

/// Windowed feature matrix of one participant x document series. Row j holds
/// the feature vector of window j; columns follow the catalogue.
struct FeatureSeries {
  std::string participant_id;
  Document document = Document::comic;
  Gender gender = Gender::female;
  Matrix values;             // T_k x m
  double window_len = 30.0;  // seconds
  double step = 0.5;         // seconds

  Eigen::Index windows() const { return values.rows(); }
};

struct FeatureDataset {
  FeatureCatalogue catalogue;
  std::vector<FeatureSeries> series;

  Eigen::Index num_features() const { return catalogue.size(); }
};

/// The saccade-direction alphabet: four bins centered on right/up/left/down.
inline constexpr int kDirectionBins = 4;
inline constexpr const char* kDirectionLetters = "RULD";

/// Quantizes a direction in radians to a bin index in [0, bins).
int quantize_direction(double radians, int bins = kDirectionBins);

/// Counts every n-gram of quantized saccade directions, in lexicographic
/// order over the bin alphabet (output length bins^n). Fewer than n
/// directions yields an all-zero vector.
Vector build_wordbook(const std::vector<double>& directions, int n, int bins);

/// The default 38-feature catalogue: 17 scalar event/pupil statistics,
/// 16 two-gram wordbook counts, the two-gram diversity, and 4 one-gram
/// counts. Fixation-duration and pupil-diameter entries carry theoretical
/// range hints.
FeatureCatalogue default_catalogue();

/// Sliding-window feature extraction: T_k = floor((duration - window)/step)+1
/// rows, each computed from the events overlapping that window.
FeatureSeries extract_features(const EventSequence& ev, double window,
                               double step, const FeatureCatalogue& cat);

inline FeatureSeries extract_features(const EventSequence& ev,
                                      const FeatureCatalogue& cat) {
  return extract_features(ev, 30.0, 0.5, cat);
}

/// Number of windows for a given duration; requires duration >= window.
Eigen::Index window_count(double duration, double window, double step);

// Feature CSV: columns `participant,document,gender,window_index,<names...>`.
void write_feature_csv(std::ostream& out, const FeatureDataset& ds);
void write_feature_csv_file(const std::string& path, const FeatureDataset& ds);
FeatureDataset read_feature_csv(std::istream& in);
FeatureDataset read_feature_csv_file(const std::string& path);

}  // namespace gazedp

#endif  // GAZEDP_FEATURES_HPP
