#include "gazedp/features.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "gazedp/errors.hpp"
#include "gazedp/io.hpp"

namespace gazedp {

namespace {

// Extractor ids. The catalogue is data: each entry names the statistic it
// carries, and extraction dispatches on these ids, so subset or reordered
// catalogues extract consistently.
enum ExtractorId : int {
  kFixRate = 0,
  kFixDurMean,
  kFixDurVar,
  kFixDurMax,
  kFixDurMin,
  kSacRate,
  kSacDurMean,
  kSacDurVar,
  kSacAmpMean,
  kSacAmpVar,
  kSacAmpMax,
  kBlinkRate,
  kBlinkDurMean,
  kPupilMean,
  kPupilVar,
  kPupilMin,
  kPupilMax,
  kWordbook2Base = 100,  // +k, k in [0, 16)
  kWordbook2Distinct = 200,
  kWordbook1Base = 300,  // +k, k in [0, 4)
};

double mean_of(const std::vector<double>& v) {
  if (v.empty()) return 0.0;
  double s = 0.0;
  for (double x : v) s += x;
  return s / static_cast<double>(v.size());
}

// population convention: defined for single-element windows
double var_of(const std::vector<double>& v) {
  if (v.empty()) return 0.0;
  double m = mean_of(v);
  double s = 0.0;
  for (double x : v) s += (x - m) * (x - m);
  return s / static_cast<double>(v.size());
}

double max_of(const std::vector<double>& v) {
  return v.empty() ? 0.0 : *std::max_element(v.begin(), v.end());
}

double min_of(const std::vector<double>& v) {
  return v.empty() ? 0.0 : *std::min_element(v.begin(), v.end());
}

struct WindowEvents {
  std::vector<double> fix_durations;
  std::vector<double> sac_durations;
  std::vector<double> sac_amplitudes;
  std::vector<double> sac_directions;  // time order
  std::vector<double> blink_durations;
  std::vector<double> pupil;
};

bool overlaps(double start, double duration, double w_begin, double w_end) {
  return start < w_end && start + duration >= w_begin;
}

}  // namespace

int FeatureCatalogue::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < entries.size(); ++i)
    if (entries[i].name == name) return static_cast<int>(i);
  return -1;
}

int quantize_direction(double radians, int bins) {
  const double two_pi = 2.0 * M_PI;
  double d = std::fmod(radians, two_pi);
  if (d < 0) d += two_pi;
  const double bin_width = two_pi / bins;
  // bins are centered on 0, bin_width, 2*bin_width, ...
  int b = static_cast<int>(std::floor((d + bin_width / 2.0) / bin_width));
  return b % bins;
}

Vector build_wordbook(const std::vector<double>& directions, int n, int bins) {
  if (n < 1) throw Error(Errc::invalid_value, "wordbook n must be >= 1");
  if (bins < 1) throw Error(Errc::invalid_value, "wordbook bins must be >= 1");
  Eigen::Index size = 1;
  for (int i = 0; i < n; ++i) size *= bins;
  Vector counts = Vector::Zero(size);
  if (static_cast<int>(directions.size()) < n) return counts;
  std::vector<int> letters(directions.size());
  for (std::size_t i = 0; i < directions.size(); ++i)
    letters[i] = quantize_direction(directions[i], bins);
  for (std::size_t i = 0; i + n <= directions.size(); ++i) {
    Eigen::Index code = 0;
    for (int j = 0; j < n; ++j) code = code * bins + letters[i + j];
    counts[code] += 1.0;
  }
  return counts;
}

FeatureCatalogue default_catalogue() {
  FeatureCatalogue cat;
  auto add = [&](const std::string& name, int id,
                 std::optional<FeatureBound> bound = std::nullopt) {
    cat.entries.push_back({name, id, bound});
  };
  // Paper-reported ranges: fixation duration [0.11, 2.75] s, pupil diameter
  // [21.9, 133.9] px.
  const FeatureBound fix_dur{0.11, 2.75};
  const FeatureBound pupil{21.9, 133.9};

  add("fix_rate", kFixRate);
  add("fix_dur_mean", kFixDurMean, fix_dur);
  add("fix_dur_var", kFixDurVar);
  add("fix_dur_max", kFixDurMax, fix_dur);
  add("fix_dur_min", kFixDurMin, fix_dur);
  add("sac_rate", kSacRate);
  add("sac_dur_mean", kSacDurMean);
  add("sac_dur_var", kSacDurVar);
  add("sac_amp_mean", kSacAmpMean);
  add("sac_amp_var", kSacAmpVar);
  add("sac_amp_max", kSacAmpMax);
  add("blink_rate", kBlinkRate);
  add("blink_dur_mean", kBlinkDurMean);
  add("pupil_mean", kPupilMean, pupil);
  add("pupil_var", kPupilVar);
  add("pupil_min", kPupilMin, pupil);
  add("pupil_max", kPupilMax, pupil);
  for (int a = 0; a < kDirectionBins; ++a)
    for (int b = 0; b < kDirectionBins; ++b)
      add(std::string("wb2_") + kDirectionLetters[a] + kDirectionLetters[b],
          kWordbook2Base + a * kDirectionBins + b);
  add("wb2_distinct", kWordbook2Distinct);
  for (int a = 0; a < kDirectionBins; ++a)
    add(std::string("wb1_") + kDirectionLetters[a], kWordbook1Base + a);
  return cat;
}

Eigen::Index window_count(double duration, double window, double step) {
  if (window <= 0 || step <= 0)
    throw Error(Errc::invalid_value, "window and step must be positive");
  if (duration < window)
    throw Error(Errc::recording_too_short,
                "duration " + std::to_string(duration) +
                    " s is shorter than the window of " +
                    std::to_string(window) + " s");
  return static_cast<Eigen::Index>(std::floor((duration - window) / step)) + 1;
}

FeatureSeries extract_features(const EventSequence& ev, double window,
                               double step, const FeatureCatalogue& cat) {
  const Eigen::Index t_count = window_count(ev.duration(), window, step);
  const Eigen::Index m = cat.size();
  if (m < 1) throw Error(Errc::invalid_value, "catalogue is empty");

  FeatureSeries fs;
  fs.window_len = window;
  fs.step = step;
  fs.values.resize(t_count, m);

  for (Eigen::Index w = 0; w < t_count; ++w) {
    const double w_begin = ev.t_begin + static_cast<double>(w) * step;
    const double w_end = w_begin + window;

    WindowEvents we;
    for (const auto& f : ev.fixations)
      if (overlaps(f.start, f.duration, w_begin, w_end))
        we.fix_durations.push_back(f.duration);
    for (const auto& s : ev.saccades)
      if (overlaps(s.start, s.duration, w_begin, w_end)) {
        we.sac_durations.push_back(s.duration);
        we.sac_amplitudes.push_back(s.amplitude);
        we.sac_directions.push_back(s.direction);
      }
    for (const auto& b : ev.blinks)
      if (overlaps(b.start, b.duration, w_begin, w_end))
        we.blink_durations.push_back(b.duration);
    for (const auto& p : ev.pupil_track)
      if (p.t >= w_begin && p.t < w_end) we.pupil.push_back(p.pupil);

    Vector wb2, wb1;  // built lazily, shared across wordbook columns
    auto wordbook2 = [&]() -> const Vector& {
      if (wb2.size() == 0)
        wb2 = build_wordbook(we.sac_directions, 2, kDirectionBins);
      return wb2;
    };
    auto wordbook1 = [&]() -> const Vector& {
      if (wb1.size() == 0)
        wb1 = build_wordbook(we.sac_directions, 1, kDirectionBins);
      return wb1;
    };

    for (Eigen::Index c = 0; c < m; ++c) {
      const int id = cat.entries[static_cast<std::size_t>(c)].extractor;
      double v = 0.0;
      switch (id) {
        case kFixRate:
          v = static_cast<double>(we.fix_durations.size()) / window;
          break;
        case kFixDurMean: v = mean_of(we.fix_durations); break;
        case kFixDurVar: v = var_of(we.fix_durations); break;
        case kFixDurMax: v = max_of(we.fix_durations); break;
        case kFixDurMin: v = min_of(we.fix_durations); break;
        case kSacRate:
          v = static_cast<double>(we.sac_durations.size()) / window;
          break;
        case kSacDurMean: v = mean_of(we.sac_durations); break;
        case kSacDurVar: v = var_of(we.sac_durations); break;
        case kSacAmpMean: v = mean_of(we.sac_amplitudes); break;
        case kSacAmpVar: v = var_of(we.sac_amplitudes); break;
        case kSacAmpMax: v = max_of(we.sac_amplitudes); break;
        case kBlinkRate:
          v = static_cast<double>(we.blink_durations.size()) / window;
          break;
        case kBlinkDurMean: v = mean_of(we.blink_durations); break;
        case kPupilMean: v = mean_of(we.pupil); break;
        case kPupilVar: v = var_of(we.pupil); break;
        case kPupilMin: v = min_of(we.pupil); break;
        case kPupilMax: v = max_of(we.pupil); break;
        case kWordbook2Distinct:
          v = static_cast<double>(
              (wordbook2().array() > 0.0).count());
          break;
        default:
          if (id >= kWordbook1Base && id < kWordbook1Base + kDirectionBins) {
            v = wordbook1()[id - kWordbook1Base];
          } else if (id >= kWordbook2Base &&
                     id < kWordbook2Base + kDirectionBins * kDirectionBins) {
            v = wordbook2()[id - kWordbook2Base];
          } else {
            throw Error(Errc::invalid_value,
                        "unknown extractor id " + std::to_string(id));
          }
      }
      fs.values(w, c) = v;
    }
  }
  return fs;
}

namespace {

void put_double(std::ostream& out, double v) {
  char buf[32];
  auto r = std::to_chars(buf, buf + sizeof(buf), v);
  out.write(buf, r.ptr - buf);
}

std::vector<std::string> split_line(const std::string& line) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (true) {
    auto comma = line.find(',', pos);
    if (comma == std::string::npos) {
      out.push_back(line.substr(pos));
      break;
    }
    out.push_back(line.substr(pos, comma - pos));
    pos = comma + 1;
  }
  return out;
}

}  // namespace

void write_feature_csv(std::ostream& out, const FeatureDataset& ds) {
  out << "participant,document,gender,window_index";
  for (const auto& e : ds.catalogue.entries) out << ',' << e.name;
  out << '\n';
  for (const auto& s : ds.series) {
    for (Eigen::Index w = 0; w < s.windows(); ++w) {
      out << s.participant_id << ',' << to_string(s.document) << ','
          << to_string(s.gender) << ',' << w;
      for (Eigen::Index c = 0; c < s.values.cols(); ++c) {
        out << ',';
        put_double(out, s.values(w, c));
      }
      out << '\n';
    }
  }
}

void write_feature_csv_file(const std::string& path, const FeatureDataset& ds) {
  atomic_write(path, [&](std::ostream& out) { write_feature_csv(out, ds); });
}

FeatureDataset read_feature_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line))
    throw Error(Errc::missing_column, "empty feature CSV");
  while (!line.empty() && (line.back() == '\r' || line.back() == '\n'))
    line.pop_back();
  auto header = split_line(line);
  if (header.size() < 5 || header[0] != "participant" ||
      header[1] != "document" || header[2] != "gender" ||
      header[3] != "window_index")
    throw Error(Errc::missing_column,
                "feature CSV must start with "
                "participant,document,gender,window_index");

  FeatureDataset ds;
  for (std::size_t c = 4; c < header.size(); ++c)
    ds.catalogue.entries.push_back({header[c], -1, std::nullopt});

  // If the column names are exactly the default catalogue's, keep its
  // extractor ids and theoretical range hints.
  FeatureCatalogue def = default_catalogue();
  if (def.entries.size() == ds.catalogue.entries.size()) {
    bool same = true;
    for (std::size_t i = 0; i < def.entries.size(); ++i)
      if (def.entries[i].name != ds.catalogue.entries[i].name) {
        same = false;
        break;
      }
    if (same) ds.catalogue = def;
  }

  const Eigen::Index m = ds.catalogue.size();
  std::vector<Vector> rows;
  std::string cur_participant, cur_gender_str;
  std::string cur_document_str;
  int row_no = 1;

  auto flush_series = [&]() {
    if (rows.empty()) return;
    FeatureSeries s;
    s.participant_id = cur_participant;
    s.document = document_from_string(cur_document_str);
    s.gender = gender_from_string(cur_gender_str);
    s.values.resize(static_cast<Eigen::Index>(rows.size()), m);
    for (std::size_t r = 0; r < rows.size(); ++r)
      s.values.row(static_cast<Eigen::Index>(r)) = rows[r].transpose();
    ds.series.push_back(std::move(s));
    rows.clear();
  };

  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == '\n'))
      line.pop_back();
    if (line.empty()) continue;
    ++row_no;
    auto f = split_line(line);
    if (f.size() != header.size())
      throw Error(Errc::missing_column,
                  "row " + std::to_string(row_no) + ": expected " +
                      std::to_string(header.size()) + " fields, got " +
                      std::to_string(f.size()));
    if (f[0] != cur_participant || f[1] != cur_document_str) {
      flush_series();
      cur_participant = f[0];
      cur_document_str = f[1];
      cur_gender_str = f[2];
    } else if (f[2] != cur_gender_str) {
      throw Error(Errc::bad_metadata,
                  "row " + std::to_string(row_no) +
                      ": gender changes within a series");
    }
    Vector row(m);
    for (Eigen::Index c = 0; c < m; ++c) {
      const std::string& s = f[static_cast<std::size_t>(c) + 4];
      double v = 0.0;
      auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
      if (ec != std::errc() || p != s.data() + s.size() || !std::isfinite(v))
        throw Error(Errc::non_finite_value,
                    "row " + std::to_string(row_no) + ": bad value '" + s + "'");
      row[c] = v;
    }
    rows.push_back(std::move(row));
  }
  flush_series();
  if (ds.series.empty())
    throw Error(Errc::empty_dataset, "feature CSV has no data rows");
  return ds;
}

FeatureDataset read_feature_csv_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::io_error, "cannot open '" + path + "'");
  return read_feature_csv(in);
}

}  // namespace gazedp
