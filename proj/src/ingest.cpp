#include "gazedp/ingest.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

#include "gazedp/errors.hpp"

namespace gazedp {

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::string field;
  std::stringstream ss(line);
  while (std::getline(ss, field, ',')) out.push_back(trim(field));
  if (!line.empty() && line.back() == ',') out.push_back("");
  return out;
}

double parse_double(const std::string& s, int row, const std::string& col) {
  double v = 0.0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size())
    throw Error(Errc::non_finite_value,
                "row " + std::to_string(row) + ", column " + col +
                    ": cannot parse '" + s + "'");
  if (!std::isfinite(v))
    throw Error(Errc::non_finite_value,
                "row " + std::to_string(row) + ", column " + col +
                    ": non-finite value");
  return v;
}

}  // namespace

GazeRecording parse_gaze_csv(std::istream& in) {
  GazeRecording rec;
  bool have_participant = false, have_document = false, have_gender = false;
  std::string line;
  bool header_seen = false;
  int data_row = 0;

  while (std::getline(in, line)) {
    line = trim(line);
    if (line.empty()) continue;
    if (line[0] == '#') {
      std::string meta = trim(line.substr(1));
      auto eq = meta.find('=');
      if (eq == std::string::npos)
        throw Error(Errc::bad_metadata, "malformed metadata line '" + line + "'");
      std::string key = trim(meta.substr(0, eq));
      std::string val = trim(meta.substr(eq + 1));
      if (key == "participant") {
        rec.participant_id = val;
        have_participant = true;
      } else if (key == "document") {
        rec.document = document_from_string(val);
        have_document = true;
      } else if (key == "gender") {
        rec.gender = gender_from_string(val);
        have_gender = true;
      } else {
        throw Error(Errc::bad_metadata, "unknown metadata key '" + key + "'");
      }
      continue;
    }
    if (!header_seen) {
      auto cols = split_csv(line);
      const std::vector<std::string> expected = {"t", "x", "y", "pupil",
                                                 "confidence"};
      if (cols != expected) {
        std::string want;
        for (const auto& c : expected) want += (want.empty() ? "" : ",") + c;
        throw Error(Errc::missing_column,
                    "expected header '" + want + "', got '" + line + "'");
      }
      header_seen = true;
      continue;
    }
    ++data_row;
    auto cols = split_csv(line);
    if (cols.size() != 5)
      throw Error(Errc::missing_column,
                  "row " + std::to_string(data_row) + ": expected 5 fields, got " +
                      std::to_string(cols.size()));
    GazeSample s;
    s.t = parse_double(cols[0], data_row, "t");
    s.x = parse_double(cols[1], data_row, "x");
    s.y = parse_double(cols[2], data_row, "y");
    s.pupil = parse_double(cols[3], data_row, "pupil");
    s.confidence = parse_double(cols[4], data_row, "confidence");
    if (s.t < 0.0)
      throw Error(Errc::invalid_value,
                  "row " + std::to_string(data_row) + ": negative timestamp");
    if (s.confidence < 0.0 || s.confidence > 1.0)
      throw Error(Errc::invalid_value,
                  "row " + std::to_string(data_row) +
                      ": confidence outside [0,1]");
    if (!rec.samples.empty() && s.t < rec.samples.back().t)
      throw Error(Errc::non_monotonic_timestamp,
                  "row " + std::to_string(data_row) + ": t=" + cols[0] +
                      " decreases");
    rec.samples.push_back(s);
  }

  if (!header_seen)
    throw Error(Errc::missing_column, "no header row found");
  if (rec.samples.empty()) throw Error(Errc::empty_recording, "no data rows");
  if (!have_participant || !have_document || !have_gender)
    throw Error(Errc::bad_metadata,
                "metadata block must set participant, document and gender");
  return rec;
}

GazeRecording parse_gaze_csv_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::io_error, "cannot open '" + path + "'");
  return parse_gaze_csv(in);
}

void write_gaze_csv(std::ostream& out, const GazeRecording& rec) {
  out << "# participant=" << rec.participant_id << "\n";
  out << "# document=" << to_string(rec.document) << "\n";
  out << "# gender=" << to_string(rec.gender) << "\n";
  out << "t,x,y,pupil,confidence\n";
  char buf[32];
  auto put = [&](double v, char sep) {
    auto r = std::to_chars(buf, buf + sizeof(buf), v);
    out.write(buf, r.ptr - buf);
    out.put(sep);
  };
  for (const auto& s : rec.samples) {
    put(s.t, ',');
    put(s.x, ',');
    put(s.y, ',');
    put(s.pupil, ',');
    put(s.confidence, '\n');
  }
}

namespace {

// Contiguous index range [first, last) of samples forming one event.
struct Segment {
  std::size_t first;
  std::size_t last;
};

double dispersion(const std::vector<GazeSample>& s, std::size_t a,
                  std::size_t b) {
  double min_x = s[a].x, max_x = s[a].x, min_y = s[a].y, max_y = s[a].y;
  for (std::size_t i = a; i < b; ++i) {
    min_x = std::min(min_x, s[i].x);
    max_x = std::max(max_x, s[i].x);
    min_y = std::min(min_y, s[i].y);
    max_y = std::max(max_y, s[i].y);
  }
  return (max_x - min_x) + (max_y - min_y);
}

// I-DT over one blink-free index range; appends fixation segments.
void idt_fixations(const std::vector<GazeSample>& s, std::size_t begin,
                   std::size_t end, const DetectionConfig& cfg,
                   std::vector<Segment>& out) {
  std::size_t i = begin;
  while (i < end) {
    // grow the candidate window until it spans the minimum duration
    std::size_t j = i + 1;
    while (j < end && s[j - 1].t - s[i].t < cfg.min_fixation_duration) ++j;
    if (s[j - 1].t - s[i].t < cfg.min_fixation_duration) break;
    if (dispersion(s, i, j) <= cfg.dispersion_threshold) {
      while (j < end && dispersion(s, i, j + 1) <= cfg.dispersion_threshold)
        ++j;
      out.push_back({i, j});
      i = j;
    } else {
      ++i;
    }
  }
}

}  // namespace

EventSequence detect_events(const GazeRecording& rec,
                            const DetectionConfig& cfg) {
  const auto& s = rec.samples;
  if (s.empty()) throw Error(Errc::empty_recording, "recording has no samples");
  if (rec.duration() < cfg.min_fixation_duration)
    throw Error(Errc::degenerate_recording,
                "duration " + std::to_string(rec.duration()) +
                    " s is shorter than the minimum fixation duration");

  const std::size_t n = s.size();

  // 1. blinks: low-confidence runs of at least min_blink_duration
  std::vector<Segment> blink_segs;
  {
    std::size_t i = 0;
    while (i < n) {
      if (s[i].confidence < cfg.blink_confidence) {
        std::size_t j = i;
        while (j < n && s[j].confidence < cfg.blink_confidence) ++j;
        if (s[j - 1].t - s[i].t >= cfg.min_blink_duration)
          blink_segs.push_back({i, j});
        i = j;
      } else {
        ++i;
      }
    }
  }

  // 2. fixations via I-DT on the ranges between blinks
  std::vector<Segment> fix_segs;
  {
    std::size_t start = 0;
    for (const auto& b : blink_segs) {
      if (b.first > start) idt_fixations(s, start, b.first, cfg, fix_segs);
      start = b.last;
    }
    if (start < n) idt_fixations(s, start, n, cfg, fix_segs);
  }

  // 3. everything else is saccade samples, grouped into maximal runs
  EventSequence ev;
  ev.t_begin = s.front().t;
  ev.t_end = s.back().t;

  for (const auto& f : fix_segs) {
    Fixation fx;
    fx.start = s[f.first].t;
    fx.duration = s[f.last - 1].t - s[f.first].t;
    double sx = 0, sy = 0;
    for (std::size_t i = f.first; i < f.last; ++i) {
      sx += s[i].x;
      sy += s[i].y;
    }
    fx.cx = sx / static_cast<double>(f.last - f.first);
    fx.cy = sy / static_cast<double>(f.last - f.first);
    ev.fixations.push_back(fx);
  }
  for (const auto& b : blink_segs)
    ev.blinks.push_back({s[b.first].t, s[b.last - 1].t - s[b.first].t});

  // per-sample fixation index (-1 = none), blink mask
  std::vector<int> fix_id(n, -1);
  std::vector<bool> in_blink(n, false);
  for (std::size_t k = 0; k < fix_segs.size(); ++k)
    for (std::size_t i = fix_segs[k].first; i < fix_segs[k].last; ++i)
      fix_id[i] = static_cast<int>(k);
  for (const auto& b : blink_segs)
    for (std::size_t i = b.first; i < b.last; ++i) in_blink[i] = true;

  {
    std::size_t i = 0;
    while (i < n) {
      if (fix_id[i] >= 0 || in_blink[i]) {
        ++i;
        continue;
      }
      std::size_t j = i;
      while (j < n && fix_id[j] < 0 && !in_blink[j]) ++j;
      Saccade sc;
      sc.start = s[i].t;
      sc.duration = s[j - 1].t - s[i].t;
      int prev_fix = (i > 0) ? fix_id[i - 1] : -1;
      int next_fix = (j < n) ? fix_id[j] : -1;
      double dx, dy;
      if (prev_fix >= 0 && next_fix >= 0) {
        dx = ev.fixations[next_fix].cx - ev.fixations[prev_fix].cx;
        dy = ev.fixations[next_fix].cy - ev.fixations[prev_fix].cy;
      } else {
        // run at a recording/blink boundary: use its own endpoints
        dx = s[j - 1].x - s[i].x;
        dy = s[j - 1].y - s[i].y;
      }
      sc.amplitude = std::hypot(dx, dy);
      double dir = std::atan2(dy, dx);
      if (dir < 0) dir += 2.0 * M_PI;
      sc.direction = dir;
      ev.saccades.push_back(sc);
      i = j;
    }
  }

  for (std::size_t i = 0; i < n; ++i)
    if (!in_blink[i]) ev.pupil_track.push_back({s[i].t, s[i].pupil});

  return ev;
}

}  // namespace gazedp
