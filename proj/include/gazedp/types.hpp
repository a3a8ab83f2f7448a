#ifndef GAZEDP_TYPES_HPP
#define GAZEDP_TYPES_HPP

#include <string>
#include <vector>

#include "gazedp/errors.hpp"

namespace gazedp {

enum class Document { comic = 0, newspaper = 1, textbook = 2 };
enum class Gender { female = 0, male = 1 };

inline constexpr int kNumDocuments = 3;

inline const char* to_string(Document d) {
  switch (d) {
    case Document::comic: return "comic";
    case Document::newspaper: return "newspaper";
    case Document::textbook: return "textbook";
  }
  return "?";
}

inline const char* to_string(Gender g) {
  return g == Gender::female ? "female" : "male";
}

inline Document document_from_string(const std::string& s) {
  if (s == "comic") return Document::comic;
  if (s == "newspaper") return Document::newspaper;
  if (s == "textbook") return Document::textbook;
  throw Error(Errc::bad_metadata, "unknown document type '" + s + "'");
}

inline Gender gender_from_string(const std::string& s) {
  if (s == "female") return Gender::female;
  if (s == "male") return Gender::male;
  throw Error(Errc::bad_metadata, "unknown gender '" + s + "'");
}

/// One raw gaze sample. Positions are normalized screen units, pupil
/// diameter is in pixels, confidence in [0, 1].
struct GazeSample {
  double t = 0.0;
  double x = 0.0;
  double y = 0.0;
  double pupil = 0.0;
  double confidence = 1.0;
};

/// One participant reading one document: a time-ordered raw sample stream.
struct GazeRecording {
  std::string participant_id;
  Document document = Document::comic;
  Gender gender = Gender::female;
  std::vector<GazeSample> samples;

  double duration() const {
    return samples.empty() ? 0.0 : samples.back().t - samples.front().t;
  }
};

struct Fixation {
  double start = 0.0;
  double duration = 0.0;
  double cx = 0.0;
  double cy = 0.0;
};

struct Saccade {
  double start = 0.0;
  double duration = 0.0;
  double amplitude = 0.0;  // normalized screen units
  double direction = 0.0;  // radians in [0, 2*pi)
};

struct Blink {
  double start = 0.0;
  double duration = 0.0;
};

struct PupilSample {
  double t = 0.0;
  double pupil = 0.0;
};

/// Detected eye-movement events. Lists are time-ordered and non-overlapping;
/// pupil_track excludes blink samples. t_begin/t_end carry the originating
/// recording's time span for window layout downstream.
struct EventSequence {
  std::vector<Fixation> fixations;
  std::vector<Saccade> saccades;
  std::vector<Blink> blinks;
  std::vector<PupilSample> pupil_track;
  double t_begin = 0.0;
  double t_end = 0.0;

  double duration() const { return t_end - t_begin; }
};

}  // namespace gazedp

#endif  // GAZEDP_TYPES_HPP
