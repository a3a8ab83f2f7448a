#ifndef GAZEDP_INGEST_HPP
#define GAZEDP_INGEST_HPP

#include <iosfwd>
#include <string>

#include "gazedp/types.hpp"

namespace gazedp {

/// Dispersion-threshold (I-DT) event detection parameters.
struct DetectionConfig {
  double dispersion_threshold = 0.05;  // normalized screen units
  double min_fixation_duration = 0.1;  // seconds
  double blink_confidence = 0.5;       // samples below this may form blinks
  double min_blink_duration = 0.1;     // seconds
};

/// Parses a gaze CSV: a '#'-prefixed metadata block (participant, document,
/// gender) followed by the header `t,x,y,pupil,confidence` and data rows.
/// Errors name the offending data row (1-based).
GazeRecording parse_gaze_csv(std::istream& in);
GazeRecording parse_gaze_csv_file(const std::string& path);

void write_gaze_csv(std::ostream& out, const GazeRecording& rec);

/// I-DT event detection. Every sample ends up in exactly one fixation,
/// saccade, or blink; blinks split surrounding fixations. Saccade amplitude
/// and direction come from the centroids of the fixations they connect.
EventSequence detect_events(const GazeRecording& rec,
                            const DetectionConfig& cfg = {});

}  // namespace gazedp

#endif  // GAZEDP_INGEST_HPP
