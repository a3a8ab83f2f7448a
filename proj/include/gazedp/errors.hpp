#ifndef GAZEDP_ERRORS_HPP
#define GAZEDP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace gazedp {

enum class Errc {
  // ingest
  missing_column,
  non_monotonic_timestamp,
  non_finite_value,
  invalid_value,
  empty_recording,
  bad_metadata,
  degenerate_recording,
  // features
  recording_too_short,
  // dp
  empty_dataset,
  // learn
  empty_matrix,
  missing_class,
  single_class_input,
  iteration_limit,
  empty_group,
  length_mismatch,
  // experiments
  insufficient_participants,
  insufficient_windows,
  missing_document,
  // synth / cli
  invalid_spec,
  bad_config,
  io_error,
};

const char* errc_name(Errc c);

/// Base error. `is_input()` distinguishes bad input/usage (CLI exit code 2)
/// from internal failures (exit code 1).
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what),
        code_(code) {}

  Errc code() const { return code_; }

  bool is_input() const { return code_ != Errc::iteration_limit; }

 private:
  Errc code_;
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::missing_column: return "MissingColumn";
    case Errc::non_monotonic_timestamp: return "NonMonotonicTimestamp";
    case Errc::non_finite_value: return "NonFiniteValue";
    case Errc::invalid_value: return "InvalidValue";
    case Errc::empty_recording: return "EmptyRecording";
    case Errc::bad_metadata: return "BadMetadata";
    case Errc::degenerate_recording: return "DegenerateRecording";
    case Errc::recording_too_short: return "RecordingTooShort";
    case Errc::empty_dataset: return "EmptyDataset";
    case Errc::empty_matrix: return "EmptyMatrix";
    case Errc::missing_class: return "MissingClass";
    case Errc::single_class_input: return "SingleClassInput";
    case Errc::iteration_limit: return "IterationLimit";
    case Errc::empty_group: return "EmptyGroup";
    case Errc::length_mismatch: return "LengthMismatch";
    case Errc::insufficient_participants: return "InsufficientParticipants";
    case Errc::insufficient_windows: return "InsufficientWindows";
    case Errc::missing_document: return "MissingDocument";
    case Errc::invalid_spec: return "InvalidSpec";
    case Errc::bad_config: return "BadConfig";
    case Errc::io_error: return "IoError";
  }
  return "Error";
}

}  // namespace gazedp

#endif  // GAZEDP_ERRORS_HPP
