#pragma once

#include <stdexcept>
#include <string>

namespace fairgauge {

// Domain failure modes. The CLI maps any Error to exit code 2; usage
// mistakes are handled by the argument parser and exit with 1.
enum class Errc {
  UnknownIndicator,
  TargetUnreadable,
  FetchFailed,
  LevelOutOfRange,
  DuplicateAnswer,
  MissingAnswers,
  Aborted,
  OverrideWithoutJustification,
  OverrideOnManualIndicator,
  IncompleteOutcomes,
  UndeclaredPrefix,
  MissingRowToken,
  UnitWithoutQuantity,
  DuplicateColumnBinding,
  MissingColumn,
  CellTypeError,
  CycleDetected,
  UnreachableNode,
  MixedNodeKind,
  DanglingChild,
  InvalidNodeLevel,
  MissingFeature,
  UnknownTerm,
  InvalidReport,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message);
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] void fail(Errc code, const std::string& message);

}  // namespace fairgauge
