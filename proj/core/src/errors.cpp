#include "fairgauge/errors.hpp"

namespace fairgauge {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::UnknownIndicator: return "UnknownIndicator";
    case Errc::TargetUnreadable: return "TargetUnreadable";
    case Errc::FetchFailed: return "FetchFailed";
    case Errc::LevelOutOfRange: return "LevelOutOfRange";
    case Errc::DuplicateAnswer: return "DuplicateAnswer";
    case Errc::MissingAnswers: return "MissingAnswers";
    case Errc::Aborted: return "Aborted";
    case Errc::OverrideWithoutJustification: return "OverrideWithoutJustification";
    case Errc::OverrideOnManualIndicator: return "OverrideOnManualIndicator";
    case Errc::IncompleteOutcomes: return "IncompleteOutcomes";
    case Errc::UndeclaredPrefix: return "UndeclaredPrefix";
    case Errc::MissingRowToken: return "MissingRowToken";
    case Errc::UnitWithoutQuantity: return "UnitWithoutQuantity";
    case Errc::DuplicateColumnBinding: return "DuplicateColumnBinding";
    case Errc::MissingColumn: return "MissingColumn";
    case Errc::CellTypeError: return "CellTypeError";
    case Errc::CycleDetected: return "CycleDetected";
    case Errc::UnreachableNode: return "UnreachableNode";
    case Errc::MixedNodeKind: return "MixedNodeKind";
    case Errc::DanglingChild: return "DanglingChild";
    case Errc::InvalidNodeLevel: return "InvalidNodeLevel";
    case Errc::MissingFeature: return "MissingFeature";
    case Errc::UnknownTerm: return "UnknownTerm";
    case Errc::InvalidReport: return "InvalidReport";
  }
  return "Error";
}

Error::Error(Errc code, const std::string& message)
    : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

void fail(Errc code, const std::string& message) { throw Error(code, message); }

}  // namespace fairgauge
