#include "hillspectra/types.hpp"

namespace hillspectra {

const char* bc_name(Bc bc) {
  switch (bc) {
    case Bc::PerPlus: return "per+";
    case Bc::PerMinus: return "per-";
    case Bc::Dir: return "dir";
    case Bc::Neu: return "neu";
  }
  return "?";
}

Bc bc_from_name(const std::string& s) {
  if (s == "per+" || s == "per_plus" || s == "periodic") return Bc::PerPlus;
  if (s == "per-" || s == "per_minus" || s == "antiperiodic") return Bc::PerMinus;
  if (s == "dir" || s == "dirichlet") return Bc::Dir;
  if (s == "neu" || s == "neumann") return Bc::Neu;
  throw Error(Errc::BadParam, "unknown boundary condition '" + s + "'");
}

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::OddIndex: return "OddIndex";
    case Errc::NonFinite: return "NonFinite";
    case Errc::BadParam: return "BadParam";
    case Errc::TruncationTooSmall: return "TruncationTooSmall";
    case Errc::OnSpectrumOfFree: return "OnSpectrumOfFree";
    case Errc::NearSingular: return "NearSingular";
    case Errc::ComplementSingular: return "ComplementSingular";
    case Errc::ModeOutsideWindow: return "ModeOutsideWindow";
    case Errc::EigensolveFailure: return "EigensolveFailure";
    case Errc::OverlappingDiscs: return "OverlappingDiscs";
    case Errc::CountMismatch: return "CountMismatch";
    case Errc::EnclosureViolation: return "EnclosureViolation";
    case Errc::NotConverged: return "NotConverged";
    case Errc::DegeneratePair: return "DegeneratePair";
    case Errc::NullMatch: return "NullMatch";
    case Errc::FrameMismatch: return "FrameMismatch";
    case Errc::StepFailure: return "StepFailure";
    case Errc::RootCountUnstable: return "RootCountUnstable";
    case Errc::InsufficientData: return "InsufficientData";
  }
  return "Unknown";
}

bool errc_is_config(Errc c) {
  switch (c) {
    case Errc::OddIndex:
    case Errc::NonFinite:
    case Errc::BadParam:
    case Errc::TruncationTooSmall:
    case Errc::ModeOutsideWindow:
    case Errc::InsufficientData:
      return true;
    default:
      return false;
  }
}

}  // namespace hillspectra
