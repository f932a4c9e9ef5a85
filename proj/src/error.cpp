#include "onerel/error.hpp"

namespace onerel {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::InvalidCharacter: return "InvalidCharacter";
    case Errc::EmptyWord: return "EmptyWord";
    case Errc::ParseError: return "ParseError";
    case Errc::UnboundName: return "UnboundName";
    case Errc::NotCyclicallyReduced: return "NotCyclicallyReduced";
    case Errc::NotRootFree: return "NotRootFree";
    case Errc::IsProperPower: return "IsProperPower";
    case Errc::NotInCommutatorSubgroup: return "NotInCommutatorSubgroup";
    case Errc::InvalidScl: return "InvalidScl";
    case Errc::InvalidRelator: return "InvalidRelator";
    case Errc::UsageError: return "UsageError";
    case Errc::IoError: return "IoError";
    case Errc::EdgePairingError: return "EdgePairingError";
    case Errc::LabelMismatch: return "LabelMismatch";
    case Errc::ZeroDegreeDisk: return "ZeroDegreeDisk";
    case Errc::DegreeOneVertex: return "DegreeOneVertex";
    case Errc::NotCancelling: return "NotCancelling";
    case Errc::NotReduced: return "NotReduced";
    case Errc::ZeroTotalDegree: return "ZeroTotalDegree";
    case Errc::InvalidPod: return "InvalidPod";
    case Errc::MixedBasis: return "MixedBasis";
    case Errc::NoNormalizablePoint: return "NoNormalizablePoint";
    case Errc::NumericallyUnstable: return "NumericallyUnstable";
    case Errc::InternalModelError: return "InternalModelError";
    case Errc::RejectionBudgetExceeded: return "RejectionBudgetExceeded";
    case Errc::ResourceLimit: return "ResourceLimit";
  }
  return "UnknownError";
}

int errc_exit_code(Errc c) {
  switch (c) {
    case Errc::InvalidCharacter:
    case Errc::EmptyWord:
    case Errc::ParseError:
    case Errc::UnboundName:
    case Errc::NotCyclicallyReduced:
    case Errc::NotRootFree:
    case Errc::IsProperPower:
    case Errc::NotInCommutatorSubgroup:
    case Errc::InvalidScl:
    case Errc::InvalidRelator:
    case Errc::UsageError:
    case Errc::IoError:
      return 1;
    case Errc::ResourceLimit:
    case Errc::RejectionBudgetExceeded:
      return 3;
    default:
      return 2;
  }
}

}  // namespace onerel
