#pragma once

#include <stdexcept>
#include <string>

namespace sgt {

enum class Errc {
  NotPrime,
  SizeOverflow,
  SpecMismatch,
  DivisionByZero,
  EvenCharacteristic,
  ZeroCoefficient,
  BadResidueClass,
  IndexOutOfRange,
  HypothesisViolated,
  ZeroElement,
  LoopEdge,
  Disconnected,
  CapExceeded,
  NotSymmetric,
  NoClosedForm,
  Mismatch,
  NotRegular,
  NotPartialDesign,
  NotDesign,
  BadParameters,
  NotSymmetricSet,
  NotGenerating,
  ContainsIdentity,
  IdentityViolated,
  ColorViolation,
  InvalidOperation,
  BadWeights,
  NotIrreducible,
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::NotPrime: return "NotPrime";
    case Errc::SizeOverflow: return "SizeOverflow";
    case Errc::SpecMismatch: return "SpecMismatch";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::EvenCharacteristic: return "EvenCharacteristic";
    case Errc::ZeroCoefficient: return "ZeroCoefficient";
    case Errc::BadResidueClass: return "BadResidueClass";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::HypothesisViolated: return "HypothesisViolated";
    case Errc::ZeroElement: return "ZeroElement";
    case Errc::LoopEdge: return "LoopEdge";
    case Errc::Disconnected: return "Disconnected";
    case Errc::CapExceeded: return "CapExceeded";
    case Errc::NotSymmetric: return "NotSymmetric";
    case Errc::NoClosedForm: return "NoClosedForm";
    case Errc::Mismatch: return "Mismatch";
    case Errc::NotRegular: return "NotRegular";
    case Errc::NotPartialDesign: return "NotPartialDesign";
    case Errc::NotDesign: return "NotDesign";
    case Errc::BadParameters: return "BadParameters";
    case Errc::NotSymmetricSet: return "NotSymmetric";
    case Errc::NotGenerating: return "NotGenerating";
    case Errc::ContainsIdentity: return "ContainsIdentity";
    case Errc::IdentityViolated: return "IdentityViolated";
    case Errc::ColorViolation: return "ColorViolation";
    case Errc::InvalidOperation: return "InvalidOperation";
    case Errc::BadWeights: return "BadWeights";
    case Errc::NotIrreducible: return "NotIrreducible";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(Errc c, const std::string& what)
      : std::runtime_error(std::string(errc_name(c)) + ": " + what), code_(c) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc c, const std::string& what) { throw Error(c, what); }

}  // namespace sgt
