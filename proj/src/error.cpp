#include "cogkit/error.hpp"

#include <sstream>

namespace cogkit {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotAssociative: return "NotAssociative";
    case ErrorCode::NoIdentity: return "NoIdentity";
    case ErrorCode::NoInverse: return "NoInverse";
    case ErrorCode::NotPermutation: return "NotPermutation";
    case ErrorCode::ClosureTooLarge: return "ClosureTooLarge";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::NotASubgroup: return "NotASubgroup";
    case ErrorCode::SourceTargetMismatch: return "SourceTargetMismatch";
    case ErrorCode::NotAHomomorphism: return "NotAHomomorphism";
    case ErrorCode::LoopMorphism: return "LoopMorphism";
    case ErrorCode::MissingComposite: return "MissingComposite";
    case ErrorCode::CompositeSourceTargetWrong: return "CompositeSourceTargetWrong";
    case ErrorCode::NonAssociative: return "NonAssociative";
    case ErrorCode::DirectedCycle: return "DirectedCycle";
    case ErrorCode::UnknownObject: return "UnknownObject";
    case ErrorCode::NotAFunctor: return "NotAFunctor";
    case ErrorCode::NotLocallyInjective: return "NotLocallyInjective";
    case ErrorCode::Degenerate: return "Degenerate";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::SearchBudgetExceeded: return "SearchBudgetExceeded";
    case ErrorCode::NonInjectivePsi: return "NonInjectivePsi";
    case ErrorCode::Cocycle2aFail: return "Cocycle2aFail";
    case ErrorCode::Cocycle2bFail: return "Cocycle2bFail";
    case ErrorCode::TwistWrongGroup: return "TwistWrongGroup";
    case ErrorCode::Morphism1Fail: return "Morphism1Fail";
    case ErrorCode::Morphism2Fail: return "Morphism2Fail";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::ActionInversion: return "ActionInversion";
    case ErrorCode::CompositionUnderdetermined: return "CompositionUnderdetermined";
    case ErrorCode::ActionNotAutomorphism: return "ActionNotAutomorphism";
    case ErrorCode::StabilizerCondition: return "StabilizerCondition";
    case ErrorCode::OrbitMismatch: return "OrbitMismatch";
    case ErrorCode::TreeNotSpanning: return "TreeNotSpanning";
    case ErrorCode::TreeConditionViolated: return "TreeConditionViolated";
    case ErrorCode::RelatorNotKilled: return "RelatorNotKilled";
    case ErrorCode::UnknownFormat: return "UnknownFormat";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::UnresolvedReference: return "UnresolvedReference";
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::ValidationFailed: return "ValidationFailed";
  }
  return "Unknown";
}

bool Report::has(ErrorCode code) const { return find(code) != nullptr; }

const Violation* Report::find(ErrorCode code) const {
  for (const auto& v : violations_) {
    if (v.code == code) return &v;
  }
  return nullptr;
}

void Report::add(ErrorCode code, std::string witness) {
  if (has(code)) return;
  violations_.push_back({code, std::move(witness)});
}

void Report::merge(const Report& other, std::string_view prefix) {
  for (const auto& v : other.violations_) {
    add(v.code, prefix.empty() ? v.witness : std::string(prefix) + v.witness);
  }
}

std::string Report::summary() const {
  if (ok()) return "ok";
  std::ostringstream os;
  for (std::size_t k = 0; k < violations_.size(); ++k) {
    if (k) os << "; ";
    os << to_string(violations_[k].code) << ": " << violations_[k].witness;
  }
  return os.str();
}

}  // namespace cogkit
