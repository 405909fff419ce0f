#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace cogkit {

enum class ErrorCode {
  // group_core
  NotAssociative,
  NoIdentity,
  NoInverse,
  NotPermutation,
  ClosureTooLarge,
  IndexOutOfRange,
  NotASubgroup,
  SourceTargetMismatch,
  NotAHomomorphism,
  // scwol_core
  LoopMorphism,
  MissingComposite,
  CompositeSourceTargetWrong,
  NonAssociative,
  DirectedCycle,
  UnknownObject,
  NotAFunctor,
  NotLocallyInjective,
  Degenerate,
  Disconnected,
  SearchBudgetExceeded,
  // cog_core
  NonInjectivePsi,
  Cocycle2aFail,
  Cocycle2bFail,
  TwistWrongGroup,
  Morphism1Fail,
  Morphism2Fail,
  ShapeMismatch,
  // development
  ActionInversion,
  CompositionUnderdetermined,
  ActionNotAutomorphism,
  StabilizerCondition,
  OrbitMismatch,
  // presentation
  TreeNotSpanning,
  TreeConditionViolated,
  RelatorNotKilled,
  UnknownFormat,
  // io / cli
  ParseError,
  UnresolvedReference,
  InvalidInput,
  ValidationFailed,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code), message_(message) {}

  ErrorCode code() const noexcept { return code_; }
  /// The message without the code prefix.
  const std::string& message() const noexcept { return message_; }

 private:
  ErrorCode code_;
  std::string message_;
};

struct Violation {
  ErrorCode code;
  std::string witness;
};

/// Outcome of a validator. Each failure kind appears at most once, carrying
/// the first witness found in index order.
class Report {
 public:
  bool ok() const { return violations_.empty(); }
  const std::vector<Violation>& violations() const { return violations_; }

  bool has(ErrorCode code) const;
  const Violation* find(ErrorCode code) const;

  /// Records a violation unless one with the same code is already present.
  void add(ErrorCode code, std::string witness);
  void merge(const Report& other, std::string_view prefix = {});

  std::string summary() const;

 private:
  std::vector<Violation> violations_;
};

}  // namespace cogkit
