#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace blowade {

// Machine-readable tags carried by every domain error.
enum class ErrorKind {
  Syntax,
  ExponentOverflow,
  ZeroPolynomial,
  NonzeroConstantTerm,
  TruncationMismatch,
  TruncationExhausted,
  UnboundedRegion,
  NotASingularity,
  IndeterminateType,
  NonReducedTangentCone,
  NonRationalSingularLocus,
  NonIsolatedSingularity,
  BlowOrderExceeded,
  NotBlowADEShape,
  DegenerateGerm,
  IndeterminateNondegeneracy,
  LevelOutOfRange,
  UncertifiedReport,
  DegenerateForMuStar,
  InvalidArgument,
};

std::string_view to_string(ErrorKind kind);

class DomainError : public std::runtime_error {
 public:
  DomainError(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class SyntaxError : public DomainError {
 public:
  SyntaxError(std::size_t position, const std::string& what)
      : DomainError(ErrorKind::Syntax,
                    what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace blowade
