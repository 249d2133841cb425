#pragma once

#include <array>
#include <optional>

#include "blowade/curve.hpp"
#include "blowade/errors.hpp"
#include "blowade/polynomial.hpp"
#include "blowade/series.hpp"

namespace blowade {

/// Affine chart k of the blow-up: z_k = y1 and the other two coordinates,
/// in increasing index order, become y1*y2 and y1*y3.
struct Chart {
  int index = 1;

  std::array<Polynomial, 3> substitution() const;
  /// Coordinate indices (0-based) that become y2 and y3.
  std::array<int, 2> affine_variables() const;
};

struct Pullback {
  int d = 0;
  /// pi^* f, truncated at N.
  TruncatedSeries total;
  /// pi^* f / y1^d, truncated at N - d.
  TruncatedSeries strict;
};

Pullback pullback(const Polynomial& f, const Chart& chart, int truncation = kDefaultTruncation);

/// Strict transform recentred at P: x1 = y1, (x2, x3) = (y2, y3) - P in P's chart.
TruncatedSeries strict_transform_at(const Polynomial& f, const ProjectivePoint& p,
                                    int truncation = kDefaultTruncation);

struct AdmissibleChange {
  Chart chart;
  /// Affine coordinates (y2, y3) of P in its chart.
  std::array<Rational, 2> shift{Rational(0), Rational(0)};
  /// Images of (x1, x2, x3); the first is x1 itself.
  CoordinateChange series_change = identity_change(kDefaultTruncation);
};

struct PrincipalPartData {
  ADEType type;
  Polynomial h;
  Rational c;
  int m = 0;
  AdmissibleChange change;
  /// Germ terms other than h + c*x1^m in the final coordinates.
  Polynomial residual;
  /// Elimination rounds used (node normalization and square splitting).
  int rounds = 0;

  Polynomial principal() const { return h + Polynomial::monomial({m, 0, 0}, c); }
};

/// Raised when the boundary in the final coordinates is not h + c*x1^m.
class ShapeError : public DomainError {
 public:
  ShapeError(const std::string& what, Polynomial offending)
      : DomainError(ErrorKind::NotBlowADEShape, what), offending_(std::move(offending)) {}
  const Polynomial& offending() const noexcept { return offending_; }

 private:
  Polynomial offending_;
};

/// Raised when no pure x1 power is found within the search bound.
class BlowOrderError : public DomainError {
 public:
  BlowOrderError(const std::string& what, bool x1_free)
      : DomainError(ErrorKind::BlowOrderExceeded, what), x1_free_(x1_free) {}
  /// True when the germ had no term involving x1 at all below its truncation.
  bool x1_free() const noexcept { return x1_free_; }

 private:
  bool x1_free_;
};

/// Node case: the x1-free quadratic part of the germ has rank 2.
///
/// Blow-orders up to `max_order` (default: truncation - 1) are searched.
PrincipalPartData normalize_node(const TruncatedSeries& germ, int max_order = -1);

/// Removes every x2-divisible term except the square: returns l*x2^2 + G(x1, x3).
TruncatedSeries split_quadratic(const TruncatedSeries& germ);

/// The shift x2 <- x2 + psi(x1, x3) that realizes split_quadratic.
TruncatedSeries splitting_shift(const TruncatedSeries& germ);

/// Principal-part data of a germ whose x1 = 0 slice has the given classification.
PrincipalPartData extract_principal_part(const TruncatedSeries& germ,
                                         const ADEClassification& cls, int max_order = -1);
PrincipalPartData extract_principal_part(const TruncatedSeries& germ, int max_order = -1);

}  // namespace blowade
