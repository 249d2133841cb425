#pragma once

#include <array>

#include "blowade/polynomial.hpp"

namespace blowade {

inline constexpr int kDefaultTruncation = 64;

/// A power series known exactly in total degrees below `truncation()`.
///
/// Arithmetic results carry the smaller of the operand truncation orders.
class TruncatedSeries {
 public:
  TruncatedSeries() = default;
  TruncatedSeries(const Polynomial& p, int truncation);

  static TruncatedSeries variable(int i, int truncation);

  const Polynomial& poly() const noexcept { return poly_; }
  int truncation() const noexcept { return truncation_; }
  bool is_zero() const noexcept { return poly_.is_zero(); }

  /// Lowest total degree present, or `truncation()` when no term is known.
  int order() const;

  TruncatedSeries with_truncation(int n) const;
  TruncatedSeries derivative(int i) const;

  friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator-(const TruncatedSeries& a);
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator*(const Rational& c, const TruncatedSeries& a);
  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    return a.truncation_ == b.truncation_ && a.poly_ == b.poly_;
  }

 private:
  Polynomial poly_;
  int truncation_ = kDefaultTruncation;
};

/// Images of (x1, x2, x3) under a coordinate change.
using CoordinateChange = std::array<TruncatedSeries, 3>;

CoordinateChange identity_change(int truncation);

/// Truncated product that skips terms of total degree >= n.
Polynomial multiply_truncated(const Polynomial& a, const Polynomial& b, int n);

/// Composition f(change[0], change[1], change[2]) truncated at `order`.
///
/// Every image series must carry truncation >= `order` and have zero constant
/// term; otherwise TruncationMismatch / InvalidArgument is raised.
TruncatedSeries substitute(const Polynomial& f, const CoordinateChange& change, int order);
TruncatedSeries substitute(const TruncatedSeries& f, const CoordinateChange& change);

/// Composes two changes: result(x) = outer(inner(x)).
CoordinateChange compose_changes(const CoordinateChange& outer, const CoordinateChange& inner);

}  // namespace blowade
