#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "blowade/polynomial.hpp"
#include "blowade/series.hpp"

namespace blowade {

inline constexpr int kDefaultJetOrder = 40;

/// Point of the projective plane, stored with first nonzero coordinate 1.
class ProjectivePoint {
 public:
  ProjectivePoint() = default;
  /// Canonicalizes; throws InvalidArgument when all coordinates vanish.
  explicit ProjectivePoint(std::array<Rational, 3> coords);

  /// Parses "a:b:c" with rational entries.
  static ProjectivePoint parse(const std::string& text);

  const std::array<Rational, 3>& coords() const noexcept { return c_; }
  const Rational& operator[](std::size_t i) const { return c_[i]; }
  /// 1-based index of the first nonzero coordinate.
  int chart() const;
  std::string to_string() const;

  friend bool operator==(const ProjectivePoint& a, const ProjectivePoint& b) { return a.c_ == b.c_; }
  friend bool operator<(const ProjectivePoint& a, const ProjectivePoint& b) { return a.c_ < b.c_; }

 private:
  std::array<Rational, 3> c_{Rational(1), Rational(0), Rational(0)};
};

enum class ADEFamily { A, D, E, NotADE, Indeterminate };

struct ADEType {
  ADEFamily family = ADEFamily::Indeterminate;
  int index = 0;

  bool is_ade() const {
    return family == ADEFamily::A || family == ADEFamily::D || family == ADEFamily::E;
  }
  /// Milnor number of a simple singularity equals its index.
  int milnor() const;
  std::string to_string() const;

  friend bool operator==(const ADEType& a, const ADEType& b) {
    return a.family == b.family && a.index == b.index;
  }
};

struct ADEClassification {
  ADEType type;
  /// Rational change (x2, x3) after which the leading part has normal-form shape.
  CoordinateChange change;
  /// Weighted-homogeneous leading part of g after `change`, e.g. l*x2^2 + r*x3^(n+1).
  Polynomial normal_part;
};

/// Classifies a plane-curve germ g(x2, x3) by exact jet invariants.
///
/// The truncation order of g bounds the recognizable index; beyond it the
/// result is Indeterminate. Throws NotASingularity when order(g) < 2.
ADEClassification classify_ade(const TruncatedSeries& g);

struct SingularPointReport {
  ProjectivePoint point;
  ADEType type;
  int milnor = 0;
  int chart = 1;
  std::optional<CoordinateChange> normalizing_change;
  Polynomial normal_part;
  /// Equation of C(f_d) at the point in local coordinates (x2, x3).
  TruncatedSeries local_equation;
};

/// Throws NonReducedTangentCone unless f_d is square-free.
void check_reduced(const Polynomial& f_d);

/// Rational singular points of the projective curve f_d = 0, sorted.
///
/// Throws NonRationalSingularLocus when some singular point is not rational.
std::vector<ProjectivePoint> singular_locus(const Polynomial& f_d);

/// True iff every partial derivative of f_d vanishes at p.
bool is_singular_point(const Polynomial& f_d, const ProjectivePoint& p);

/// f_d in the affine chart of p, recentred at p, in local coordinates (x2, x3).
Polynomial local_equation(const Polynomial& f_d, const ProjectivePoint& p);

SingularPointReport analyze_point(const Polynomial& f_d, const ProjectivePoint& p,
                                  int jet_order = kDefaultJetOrder);

/// Locates and classifies every singular point of C(f_d).
std::vector<SingularPointReport> singular_points(const Polynomial& f_d,
                                                 int jet_order = kDefaultJetOrder);

/// Sum of local Milnor numbers; throws IndeterminateType unless all points are ADE.
int total_milnor(const std::vector<SingularPointReport>& reports);

}  // namespace blowade
