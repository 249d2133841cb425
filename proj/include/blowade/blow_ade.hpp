#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "blowade/blowup.hpp"
#include "blowade/curve.hpp"
#include "blowade/errors.hpp"
#include "blowade/zeta.hpp"

namespace blowade {

struct AnalyzeOptions {
  int truncation = kDefaultTruncation;
  /// Largest blow-order searched; negative means truncation - d - 1.
  int max_blow_order = -1;
  int jet_order = kDefaultJetOrder;
  /// When nonempty, replaces the computed singular locus.
  std::vector<ProjectivePoint> points;
};

struct PointFailure {
  ProjectivePoint point;
  ErrorKind kind = ErrorKind::InvalidArgument;
  std::string message;
  /// True when the failure is proven (e.g. a non-ADE point) rather than a search miss.
  bool conclusive = false;
};

struct PointAnalysis {
  SingularPointReport curve;
  std::optional<PrincipalPartData> principal;
  /// Zeta function of x1^d (h + c x1^m) at the point.
  std::optional<ZetaFunction> local_zeta;
};

struct SubtypeFlags {
  bool pure_blow_A1 = false;
  bool blow_A = false;
  bool even_blow_A = false;
  /// Some point is of type D or E.
  bool general_ADE = false;
};

inline bool operator<(const ADEType& a, const ADEType& b) {
  return a.family != b.family ? a.family < b.family : a.index < b.index;
}

struct TypeSignature {
  /// Sorted multiset of point types.
  std::vector<ADEType> types;
  std::optional<int> m;

  friend bool operator==(const TypeSignature& a, const TypeSignature& b) {
    return a.types == b.types && a.m == b.m;
  }
  friend bool operator!=(const TypeSignature& a, const TypeSignature& b) { return !(a == b); }
};

struct BlowAdeReport {
  int d = 0;
  bool reduced = true;
  bool is_blow_ade = false;
  std::optional<int> m;
  std::vector<PointAnalysis> points;
  SubtypeFlags subtype;
  bool le_yomdin = false;
  std::optional<ZetaFunction> global_zeta;
  int mu_tot = 0;
  int k0 = 0;
  std::vector<PointFailure> failures;

  TypeSignature signature() const;
};

/// Runs the full pipeline: tangent cone, singular points, blow-up charts, principal parts
/// and the global zeta function.
///
/// Throws NonReducedTangentCone, NonRationalSingularLocus (unless points are supplied)
/// and NonIsolatedSingularity when some strict transform has no x1 terms at all.
BlowAdeReport analyze(const Polynomial& f, const AnalyzeOptions& options = {});

/// True iff f = f_d + f_{d+m} + higher with f_{d+m} nonzero at every singular point of C(f_d).
bool is_le_yomdin(const Polynomial& f, int m,
                  const std::vector<ProjectivePoint>& points = {});

struct TypeMatching {
  bool same = false;
  /// Pairs (index in first report, index in second report).
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
};

/// Same number of points, same blow-order and a type-preserving bijection of points.
///
/// Throws UncertifiedReport unless both reports are blow-ADE.
TypeMatching same_type(const BlowAdeReport& a, const BlowAdeReport& b);

}  // namespace blowade
