#pragma once

#include <array>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "blowade/polynomial.hpp"
#include "blowade/series.hpp"

namespace blowade {

using Covector = std::array<long, 3>;

/// A compact face of a Newton polyhedron.
struct Face {
  /// Extreme points; for 2-faces they are listed in boundary order.
  std::vector<Exponent> vertices;
  /// Every support point lying on the face.
  std::vector<Exponent> points;
  int dimension = 0;
  /// Primitive, strictly positive on the active variables, zero elsewhere.
  Covector normal{0, 0, 0};
  long level = 0;

  bool contains(const Exponent& e) const;
};

struct NewtonBoundary {
  std::set<Exponent> support;
  std::vector<Face> faces;
  /// Indices of the active coordinates (ascending); size 2 or 3.
  std::vector<int> variables;

  int variable_count() const { return static_cast<int>(variables.size()); }
  std::vector<const Face*> faces_of_dimension(int k) const;
};

/// Compact faces of conv(support(f) + positive orthant).
///
/// `variables` selects the active coordinates; f must not involve the others.
NewtonBoundary newton_boundary(const Polynomial& f, const std::vector<int>& variables = {0, 1, 2});
NewtonBoundary newton_boundary(const TruncatedSeries& f,
                               const std::vector<int>& variables = {0, 1, 2});

/// Terms of f whose exponents lie on a compact face.
Polynomial newton_principal_part(const Polynomial& f);
Polynomial newton_principal_part(const TruncatedSeries& f);

/// Coordinate subset as a bitmask over variable indices (bit i = x_{i+1}).
using CoordinateSubset = unsigned;

struct NewtonNumber {
  long value = 0;
  /// |I|! times the volume of the cone over the compact (|I|-1)-faces of f^I.
  std::map<CoordinateSubset, Integer> volume_terms;
};

enum class FanAnchor { LowestLex, NearCentroid };

/// Newton number with volumes computed by fans from the given anchor vertex.
NewtonNumber newton_number(const Polynomial& f, const std::vector<int>& variables = {0, 1, 2},
                           FanAnchor anchor = FanAnchor::LowestLex);

/// Restriction of f to monomials in the variables of `subset`.
Polynomial restrict_to(const Polynomial& f, CoordinateSubset subset);

/// Polynomial formed by the terms of f supported on the face.
Polynomial face_polynomial(const Polynomial& f, const Face& face);

/// True iff the face polynomial has a critical point with all coordinates nonzero.
bool face_is_degenerate(const Polynomial& f, const Face& face);

struct NondegeneracyResult {
  bool nondegenerate = true;
  /// First degenerate face found (lower-dimensional faces are checked first).
  std::optional<Face> witness;
};

NondegeneracyResult is_nondegenerate(const Polynomial& f,
                                     const std::vector<int>& variables = {0, 1, 2});
NondegeneracyResult is_nondegenerate(const TruncatedSeries& f,
                                     const std::vector<int>& variables = {0, 1, 2});

}  // namespace blowade
