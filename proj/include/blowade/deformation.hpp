#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "blowade/blow_ade.hpp"
#include "blowade/parse.hpp"

namespace blowade {

inline constexpr int kDefaultSectionTrials = 8;
inline constexpr std::uint64_t kDefaultSeed = 20240601;

struct MuStarTriple {
  long mu3 = 0;
  /// Minimum over the sampled plane sections; a genericity heuristic.
  long mu2 = 0;
  long mu1 = 0;
  int trials = 0;
  /// Sections with an isolated singularity, hence counted.
  int sections_used = 0;
  std::uint64_t seed = 0;

  friend bool operator==(const MuStarTriple& a, const MuStarTriple& b) {
    return a.mu3 == b.mu3 && a.mu2 == b.mu2 && a.mu1 == b.mu1;
  }
  friend bool operator!=(const MuStarTriple& a, const MuStarTriple& b) { return !(a == b); }
};

/// Teissier's triple: mu3 = nu(f), mu2 = least Milnor number over random sections
/// z3 <- a1 z1 + a2 z2, mu1 = ord(f) - 1.
///
/// Section Milnor numbers are intersection numbers of the two partials. Throws
/// DegenerateForMuStar unless f is convenient and Newton non-degenerate.
MuStarTriple mu_star(const Polynomial& f, int trials = kDefaultSectionTrials,
                     std::uint64_t seed = kDefaultSeed);

struct DeformationFamily {
  ParametricPolynomial generic_member;
  std::vector<Rational> samples;

  static std::vector<Rational> default_samples();
};

struct FamilyOptions {
  AnalyzeOptions analyze;
  int trials = kDefaultSectionTrials;
  std::uint64_t seed = kDefaultSeed;
};

struct SampleResult {
  Rational s;
  Polynomial member;
  bool reduced = false;
  std::optional<BlowAdeReport> report;
  std::optional<MuStarTriple> mu_star;
  /// Set when analyze threw.
  std::optional<ErrorKind> error;
  std::string message;
  /// Why mu_star is missing, when it is.
  std::string mu_star_note;
};

struct ConstantFlags {
  bool reduced = true;
  bool mu_tot = true;
  bool k0 = true;
  bool signature = true;
  bool zeta = true;
  bool mu_star = true;
  /// Some sample had no mu_star; the mu_star flag then only compares available samples.
  bool mu_star_skipped = false;

  bool all() const { return reduced && mu_tot && k0 && signature && zeta && mu_star; }
};

struct Violation {
  Rational s;
  std::string flag;
};

struct StabilityVerdict {
  /// Sorted by s; s = 0 is always present.
  std::vector<SampleResult> samples;
  ConstantFlags flags;
  std::optional<Violation> first_violation;
  /// Every sample certified and every pair of samples of the same type.
  bool pairwise_same_type = false;
};

/// Analyzes each sample member and compares reducedness, mu_tot, k0, type signature,
/// global zeta and mu_star against the member at s = 0. Per-sample errors are recorded.
StabilityVerdict check_family(const DeformationFamily& family, const FamilyOptions& options = {});

}  // namespace blowade
