#pragma once

#include <map>
#include <string>
#include <vector>

#include "blowade/polynomial.hpp"

namespace blowade {

/// Product of factors (1 - t^d)^nu, stored as d -> nu with nu != 0.
class ZetaFunction {
 public:
  ZetaFunction() = default;
  /// Single factor (1 - t^d)^nu; d must be positive.
  ZetaFunction(long d, long nu);

  const std::map<long, long>& factors() const noexcept { return factors_; }
  bool is_trivial() const { return factors_.empty(); }
  std::size_t size() const { return factors_.size(); }
  /// Multiplicity of (1 - t^d), zero when absent.
  long multiplicity(long d) const;

  ZetaFunction& operator*=(const ZetaFunction& other);
  friend ZetaFunction operator*(ZetaFunction a, const ZetaFunction& b) { return a *= b; }
  ZetaFunction pow(long k) const;

  /// "(1-t^4)^-3 (1-t^5)^2"; "1" for the empty product.
  std::string to_string() const;

  friend bool operator==(const ZetaFunction& a, const ZetaFunction& b) {
    return a.factors_ == b.factors_;
  }
  friend bool operator!=(const ZetaFunction& a, const ZetaFunction& b) { return !(a == b); }

 private:
  std::map<long, long> factors_;
};

struct ZetaFactor {
  int level = 0;
  long d = 0;
  long nu = 0;

  friend bool operator==(const ZetaFactor& a, const ZetaFactor& b) {
    return a.level == b.level && a.d == b.d && a.nu == b.nu;
  }
};

/// Monodromy zeta function of a Newton non-degenerate germ from its Newton boundary.
///
/// Each compact face of dimension |I|-1 of f restricted to a coordinate subspace I
/// contributes (1 - t^l)^((-1)^|I| |I|! V / l), where l is the face level and V the
/// volume of the cone over the face. Throws DegenerateGerm (naming a witness face)
/// when f is Newton degenerate.
ZetaFunction varchenko_zeta(const Polynomial& f, const std::vector<int>& variables = {0, 1, 2});

/// Sum of d * nu.
long zeta_degree(const ZetaFunction& z);

/// (1 - t^d)^(-d^2 + 3d - 3 + mu_tot) times the local zetas.
ZetaFunction global_zeta(int d, int mu_tot, const std::vector<ZetaFunction>& locals);

/// Exponent of (1 - t^d) in global_zeta.
long cone_exponent(int d, int mu_tot);

/// Factor with the level-th smallest exponent (level starts at 1).
ZetaFactor multiplicity_factor(const ZetaFunction& z, int level);

}  // namespace blowade
