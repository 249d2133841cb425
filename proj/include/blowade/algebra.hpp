#pragma once

#include <optional>
#include <vector>

#include "blowade/polynomial.hpp"

// Univariate and bivariate elimination over the rationals: gcds, resultants,
// exact rational root extraction, and gcd computations modulo a square-free
// univariate modulus with branch splitting on zero divisors.
namespace blowade::algebra {

/// Dense univariate polynomial over Q; coefficient i multiplies u^i.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<Rational> coeffs);
  static UPoly constant(const Rational& c);
  /// u - r
  static UPoly linear_root(const Rational& r);

  const std::vector<Rational>& coeffs() const noexcept { return c_; }
  bool is_zero() const noexcept { return c_.empty(); }
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  const Rational& lead() const { return c_.back(); }
  Rational coeff(int i) const;

  Rational evaluate(const Rational& x) const;
  UPoly derivative() const;
  UPoly monic() const;

  friend UPoly operator+(const UPoly& a, const UPoly& b);
  friend UPoly operator-(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const Rational& s, const UPoly& a);
  friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }

 private:
  void trim();
  std::vector<Rational> c_;
};

struct DivMod {
  UPoly quotient;
  UPoly remainder;
};

DivMod divmod(const UPoly& a, const UPoly& b);
UPoly exact_divide(const UPoly& a, const UPoly& b);
/// Monic gcd; gcd(0, 0) = 0.
UPoly gcd(const UPoly& a, const UPoly& b);
UPoly squarefree_part(const UPoly& a);
/// Inverse of a modulo m, when gcd(a, m) = 1.
std::optional<UPoly> inverse_mod(const UPoly& a, const UPoly& m);

/// Distinct rational roots in increasing order.
std::vector<Rational> rational_roots(const UPoly& p);

/// p with every rational root divided out (result square-free, monic).
UPoly irrational_part(const UPoly& p);

/// Polynomial in v whose coefficients lie in Q[u]; entry k multiplies v^k.
using BiPoly = std::vector<UPoly>;

BiPoly to_bipoly(const Polynomial& f, int u_var, int v_var);
int degree_v(const BiPoly& f);
BiPoly derivative_v(const BiPoly& f);
BiPoly derivative_u(const BiPoly& f);

/// Resultant with respect to v, an element of Q[u].
UPoly resultant(const BiPoly& a, const BiPoly& b);

/// f(u = a, v) as a polynomial in v.
UPoly specialize(const BiPoly& f, const Rational& a);

/// True iff the bivariate f has a repeated non-constant factor.
bool has_repeated_factor(const Polynomial& f, int u_var, int v_var);

/// One branch of a gcd computed in (Q[u]/modulus)[v].
struct ModularBranch {
  UPoly modulus;
  /// Degree in v of the gcd on this branch (-1 when every input vanishes).
  int gcd_degree = 0;
};

/// Splits the square-free modulus into coprime factors on each of which the
/// gcd of `polys` is monic. With `exclude_zero_v`, factors of v are removed
/// from the gcd so that gcd_degree counts only roots with v != 0.
std::vector<ModularBranch> gcd_branches(const std::vector<BiPoly>& polys, const UPoly& modulus,
                                        bool exclude_zero_v);

/// Local intersection number at the origin of two curves in the (u, v) plane, by
/// Fulton's algorithm. Empty when they share a component through the origin.
std::optional<long> intersection_multiplicity(const Polynomial& f, const Polynomial& g,
                                              int u_var, int v_var);

}  // namespace blowade::algebra
