#pragma once

#include <gmpxx.h>

#include <array>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace blowade {

using Rational = mpq_class;
using Integer = mpz_class;

// Exponent vector (e1, e2, e3); every entry lies in [0, kMaxExponent].
using Exponent = std::array<int, 3>;

inline constexpr int kMaxExponent = 65535;

inline int total_degree(const Exponent& e) { return e[0] + e[1] + e[2]; }

Exponent operator+(const Exponent& a, const Exponent& b);

// Names used for printing; the first three names of a context.
using VariableNames = std::array<std::string, 3>;

inline const VariableNames kGlobalNames{"z1", "z2", "z3"};
inline const VariableNames kLocalNames{"x1", "x2", "x3"};

/// Sparse polynomial in three variables with exact rational coefficients.
///
/// Terms are kept in a map keyed by exponent vector (lexicographic order);
/// zero coefficients are never stored.
class Polynomial {
 public:
  using Terms = std::map<Exponent, Rational>;

  Polynomial() = default;
  explicit Polynomial(Terms terms);

  static Polynomial constant(const Rational& c);
  static Polynomial monomial(const Exponent& e, const Rational& c = 1);
  /// The coordinate function x_{i+1}, i in {0,1,2}.
  static Polynomial variable(int i);

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  Rational coefficient(const Exponent& e) const;
  bool has_term(const Exponent& e) const { return terms_.count(e) != 0; }

  /// Largest total degree; -1 for the zero polynomial.
  int degree() const;
  /// Smallest total degree. Throws ZeroPolynomial on zero input.
  int order() const;
  /// Largest exponent of variable i; -1 for zero.
  int degree_in(int i) const;
  /// Smallest exponent of variable i; throws on zero.
  int min_degree_in(int i) const;

  Polynomial homogeneous_part(int k) const;
  /// Drops every term of total degree >= n.
  Polynomial truncated(int n) const;
  Polynomial derivative(int i) const;

  Rational evaluate(const std::array<Rational, 3>& point) const;

  /// Exact composition f(s1, s2, s3).
  Polynomial compose(const std::array<Polynomial, 3>& images) const;

  /// Divides by the monomial x^e; every term must be divisible.
  Polynomial divide_monomial(const Exponent& e) const;

  Polynomial pow(unsigned k) const;

  /// Canonical text form (descending lexicographic term order).
  std::string to_string(const VariableNames& names = kGlobalNames) const;

  void add_term(const Exponent& e, const Rational& c);
  Polynomial& operator+=(const Polynomial& b);
  Polynomial& operator-=(const Polynomial& b);

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Rational& c, const Polynomial& a);
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.terms_ == b.terms_;
  }

 private:
  Terms terms_;
};

/// f = sum of homogeneous parts f_k, k >= order.
struct HomogeneousDecomposition {
  int order = 0;
  std::map<int, Polynomial> parts;

  const Polynomial& part(int k) const;
  Polynomial sum() const;
};

HomogeneousDecomposition homogeneous_decompose(const Polynomial& f);

/// True iff every axis monomial z_i^deg of the homogeneous f_d is present.
bool is_convenient(const Polynomial& f_d);

/// Relabels variables: exponent entry i moves to slot perm[i].
Polynomial permute_variables(const Polynomial& f, const std::array<int, 3>& perm);

}  // namespace blowade
