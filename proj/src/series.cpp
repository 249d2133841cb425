#include "blowade/series.hpp"

#include <algorithm>
#include <map>

#include "blowade/errors.hpp"

namespace blowade {

TruncatedSeries::TruncatedSeries(const Polynomial& p, int truncation)
    : poly_(p.truncated(truncation)), truncation_(truncation) {
  if (truncation < 1) {
    throw DomainError(ErrorKind::InvalidArgument, "truncation order must be positive");
  }
}

TruncatedSeries TruncatedSeries::variable(int i, int truncation) {
  return {Polynomial::variable(i), truncation};
}

int TruncatedSeries::order() const {
  return poly_.is_zero() ? truncation_ : poly_.order();
}

TruncatedSeries TruncatedSeries::with_truncation(int n) const {
  if (n > truncation_) {
    throw DomainError(ErrorKind::TruncationMismatch,
                      "cannot raise truncation from " + std::to_string(truncation_) +
                          " to " + std::to_string(n));
  }
  return {poly_, n};
}

TruncatedSeries TruncatedSeries::derivative(int i) const {
  // d/dx_i of a term of degree < N has degree < N - 1.
  return {poly_.derivative(i), std::max(1, truncation_ - 1)};
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
  const int n = std::min(a.truncation_, b.truncation_);
  return {a.poly_.truncated(n) + b.poly_.truncated(n), n};
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
  const int n = std::min(a.truncation_, b.truncation_);
  return {a.poly_.truncated(n) - b.poly_.truncated(n), n};
}

TruncatedSeries operator-(const TruncatedSeries& a) { return {-a.poly_, a.truncation_}; }

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  const int n = std::min(a.truncation_, b.truncation_);
  TruncatedSeries r;
  r.truncation_ = n;
  r.poly_ = multiply_truncated(a.poly_, b.poly_, n);
  return r;
}

TruncatedSeries operator*(const Rational& c, const TruncatedSeries& a) {
  return {c * a.poly_, a.truncation_};
}

Polynomial multiply_truncated(const Polynomial& a, const Polynomial& b, int n) {
  Polynomial r;
  for (const auto& [ea, ca] : a.terms()) {
    const int da = total_degree(ea);
    if (da >= n) continue;
    for (const auto& [eb, cb] : b.terms()) {
      if (da + total_degree(eb) >= n) continue;
      r.add_term(ea + eb, ca * cb);
    }
  }
  return r;
}

CoordinateChange identity_change(int truncation) {
  return {TruncatedSeries::variable(0, truncation), TruncatedSeries::variable(1, truncation),
          TruncatedSeries::variable(2, truncation)};
}

TruncatedSeries substitute(const Polynomial& f, const CoordinateChange& change, int order) {
  for (const auto& s : change) {
    if (s.truncation() < order) {
      throw DomainError(ErrorKind::TruncationMismatch,
                        "substituted series known to order " +
                            std::to_string(s.truncation()) + " but " +
                            std::to_string(order) + " requested");
    }
    if (s.poly().has_term({0, 0, 0})) {
      throw DomainError(ErrorKind::InvalidArgument,
                        "truncated substitution requires images fixing the origin");
    }
  }
  // Images have order >= 1, so a term of degree >= order contributes nothing.
  std::array<std::vector<Polynomial>, 3> powers;
  for (std::size_t i = 0; i < 3; ++i) {
    powers[i].push_back(Polynomial::constant(1));
    const int top = std::min(f.degree_in(static_cast<int>(i)), order - 1);
    for (int k = 1; k <= top; ++k) {
      powers[i].push_back(multiply_truncated(powers[i].back(), change[i].poly(), order));
    }
  }
  std::map<std::pair<int, int>, Polynomial> pair_cache;
  Polynomial r;
  for (const auto& [e, c] : f.terms()) {
    if (total_degree(e) >= order) continue;
    auto key = std::make_pair(e[0], e[1]);
    auto it = pair_cache.find(key);
    if (it == pair_cache.end()) {
      it = pair_cache
               .emplace(key, multiply_truncated(powers[0][static_cast<std::size_t>(e[0])],
                                                powers[1][static_cast<std::size_t>(e[1])],
                                                order))
               .first;
    }
    r += c * multiply_truncated(it->second, powers[2][static_cast<std::size_t>(e[2])], order);
  }
  return {r, order};
}

TruncatedSeries substitute(const TruncatedSeries& f, const CoordinateChange& change) {
  return substitute(f.poly(), change, f.truncation());
}

CoordinateChange compose_changes(const CoordinateChange& outer, const CoordinateChange& inner) {
  CoordinateChange r;
  for (std::size_t i = 0; i < 3; ++i) r[i] = substitute(outer[i], inner);
  return r;
}

}  // namespace blowade
