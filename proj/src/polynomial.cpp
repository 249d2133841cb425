#include "blowade/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "blowade/errors.hpp"

namespace blowade {

Exponent operator+(const Exponent& a, const Exponent& b) {
  Exponent r{a[0] + b[0], a[1] + b[1], a[2] + b[2]};
  for (int v : r) {
    if (v > kMaxExponent) {
      throw DomainError(ErrorKind::ExponentOverflow,
                        "exponent exceeds " + std::to_string(kMaxExponent));
    }
  }
  return r;
}

Polynomial::Polynomial(Terms terms) : terms_(std::move(terms)) {
  std::erase_if(terms_, [](const auto& kv) { return kv.second == 0; });
}

Polynomial Polynomial::constant(const Rational& c) {
  return monomial({0, 0, 0}, c);
}

Polynomial Polynomial::monomial(const Exponent& e, const Rational& c) {
  Polynomial p;
  p.add_term(e, c);
  return p;
}

Polynomial Polynomial::variable(int i) {
  Exponent e{0, 0, 0};
  e.at(static_cast<std::size_t>(i)) = 1;
  return monomial(e);
}

void Polynomial::add_term(const Exponent& e, const Rational& c) {
  if (c == 0) return;
  for (int v : e) {
    if (v < 0 || v > kMaxExponent) {
      throw DomainError(ErrorKind::ExponentOverflow,
                        "exponent out of range [0, " +
                            std::to_string(kMaxExponent) + "]");
    }
  }
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational Polynomial::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

int Polynomial::degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, total_degree(e));
  return d;
}

int Polynomial::order() const {
  if (is_zero()) {
    throw DomainError(ErrorKind::ZeroPolynomial, "order of the zero polynomial");
  }
  int d = total_degree(terms_.begin()->first);
  for (const auto& [e, c] : terms_) d = std::min(d, total_degree(e));
  return d;
}

int Polynomial::degree_in(int i) const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e[static_cast<std::size_t>(i)]);
  return d;
}

int Polynomial::min_degree_in(int i) const {
  if (is_zero()) {
    throw DomainError(ErrorKind::ZeroPolynomial, "degree of the zero polynomial");
  }
  int d = kMaxExponent;
  for (const auto& [e, c] : terms_) d = std::min(d, e[static_cast<std::size_t>(i)]);
  return d;
}

Polynomial Polynomial::homogeneous_part(int k) const {
  Polynomial r;
  for (const auto& [e, c] : terms_) {
    if (total_degree(e) == k) r.terms_.emplace(e, c);
  }
  return r;
}

Polynomial Polynomial::truncated(int n) const {
  Polynomial r;
  for (const auto& [e, c] : terms_) {
    if (total_degree(e) < n) r.terms_.emplace(e, c);
  }
  return r;
}

Polynomial Polynomial::derivative(int i) const {
  const auto k = static_cast<std::size_t>(i);
  Polynomial r;
  for (const auto& [e, c] : terms_) {
    if (e[k] == 0) continue;
    Exponent f = e;
    f[k] -= 1;
    r.terms_.emplace(f, c * e[k]);
  }
  return r;
}

namespace {

Rational rational_pow(const Rational& x, int k) {
  Rational r = 1;
  for (int i = 0; i < k; ++i) r *= x;
  return r;
}

}  // namespace

Rational Polynomial::evaluate(const std::array<Rational, 3>& point) const {
  Rational sum = 0;
  for (const auto& [e, c] : terms_) {
    sum += c * rational_pow(point[0], e[0]) * rational_pow(point[1], e[1]) *
           rational_pow(point[2], e[2]);
  }
  return sum;
}

Polynomial Polynomial::compose(const std::array<Polynomial, 3>& images) const {
  std::array<std::vector<Polynomial>, 3> powers;
  for (std::size_t i = 0; i < 3; ++i) {
    powers[i].push_back(constant(1));
    const int top = degree_in(static_cast<int>(i));
    for (int k = 1; k <= top; ++k) powers[i].push_back(powers[i].back() * images[i]);
  }
  Polynomial r;
  for (const auto& [e, c] : terms_) {
    Polynomial t = c * (powers[0][static_cast<std::size_t>(e[0])] *
                        powers[1][static_cast<std::size_t>(e[1])]);
    r += t * powers[2][static_cast<std::size_t>(e[2])];
  }
  return r;
}

Polynomial Polynomial::divide_monomial(const Exponent& m) const {
  Polynomial r;
  for (const auto& [e, c] : terms_) {
    Exponent q{e[0] - m[0], e[1] - m[1], e[2] - m[2]};
    if (q[0] < 0 || q[1] < 0 || q[2] < 0) {
      throw DomainError(ErrorKind::InvalidArgument, "monomial does not divide polynomial");
    }
    r.terms_.emplace(q, c);
  }
  return r;
}

Polynomial Polynomial::pow(unsigned k) const {
  Polynomial r = constant(1);
  Polynomial base = *this;
  while (k > 0) {
    if (k & 1U) r = r * base;
    k >>= 1U;
    if (k > 0) base = base * base;
  }
  return r;
}

std::string Polynomial::to_string(const VariableNames& names) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Rational mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    const bool unit_exp = total_degree(e) == 0;
    bool need_star = false;
    if (mag != 1 || unit_exp) {
      os << mag.get_str();
      need_star = true;
    }
    for (std::size_t i = 0; i < 3; ++i) {
      if (e[i] == 0) continue;
      if (need_star) os << "*";
      os << names[i];
      if (e[i] > 1) os << "^" << e[i];
      need_star = true;
    }
  }
  return os.str();
}

Polynomial& Polynomial::operator+=(const Polynomial& b) {
  for (const auto& [e, c] : b.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& b) {
  for (const auto& [e, c] : b.terms_) add_term(e, -c);
  return *this;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  Polynomial r = a;
  for (const auto& [e, c] : b.terms_) r.add_term(e, c);
  return r;
}

Polynomial operator-(const Polynomial& a) {
  Polynomial r;
  for (const auto& [e, c] : a.terms_) r.terms_.emplace(e, -c);
  return r;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  Polynomial r = a;
  for (const auto& [e, c] : b.terms_) r.add_term(e, -c);
  return r;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial r;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
  }
  return r;
}

Polynomial operator*(const Rational& c, const Polynomial& a) {
  if (c == 0) return {};
  Polynomial r;
  for (const auto& [e, v] : a.terms_) r.terms_.emplace(e, c * v);
  return r;
}

const Polynomial& HomogeneousDecomposition::part(int k) const {
  static const Polynomial zero;
  auto it = parts.find(k);
  return it == parts.end() ? zero : it->second;
}

Polynomial HomogeneousDecomposition::sum() const {
  Polynomial r;
  for (const auto& [k, p] : parts) r += p;
  return r;
}

HomogeneousDecomposition homogeneous_decompose(const Polynomial& f) {
  if (f.is_zero()) {
    throw DomainError(ErrorKind::ZeroPolynomial, "cannot decompose the zero polynomial");
  }
  if (f.has_term({0, 0, 0})) {
    throw DomainError(ErrorKind::NonzeroConstantTerm, "f(0) must vanish");
  }
  HomogeneousDecomposition h;
  h.order = f.order();
  for (const auto& [e, c] : f.terms()) h.parts[total_degree(e)].add_term(e, c);
  return h;
}

bool is_convenient(const Polynomial& f_d) {
  if (f_d.is_zero()) return false;
  const int d = f_d.degree();
  return f_d.has_term({d, 0, 0}) && f_d.has_term({0, d, 0}) && f_d.has_term({0, 0, d});
}

Polynomial permute_variables(const Polynomial& f, const std::array<int, 3>& perm) {
  Polynomial r;
  for (const auto& [e, c] : f.terms()) {
    Exponent g{0, 0, 0};
    for (std::size_t i = 0; i < 3; ++i) g[static_cast<std::size_t>(perm[i])] = e[i];
    r.add_term(g, c);
  }
  return r;
}

}  // namespace blowade
