#include "blowade/algebra.hpp"

#include <algorithm>
#include <utility>
#include <variant>

#include "blowade/errors.hpp"

namespace blowade::algebra {

UPoly::UPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

UPoly UPoly::constant(const Rational& c) { return UPoly({c}); }

UPoly UPoly::linear_root(const Rational& r) { return UPoly({-r, Rational(1)}); }

void UPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational UPoly::coeff(int i) const {
  return (i < 0 || i > degree()) ? Rational(0) : c_[static_cast<std::size_t>(i)];
}

Rational UPoly::evaluate(const Rational& x) const {
  Rational r = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
  return r;
}

UPoly UPoly::derivative() const {
  std::vector<Rational> d;
  for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * static_cast<long>(i));
  return UPoly(std::move(d));
}

UPoly UPoly::monic() const {
  if (is_zero()) return *this;
  return Rational(1) / lead() * *this;
}

UPoly operator+(const UPoly& a, const UPoly& b) {
  std::vector<Rational> r(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
  return UPoly(std::move(r));
}

UPoly operator-(const UPoly& a, const UPoly& b) {
  std::vector<Rational> r(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] -= b.c_[i];
  return UPoly(std::move(r));
}

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> r(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  }
  return UPoly(std::move(r));
}

UPoly operator*(const Rational& s, const UPoly& a) {
  std::vector<Rational> r = a.c_;
  for (auto& x : r) x *= s;
  return UPoly(std::move(r));
}

DivMod divmod(const UPoly& a, const UPoly& b) {
  if (b.is_zero()) throw DomainError(ErrorKind::InvalidArgument, "division by zero polynomial");
  std::vector<Rational> rem = a.coeffs();
  const int db = b.degree();
  const int da = a.degree();
  if (da < db) return {UPoly(), a};
  std::vector<Rational> q(static_cast<std::size_t>(da - db + 1));
  const Rational inv = Rational(1) / b.lead();
  for (int k = da; k >= db; --k) {
    const Rational t = rem[static_cast<std::size_t>(k)] * inv;
    q[static_cast<std::size_t>(k - db)] = t;
    if (t == 0) continue;
    for (int j = 0; j <= db; ++j) {
      rem[static_cast<std::size_t>(k - db + j)] -= t * b.coeffs()[static_cast<std::size_t>(j)];
    }
  }
  return {UPoly(std::move(q)), UPoly(std::move(rem))};
}

UPoly exact_divide(const UPoly& a, const UPoly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw DomainError(ErrorKind::InvalidArgument, "inexact polynomial division");
  return q;
}

UPoly gcd(const UPoly& a, const UPoly& b) {
  UPoly x = a;
  UPoly y = b;
  while (!y.is_zero()) {
    UPoly r = divmod(x, y).remainder;
    x = std::move(y);
    y = r.monic();
  }
  return x.monic();
}

UPoly squarefree_part(const UPoly& a) {
  if (a.degree() <= 0) return a.monic();
  return exact_divide(a, gcd(a, a.derivative())).monic();
}

std::optional<UPoly> inverse_mod(const UPoly& a, const UPoly& m) {
  // Extended Euclid tracking the cofactor of a.
  UPoly r0 = m, r1 = divmod(a, m).remainder;
  UPoly s0, s1 = UPoly::constant(1);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    UPoly s = s0 - q * s1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (r0.degree() != 0) return std::nullopt;
  return divmod(Rational(1) / r0.lead() * s0, m).remainder;
}

namespace {

int sign(const Rational& q) { return sgn(q); }

std::vector<UPoly> sturm_sequence(const UPoly& p) {
  std::vector<UPoly> seq{p, p.derivative()};
  while (!seq.back().is_zero() && seq.back().degree() > 0) {
    UPoly r = divmod(seq[seq.size() - 2], seq.back()).remainder;
    if (r.is_zero()) break;
    seq.push_back(Rational(-1) * r);
  }
  return seq;
}

int sign_variations(const std::vector<UPoly>& seq, const Rational& x) {
  int count = 0;
  int last = 0;
  for (const auto& s : seq) {
    const int v = sign(s.evaluate(x));
    if (v == 0) continue;
    if (last != 0 && v != last) ++count;
    last = v;
  }
  return count;
}

// Rational with the smallest denominator in [lo, hi].
Rational simplest_between(const Rational& lo, const Rational& hi) {
  Integer fl;
  mpz_fdiv_q(fl.get_mpz_t(), lo.get_num_mpz_t(), lo.get_den_mpz_t());
  if (Rational(fl) == lo) return lo;
  if (Rational(fl + 1) <= hi) return Rational(fl + 1);
  const Rational inner = simplest_between(Rational(1) / (hi - fl), Rational(1) / (lo - fl));
  Rational r = Rational(fl) + Rational(1) / inner;
  r.canonicalize();
  return r;
}

}  // namespace

std::vector<Rational> rational_roots(const UPoly& p_in) {
  if (p_in.is_zero()) {
    throw DomainError(ErrorKind::InvalidArgument, "roots of the zero polynomial");
  }
  UPoly p = squarefree_part(p_in);
  std::vector<Rational> roots;
  if (p.degree() <= 0) return roots;
  if (p.coeff(0) == 0) {
    roots.emplace_back(0);
    p = exact_divide(p, UPoly({Rational(0), Rational(1)}));
    if (p.degree() <= 0) return roots;
  }
  // Denominator bound: a rational root p/q has q | leading coefficient of the
  // primitive integer form.
  Integer lcm_den = 1;
  for (const auto& c : p.coeffs()) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.get_den_mpz_t());
  Integer content = 0;
  std::vector<Integer> ints;
  for (const auto& c : p.coeffs()) {
    Rational scaled = c * lcm_den;
    ints.push_back(scaled.get_num());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), ints.back().get_mpz_t());
  }
  Integer lead_int = abs(ints.back()) / content;
  const Rational min_width = Rational(1, 2) / (Rational(lead_int) * Rational(lead_int));

  Rational bound = 0;
  for (const auto& c : p.coeffs()) bound = std::max(bound, Rational(abs(c / p.lead())));
  bound += 1;

  const auto seq = sturm_sequence(p);
  // Work list of half-open intervals (a, b].
  std::vector<std::pair<Rational, Rational>> work{{-bound, bound}};
  while (!work.empty()) {
    auto [a, b] = work.back();
    work.pop_back();
    const int n = sign_variations(seq, a) - sign_variations(seq, b);
    if (n == 0) continue;
    if (n == 1 && b - a < min_width) {
      if (p.evaluate(b) == 0) {
        roots.push_back(b);
      } else {
        const Rational candidate = simplest_between(a, b);
        if (candidate > a && p.evaluate(candidate) == 0) roots.push_back(candidate);
      }
      continue;
    }
    const Rational m = (a + b) / 2;
    work.emplace_back(a, m);
    work.emplace_back(m, b);
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

UPoly irrational_part(const UPoly& p) {
  UPoly r = squarefree_part(p);
  for (const auto& x : rational_roots(r)) r = exact_divide(r, UPoly::linear_root(x));
  return r.monic();
}

BiPoly to_bipoly(const Polynomial& f, int u_var, int v_var) {
  const auto u = static_cast<std::size_t>(u_var);
  const auto v = static_cast<std::size_t>(v_var);
  std::vector<std::vector<Rational>> rows;
  for (const auto& [e, c] : f.terms()) {
    for (std::size_t i = 0; i < 3; ++i) {
      if (i != u && i != v && e[i] != 0) {
        throw DomainError(ErrorKind::InvalidArgument, "polynomial is not bivariate in the given slots");
      }
    }
    const auto kv = static_cast<std::size_t>(e[v]);
    const auto ku = static_cast<std::size_t>(e[u]);
    if (rows.size() <= kv) rows.resize(kv + 1);
    if (rows[kv].size() <= ku) rows[kv].resize(ku + 1);
    rows[kv][ku] += c;
  }
  BiPoly out;
  for (auto& r : rows) out.emplace_back(std::move(r));
  while (!out.empty() && out.back().is_zero()) out.pop_back();
  return out;
}

int degree_v(const BiPoly& f) { return static_cast<int>(f.size()) - 1; }

BiPoly derivative_v(const BiPoly& f) {
  BiPoly d;
  for (std::size_t k = 1; k < f.size(); ++k) d.push_back(Rational(static_cast<long>(k)) * f[k]);
  while (!d.empty() && d.back().is_zero()) d.pop_back();
  return d;
}

BiPoly derivative_u(const BiPoly& f) {
  BiPoly d;
  for (const auto& c : f) d.push_back(c.derivative());
  while (!d.empty() && d.back().is_zero()) d.pop_back();
  return d;
}

UPoly resultant(const BiPoly& a, const BiPoly& b) {
  if (a.empty() || b.empty()) return {};
  const int m = degree_v(a);
  const int n = degree_v(b);
  if (m == 0 && n == 0) return UPoly::constant(1);
  const int size = m + n;
  // Sylvester matrix, rows of a shifted n times then rows of b shifted m times.
  std::vector<std::vector<UPoly>> mat(static_cast<std::size_t>(size),
                                      std::vector<UPoly>(static_cast<std::size_t>(size)));
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k <= m; ++k) {
      mat[static_cast<std::size_t>(i)][static_cast<std::size_t>(i + k)] =
          a[static_cast<std::size_t>(m - k)];
    }
  }
  for (int i = 0; i < m; ++i) {
    for (int k = 0; k <= n; ++k) {
      mat[static_cast<std::size_t>(n + i)][static_cast<std::size_t>(i + k)] =
          b[static_cast<std::size_t>(n - k)];
    }
  }
  // Fraction-free Bareiss elimination over Q[u].
  UPoly prev = UPoly::constant(1);
  int det_sign = 1;
  for (int k = 0; k < size - 1; ++k) {
    const auto kk = static_cast<std::size_t>(k);
    if (mat[kk][kk].is_zero()) {
      std::size_t swap = kk + 1;
      while (swap < mat.size() && mat[swap][kk].is_zero()) ++swap;
      if (swap == mat.size()) return {};
      std::swap(mat[kk], mat[swap]);
      det_sign = -det_sign;
    }
    for (std::size_t i = kk + 1; i < mat.size(); ++i) {
      for (std::size_t j = kk + 1; j < mat.size(); ++j) {
        mat[i][j] = exact_divide(mat[kk][kk] * mat[i][j] - mat[i][kk] * mat[kk][j], prev);
      }
      mat[i][kk] = UPoly();
    }
    prev = mat[kk][kk];
  }
  const auto last = static_cast<std::size_t>(size - 1);
  return Rational(det_sign) * mat[last][last];
}

UPoly specialize(const BiPoly& f, const Rational& a) {
  std::vector<Rational> out;
  for (const auto& c : f) out.push_back(c.evaluate(a));
  return UPoly(std::move(out));
}

bool has_repeated_factor(const Polynomial& f, int u_var, int v_var) {
  for (const auto& [x, y] : {std::pair{u_var, v_var}, std::pair{v_var, u_var}}) {
    const BiPoly b = to_bipoly(f, x, y);
    if (degree_v(b) < 1) continue;
    if (resultant(b, derivative_v(b)).is_zero()) return true;
  }
  return false;
}

namespace {

// Polynomial in v with coefficients reduced modulo the branch modulus.
using ModPoly = std::vector<UPoly>;

struct SplitRequest {
  UPoly factor;
};

template <typename T>
using OrSplit = std::variant<T, SplitRequest>;

void trim(ModPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

ModPoly reduce(const BiPoly& f, const UPoly& q) {
  ModPoly r;
  for (const auto& c : f) r.push_back(divmod(c, q).remainder);
  trim(r);
  return r;
}

OrSplit<ModPoly> make_monic(ModPoly a, const UPoly& q) {
  const UPoly g = gcd(a.back(), q);
  if (g.degree() > 0) return SplitRequest{g};
  const auto inv = inverse_mod(a.back(), q);
  for (auto& c : a) c = divmod(c * *inv, q).remainder;
  return a;
}

// Remainder of a by the monic b in (Q[u]/q)[v].
ModPoly remainder(ModPoly a, const ModPoly& b, const UPoly& q) {
  const std::size_t db = b.size() - 1;
  while (a.size() > db && !a.empty()) {
    const UPoly t = a.back();
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t j = 0; j <= db; ++j) {
      a[shift + j] = divmod(a[shift + j] - t * b[j], q).remainder;
    }
    trim(a);
  }
  return a;
}

OrSplit<ModPoly> gcd_mod(ModPoly a, ModPoly b, const UPoly& q) {
  while (!b.empty()) {
    auto mb = make_monic(std::move(b), q);
    if (auto* s = std::get_if<SplitRequest>(&mb)) return *s;
    ModPoly bm = std::get<ModPoly>(std::move(mb));
    ModPoly r = remainder(std::move(a), bm, q);
    a = std::move(bm);
    b = std::move(r);
  }
  if (a.empty()) return a;
  return make_monic(std::move(a), q);
}

OrSplit<int> branch_degree(const std::vector<BiPoly>& polys, const UPoly& q, bool exclude_zero_v) {
  ModPoly g;
  for (const auto& f : polys) {
    auto r = gcd_mod(std::move(g), reduce(f, q), q);
    if (auto* s = std::get_if<SplitRequest>(&r)) return *s;
    g = std::get<ModPoly>(std::move(r));
  }
  if (g.empty()) return -1;
  if (exclude_zero_v) {
    while (g.size() > 1) {
      if (g.front().is_zero()) {
        g.erase(g.begin());
        continue;
      }
      const UPoly h = gcd(g.front(), q);
      if (h.degree() > 0) return SplitRequest{h};
      break;
    }
  }
  return static_cast<int>(g.size()) - 1;
}

}  // namespace

std::vector<ModularBranch> gcd_branches(const std::vector<BiPoly>& polys, const UPoly& modulus,
                                        bool exclude_zero_v) {
  std::vector<ModularBranch> out;
  std::vector<UPoly> work{squarefree_part(modulus)};
  while (!work.empty()) {
    UPoly q = work.back();
    work.pop_back();
    if (q.degree() < 1) continue;
    auto r = branch_degree(polys, q, exclude_zero_v);
    if (auto* s = std::get_if<SplitRequest>(&r)) {
      work.push_back(s->factor.monic());
      work.push_back(exact_divide(q, s->factor).monic());
      continue;
    }
    out.push_back({q.monic(), std::get<int>(r)});
  }
  return out;
}

namespace {

// Restriction to v = 0 as a univariate polynomial in u.
UPoly on_u_axis(const Polynomial& f, int u_var, int v_var) {
  std::vector<Rational> c;
  for (const auto& [e, k] : f.terms()) {
    if (e[static_cast<std::size_t>(v_var)] != 0) continue;
    const auto i = static_cast<std::size_t>(e[static_cast<std::size_t>(u_var)]);
    if (c.size() <= i) c.resize(i + 1);
    c[i] = k;
  }
  return UPoly(std::move(c));
}

int order_at_zero(const UPoly& p) {
  int i = 0;
  while (p.coeffs()[static_cast<std::size_t>(i)] == 0) ++i;
  return i;
}

}  // namespace

std::optional<long> intersection_multiplicity(const Polynomial& f, const Polynomial& g, int u_var,
                                              int v_var) {
  Polynomial a = f, b = g;
  long total = 0;
  for (;;) {
    if (a.is_zero() || b.is_zero()) return std::nullopt;
    if (a.coefficient({0, 0, 0}) != 0 || b.coefficient({0, 0, 0}) != 0) return total;
    UPoly a0 = on_u_axis(a, u_var, v_var), b0 = on_u_axis(b, u_var, v_var);
    if (a0.is_zero() && b0.is_zero()) return std::nullopt;
    if (b0.is_zero() || (!a0.is_zero() && a0.degree() > b0.degree())) {
      std::swap(a, b);
      std::swap(a0, b0);
    }
    if (a0.is_zero()) {
      // a = v * h; I(v, b) is the order of b(u, 0) at u = 0.
      total += order_at_zero(b0);
      Exponent ev{0, 0, 0};
      ev[static_cast<std::size_t>(v_var)] = 1;
      a = a.divide_monomial(ev);
      continue;
    }
    Exponent shift{0, 0, 0};
    shift[static_cast<std::size_t>(u_var)] = b0.degree() - a0.degree();
    b = a0.lead() * b - b0.lead() * Polynomial::monomial(shift) * a;
  }
}

}  // namespace blowade::algebra
