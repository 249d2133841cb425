#include "blowade/blowup.hpp"

#include <algorithm>

#include "blowade/newton.hpp"

namespace blowade {

std::array<int, 2> Chart::affine_variables() const {
  if (index < 1 || index > 3) {
    throw DomainError(ErrorKind::InvalidArgument, "chart index must be 1, 2 or 3");
  }
  std::array<int, 2> out{};
  std::size_t k = 0;
  for (int i = 0; i < 3; ++i) {
    if (i != index - 1) out[k++] = i;
  }
  return out;
}

std::array<Polynomial, 3> Chart::substitution() const {
  const auto [u, v] = affine_variables();
  std::array<Polynomial, 3> s;
  s[static_cast<std::size_t>(index - 1)] = Polynomial::variable(0);
  s[static_cast<std::size_t>(u)] = Polynomial::monomial({1, 1, 0});
  s[static_cast<std::size_t>(v)] = Polynomial::monomial({1, 0, 1});
  return s;
}

namespace {

struct ExactPullback {
  int d;
  Polynomial total;
  Polynomial strict;
};

ExactPullback exact_pullback(const Polynomial& f, const Chart& chart) {
  const int d = homogeneous_decompose(f).order;
  const Polynomial total = f.compose(chart.substitution());
  return {d, total, total.divide_monomial({d, 0, 0})};
}

void check_truncation(int truncation, int d) {
  if (truncation - d < 1) {
    throw DomainError(ErrorKind::TruncationMismatch,
                      "truncation " + std::to_string(truncation) +
                          " leaves no terms of the strict transform (order " + std::to_string(d) +
                          ")");
  }
}

}  // namespace

Pullback pullback(const Polynomial& f, const Chart& chart, int truncation) {
  const auto ex = exact_pullback(f, chart);
  check_truncation(truncation, ex.d);
  return {ex.d, TruncatedSeries(ex.total, truncation),
          TruncatedSeries(ex.strict, truncation - ex.d)};
}

TruncatedSeries strict_transform_at(const Polynomial& f, const ProjectivePoint& p,
                                    int truncation) {
  const Chart chart{p.chart()};
  const auto ex = exact_pullback(f, chart);
  check_truncation(truncation, ex.d);
  const auto [u, v] = chart.affine_variables();
  const Polynomial moved = ex.strict.compose(
      {Polynomial::variable(0),
       Polynomial::variable(1) + Polynomial::constant(p[static_cast<std::size_t>(u)]),
       Polynomial::variable(2) + Polynomial::constant(p[static_cast<std::size_t>(v)])});
  return {moved, truncation - ex.d};
}

namespace {

int resolve_max_order(const TruncatedSeries& germ, int max_order) {
  const int cap = germ.truncation() - 1;
  return (max_order < 0 || max_order > cap) ? cap : max_order;
}

// Smallest j with x1^j present, or -1.
int pure_x1(const Polynomial& p) {
  int best = -1;
  for (const auto& [e, c] : p.terms()) {
    if (e[1] == 0 && e[2] == 0 && e[0] > 0 && (best < 0 || e[0] < best)) best = e[0];
  }
  return best;
}

[[noreturn]] void blow_order_exceeded(const Polynomial& p, int max_order, int truncation) {
  const bool involves_x1 = std::any_of(p.terms().begin(), p.terms().end(),
                                       [](const auto& t) { return t.first[0] > 0; });
  if (!involves_x1) {
    throw BlowOrderError("no term involving x1 below order " + std::to_string(truncation) +
                             ": the singular locus of the strict transform appears to contain "
                             "the x1-axis (non-isolated singularity)",
                         true);
  }
  throw BlowOrderError("no pure x1 power up to order " + std::to_string(max_order) +
                           "; raise --truncation or --max-blow-order",
                       false);
}

void require_singular_slice(const Polynomial& p) {
  if (p.has_term({0, 0, 0}) || p.has_term({0, 1, 0}) || p.has_term({0, 0, 1})) {
    throw DomainError(ErrorKind::InvalidArgument,
                      "germ must vanish to order two along x1 = 0 at the origin");
  }
}

Polynomial x1_free(const Polynomial& p) {
  Polynomial out;
  for (const auto& [e, c] : p.terms()) {
    if (e[0] == 0) out.add_term(e, c);
  }
  return out;
}

}  // namespace

namespace {

PrincipalPartData normalize_at(const TruncatedSeries& germ, int max_order) {
  const int n = germ.truncation();
  const int bound = resolve_max_order(germ, max_order);
  Polynomial p = germ.poly();
  require_singular_slice(p);
  const Rational q22 = p.coefficient({0, 2, 0}), q23 = p.coefficient({0, 1, 1}),
                 q33 = p.coefficient({0, 0, 2});
  const Rational det = q22 * q33 - q23 * q23 / 4;
  if (det == 0) {
    throw DomainError(ErrorKind::InvalidArgument, "quadratic part in (x2, x3) is not of rank 2");
  }
  PrincipalPartData out;
  out.type = {ADEFamily::A, 1};
  out.h = Polynomial::monomial({0, 2, 0}, q22) + Polynomial::monomial({0, 1, 1}, q23) +
          Polynomial::monomial({0, 0, 2}, q33);
  CoordinateChange total = identity_change(n);
  for (;;) {
    const int m = pure_x1(p);
    int j = -1;
    for (const auto& [e, c] : p.terms()) {
      if (e[0] > 0 && e[1] + e[2] == 1 && (j < 0 || e[0] < j)) j = e[0];
    }
    if (m > 0 && m <= bound && (j < 0 || 2 * j > m)) {
      out.m = m;
      out.c = p.coefficient({m, 0, 0});
      out.residual = p - out.principal();
      break;
    }
    if (j < 0 || j > bound) blow_order_exceeded(p, bound, n);
    const Rational a = p.coefficient({j, 1, 0}), b = p.coefficient({j, 0, 1});
    const Rational v2 = -(q33 * a - q23 * b / 2) / (2 * det);
    const Rational v3 = -(q22 * b - q23 * a / 2) / (2 * det);
    auto step = identity_change(n);
    step[1] = TruncatedSeries(Polynomial::variable(1) + Polynomial::monomial({j, 0, 0}, v2), n);
    step[2] = TruncatedSeries(Polynomial::variable(2) + Polynomial::monomial({j, 0, 0}, v3), n);
    p = substitute(p, step, n).poly();
    total = compose_changes(total, step);
    ++out.rounds;
  }
  out.change.series_change = total;
  return out;
}

}  // namespace

TruncatedSeries splitting_shift(const TruncatedSeries& germ) {
  const int n = germ.truncation();
  const Polynomial& g = germ.poly();
  require_singular_slice(g);
  const Rational lambda = g.coefficient({0, 2, 0});
  if (lambda == 0) {
    throw DomainError(ErrorKind::InvalidArgument, "germ has no x2^2 term to split off");
  }
  const Polynomial g2 = g.derivative(1);
  Polynomial psi;
  for (int round = 0; round <= n; ++round) {
    auto ch = identity_change(n);
    ch[1] = TruncatedSeries(psi, n);
    const Polynomial residue = substitute(g2, ch, std::max(1, n - 1)).poly();
    if (residue.is_zero()) return {psi, n};
    psi -= (1 / (2 * lambda)) * residue;
  }
  throw DomainError(ErrorKind::TruncationExhausted,
                    "square splitting did not stabilize within the truncation order");
}

TruncatedSeries split_quadratic(const TruncatedSeries& germ) {
  const int n = germ.truncation();
  auto ch = identity_change(n);
  ch[1] = TruncatedSeries(Polynomial::variable(1), n) + splitting_shift(germ);
  const Polynomial moved = substitute(germ, ch).poly();
  Polynomial out = Polynomial::monomial({0, 2, 0}, germ.poly().coefficient({0, 2, 0}));
  for (const auto& [e, c] : moved.terms()) {
    if (e[1] == 0) out.add_term(e, c);
  }
  return {out, n};
}

namespace {

PrincipalPartData extract_at(const TruncatedSeries& germ, const ADEClassification& cls,
                             int max_order) {
  const int n = germ.truncation();
  const int bound = resolve_max_order(germ, max_order);
  if (cls.type.family == ADEFamily::Indeterminate) {
    throw DomainError(ErrorKind::IndeterminateType,
                      "tangent-cone singularity type not determined within the truncation order");
  }
  if (cls.type.family == ADEFamily::NotADE) {
    throw ShapeError("tangent-cone singularity is not of type A, D or E", x1_free(germ.poly()));
  }
  Polynomial g = substitute(germ, cls.change).poly();
  CoordinateChange total = cls.change;

  if (cls.type == ADEType{ADEFamily::A, 1}) {
    auto node = normalize_at({g, n}, bound);
    node.change.series_change = compose_changes(total, node.change.series_change);
    return node;
  }

  PrincipalPartData out;
  out.type = cls.type;
  out.h = cls.normal_part;
  if (cls.type.family == ADEFamily::A) {
    auto shift = identity_change(n);
    shift[1] = TruncatedSeries(Polynomial::variable(1), n) + splitting_shift({g, n});
    g = substitute(g, shift, n).poly();
    total = compose_changes(total, shift);
    out.rounds = 1;
  }
  const int m = pure_x1(g);
  if (m < 0 || m > bound) {
    const Polynomial boundary = newton_principal_part(g);
    Polynomial offending;
    for (const auto& [e, c] : boundary.terms()) {
      if (e[0] > 0 && e[1] + e[2] > 0) offending.add_term(e, c);
    }
    if (!offending.is_zero()) {
      throw ShapeError("Newton boundary carries mixed x1 terms: " +
                           offending.to_string(kLocalNames),
                       offending);
    }
    blow_order_exceeded(g, bound, n);
  }
  out.m = m;
  out.c = g.coefficient({m, 0, 0});
  const Polynomial expected = out.principal();
  const Polynomial npp = newton_principal_part(g);
  if (npp != expected) {
    Polynomial offending;
    for (const auto& [e, c] : npp.terms()) {
      if (!expected.has_term(e)) offending.add_term(e, c);
    }
    throw ShapeError("Newton principal part is not h + c*x1^" + std::to_string(m) +
                         "; extra boundary terms: " + offending.to_string(kLocalNames),
                     offending);
  }
  out.residual = g - expected;
  out.change.series_change = total;
  return out;
}

constexpr int kInitialWorkingOrder = 8;

bool retryable(ErrorKind kind) {
  return kind == ErrorKind::BlowOrderExceeded || kind == ErrorKind::NotBlowADEShape ||
         kind == ErrorKind::IndeterminateType || kind == ErrorKind::TruncationExhausted;
}

// Runs `attempt` on jets of increasing order. A result found on a jet of order k is final
// once every vertex of h + c*x1^m has degree below k: the unknown terms then lie above it.
template <class Attempt>
PrincipalPartData adaptive(const TruncatedSeries& germ, Attempt attempt) {
  const int n = germ.truncation();
  for (int k = std::min(kInitialWorkingOrder, n);; k = std::min(2 * k, n)) {
    try {
      auto r = attempt(germ.with_truncation(k));
      if (k == n || std::max(r.m, r.h.degree()) < k) return r;
    } catch (const DomainError& e) {
      if (k == n || !retryable(e.kind())) throw;
    }
  }
}

}  // namespace

PrincipalPartData normalize_node(const TruncatedSeries& germ, int max_order) {
  return adaptive(germ, [&](const TruncatedSeries& g) { return normalize_at(g, max_order); });
}

PrincipalPartData extract_principal_part(const TruncatedSeries& germ,
                                         const ADEClassification& cls, int max_order) {
  return extract_at(germ, cls, max_order);
}

PrincipalPartData extract_principal_part(const TruncatedSeries& germ, int max_order) {
  return adaptive(germ, [&](const TruncatedSeries& g) {
    return extract_at(g, classify_ade({x1_free(g.poly()), g.truncation()}), max_order);
  });
}

}  // namespace blowade
