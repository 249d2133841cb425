#include "blowade/curve.hpp"

#include <algorithm>
#include <set>

#include "blowade/algebra.hpp"
#include "blowade/errors.hpp"
#include "blowade/parse.hpp"

namespace blowade {

ProjectivePoint::ProjectivePoint(std::array<Rational, 3> coords) : c_(std::move(coords)) {
  const auto lead = std::find_if(c_.begin(), c_.end(), [](const Rational& x) { return x != 0; });
  if (lead == c_.end()) {
    throw DomainError(ErrorKind::InvalidArgument, "projective point with all coordinates zero");
  }
  const Rational s = *lead;
  for (auto& x : c_) {
    x /= s;
    x.canonicalize();
  }
}

ProjectivePoint ProjectivePoint::parse(const std::string& text) {
  std::array<Rational, 3> c;
  std::size_t start = 0;
  for (std::size_t i = 0; i < 3; ++i) {
    const std::size_t end = text.find(':', start);
    if ((i < 2) == (end == std::string::npos)) {
      throw SyntaxError(start, "expected three ':'-separated coordinates");
    }
    c[i] = parse_rational(text.substr(start, end == std::string::npos ? end : end - start));
    start = end + 1;
  }
  return ProjectivePoint(c);
}

int ProjectivePoint::chart() const {
  for (int i = 0; i < 3; ++i) {
    if (c_[static_cast<std::size_t>(i)] != 0) return i + 1;
  }
  return 1;
}

std::string ProjectivePoint::to_string() const {
  return c_[0].get_str() + ":" + c_[1].get_str() + ":" + c_[2].get_str();
}

int ADEType::milnor() const {
  if (!is_ade()) {
    throw DomainError(ErrorKind::IndeterminateType, "Milnor number of " + to_string() + " germ");
  }
  return index;
}

std::string ADEType::to_string() const {
  switch (family) {
    case ADEFamily::A: return "A" + std::to_string(index);
    case ADEFamily::D: return "D" + std::to_string(index);
    case ADEFamily::E: return "E" + std::to_string(index);
    case ADEFamily::NotADE: return "NotADE";
    case ADEFamily::Indeterminate: return "Indeterminate";
  }
  return "Indeterminate";
}

namespace {

// x2 <- a*x2 + b*x3, x3 <- c*x2 + d*x3, leaving x1 alone.
CoordinateChange linear_change(const Rational& a, const Rational& b, const Rational& c,
                               const Rational& d, int n) {
  auto ch = identity_change(n);
  ch[1] = TruncatedSeries(a * Polynomial::variable(1) + b * Polynomial::variable(2), n);
  ch[2] = TruncatedSeries(c * Polynomial::variable(1) + d * Polynomial::variable(2), n);
  return ch;
}

// x_{slot} <- x_{slot} + c * x3^k (slot 1) or + c * x2^k (slot 2).
CoordinateChange shift_change(int slot, const Rational& c, int k, int n) {
  auto ch = identity_change(n);
  const Exponent e = slot == 1 ? Exponent{0, 0, k} : Exponent{0, k, 0};
  ch[static_cast<std::size_t>(slot)] =
      TruncatedSeries(Polynomial::variable(slot) + Polynomial::monomial(e, c), n);
  return ch;
}

class Normalizer {
 public:
  explicit Normalizer(const TruncatedSeries& g)
      : n_(g.truncation()), p_(g.poly()), total_(identity_change(g.truncation())) {}

  void apply(const CoordinateChange& s) {
    p_ = substitute(p_, s, n_).poly();
    total_ = compose_changes(total_, s);
  }

  const Polynomial& poly() const { return p_; }
  int truncation() const { return n_; }
  Rational coeff(int a, int b) const { return p_.coefficient({0, a, b}); }

  // Smallest b with x3^b present, or -1.
  int pure_x3() const {
    int best = -1;
    for (const auto& [e, c] : p_.terms()) {
      if (e[1] == 0 && (best < 0 || e[2] < best)) best = e[2];
    }
    return best;
  }
  // Smallest a with x2^a present, or -1.
  int pure_x2() const {
    int best = -1;
    for (const auto& [e, c] : p_.terms()) {
      if (e[2] == 0 && (best < 0 || e[1] < best)) best = e[1];
    }
    return best;
  }
  // Smallest k with x2*x3^k present, or -1.
  int linear_x2() const {
    int best = -1;
    for (const auto& [e, c] : p_.terms()) {
      if (e[1] == 1 && (best < 0 || e[2] < best)) best = e[2];
    }
    return best;
  }

  ADEClassification result(ADEFamily fam, int index, Polynomial normal) const {
    return {{fam, index}, total_, std::move(normal)};
  }
  ADEClassification result(ADEFamily fam) const { return {{fam, 0}, total_, Polynomial()}; }

 private:
  int n_;
  Polynomial p_;
  CoordinateChange total_;
};

ADEClassification classify_corank1(Normalizer& w) {
  const int n = w.truncation();
  Rational a = w.coeff(2, 0), b = w.coeff(1, 1), c = w.coeff(0, 2);
  if (a == 0) {
    w.apply(linear_change(0, 1, 1, 0, n));
    std::swap(a, c);
  }
  w.apply(linear_change(1, -b / (2 * a), 0, 1, n));
  const Rational lambda = a;
  for (;;) {
    const int e = w.pure_x3();
    const int k = w.linear_x2();
    if (e >= 0 && (k < 0 || 2 * k > e)) {
      return w.result(ADEFamily::A, e - 1,
                      Polynomial::monomial({0, 2, 0}, lambda) +
                          Polynomial::monomial({0, 0, e}, w.coeff(0, e)));
    }
    if (k < 0) return w.result(ADEFamily::Indeterminate);
    w.apply(shift_change(1, -w.coeff(1, k) / (2 * lambda), k, n));
  }
}

ADEClassification classify_cubic(Normalizer& w) {
  const int n = w.truncation();
  Rational a = w.coeff(3, 0), b = w.coeff(2, 1), c = w.coeff(1, 2), d = w.coeff(0, 3);
  const Rational disc =
      b * b * c * c - 4 * a * c * c * c - 4 * b * b * b * d - 27 * a * a * d * d + 18 * a * b * c * d;
  if (disc != 0) {
    // Move the roots off both axes so the cubic carries x2^3 and x3^3.
    for (int t = 1; a == 0; ++t) {
      if (a + b * t + c * t * t + d * t * t * t != 0) w.apply(linear_change(1, 0, t, 1, n));
      a = w.coeff(3, 0);
    }
    d = w.coeff(0, 3);
    for (int t = 1; d == 0; ++t) {
      const Rational aa = w.coeff(3, 0), bb = w.coeff(2, 1), cc = w.coeff(1, 2);
      if (aa * t * t * t + bb * t * t + cc * t != 0) w.apply(linear_change(1, t, 0, 1, n));
      d = w.coeff(0, 3);
    }
    return w.result(ADEFamily::D, 4, w.poly().homogeneous_part(3));
  }
  if (n < 5) return w.result(ADEFamily::Indeterminate);

  // Make the x2^3 coefficient nonzero so every root is finite in t = x2/x3.
  for (int t = 1; a == 0; ++t) {
    if (a + b * t + c * t * t + d * t * t * t != 0) {
      w.apply(linear_change(1, 0, t, 1, n));
      a = w.coeff(3, 0);
      b = w.coeff(2, 1);
      c = w.coeff(1, 2);
      d = w.coeff(0, 3);
    }
  }
  const bool triple = b * b == 3 * a * c && c * c == 3 * b * d && b * c == 9 * a * d;
  if (triple) {
    w.apply(linear_change(1, -b / (3 * a), 0, 1, n));
    if (w.coeff(0, 4) != 0) {
      return w.result(ADEFamily::E, 6,
                      Polynomial::monomial({0, 3, 0}, a) +
                          Polynomial::monomial({0, 0, 4}, w.coeff(0, 4)));
    }
    if (w.coeff(1, 3) != 0) {
      const Rational rho = w.coeff(1, 3);
      for (int k = w.pure_x3(); k >= 0; k = w.pure_x3()) {
        w.apply(shift_change(1, -w.coeff(0, k) / rho, k - 3, n));
      }
      return w.result(ADEFamily::E, 7,
                      Polynomial::monomial({0, 3, 0}, a) + Polynomial::monomial({0, 1, 3}, rho));
    }
    if (n < 6) return w.result(ADEFamily::Indeterminate);
    if (w.coeff(0, 5) != 0) {
      return w.result(ADEFamily::E, 8,
                      Polynomial::monomial({0, 3, 0}, a) +
                          Polynomial::monomial({0, 0, 5}, w.coeff(0, 5)));
    }
    return w.result(ADEFamily::NotADE);
  }

  const algebra::UPoly ct({d, c, b, a});
  const auto dbl = algebra::gcd(ct, ct.derivative());
  const Rational t0 = -dbl.coeff(0);
  const Rational t1 = -b / a - 2 * t0;
  const Rational s = 1 / (t1 - t0);
  w.apply(linear_change(1 + t0 * s, -t0 * s, s, -s, n));
  const Rational kappa = a;
  for (;;) {
    const int e = w.pure_x3();
    const int k = w.linear_x2();
    if (e >= 0 && (k < 0 || 2 * k > e + 1)) {
      for (int j = w.pure_x2(); j >= 0; j = w.pure_x2()) {
        w.apply(shift_change(2, -w.coeff(j, 0) / kappa, j - 2, n));
      }
      return w.result(ADEFamily::D, e + 1,
                      Polynomial::monomial({0, 2, 1}, kappa) +
                          Polynomial::monomial({0, 0, e}, w.coeff(0, e)));
    }
    if (k < 0) return w.result(ADEFamily::Indeterminate);
    w.apply(shift_change(1, -w.coeff(1, k) / (2 * kappa), k - 1, n));
  }
}

}  // namespace

ADEClassification classify_ade(const TruncatedSeries& g) {
  if (g.poly().degree_in(0) > 0) {
    throw DomainError(ErrorKind::InvalidArgument, "plane-curve germ must be in x2, x3 only");
  }
  if (g.poly().has_term({0, 0, 0})) {
    throw DomainError(ErrorKind::NonzeroConstantTerm, "germ does not pass through the origin");
  }
  Normalizer w(g);
  if (g.poly().is_zero()) return w.result(ADEFamily::Indeterminate);
  const int order = g.poly().order();
  if (order < 2) {
    throw DomainError(ErrorKind::NotASingularity, "germ is smooth at the origin");
  }
  if (order == 2) {
    const Rational a = w.coeff(2, 0), b = w.coeff(1, 1), c = w.coeff(0, 2);
    if (b * b - 4 * a * c == 0) return classify_corank1(w);
    const int n = g.truncation();
    if (a == 0 && c == 0) w.apply(linear_change(1, 1, 0, 1, n));
    if (w.coeff(2, 0) == 0) w.apply(linear_change(0, 1, 1, 0, n));
    w.apply(linear_change(1, -w.coeff(1, 1) / (2 * w.coeff(2, 0)), 0, 1, n));
    return w.result(ADEFamily::A, 1, w.poly().homogeneous_part(2));
  }
  if (order == 3) return classify_cubic(w);
  return w.result(ADEFamily::NotADE);
}

void check_reduced(const Polynomial& f_d) {
  if (f_d.is_zero()) throw DomainError(ErrorKind::ZeroPolynomial, "tangent cone is zero");
  const int d = f_d.degree();
  if (f_d.order() != d) throw DomainError(ErrorKind::InvalidArgument, "f_d must be homogeneous");
  if (f_d.min_degree_in(0) >= 2) {
    throw DomainError(ErrorKind::NonReducedTangentCone, "z1^2 divides the tangent cone");
  }
  const Polynomial g = f_d.compose(
      {Polynomial::constant(1), Polynomial::variable(1), Polynomial::variable(2)});
  if (algebra::has_repeated_factor(g, 1, 2)) {
    throw DomainError(ErrorKind::NonReducedTangentCone, "tangent cone has a repeated factor");
  }
}

namespace {

[[noreturn]] void non_rational(const std::string& where, const algebra::UPoly& factor) {
  std::vector<Rational> c = factor.monic().coeffs();
  Polynomial p;
  for (std::size_t i = 0; i < c.size(); ++i) p.add_term({static_cast<int>(i), 0, 0}, c[i]);
  throw DomainError(ErrorKind::NonRationalSingularLocus,
                    "singular points with " + where + " a root of " +
                        p.to_string({"t", "t2", "t3"}) + "; supply them with --point");
}

algebra::UPoly in_t(const Polynomial& f, int var) {
  std::vector<Rational> c(static_cast<std::size_t>(std::max(0, f.degree_in(var)) + 1));
  for (const auto& [e, coef] : f.terms()) c[static_cast<std::size_t>(e[static_cast<std::size_t>(var)])] += coef;
  return algebra::UPoly(std::move(c));
}

// Singular points of the affine curve g(y2, y3) = 0 (slots 1 and 2).
std::vector<std::pair<Rational, Rational>> affine_singular(const Polynomial& g) {
  std::vector<std::pair<Rational, Rational>> out;
  if (g.is_zero() || g.degree() < 1) return out;
  int u = 1, v = 2;
  if (g.degree_in(2) < 1) std::swap(u, v);
  const auto b = algebra::to_bipoly(g, u, v);
  const auto bu = algebra::derivative_u(b);
  const auto bv = algebra::derivative_v(b);
  const algebra::UPoly r = algebra::resultant(b, bv);
  if (r.is_zero()) throw std::logic_error("resultant vanished on a reduced curve");
  const std::string uname = u == 1 ? "y2" : "y3";
  for (const auto& u0 : algebra::rational_roots(r)) {
    auto G = algebra::gcd(algebra::gcd(algebra::specialize(b, u0), algebra::specialize(bu, u0)),
                          algebra::specialize(bv, u0));
    if (G.is_zero()) throw std::logic_error("curve singular along a line");
    if (G.degree() < 1) continue;
    for (const auto& v0 : algebra::rational_roots(G)) {
      out.push_back(u == 1 ? std::pair{u0, v0} : std::pair{v0, u0});
    }
    const auto irr = algebra::irrational_part(G);
    if (irr.degree() >= 1) non_rational((u == 1 ? "y3" : "y2") + std::string(" (") + uname +
                                            " = " + u0.get_str() + ")",
                                        irr);
  }
  const auto q = algebra::irrational_part(r);
  if (q.degree() >= 1) {
    for (const auto& br : algebra::gcd_branches({b, bu, bv}, q, false)) {
      if (br.gcd_degree != 0) non_rational(uname, br.modulus);
    }
  }
  return out;
}

}  // namespace

bool is_singular_point(const Polynomial& f_d, const ProjectivePoint& p) {
  for (int i = 0; i < 3; ++i) {
    if (f_d.derivative(i).evaluate(p.coords()) != 0) return false;
  }
  return f_d.evaluate(p.coords()) == 0;
}

std::vector<ProjectivePoint> singular_locus(const Polynomial& f_d) {
  check_reduced(f_d);
  std::set<ProjectivePoint> pts;
  const Polynomial g = f_d.compose(
      {Polynomial::constant(1), Polynomial::variable(1), Polynomial::variable(2)});
  for (const auto& [a, b] : affine_singular(g)) pts.insert(ProjectivePoint({1, a, b}));

  // Line at infinity z1 = 0: points (0:1:t) and (0:0:1).
  std::array<Polynomial, 3> partials;
  for (int i = 0; i < 3; ++i) partials[static_cast<std::size_t>(i)] = f_d.derivative(i);
  algebra::UPoly G;
  for (const auto& fi : partials) {
    const Polynomial at = fi.compose(
        {Polynomial::constant(0), Polynomial::constant(1), Polynomial::variable(2)});
    G = algebra::gcd(G, in_t(at, 2));
  }
  if (G.is_zero()) throw std::logic_error("curve singular along the line at infinity");
  if (G.degree() >= 1) {
    for (const auto& t : algebra::rational_roots(G)) pts.insert(ProjectivePoint({0, 1, t}));
    const auto irr = algebra::irrational_part(G);
    if (irr.degree() >= 1) non_rational("z3/z2 (z1 = 0)", irr);
  }
  const ProjectivePoint corner({0, 0, 1});
  if (is_singular_point(f_d, corner)) pts.insert(corner);
  return {pts.begin(), pts.end()};
}

Polynomial local_equation(const Polynomial& f_d, const ProjectivePoint& p) {
  const int k = p.chart() - 1;
  std::array<Polynomial, 3> images;
  images[static_cast<std::size_t>(k)] = Polynomial::constant(1);
  int slot = 1;
  for (int i = 0; i < 3; ++i) {
    if (i == k) continue;
    images[static_cast<std::size_t>(i)] =
        Polynomial::constant(p[static_cast<std::size_t>(i)]) + Polynomial::variable(slot++);
  }
  return f_d.compose(images);
}

SingularPointReport analyze_point(const Polynomial& f_d, const ProjectivePoint& p, int jet_order) {
  if (!is_singular_point(f_d, p)) {
    throw DomainError(ErrorKind::NotASingularity, "(" + p.to_string() + ") is not a singular point");
  }
  SingularPointReport r;
  r.point = p;
  r.chart = p.chart();
  r.local_equation = TruncatedSeries(local_equation(f_d, p), jet_order);
  auto cls = classify_ade(r.local_equation);
  r.type = cls.type;
  r.milnor = cls.type.is_ade() ? cls.type.index : 0;
  if (cls.type.is_ade()) r.normalizing_change = cls.change;
  r.normal_part = cls.normal_part;
  return r;
}

std::vector<SingularPointReport> singular_points(const Polynomial& f_d, int jet_order) {
  std::vector<SingularPointReport> out;
  for (const auto& p : singular_locus(f_d)) out.push_back(analyze_point(f_d, p, jet_order));
  return out;
}

int total_milnor(const std::vector<SingularPointReport>& reports) {
  int total = 0;
  for (const auto& r : reports) {
    if (!r.type.is_ade()) {
      throw DomainError(ErrorKind::IndeterminateType,
                        "point (" + r.point.to_string() + ") has type " + r.type.to_string());
    }
    total += r.type.milnor();
  }
  return total;
}

}  // namespace blowade
