#include "blowade/zeta.hpp"

#include <sstream>

#include "blowade/errors.hpp"
#include "blowade/newton.hpp"

namespace blowade {

ZetaFunction::ZetaFunction(long d, long nu) {
  if (d <= 0) throw DomainError(ErrorKind::InvalidArgument, "zeta exponent must be positive");
  if (nu != 0) factors_[d] = nu;
}

long ZetaFunction::multiplicity(long d) const {
  const auto it = factors_.find(d);
  return it == factors_.end() ? 0 : it->second;
}

ZetaFunction& ZetaFunction::operator*=(const ZetaFunction& other) {
  if (&other == this) return *this = pow(2);
  for (const auto& [d, nu] : other.factors_) {
    const long merged = (factors_[d] += nu);
    if (merged == 0) factors_.erase(d);
  }
  return *this;
}

ZetaFunction ZetaFunction::pow(long k) const {
  ZetaFunction out;
  if (k == 0) return out;
  for (const auto& [d, nu] : factors_) out.factors_[d] = nu * k;
  return out;
}

std::string ZetaFunction::to_string() const {
  if (factors_.empty()) return "1";
  std::ostringstream os;
  bool first = true;
  for (const auto& [d, nu] : factors_) {
    if (!first) os << ' ';
    first = false;
    os << "(1-t^" << d << ")^" << nu;
  }
  return os.str();
}

namespace {

Integer det2(long a0, long a1, long b0, long b1) { return Integer(a0) * b1 - Integer(a1) * b0; }

Integer det3(const Exponent& a, const Exponent& b, const Exponent& c) {
  return Integer(a[0]) * det2(b[1], b[2], c[1], c[2]) - Integer(a[1]) * det2(b[0], b[2], c[0], c[2]) +
         Integer(a[2]) * det2(b[0], b[1], c[0], c[1]);
}

// |I|! times the volume of the cone from the origin over a top-dimensional face.
Integer cone_over(const Face& face, const std::vector<int>& vars) {
  const auto& v = face.vertices;
  if (vars.size() == 2) {
    const auto i = static_cast<std::size_t>(vars[0]), j = static_cast<std::size_t>(vars[1]);
    return abs(det2(v[0][i], v[0][j], v[1][i], v[1][j]));
  }
  Integer total = 0;
  for (std::size_t k = 1; k + 1 < v.size(); ++k) total += abs(det3(v[0], v[k], v[k + 1]));
  return total;
}

void require_nondegenerate(const Polynomial& f, const std::vector<int>& variables) {
  const auto nd = is_nondegenerate(f, variables);
  if (nd.nondegenerate) return;
  std::string where;
  if (nd.witness) {
    where = " on the face through " + face_polynomial(f, *nd.witness).to_string(kLocalNames);
  }
  throw DomainError(ErrorKind::DegenerateGerm, "germ is Newton degenerate" + where);
}

}  // namespace

ZetaFunction varchenko_zeta(const Polynomial& f, const std::vector<int>& variables) {
  if (f.is_zero()) throw DomainError(ErrorKind::ZeroPolynomial, "zeta function of zero");
  if (f.has_term({0, 0, 0})) {
    throw DomainError(ErrorKind::NonzeroConstantTerm, "germ does not vanish at the origin");
  }
  if (variables.size() != 2 && variables.size() != 3) {
    throw DomainError(ErrorKind::InvalidArgument, "zeta functions need 2 or 3 variables");
  }
  require_nondegenerate(f, variables);
  const int n = static_cast<int>(variables.size());
  ZetaFunction z;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    std::vector<int> sub;
    CoordinateSubset subset = 0;
    for (int k = 0; k < n; ++k) {
      if (mask & (1u << k)) {
        sub.push_back(variables[static_cast<std::size_t>(k)]);
        subset |= 1u << variables[static_cast<std::size_t>(k)];
      }
    }
    const Polynomial fI = restrict_to(f, subset);
    if (fI.is_zero()) continue;
    const long sign = (sub.size() % 2 == 0) ? 1 : -1;
    if (sub.size() == 1) {
      z *= ZetaFunction(fI.order(), sign);
      continue;
    }
    const auto boundary = newton_boundary(fI, sub);
    for (const Face* face : boundary.faces_of_dimension(static_cast<int>(sub.size()) - 1)) {
      const Integer chi = cone_over(*face, sub) / face->level;
      z *= ZetaFunction(face->level, sign * chi.get_si());
    }
  }
  return z;
}

long zeta_degree(const ZetaFunction& z) {
  long deg = 0;
  for (const auto& [d, nu] : z.factors()) deg += d * nu;
  return deg;
}

long cone_exponent(int d, int mu_tot) {
  return -static_cast<long>(d) * d + 3L * d - 3 + mu_tot;
}

ZetaFunction global_zeta(int d, int mu_tot, const std::vector<ZetaFunction>& locals) {
  if (d < 2 || mu_tot < 0) {
    throw DomainError(ErrorKind::InvalidArgument, "global zeta needs d >= 2 and mu_tot >= 0");
  }
  ZetaFunction z(d, cone_exponent(d, mu_tot));
  for (const auto& local : locals) z *= local;
  return z;
}

ZetaFactor multiplicity_factor(const ZetaFunction& z, int level) {
  if (level < 1 || static_cast<std::size_t>(level) > z.size()) {
    throw DomainError(ErrorKind::LevelOutOfRange,
                      "zeta function has " + std::to_string(z.size()) + " factors, level " +
                          std::to_string(level) + " requested");
  }
  auto it = z.factors().begin();
  std::advance(it, level - 1);
  return {level, it->first, it->second};
}

}  // namespace blowade
