#include "blowade/blow_ade.hpp"

#include <algorithm>

namespace blowade {

TypeSignature BlowAdeReport::signature() const {
  TypeSignature s;
  for (const auto& p : points) s.types.push_back(p.curve.type);
  std::sort(s.types.begin(), s.types.end());
  s.m = m;
  return s;
}

namespace {

SubtypeFlags subtype_of(const std::vector<ADEType>& types) {
  SubtypeFlags f;
  f.pure_blow_A1 = std::all_of(types.begin(), types.end(),
                               [](const ADEType& t) { return t == ADEType{ADEFamily::A, 1}; });
  f.blow_A = std::all_of(types.begin(), types.end(),
                         [](const ADEType& t) { return t.family == ADEFamily::A; });
  f.even_blow_A = std::all_of(types.begin(), types.end(), [](const ADEType& t) {
    return t.family == ADEFamily::A && t.index >= 2 && t.index % 2 == 0;
  });
  f.general_ADE = std::any_of(types.begin(), types.end(), [](const ADEType& t) {
    return t.family == ADEFamily::D || t.family == ADEFamily::E;
  });
  return f;
}

// Smallest k > 0 with a nonzero part of degree d + k, or 0.
int first_perturbation(const HomogeneousDecomposition& dec) {
  for (const auto& [k, part] : dec.parts) {
    if (k > dec.order && !part.is_zero()) return k - dec.order;
  }
  return 0;
}

std::vector<ProjectivePoint> points_or_locus(const Polynomial& f_d,
                                             const std::vector<ProjectivePoint>& points) {
  if (points.empty()) return singular_locus(f_d);
  for (const auto& p : points) {
    if (!is_singular_point(f_d, p)) {
      throw DomainError(ErrorKind::NotASingularity,
                        "(" + p.to_string() + ") is not a singular point of the tangent cone");
    }
  }
  std::vector<ProjectivePoint> sorted = points;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  return sorted;
}

Polynomial x1_power(int k) { return Polynomial::monomial({k, 0, 0}); }

}  // namespace

BlowAdeReport analyze(const Polynomial& f, const AnalyzeOptions& options) {
  if (f.is_zero()) throw DomainError(ErrorKind::ZeroPolynomial, "input polynomial is zero");
  if (f.has_term({0, 0, 0})) {
    throw DomainError(ErrorKind::NonzeroConstantTerm, "f does not vanish at the origin");
  }
  const auto dec = homogeneous_decompose(f);
  const int d = dec.order;
  if (d < 2) throw DomainError(ErrorKind::NotASingularity, "f is smooth at the origin");
  const Polynomial& f_d = dec.part(d);
  check_reduced(f_d);

  BlowAdeReport r;
  r.d = d;
  const auto locus = points_or_locus(f_d, options.points);
  r.k0 = static_cast<int>(locus.size());
  const bool exact = f.degree() < options.truncation;

  for (const auto& p : locus) {
    PointAnalysis pa;
    pa.curve = analyze_point(f_d, p, options.jet_order);
    const ADEType type = pa.curve.type;
    if (!type.is_ade()) {
      const bool proven = type.family == ADEFamily::NotADE;
      r.failures.push_back({p, proven ? ErrorKind::NotBlowADEShape : ErrorKind::IndeterminateType,
                            "tangent-cone point has type " + type.to_string(), proven});
      r.points.push_back(std::move(pa));
      continue;
    }
    r.mu_tot += type.milnor();
    try {
      const auto germ = strict_transform_at(f, p, options.truncation);
      auto data = extract_principal_part(germ, options.max_blow_order);
      data.change.chart = Chart{p.chart()};
      const auto [u, v] = data.change.chart.affine_variables();
      data.change.shift = {p[static_cast<std::size_t>(u)], p[static_cast<std::size_t>(v)]};
      pa.principal = data;
      pa.local_zeta = varchenko_zeta(x1_power(d) * data.principal());
    } catch (const BlowOrderError& e) {
      if (e.x1_free() && exact) {
        throw DomainError(ErrorKind::NonIsolatedSingularity,
                          "strict transform at (" + p.to_string() +
                              ") is independent of x1: its critical locus contains the line "
                              "x2 = x3 = 0");
      }
      r.failures.push_back({p, e.kind(), e.what(), false});
    } catch (const ShapeError& e) {
      r.failures.push_back({p, e.kind(), e.what(), false});
    } catch (const DomainError& e) {
      if (e.kind() == ErrorKind::TruncationMismatch) throw;
      r.failures.push_back({p, e.kind(), e.what(), false});
    }
    r.points.push_back(std::move(pa));
  }

  std::vector<ADEType> types;
  for (const auto& p : r.points) types.push_back(p.curve.type);

  if (r.failures.empty()) {
    std::optional<int> m;
    for (const auto& p : r.points) {
      const int pm = p.principal->m;
      if (!m) {
        m = pm;
      } else if (*m != pm) {
        r.failures.push_back({p.curve.point, ErrorKind::NotBlowADEShape,
                              "blow-order " + std::to_string(pm) + " differs from " +
                                  std::to_string(*m) + " found at another point",
                              false});
      }
    }
    if (r.failures.empty()) {
      r.is_blow_ade = true;
      r.m = m;
      r.subtype = subtype_of(types);
      std::vector<ZetaFunction> locals;
      for (const auto& p : r.points) locals.push_back(*p.local_zeta);
      r.global_zeta = global_zeta(d, r.mu_tot, locals);
    }
  }

  const int m = r.m.value_or(first_perturbation(dec));
  r.le_yomdin = m > 0 && is_le_yomdin(f, m, locus);
  return r;
}

bool is_le_yomdin(const Polynomial& f, int m, const std::vector<ProjectivePoint>& points) {
  if (m < 1) throw DomainError(ErrorKind::InvalidArgument, "m must be positive");
  const auto dec = homogeneous_decompose(f);
  const int d = dec.order;
  const Polynomial& f_d = dec.part(d);
  check_reduced(f_d);
  for (int k = d + 1; k < d + m; ++k) {
    if (!dec.part(k).is_zero()) return false;
  }
  const Polynomial& next = dec.part(d + m);
  if (next.is_zero()) return false;
  const auto locus = points.empty() ? singular_locus(f_d) : points;
  return std::none_of(locus.begin(), locus.end(), [&](const ProjectivePoint& p) {
    return next.evaluate(p.coords()) == 0;
  });
}

TypeMatching same_type(const BlowAdeReport& a, const BlowAdeReport& b) {
  if (!a.is_blow_ade || !b.is_blow_ade) {
    throw DomainError(ErrorKind::UncertifiedReport, "same_type needs two certified reports");
  }
  TypeMatching out;
  if (a.k0 != b.k0 || a.m != b.m) return out;
  std::vector<bool> used(b.points.size(), false);
  for (std::size_t i = 0; i < a.points.size(); ++i) {
    bool found = false;
    for (std::size_t j = 0; j < b.points.size() && !found; ++j) {
      if (!used[j] && a.points[i].curve.type == b.points[j].curve.type) {
        used[j] = true;
        out.pairs.emplace_back(i, j);
        found = true;
      }
    }
    if (!found) {
      out.pairs.clear();
      return out;
    }
  }
  out.same = true;
  return out;
}

}  // namespace blowade
