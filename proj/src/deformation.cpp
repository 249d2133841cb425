#include "blowade/deformation.hpp"

#include <algorithm>
#include <random>

#include "blowade/algebra.hpp"
#include "blowade/newton.hpp"

namespace blowade {

namespace {

bool has_axis_powers(const Polynomial& f, const std::vector<int>& vars) {
  return std::all_of(vars.begin(), vars.end(), [&](int i) {
    return std::any_of(f.terms().begin(), f.terms().end(), [&](const auto& t) {
      const auto& e = t.first;
      return e[static_cast<std::size_t>(i)] > 0 && total_degree(e) == e[static_cast<std::size_t>(i)];
    });
  });
}

Rational nonzero_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(1, 9), den(1, 7), sign(0, 1);
  const long n = num(rng) * (sign(rng) == 0 ? 1 : -1);
  return Rational(n, den(rng));
}

}  // namespace

MuStarTriple mu_star(const Polynomial& f, int trials, std::uint64_t seed) {
  if (trials < 1) throw DomainError(ErrorKind::InvalidArgument, "mu_star needs trials >= 1");
  if (f.is_zero() || f.has_term({0, 0, 0})) {
    throw DomainError(ErrorKind::InvalidArgument, "mu_star needs a germ vanishing at the origin");
  }
  const int d = f.order();
  if (d < 2) throw DomainError(ErrorKind::NotASingularity, "f is smooth at the origin");
  if (!has_axis_powers(f, {0, 1, 2})) {
    throw DomainError(ErrorKind::DegenerateForMuStar, "f is not convenient");
  }
  if (!is_nondegenerate(f).nondegenerate) {
    throw DomainError(ErrorKind::DegenerateForMuStar, "f is Newton degenerate");
  }
  MuStarTriple t;
  t.mu3 = newton_number(f).value;
  t.mu1 = d - 1;
  t.trials = trials;
  t.seed = seed;
  std::mt19937_64 rng(seed);
  std::optional<long> best;
  for (int i = 0; i < trials; ++i) {
    const Rational a1 = nonzero_rational(rng), a2 = nonzero_rational(rng);
    const Polynomial g = f.compose({Polynomial::variable(0), Polynomial::variable(1),
                                    a1 * Polynomial::variable(0) + a2 * Polynomial::variable(1)});
    const auto mu = algebra::intersection_multiplicity(g.derivative(0), g.derivative(1), 0, 1);
    if (!mu) continue;
    ++t.sections_used;
    if (!best || *mu < *best) best = *mu;
  }
  if (!best) {
    throw DomainError(ErrorKind::DegenerateForMuStar,
                      "every sampled plane section has a non-isolated singularity");
  }
  t.mu2 = *best;
  return t;
}

std::vector<Rational> DeformationFamily::default_samples() {
  return {Rational(0), Rational(1, 7), Rational(1, 3), Rational(1, 2), Rational(2, 3), Rational(1)};
}

namespace {

SampleResult run_sample(const DeformationFamily& family, const Rational& s,
                        const FamilyOptions& options) {
  SampleResult r;
  r.s = s;
  r.member = evaluate_parameter(family.generic_member, s);
  try {
    r.report = analyze(r.member, options.analyze);
    r.reduced = true;
  } catch (const DomainError& e) {
    r.error = e.kind();
    r.message = e.what();
    r.reduced = e.kind() != ErrorKind::NonReducedTangentCone;
  }
  try {
    r.mu_star = mu_star(r.member, options.trials, options.seed);
  } catch (const DomainError& e) {
    r.mu_star_note = e.what();
  }
  return r;
}

template <class T>
std::optional<T> field(const SampleResult& r, T (*get)(const BlowAdeReport&)) {
  if (!r.report) return std::nullopt;
  return get(*r.report);
}

}  // namespace

StabilityVerdict check_family(const DeformationFamily& family, const FamilyOptions& options) {
  std::vector<Rational> samples = family.samples.empty() ? DeformationFamily::default_samples()
                                                         : family.samples;
  samples.push_back(Rational(0));
  std::sort(samples.begin(), samples.end());
  samples.erase(std::unique(samples.begin(), samples.end()), samples.end());

  StabilityVerdict v;
  for (const auto& s : samples) v.samples.push_back(run_sample(family, s, options));
  const auto ref_it = std::find_if(v.samples.begin(), v.samples.end(),
                                   [](const SampleResult& r) { return r.s == 0; });
  const SampleResult& ref = *ref_it;

  using Getter = bool (*)(const SampleResult&, const SampleResult&);
  const std::pair<const char*, Getter> checks[] = {
      {"reduced", [](const SampleResult& a, const SampleResult& b) { return a.reduced == b.reduced; }},
      {"mu_tot",
       [](const SampleResult& a, const SampleResult& b) {
         auto g = [](const BlowAdeReport& r) { return r.mu_tot; };
         return field<int>(a, g) == field<int>(b, g);
       }},
      {"k0",
       [](const SampleResult& a, const SampleResult& b) {
         auto g = [](const BlowAdeReport& r) { return r.k0; };
         return field<int>(a, g) == field<int>(b, g);
       }},
      {"signature",
       [](const SampleResult& a, const SampleResult& b) {
         auto g = [](const BlowAdeReport& r) { return r.signature(); };
         return field<TypeSignature>(a, g) == field<TypeSignature>(b, g);
       }},
      {"zeta",
       [](const SampleResult& a, const SampleResult& b) {
         auto g = [](const BlowAdeReport& r) { return r.global_zeta; };
         return field<std::optional<ZetaFunction>>(a, g) == field<std::optional<ZetaFunction>>(b, g);
       }},
      {"mu_star",
       [](const SampleResult& a, const SampleResult& b) {
         return !a.mu_star || !b.mu_star || *a.mu_star == *b.mu_star;
       }},
  };
  bool* flag_slots[] = {&v.flags.reduced,   &v.flags.mu_tot, &v.flags.k0,
                        &v.flags.signature, &v.flags.zeta,   &v.flags.mu_star};

  for (const auto& sample : v.samples) {
    if (!sample.mu_star) v.flags.mu_star_skipped = true;
    for (std::size_t i = 0; i < std::size(checks); ++i) {
      if (checks[i].second(sample, ref)) continue;
      *flag_slots[i] = false;
      if (!v.first_violation) v.first_violation = Violation{sample.s, checks[i].first};
    }
  }

  v.pairwise_same_type = std::all_of(v.samples.begin(), v.samples.end(), [](const auto& r) {
    return r.report && r.report->is_blow_ade;
  });
  for (std::size_t i = 0; i < v.samples.size() && v.pairwise_same_type; ++i) {
    for (std::size_t j = i + 1; j < v.samples.size() && v.pairwise_same_type; ++j) {
      v.pairwise_same_type = same_type(*v.samples[i].report, *v.samples[j].report).same;
    }
  }
  return v;
}

}  // namespace blowade
