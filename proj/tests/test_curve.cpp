#include <random>

#include "blowade/curve.hpp"
#include "blowade/errors.hpp"
#include "blowade/newton.hpp"
#include "blowade/parse.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace blowade;

namespace {

ADEType classify(const std::string& g, int n = kDefaultJetOrder) {
  return classify_ade(TruncatedSeries(parse_polynomial(g), n)).type;
}

struct NormalForm {
  ADEType type;
  Polynomial poly;
  // Weights (w2, w3) with the normal form of weighted degree 1.
  Rational w2, w3;
};

std::vector<NormalForm> normal_forms() {
  std::vector<NormalForm> out;
  for (int n = 1; n <= 14; ++n) {
    out.push_back({{ADEFamily::A, n},
                   Polynomial::monomial({0, 2, 0}) + Polynomial::monomial({0, 0, n + 1}),
                   Rational(1, 2), Rational(1, n + 1)});
  }
  for (int n = 4; n <= 14; ++n) {
    out.push_back({{ADEFamily::D, n},
                   Polynomial::monomial({0, 2, 1}) + Polynomial::monomial({0, 0, n - 1}),
                   Rational(n - 2, 2 * (n - 1)), Rational(1, n - 1)});
  }
  out.push_back({{ADEFamily::E, 6}, parse_polynomial("x2^3 + x3^4"), Rational(1, 3), Rational(1, 4)});
  out.push_back(
      {{ADEFamily::E, 7}, parse_polynomial("x2^3 + x2*x3^3"), Rational(1, 3), Rational(2, 9)});
  out.push_back({{ADEFamily::E, 8}, parse_polynomial("x2^3 + x3^5"), Rational(1, 3), Rational(1, 5)});
  return out;
}

// Random terms of weighted degree > 1 and total degree < limit.
Polynomial perturbation(std::mt19937_64& rng, const NormalForm& nf, int limit) {
  Polynomial p;
  for (int tries = 0; tries < 12; ++tries) {
    const int a = static_cast<int>(rng() % 8), b = static_cast<int>(rng() % 12);
    if (a + b >= limit || a * nf.w2 + b * nf.w3 <= 1) continue;
    p.add_term({0, a, b}, testing::random_rational(rng, 5));
  }
  return p;
}

Polynomial random_linear_image(std::mt19937_64& rng, const Polynomial& f) {
  std::uniform_int_distribution<int> entry(-3, 3);
  int a, b, c, d;
  do {
    a = entry(rng), b = entry(rng), c = entry(rng), d = entry(rng);
  } while (a * d - b * c == 0);
  return f.compose({Polynomial::variable(0),
                    Rational(a) * Polynomial::variable(1) + Rational(b) * Polynomial::variable(2),
                    Rational(c) * Polynomial::variable(1) + Rational(d) * Polynomial::variable(2)});
}

}  // namespace

TEST_CASE("projective points") {
  const ProjectivePoint p({0, 2, -4});
  CHECK(p.to_string() == "0:1:-2");
  CHECK(p.chart() == 2);
  CHECK(ProjectivePoint::parse("3:0:1/2") == ProjectivePoint({6, 0, 1}));
  CHECK_THROWS_AS(ProjectivePoint({0, 0, 0}), DomainError);
  CHECK_THROWS_AS(ProjectivePoint::parse("1:2"), SyntaxError);
  CHECK_THROWS_AS(ProjectivePoint::parse("1:2:3:4"), SyntaxError);
}

TEST_CASE("classification examples") {
  CHECK(classify("x2^2 + x3^5") == ADEType{ADEFamily::A, 4});
  CHECK(classify("x2^2*x3 + x3^3") == ADEType{ADEFamily::D, 4});
  CHECK(classify("x2*x3") == ADEType{ADEFamily::A, 1});
  CHECK(classify("x2^2 + x3^2") == ADEType{ADEFamily::A, 1});
  CHECK(classify("x2^2 - 2*x2*x3 + x3^2 + x3^3") == ADEType{ADEFamily::A, 2});
  CHECK(classify("x2^2 + 2*x2*x3^2 + x3^4 + x3^9") == ADEType{ADEFamily::A, 8});
  CHECK(classify("x3^2*x2 + x2^5") == ADEType{ADEFamily::D, 6});
  CHECK(classify("x2^2*x3 + 2*x2*x3^3 + x3^5 + x3^8") == ADEType{ADEFamily::D, 9});
  CHECK(classify("x3^3 + x2^4") == ADEType{ADEFamily::E, 6});
  CHECK(classify("x3^3 + x3*x2^3") == ADEType{ADEFamily::E, 7});
  CHECK(classify("x3^3 + x2^5") == ADEType{ADEFamily::E, 8});
  CHECK(classify("x2^3 + x3^6") == ADEType{ADEFamily::NotADE, 0});
  CHECK(classify("x2^4 + x3^4") == ADEType{ADEFamily::NotADE, 0});
  CHECK(classify("x2^2") == ADEType{ADEFamily::Indeterminate, 0});
  CHECK(classify("x2^2 + x3^50") == ADEType{ADEFamily::Indeterminate, 0});
  CHECK(classify("x2^2 + x3^50", 60) == ADEType{ADEFamily::A, 49});
  CHECK(classify("x2^2*x3 + x2^4") == ADEType{ADEFamily::Indeterminate, 0});
  CHECK(classify("x2^3 + x3^5", 5) == ADEType{ADEFamily::Indeterminate, 0});
  CHECK_THROWS_AS(classify("x2 + x3^2"), DomainError);
  CHECK_THROWS_AS(classify("x1*x2 + x3^2"), DomainError);
  CHECK_THROWS_AS(classify("1 + x3^2"), DomainError);
  try {
    classify("x3 + x2^2");
  } catch (const DomainError& e) {
    CHECK(e.kind() == ErrorKind::NotASingularity);
  }
}

TEST_CASE("normalizing change reproduces the normal part") {
  std::mt19937_64 rng(17);
  for (const auto& nf : normal_forms()) {
    const TruncatedSeries g(random_linear_image(rng, nf.poly + perturbation(rng, nf, 20)), 40);
    const auto cls = classify_ade(g);
    REQUIRE(cls.type == nf.type);
    if (nf.type.family == ADEFamily::D && nf.type.index == 4) {
      const Polynomial after = substitute(g, cls.change).poly();
      CHECK(newton_principal_part(after) == cls.normal_part);
      CHECK(cls.normal_part.has_term({0, 3, 0}));
      CHECK(cls.normal_part.has_term({0, 0, 3}));
      continue;
    }
    const Polynomial after = substitute(g, cls.change).poly();
    // The normal part is the weighted-degree-1 part of g after the change.
    Polynomial lead;
    for (const auto& [e, c] : after.terms()) {
      if (e[1] * nf.w2 + e[2] * nf.w3 == 1) lead.add_term(e, c);
      CHECK(e[1] * nf.w2 + e[2] * nf.w3 >= 1);
    }
    CHECK(lead == cls.normal_part);
    CHECK(newton_principal_part(after) == cls.normal_part);
  }
}

TEST_CASE("changes clear pure powers off the boundary") {
  for (const char* g : {"x2^2*x3 + x2*x3^2 + x2^7 + x3^9", "x2^2*x3 + x3^5 + x2^6 + x2^9",
                        "x2^3 + x2*x3^3 + x3^5 + x3^7", "x2^3 + x2*x3^3 + x3^8"}) {
    const TruncatedSeries s(parse_polynomial(g), 30);
    const auto cls = classify_ade(s);
    CHECK(newton_principal_part(substitute(s, cls.change).poly()) == cls.normal_part);
  }
}

TEST_CASE("A6 under random rational changes") {
  std::mt19937_64 rng(2024);
  const NormalForm a6{{ADEFamily::A, 6}, parse_polynomial("x2^2 + x3^7"), Rational(1, 2),
                      Rational(1, 7)};
  for (int i = 0; i < 20; ++i) {
    const Polynomial g = random_linear_image(rng, a6.poly + perturbation(rng, a6, 30));
    // Oracle: the pre-change normal form is A6 by definition.
    CHECK(classify_ade(TruncatedSeries(g, 40)).type == a6.type);
  }
}

TEST_CASE("invariance under linear changes and scaling") {
  std::mt19937_64 rng(99);
  for (const auto& nf : normal_forms()) {
    for (int i = 0; i < 4; ++i) {
      const Polynomial base = nf.poly + perturbation(rng, nf, 24);
      const auto t0 = classify_ade(TruncatedSeries(base, 40)).type;
      CHECK(t0 == nf.type);
      const Polynomial image = testing::random_rational(rng) * random_linear_image(rng, base);
      CHECK(classify_ade(TruncatedSeries(image, 40)).type == t0);
    }
  }
}

TEST_CASE("Milnor number of each normal form equals its Newton number") {
  for (const auto& nf : normal_forms()) {
    CHECK(nf.type.milnor() == newton_number(nf.poly, {1, 2}).value);
  }
}

TEST_CASE("singular locus") {
  const auto three = singular_points(parse_polynomial("z1*z2*z3"));
  REQUIRE(three.size() == 3);
  CHECK(three[0].point == ProjectivePoint({0, 0, 1}));
  CHECK(three[1].point == ProjectivePoint({0, 1, 0}));
  CHECK(three[2].point == ProjectivePoint({1, 0, 0}));
  for (const auto& r : three) CHECK(r.type == ADEType{ADEFamily::A, 1});
  CHECK(total_milnor(three) == 3);

  const auto cusp = singular_points(parse_polynomial("z2^2*z3 - z1^3"));
  REQUIRE(cusp.size() == 1);
  CHECK(cusp[0].point == ProjectivePoint({0, 0, 1}));
  CHECK(cusp[0].type == ADEType{ADEFamily::A, 2});
  CHECK(cusp[0].chart == 3);
  CHECK(cusp[0].local_equation.poly() == parse_polynomial("x3^2 - x2^3"));

  CHECK(singular_points(parse_polynomial("z1^3 + z2^3 + z3^3")).empty());
  CHECK(total_milnor({}) == 0);

  // Four general lines: six nodes, some away from the coordinate points.
  const auto lines = singular_points(parse_polynomial("z1*z2*z3") *
                                     parse_polynomial("z1 + 2*z2 + 3*z3"));
  CHECK(lines.size() == 6);
  CHECK(total_milnor(lines) == 6);

  // Three-cuspidal quartic.
  const auto quartic = singular_points(
      parse_polynomial("z1^2*z2^2 + z2^2*z3^2 + z3^2*z1^2") -
      parse_polynomial("2*z1*z2*z3") * parse_polynomial("z1 + z2 + z3"));
  REQUIRE(quartic.size() == 3);
  for (const auto& r : quartic) CHECK(r.type == ADEType{ADEFamily::A, 2});

  // Conic and tangent line: an A3 point.
  const auto tac = singular_points(parse_polynomial("z3") * parse_polynomial("z1*z3 - z2^2"));
  REQUIRE(tac.size() == 1);
  CHECK(tac[0].type == ADEType{ADEFamily::A, 3});
  CHECK(tac[0].point == ProjectivePoint({1, 0, 0}));
}

TEST_CASE("total Milnor number is additive and rejects unknown types") {
  SingularPointReport a2, a4, bad;
  a2.type = {ADEFamily::A, 2};
  a4.type = {ADEFamily::A, 4};
  bad.type = {ADEFamily::Indeterminate, 0};
  CHECK(total_milnor({a2, a4}) == 6);
  CHECK_THROWS_AS(total_milnor({a2, bad}), DomainError);
}

TEST_CASE("singular locus errors") {
  try {
    singular_points(parse_polynomial("z1^2*z2"));
    FAIL("expected NonReducedTangentCone");
  } catch (const DomainError& e) {
    CHECK(e.kind() == ErrorKind::NonReducedTangentCone);
  }
  try {
    singular_points(parse_polynomial("z2") * parse_polynomial("z1 + z3").pow(2));
    FAIL("expected NonReducedTangentCone");
  } catch (const DomainError& e) {
    CHECK(e.kind() == ErrorKind::NonReducedTangentCone);
  }
  try {
    singular_locus(parse_polynomial("z1^2 - 2*z2^2") * parse_polynomial("z1^2 - 3*z2^2 + z3^2"));
    FAIL("expected NonRationalSingularLocus");
  } catch (const DomainError& e) {
    CHECK(e.kind() == ErrorKind::NonRationalSingularLocus);
  }
  try {
    singular_locus(parse_polynomial("z1") * parse_polynomial("z2^2 - 2*z3^2"));
    FAIL("expected NonRationalSingularLocus");
  } catch (const DomainError& e) {
    CHECK(e.kind() == ErrorKind::NonRationalSingularLocus);
  }
}

TEST_CASE("user-supplied points") {
  const Polynomial fd = parse_polynomial("z1^2 - 2*z2^2") * parse_polynomial("z1^2 - 3*z2^2 + z3^2");
  CHECK_THROWS_AS(analyze_point(fd, ProjectivePoint({1, 0, 1})), DomainError);
  const auto r = analyze_point(parse_polynomial("z1*z2*z3"), ProjectivePoint::parse("0:0:1"));
  CHECK(r.type == ADEType{ADEFamily::A, 1});
  CHECK(r.chart == 3);
}

TEST_CASE("singular locus does not depend on coordinate order") {
  const std::array<std::array<int, 3>, 6> perms{
      {{0, 1, 2}, {1, 0, 2}, {0, 2, 1}, {2, 1, 0}, {1, 2, 0}, {2, 0, 1}}};
  const Polynomial fd = parse_polynomial("z1*z2*z3") * parse_polynomial("z1 + z2 - 2*z3") +
                        parse_polynomial("z2^4");
  const auto base = singular_locus(fd);
  for (const auto& perm : perms) {
    std::set<ProjectivePoint> expect;
    for (const auto& p : base) {
      std::array<Rational, 3> c;
      for (std::size_t i = 0; i < 3; ++i) c[static_cast<std::size_t>(perm[i])] = p[i];
      expect.insert(ProjectivePoint(c));
    }
    const auto got = singular_locus(permute_variables(fd, perm));
    CHECK(std::set<ProjectivePoint>(got.begin(), got.end()) == expect);
  }
}
