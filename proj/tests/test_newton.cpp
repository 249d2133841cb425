#include <random>

#include "blowade/errors.hpp"
#include "blowade/newton.hpp"
#include "blowade/parse.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace blowade;

namespace {

Polynomial from_support(std::initializer_list<Exponent> support) {
  Polynomial p;
  for (const auto& e : support) p.add_term(e, 1);
  return p;
}

// |I|! * volume of the simplex {x >= 0 : sum x_i / a_i <= 1} through lattice point
// counts of its dilates: the |I|-th finite difference of the Ehrhart polynomial.
long simplex_volume_term(const std::vector<long>& a) {
  long L = 1;
  for (auto x : a) L *= x;
  auto count = [&](long k) {
    long n = 0;
    const long bound = k * L;
    if (a.size() == 1) return a[0] * k + 1;
    if (a.size() == 2) {
      for (long x = 0; x <= k * a[0]; ++x) {
        for (long y = 0; y <= k * a[1]; ++y) {
          if (x * (L / a[0]) + y * (L / a[1]) <= bound) ++n;
        }
      }
      return n;
    }
    for (long x = 0; x <= k * a[0]; ++x) {
      for (long y = 0; y <= k * a[1]; ++y) {
        for (long z = 0; z <= k * a[2]; ++z) {
          if (x * (L / a[0]) + y * (L / a[1]) + z * (L / a[2]) <= bound) ++n;
        }
      }
    }
    return n;
  };
  if (a.size() == 1) return count(1) - count(0);
  if (a.size() == 2) return count(2) - 2 * count(1) + count(0);
  return count(3) - 3 * count(2) + 3 * count(1) - count(0);
}

long brieskorn_oracle(long a, long b, long c) {
  return simplex_volume_term({a, b, c}) - simplex_volume_term({a, b}) -
         simplex_volume_term({a, c}) - simplex_volume_term({b, c}) + a + b + c - 1;
}

}  // namespace

TEST_CASE("boundary of the Morse germ") {
  const auto nb = newton_boundary(parse_polynomial("x1^2 + x2^2 + x3^2"));
  const auto top = nb.faces_of_dimension(2);
  REQUIRE(top.size() == 1);
  CHECK(top[0]->normal == Covector{1, 1, 1});
  CHECK(top[0]->level == 2);
  CHECK(nb.faces_of_dimension(1).size() == 3);
  CHECK(nb.faces_of_dimension(0).size() == 3);
}

TEST_CASE("two top-dimensional faces split along an edge") {
  for (int d = 1; d <= 4; ++d) {
    for (int n = 2; n <= 8; ++n) {
      for (int q = 1; 2 * q < n + 1; ++q) {
        const Polynomial f =
            from_support({{d + 2, 0, 0}, {d, 2, 0}, {d + 1, 0, q}, {d, 0, n + 1}});
        const auto nb = newton_boundary(f);
        const auto top = nb.faces_of_dimension(2);
        REQUIRE(top.size() == 2);
        const Exponent a{d, 2, 0}, b{d + 1, 0, q};
        int shared = 0;
        for (const Face* e : nb.faces_of_dimension(1)) {
          if (e->contains(a) && e->contains(b)) ++shared;
        }
        CHECK(shared == 1);
        CHECK(top[0]->contains(a));
        CHECK(top[0]->contains(b));
        CHECK(top[1]->contains(a));
        CHECK(top[1]->contains(b));
      }
    }
  }
}

TEST_CASE("single top-dimensional face") {
  for (int d = 1; d <= 4; ++d) {
    for (int n = 1; n <= 6; ++n) {
      for (const Exponent& corner : {Exponent{d + 1, 0, n + 1}, Exponent{d, 0, n + 1}}) {
        const auto nb = newton_boundary(from_support({{d + 2, 0, 0}, {d, 2, 0}, corner}));
        REQUIRE(nb.faces_of_dimension(2).size() == 1);
        CHECK(nb.faces_of_dimension(2)[0]->vertices.size() == 3);
      }
    }
  }
}

TEST_CASE("support lies on or above every face") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 60; ++i) {
    const Polynomial f = testing::random_polynomial(rng, 6, 9);
    const auto nb = newton_boundary(f);
    CHECK_FALSE(nb.faces.empty());
    for (const auto& face : nb.faces) {
      CHECK(face.normal[0] > 0);
      CHECK(face.normal[1] > 0);
      CHECK(face.normal[2] > 0);
      for (const auto& e : nb.support) {
        const long v = face.normal[0] * e[0] + face.normal[1] * e[1] + face.normal[2] * e[2];
        CHECK(v >= face.level);
        CHECK((v == face.level) == face.contains(e));
      }
    }
  }
}

TEST_CASE("principal part") {
  CHECK(newton_principal_part(parse_polynomial("x2^2 + x3^2 + x1^3 + x1^5*x2")) ==
        parse_polynomial("x2^2 + x3^2 + x1^3"));
  CHECK(newton_principal_part(parse_polynomial("-3*x1^2*x3^7")) ==
        parse_polynomial("-3*x1^2*x3^7"));
  for (int n = 3; n <= 9; ++n) {
    for (int q = 1; 2 * q < n + 1; ++q) {
      const Polynomial h = parse_polynomial("x2^2 + 5*x1*x3^" + std::to_string(q)) +
                           Polynomial::monomial({0, 0, n + 1});
      const Polynomial rest = parse_polynomial("x1^2*x3^" + std::to_string(q + 1) +
                                               " + x1*x2*x3^" + std::to_string(q) +
                                               " + x2^3 + x1^3*x3^" +
                                               std::to_string(q));
      CHECK(newton_principal_part(h + rest) == h);
    }
  }
}

TEST_CASE("Newton numbers") {
  CHECK(newton_number(parse_polynomial("x1^2 + x2^2 + x3^2")).value == 1);
  for (int j = 1; j <= 10; ++j) {
    const Polynomial f = Polynomial::monomial({2 * j, 0, 0}) + parse_polynomial("x2^2 + x3^2");
    CHECK(newton_number(f).value == 2 * j - 1);
  }
  for (int a = 2; a <= 6; ++a) {
    for (int b = 2; b <= 6; ++b) {
      for (int c = 2; c <= 5; ++c) {
        const Polynomial f = Polynomial::monomial({a, 0, 0}) + Polynomial::monomial({0, b, 0}) +
                             Polynomial::monomial({0, 0, c});
        const auto nn = newton_number(f);
        CHECK(nn.value == brieskorn_oracle(a, b, c));
        CHECK(nn.value == (a - 1) * (b - 1) * (c - 1));
        CHECK(nn.volume_terms.at(0b111) == simplex_volume_term({a, b, c}));
      }
    }
  }
  // Cone data divisible by x1^d.
  for (int d = 1; d <= 5; ++d) {
    for (int l = 1; l <= 5; ++l) {
      const Polynomial f = Polynomial::monomial({d, 0, 0}) *
                           (parse_polynomial("x2^2 + x3^2") + Polynomial::monomial({l, 0, 0}, 3));
      CHECK(newton_number(f).value == d + l - 1);
    }
  }
}

TEST_CASE("two-variable Newton numbers") {
  CHECK(newton_number(parse_polynomial("x2^2 + x3^5"), {1, 2}).value == 4);
  CHECK(newton_number(parse_polynomial("x2^2*x3 + x3^4"), {1, 2}).value == 5);
  CHECK(newton_number(parse_polynomial("x2^3 + x3^4"), {1, 2}).value == 6);
  CHECK(newton_number(parse_polynomial("x1^3 + x1*x2^3"), {0, 1}).value == 7);
  CHECK_THROWS_AS(newton_number(parse_polynomial("x1 + x2^2"), {1, 2}), DomainError);
}

TEST_CASE("permutation invariance and triangulation agreement") {
  std::mt19937_64 rng(9);
  const std::array<std::array<int, 3>, 5> perms{
      {{1, 0, 2}, {0, 2, 1}, {2, 1, 0}, {1, 2, 0}, {2, 0, 1}}};
  for (int i = 0; i < 40; ++i) {
    Polynomial f = testing::random_polynomial(rng, 6, 8);
    f += Polynomial::monomial({2 + static_cast<int>(rng() % 5), 0, 0});
    f += Polynomial::monomial({0, 2 + static_cast<int>(rng() % 5), 0});
    f += Polynomial::monomial({0, 0, 2 + static_cast<int>(rng() % 5)});
    const auto a = newton_number(f, {0, 1, 2}, FanAnchor::LowestLex);
    const auto b = newton_number(f, {0, 1, 2}, FanAnchor::NearCentroid);
    CHECK(a.value == b.value);
    CHECK(a.volume_terms == b.volume_terms);
    for (const auto& p : perms) CHECK(newton_number(permute_variables(f, p)).value == a.value);
  }
}

TEST_CASE("non-degeneracy") {
  for (int m = 2; m <= 9; ++m) {
    CHECK(is_nondegenerate(parse_polynomial("x2^2 + x3^2") + Polynomial::monomial({m, 0, 0}))
              .nondegenerate);
  }
  for (int d = 1; d <= 4; ++d) {
    for (int l = 1; l <= 4; ++l) {
      const Polynomial f =
          Polynomial::monomial({d, 0, 0}) *
          (parse_polynomial("x2^2 + x3^2") + Polynomial::monomial({l, 0, 0}, Rational(-2, 3)));
      CHECK(is_nondegenerate(f).nondegenerate);
    }
  }
  const auto bad = is_nondegenerate(parse_polynomial("x2^2 + 2*x2*x3 + x3^2 + x1^2"));
  CHECK_FALSE(bad.nondegenerate);
  REQUIRE(bad.witness.has_value());
  CHECK(bad.witness->contains({0, 2, 0}));
  CHECK(bad.witness->contains({0, 1, 1}));
  CHECK(bad.witness->contains({0, 0, 2}));
}

TEST_CASE("non-degeneracy on two-dimensional faces") {
  const auto hesse = is_nondegenerate(parse_polynomial("x1^3 + x2^3 + x3^3 - 3*x1*x2*x3"));
  CHECK_FALSE(hesse.nondegenerate);
  REQUIRE(hesse.witness.has_value());
  CHECK(hesse.witness->dimension == 2);
  CHECK(is_nondegenerate(parse_polynomial("x1^3 + x2^3 + x3^3 + x1*x2*x3")).nondegenerate);

  // Two conics meeting at the torus points (+-sqrt2 : 1 : +-1).
  const Polynomial q1 = parse_polynomial("x1^2 - 2*x2^2");
  const Polynomial q2 = parse_polynomial("x1^2 - 3*x2^2 + x3^2");
  const auto conics = is_nondegenerate(q1 * q2);
  CHECK_FALSE(conics.nondegenerate);
  REQUIRE(conics.witness.has_value());
  CHECK(conics.witness->dimension == 2);

  // A reducible but reduced face polynomial whose components meet off the torus.
  CHECK(is_nondegenerate(parse_polynomial("x1^2 + x2^2 + x3^2 + x1*x2 + 3*x2*x3")).nondegenerate ==
        true);
  // A square factor.
  const Polynomial l = parse_polynomial("x1 + x2 + x3");
  CHECK_FALSE(is_nondegenerate(l * l).nondegenerate);
}

TEST_CASE("errors") {
  CHECK_THROWS_AS(newton_boundary(Polynomial()), DomainError);
  CHECK_THROWS_AS(newton_boundary(parse_polynomial("x1 + x3"), {0, 1}), DomainError);
  CHECK_THROWS_AS(newton_boundary(parse_polynomial("x1"), {1, 0}), DomainError);
}
