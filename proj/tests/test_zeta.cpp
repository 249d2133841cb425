#include <numeric>
#include <random>

#include "blowade/errors.hpp"
#include "blowade/newton.hpp"
#include "blowade/parse.hpp"
#include "blowade/zeta.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace blowade;

namespace {

Polynomial P(const std::string& s) { return parse_polynomial(s); }

Polynomial mono(int a, int b, int c, const Rational& k = 1) {
  return Polynomial::monomial({a, b, c}, k);
}

// Brieskorn-Pham zeta by the join formula: each nonempty subset S of the exponents
// contributes (1 - t^lcm)^((-1)^|S| prod / lcm).
ZetaFunction brieskorn_oracle(const std::vector<long>& a) {
  ZetaFunction z;
  const unsigned n = static_cast<unsigned>(a.size());
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    long lcm = 1, prod = 1, size = 0;
    for (unsigned i = 0; i < n; ++i) {
      if (mask & (1u << i)) {
        lcm = std::lcm(lcm, a[i]);
        prod *= a[i];
        ++size;
      }
    }
    z *= ZetaFunction(lcm, (size % 2 == 0 ? 1 : -1) * prod / lcm);
  }
  return z;
}

}  // namespace

TEST_CASE("zeta function arithmetic") {
  const ZetaFunction a = ZetaFunction(3, 2) * ZetaFunction(5, -1);
  CHECK(zeta_degree(a) == 1);
  CHECK(zeta_degree(ZetaFunction()) == 0);
  CHECK(a.to_string() == "(1-t^3)^2 (1-t^5)^-1");
  CHECK(ZetaFunction().to_string() == "1");
  CHECK((a * a.pow(-1)).is_trivial());
  CHECK(ZetaFunction(4, 0).is_trivial());
  CHECK_THROWS_AS(ZetaFunction(0, 1), DomainError);

  std::mt19937_64 rng(5);
  auto draw = [&] {
    ZetaFunction z;
    for (int i = 0; i < 4; ++i) {
      z *= ZetaFunction(1 + static_cast<long>(rng() % 6), static_cast<long>(rng() % 7) - 3);
    }
    return z;
  };
  for (int i = 0; i < 50; ++i) {
    const auto x = draw(), y = draw(), w = draw();
    CHECK(x * y == y * x);
    CHECK((x * y) * w == x * (y * w));
    CHECK(zeta_degree(x * y) == zeta_degree(x) + zeta_degree(y));
    const auto xy = x * y;
    for (const auto& [d, nu] : xy.factors()) CHECK(nu != 0);
    CHECK(x * ZetaFunction() == x);
  }
}

TEST_CASE("node zeta on a non-convenient boundary") {
  for (int d : {3, 4, 5}) {
    for (int l : {1, 2, 3}) {
      for (int c : {1, -1, 7}) {
        const Polynomial f = mono(d, 2, 0) + mono(d, 0, 2) + mono(d + l, 0, 0, c);
        CHECK(varchenko_zeta(f) == ZetaFunction(d + l, -1));
      }
    }
  }
}

TEST_CASE("Morse point and Brieskorn-Pham germs") {
  const auto morse = varchenko_zeta(P("x1^2 + x2^2 + x3^2"));
  CHECK(morse == ZetaFunction(2, -1));
  CHECK(zeta_degree(morse) == -2);
  for (int a = 2; a <= 5; ++a) {
    for (int b = 2; b <= 5; ++b) {
      for (int c = 2; c <= 5; ++c) {
        const Polynomial f = mono(a, 0, 0) + mono(0, b, 0) + mono(0, 0, c);
        const auto z = varchenko_zeta(f);
        CHECK(z == brieskorn_oracle({a, b, c}));
        CHECK(zeta_degree(z) == -1 - (a - 1) * (b - 1) * (c - 1));
      }
    }
  }
}

TEST_CASE("plane curve zeta functions") {
  for (int n = 1; n <= 8; ++n) {
    const Polynomial f = mono(0, 2, 0) + mono(0, 0, n + 1);
    const auto z = varchenko_zeta(f, {1, 2});
    CHECK(z == brieskorn_oracle({2, n + 1}));
    CHECK(zeta_degree(z) == n - 1);
  }
  CHECK(zeta_degree(varchenko_zeta(P("x2^2*x3 + x3^4"), {1, 2})) == 4);
}

TEST_CASE("single-face and two-face boundaries") {
  for (int d : {3, 4}) {
    for (int n : {2, 4, 6}) {
      const Polynomial single = mono(d + 2, 0, 0) + mono(d, 2, 0) + mono(d + 1, 0, n + 1);
      CHECK(newton_boundary(single).faces_of_dimension(2).size() == 1);
      CHECK(zeta_degree(varchenko_zeta(single)) == -n * (d + 2));
      const Polynomial corner = mono(d + 2, 0, 0) + mono(d, 2, 0) + mono(d, 0, n + 1);
      CHECK(newton_boundary(corner).faces_of_dimension(2).size() == 1);
      CHECK(zeta_degree(varchenko_zeta(corner)) == -n * (d + 2));
      for (int q = 1; 2 * q <= n + 1; ++q) {
        const Polynomial two = corner + mono(d + 1, 0, q);
        CHECK(newton_boundary(two).faces_of_dimension(2).size() == 2);
        const long deg = zeta_degree(varchenko_zeta(two));
        CHECK(deg == -(d + 2) * (q - 1) - ((d + 1) * (n + 1) - q * d));
        CHECK(deg - (-n * (d + 2)) == n + 1 - 2 * q);
        CHECK(n + 1 - 2 * q > 0);
      }
    }
  }
}

TEST_CASE("superisolated germ directly") {
  CHECK(varchenko_zeta(P("x1*x2*x3 + x1^4 + x2^4 + x3^4")) == ZetaFunction(4, -3));
}

TEST_CASE("property: degree equals -1 - Newton number") {
  std::mt19937_64 rng(2024);
  int kept = 0, degenerate = 0;
  while (kept < 120) {
    Polynomial f = testing::random_polynomial(rng, 6, 5, 2);
    for (int i = 0; i < 3; ++i) {
      Exponent e{0, 0, 0};
      e[static_cast<std::size_t>(i)] = 2 + static_cast<long>(rng() % 5);
      f += Polynomial::monomial(e, testing::random_rational(rng));
    }
    if (!is_convenient(f) || f.has_term({0, 0, 0})) continue;
    if (!is_nondegenerate(f).nondegenerate) {
      ++degenerate;
      CHECK_THROWS_AS(varchenko_zeta(f), DomainError);
      continue;
    }
    ++kept;
    CHECK(zeta_degree(varchenko_zeta(f)) == -1 - newton_number(f).value);
  }
  MESSAGE("degenerate draws discarded: " << degenerate);
}

TEST_CASE("local zeta does not depend on the constant") {
  for (int d : {3, 4}) {
    for (int m : {1, 2, 3}) {
      const Polynomial h[] = {P("x2^2 + x3^4"), P("x2^2*x3 + x3^3"), P("x2^3 + x3^4")};
      for (const auto& hh : h) {
        const Polynomial base = mono(d, 0, 0) * hh;
        const auto z1 = varchenko_zeta(base + mono(d + m, 0, 0, 1));
        CHECK(varchenko_zeta(base + mono(d + m, 0, 0, -5)) == z1);
        CHECK(varchenko_zeta(base + mono(d + m, 0, 0, Rational(2, 9))) == z1);
      }
    }
  }
}

TEST_CASE("global zeta assembly") {
  CHECK(cone_exponent(3, 3) == 0);
  const ZetaFunction node(4, -1);
  CHECK(global_zeta(3, 3, {node, node, node}) == ZetaFunction(4, -3));
  CHECK(global_zeta(3, 3, {node, node, node}) == varchenko_zeta(P("x1*x2*x3 + x1^4 + x2^4 + x3^4")));
  for (int d = 2; d <= 6; ++d) {
    CHECK(global_zeta(d, 0, {}) == ZetaFunction(d, -(d * d - 3 * d + 3)));
    CHECK(zeta_degree(global_zeta(d, 0, {})) == -1 - (d - 1) * (d - 1) * (d - 1));
    for (int mu = 1; mu <= 4; ++mu) {
      for (int m = 1; m <= 3; ++m) {
        std::vector<ZetaFunction> locals(static_cast<std::size_t>(mu), ZetaFunction(d + m, -1));
        CHECK(global_zeta(d, mu, locals) ==
              ZetaFunction(d, -d * d + 3 * d - 3 + mu) * ZetaFunction(d + m, -mu));
      }
    }
  }
  CHECK_THROWS_AS(global_zeta(1, 0, {}), DomainError);
  CHECK_THROWS_AS(global_zeta(3, -1, {}), DomainError);
}

TEST_CASE("multiplicity factors") {
  const ZetaFunction z = ZetaFunction(3, -2) * ZetaFunction(4, 5);
  CHECK(multiplicity_factor(z, 1) == ZetaFactor{1, 3, -2});
  CHECK(multiplicity_factor(z, 2) == ZetaFactor{2, 4, 5});
  try {
    multiplicity_factor(z, 3);
    FAIL("expected LevelOutOfRange");
  } catch (const DomainError& e) {
    CHECK(e.kind() == ErrorKind::LevelOutOfRange);
  }
  CHECK_THROWS_AS(multiplicity_factor(z, 0), DomainError);
  CHECK_THROWS_AS(multiplicity_factor(ZetaFunction(), 1), DomainError);
}

TEST_CASE("zeta errors") {
  try {
    varchenko_zeta(P("x1^2 + 2*x1*x2 + x2^2 + x3^2"));
    FAIL("expected DegenerateGerm");
  } catch (const DomainError& e) {
    CHECK(e.kind() == ErrorKind::DegenerateGerm);
    CHECK(std::string(e.what()).find("face") != std::string::npos);
  }
  CHECK_THROWS_AS(varchenko_zeta(Polynomial()), DomainError);
  CHECK_THROWS_AS(varchenko_zeta(P("1 + x1^2")), DomainError);
  CHECK_THROWS_AS(varchenko_zeta(P("x1^2"), {0}), DomainError);
}
