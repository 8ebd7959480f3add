#include <doctest.h>

#include <random>

#include "hypercat/polynomial.hpp"
#include "hypercat/scalar.hpp"

using namespace hypercat;

namespace {

using Rng = std::mt19937_64;

long small(Rng& rng, long lo = -4, long hi = 4) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

template <class S>
S random_element(Rng& rng);

template <>
Integer random_element<Integer>(Rng& rng) {
  return small(rng, -50, 50);
}

template <>
Rational random_element<Rational>(Rng& rng) {
  Rational q(small(rng, -9, 9), small(rng, 1, 7));
  q.canonicalize();
  return q;
}

template <>
GaussianRational random_element<GaussianRational>(Rng& rng) {
  return {random_element<Rational>(rng), random_element<Rational>(rng)};
}

template <>
Polynomial random_element<Polynomial>(Rng& rng) {
  Polynomial p = small(rng);
  const long terms = small(rng, 0, 3);
  for (long t = 0; t < terms; ++t) {
    Polynomial m = small(rng, -3, 3);
    const long vars = small(rng, 1, 2);
    for (long v = 0; v < vars; ++v) m *= Polynomial::variable(small(rng, 1, 3), small(rng, 0, 1) == 1);
    p += m;
  }
  return p;
}

template <class S>
void check_laws(std::uint64_t seed) {
  using T = SemiringTraits<S>;
  Rng rng(seed);
  for (int k = 0; k < 300; ++k) {
    const S a = random_element<S>(rng), b = random_element<S>(rng), c = random_element<S>(rng);
    CHECK(S(a + b) == S(b + a));
    CHECK(S((a + b) + c) == S(a + (b + c)));
    CHECK(S(a * b) == S(b * a));
    CHECK(S((a * b) * c) == S(a * (b * c)));
    CHECK(S(a * (b + c)) == S(a * b + a * c));
    CHECK(S(a + T::zero()) == a);
    CHECK(S(a * T::one()) == a);
    CHECK(T::is_zero(S(a * T::zero())));
    CHECK(T::is_zero(S(a - a)));
    // Involution: additive, multiplicative, unital, of order two.
    CHECK(T::involute(T::involute(a)) == a);
    CHECK(T::involute(S(a + b)) == S(T::involute(a) + T::involute(b)));
    CHECK(T::involute(S(a * b)) == S(T::involute(a) * T::involute(b)));
    CHECK(T::involute(T::one()) == T::one());
    if (T::involution_trivial) CHECK(T::involute(a) == a);
    CHECK(T::parse(T::to_string(a)) == a);
  }
}

Monomial mono(std::initializer_list<std::pair<Variable, std::uint32_t>> vars) { return Monomial(vars); }

}  // namespace

TEST_CASE("semiring laws") {
  check_laws<Integer>(1);
  check_laws<Rational>(2);
  check_laws<GaussianRational>(3);
  check_laws<Polynomial>(4);
}

TEST_CASE("gaussian rationals") {
  const GaussianRational z(1, 2);
  CHECK(z * z.conj() == GaussianRational(5));
  CHECK(GaussianRational::i() * GaussianRational::i() == GaussianRational(-1));
  CHECK(GaussianRational(1) / GaussianRational::i() == GaussianRational(0, -1));
  CHECK(z / z == GaussianRational(1));
  CHECK_THROWS_AS(z / GaussianRational(0), std::domain_error);

  CHECK(to_string(GaussianRational(3)) == "3");
  CHECK(to_string(GaussianRational(Rational(-1, 2))) == "-1/2");
  CHECK(to_string(GaussianRational(0, 2)) == "2i");
  CHECK(to_string(GaussianRational(Rational(1, 2), 3)) == "1/2+3i");
  CHECK(to_string(GaussianRational(1, -1)) == "1-i");
  CHECK(to_string(GaussianRational(0)) == "0");
  CHECK(parse_gaussian("-i") == GaussianRational(0, -1));
  CHECK(parse_gaussian(" 2 - 3i ") == GaussianRational(2, -3));
  CHECK_THROWS_AS(parse_gaussian("2+"), Error);
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK_THROWS_AS(parse_integer("x"), Error);
}

TEST_CASE("polynomial arithmetic") {
  const Polynomial x1 = Polynomial::variable(1), x2 = Polynomial::variable(2);
  const Polynomial xb1 = Polynomial::variable(1, true);

  CHECK((x1 + x2) * (x1 - x2) == x1 * x1 - x2 * x2);
  CHECK(((x1 + 1) * (x1 + 1)).coefficient_of(mono({{{1, false}, 1}})) == 2);
  CHECK(((x1 + 1) * (x1 + 1)).coefficient_of({}) == 1);
  CHECK(((x1 + 1) * (x1 + 1)).total_degree() == 2);
  CHECK((x1 * xb1).involute() == x1 * xb1);
  CHECK((x1 * x1 * x2).involute() == xb1 * xb1 * Polynomial::variable(2, true));
  CHECK((x1 - x1).is_zero());
  CHECK(Polynomial(0).is_zero());
  CHECK((x1 * x2 * 3).coefficient_of(monomial_of({{1, false}, {2, false}})) == 3);
  CHECK((x1 * x2).coefficient_of(monomial_of({{1, false}})) == 0);
  CHECK((x1 * xb1 + x2).variables() == std::vector<Variable>{{1, false}, {1, true}, {2, false}});

  CHECK(to_string(Polynomial::term(monomial_of({{1, false}, {2, true}}), 2) + 1) == "2*X_b1*Xbar_b2 + 1");
  CHECK(to_string(Polynomial(0)) == "0");
  CHECK(to_string(-x1) == "-X_b1");
  CHECK(parse_polynomial("X_b1^2 - 2*X_b1 + 1") == (x1 - 1) * (x1 - 1));
  CHECK(parse_polynomial("Xbar_b3*X_b3") == Polynomial::variable(3) * Polynomial::variable(3, true));
  CHECK_THROWS_AS(parse_polynomial("X_b"), Error);
  CHECK_THROWS_AS(parse_polynomial("2 +"), Error);
}

TEST_CASE("evaluation is a ring homomorphism") {
  const Polynomial x1 = Polynomial::variable(1), xb1 = Polynomial::variable(1, true);
  const EvaluationPoint<GaussianRational> at{{1, GaussianRational(1, 2)}, {2, GaussianRational(3)}};
  CHECK(evaluate(x1 * xb1, at) == GaussianRational(5));
  CHECK(evaluate(x1 - xb1, at) == GaussianRational(0, 4));
  CHECK(evaluate<Integer>(x1 * x1 + 1, {{1, Integer(3)}}) == 10);
  CHECK_THROWS_AS(evaluate<Integer>(Polynomial::variable(7), {{1, Integer(3)}}), Error);

  Rng rng(9);
  for (int k = 0; k < 200; ++k) {
    const Polynomial p = random_element<Polynomial>(rng), q = random_element<Polynomial>(rng);
    EvaluationPoint<GaussianRational> pt;
    for (std::uint32_t v = 1; v <= 3; ++v) pt[v] = random_element<GaussianRational>(rng);
    CHECK(evaluate(p + q, pt) == evaluate(p, pt) + evaluate(q, pt));
    CHECK(evaluate(p * q, pt) == evaluate(p, pt) * evaluate(q, pt));
    CHECK(evaluate(p.involute(), pt) == evaluate(p, pt).conj());
  }
}

TEST_CASE("non-roots") {
  const Polynomial x1 = Polynomial::variable(1), x2 = Polynomial::variable(2);
  const Polynomial xb1 = Polynomial::variable(1, true);

  const auto check_point = [](const Polynomial& p, bool dagger_mode) {
    const auto pt = find_nonroot(p, dagger_mode, 42);
    CHECK_FALSE(evaluate(p, pt).is_zero());
    if (!dagger_mode)
      for (const auto& [v, z] : pt) CHECK(z.is_real());
    return pt;
  };

  check_point(x1 * (x1 - 1) * (x1 - 2) * (x1 + 1), false);
  check_point(x1 * x2 - x2 * x2, false);
  check_point(Polynomial(7), false);
  // Vanishes at every real point, so the search must leave the reals.
  const auto pt = check_point(x1 - xb1, true);
  CHECK_FALSE(pt.at(1).is_real());
  check_point(x1 * xb1 - 1, true);
  CHECK_THROWS_AS(find_nonroot(Polynomial(0), false, 1), Error);
  CHECK(find_nonroot(x1 * x2 - 1, false, 5) == find_nonroot(x1 * x2 - 1, false, 5));
}
