#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <sstream>

#include "ivopt/interval.hpp"

using ivopt::Interval;

TEST_CASE("construction sorts unordered endpoints") {
  const Interval a(4.0, 2.0);
  CHECK(a.lo() == 2.0);
  CHECK(a.hi() == 4.0);
  CHECK(Interval(3.0, 3.0).degenerate());
  CHECK(Interval() == Interval(0.0, 0.0));
}

TEST_CASE("non-finite endpoints are rejected") {
  CHECK_THROWS_AS(Interval(0.0, std::numeric_limits<double>::infinity()),
                  ivopt::ArithmeticRangeError);
  CHECK_THROWS_AS(Interval(std::nan(""), 1.0), ivopt::ArithmeticRangeError);
}

TEST_CASE("addition") {
  CHECK(add(Interval(2, 4), Interval(1, 3)) == Interval(3, 7));
  CHECK(add(Interval(5, 8), Interval(0, 0)) == Interval(5, 8));
  CHECK(add(Interval(6, 11), Interval(-3, -1)) == Interval(3, 10));
  CHECK_THROWS_AS(add(Interval(1e308, 1e308), Interval(1e308, 1e308)),
                  ivopt::ArithmeticRangeError);
}

TEST_CASE("markov difference") {
  CHECK(markov_sub(Interval(5, 8), Interval(5, 8)) == Interval(0, 0));
  CHECK(markov_sub(Interval(2, 4), Interval(1, 3)) == Interval(1, 1));
  CHECK(markov_sub(Interval(6, 11), Interval(1, 3)) == Interval(5, 8));
}

TEST_CASE("negation") {
  CHECK(negate(Interval(1, 3)) == Interval(-3, -1));
  CHECK(negate(Interval(-3, -2)) == Interval(2, 3));
  CHECK(negate(Interval(2, 8)) == Interval(-8, -2));
  CHECK(-Interval(2, 8) == Interval(-8, -2));
}

TEST_CASE("scalar product") {
  CHECK(scale(-3, Interval(2, 8)) == Interval(-24, -6));
  CHECK(scale(2, Interval(-3, -2)) == Interval(-6, -4));
  CHECK(scale(1, Interval(5, 8)) == Interval(5, 8));
  CHECK(scale(0, Interval(-7, 9)) == Interval(0, 0));
}

TEST_CASE("interval product") {
  CHECK(mul(Interval(1, 2), Interval(-3, 4)) == Interval(-6, 8));
  CHECK(mul(Interval(-2, -1), Interval(-3, -2)) == Interval(2, 6));
  CHECK(Interval(1, 2) * Interval(3, 4) == Interval(3, 8));
}

TEST_CASE("norm and metric") {
  CHECK(norm(Interval(2, 8)) == 8.0);
  CHECK(norm(Interval(-3, -2)) == 3.0);
  CHECK(norm(Interval(0, 0)) == 0.0);
  CHECK(metric(Interval(5, 8), Interval(5, 8)) == 0.0);
  CHECK(metric(Interval(2, 4), Interval(1, 3)) == 1.0);
  CHECK(metric(Interval(-3, 2), Interval(0, 0)) == 3.0);
}

TEST_CASE("order relations") {
  CHECK(strictly_precedes(Interval(-30, -10), Interval(0, 0)));
  CHECK_FALSE(strictly_precedes(Interval(5, 8), Interval(5, 9)));
  CHECK(strictly_precedes(Interval(-2.63791, -1.06984),
                          Interval(-1.90307, -0.77751)));
  CHECK(precedes(Interval(5, 8), Interval(5, 9)));
  CHECK_FALSE(precedes(Interval(5, 8), Interval(5, 8)));
  CHECK(precedes(Interval(-2.69162, -1.17016), Interval(-2.69151, -1.16687)));
}

TEST_CASE("zero membership") {
  CHECK(zero_in_interior(Interval(-0.65506, 0.56692)));
  CHECK_FALSE(zero_in_interior(Interval(2, 8)));
  CHECK_FALSE(zero_in_closure(Interval(2, 8)));
  CHECK_FALSE(zero_in_interior(Interval(0, 3)));
  CHECK(zero_in_closure(Interval(0, 3)));
  // the tolerance keeps sub-tau noise from flipping the interior test
  CHECK_FALSE(zero_in_interior(Interval(-1e-12, 1.0)));
  CHECK(zero_in_interior(Interval(-1e-6, 1e-6)));
}

TEST_CASE("hull and containment") {
  CHECK(hull(Interval(0, 1), Interval(2, 3)) == Interval(0, 3));
  CHECK(contains(Interval(0, 3), Interval(1, 2)));
  CHECK_FALSE(contains(Interval(0, 3), Interval(1, 4)));
  CHECK(contains(Interval(0, 3), Interval(1, 3.5), 0.6));
}

TEST_CASE("text round trip") {
  CHECK(ivopt::parse_interval("[2,4]") == Interval(2, 4));
  CHECK(ivopt::parse_interval(" [ -1.5 , 2.25 ] ") == Interval(-1.5, 2.25));
  CHECK(ivopt::parse_interval("[3,-3]") == Interval(-3, 3));
  CHECK_THROWS_AS(ivopt::parse_interval("[1;2]"), ivopt::ParseError);
  CHECK_THROWS_AS(ivopt::parse_interval("[1,2] junk"), ivopt::ParseError);

  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-1e6, 1e6);
  for (int i = 0; i < 200; ++i) {
    const Interval a(u(rng), u(rng));
    CHECK(ivopt::parse_interval(ivopt::to_string(a)) == a);
  }
}

TEST_CASE("stream output") {
  std::ostringstream os;
  os << Interval(1, 2);
  CHECK(os.str() == "[1,2]");
}

TEST_CASE("markov identities hold exactly") {
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> u(-1e3, 1e3);
  for (int i = 0; i < 2000; ++i) {
    const Interval a(u(rng), u(rng));
    CHECK(markov_sub(a, a) == Interval(0, 0));
    CHECK(markov_sub(Interval(0, 0), a) == negate(a));
    CHECK(negate(a) == scale(-1.0, a));
  }
}

TEST_CASE("strict order matches the markov sign test") {
  std::mt19937_64 rng(43);
  std::uniform_real_distribution<double> u(-10, 10);
  std::bernoulli_distribution share(0.25);
  for (int i = 0; i < 2000; ++i) {
    const Interval a(u(rng), u(rng));
    // shared endpoints exercise the boundary of the equivalence
    Interval b = share(rng) ? Interval(a.lo(), u(rng)) : Interval(u(rng), u(rng));
    CHECK(strictly_precedes(a, b) ==
          strictly_precedes(markov_sub(a, b), Interval(0, 0)));
    const Interval m = markov_sub(a, b);
    CHECK(m.lo() <= m.hi());
  }
}

TEST_CASE("metric against the null interval is the norm") {
  std::mt19937_64 rng(44);
  std::uniform_real_distribution<double> u(-100, 100);
  for (int i = 0; i < 1000; ++i) {
    const Interval a(u(rng), u(rng));
    CHECK(metric(a, Interval(0, 0)) == norm(a));
  }
}

TEST_CASE("scaling composes") {
  std::mt19937_64 rng(45);
  std::uniform_real_distribution<double> u(-10, 10);
  for (int i = 0; i < 1000; ++i) {
    const Interval a(u(rng), u(rng));
    const double c = u(rng), k = u(rng);
    const Interval lhs = scale(c, scale(k, a));
    const Interval rhs = scale(c * k, a);
    CHECK(lhs.lo() == doctest::Approx(rhs.lo()).epsilon(1e-9));
    CHECK(lhs.hi() == doctest::Approx(rhs.hi()).epsilon(1e-9));
  }
}
