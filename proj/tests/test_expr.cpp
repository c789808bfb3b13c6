#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ivopt/errors.hpp"
#include "ivopt/function.hpp"

using ivopt::Interval;
using ivopt::IVExpr;
using ivopt::parse_ivexpr;
using ivopt::RealExpr;

namespace {

Eigen::Vector2d pt(double a, double b) { return Eigen::Vector2d(a, b); }

// Random expression tree for round-trip checks.
RealExpr random_expr(std::mt19937_64& rng, int depth) {
  std::uniform_int_distribution<int> pick(0, depth <= 0 ? 1 : 7);
  std::uniform_real_distribution<double> num(-4.0, 4.0);
  std::uniform_int_distribution<int> var(0, 1);
  std::uniform_int_distribution<int> expo(0, 4);
  switch (pick(rng)) {
    case 0: return RealExpr::constant(num(rng));
    case 1: return RealExpr::variable(var(rng));
    case 2: return RealExpr::add(random_expr(rng, depth - 1),
                                 random_expr(rng, depth - 1));
    case 3: return RealExpr::sub(random_expr(rng, depth - 1),
                                 random_expr(rng, depth - 1));
    case 4: return RealExpr::mul(random_expr(rng, depth - 1),
                                 random_expr(rng, depth - 1));
    case 5: return RealExpr::neg(random_expr(rng, depth - 1));
    case 6: return RealExpr::pow(random_expr(rng, depth - 1), expo(rng));
    default: {
      std::uniform_int_distribution<int> f(0, 2);
      const int which = f(rng);
      const RealExpr::Fn fn = which == 0   ? RealExpr::Fn::Exp
                              : which == 1 ? RealExpr::Fn::Sin
                                           : RealExpr::Fn::Cos;
      return RealExpr::call(fn, random_expr(rng, depth - 1));
    }
  }
}

}  // namespace

TEST_CASE("example expression parses to five terms") {
  const IVExpr e = parse_ivexpr(
      "[2,4]*x1^2 + [2,3]*x1*x2 + [1,2]*x2^2 + [1,2]*x1 -M [1,3]*x2", 2);
  REQUIRE(e.terms().size() == 5);
  CHECK_FALSE(e.terms()[0].markov);
  CHECK_FALSE(e.terms()[3].markov);
  CHECK(e.terms()[4].markov);
  CHECK(e.terms()[0].coeff == Interval(2, 4));
  CHECK(e.terms()[4].coeff == Interval(1, 3));
  CHECK(e.dim() == 2);
}

TEST_CASE("single term and coefficient normalization") {
  const IVExpr one = parse_ivexpr("[1,1]*x1", 1);
  CHECK(one.terms().size() == 1);
  CHECK(one.terms()[0].coeff.degenerate());

  const IVExpr sorted = parse_ivexpr("[3,-3]*x1", 1);
  CHECK(sorted.terms()[0].coeff == Interval(-3, 3));
}

TEST_CASE("star between coefficient and basis is optional") {
  const IVExpr a = parse_ivexpr("[2,4]x1^2", 2);
  const IVExpr b = parse_ivexpr("[2,4]*x1^2", 2);
  CHECK(a == b);
}

TEST_CASE("bare interval term gets the unit basis") {
  const IVExpr e = parse_ivexpr("[1,2] + [3,4]*x1", 1);
  REQUIRE(e.terms().size() == 2);
  const Interval v = ivopt::evaluate(ivopt::IVFunction(e),
                                     Eigen::VectorXd::Zero(1));
  CHECK(v == Interval(1, 2));
}

TEST_CASE("real expressions evaluate correctly") {
  const IVExpr e =
      parse_ivexpr("[1,1]*(2*x1 + 1 - x2^2)*x2 + [1,1]*exp(x1)*sin(x2)", 2);
  const ivopt::IVFunction f(e);
  const double x1 = 0.3, x2 = -1.2;
  const double expected =
      (2 * x1 + 1 - x2 * x2) * x2 + std::exp(x1) * std::sin(x2);
  const Interval v = ivopt::evaluate(f, pt(x1, x2));
  CHECK(v.lo() == doctest::Approx(expected).epsilon(1e-14));
  CHECK(v.degenerate());
}

TEST_CASE("unary minus binds below power") {
  const IVExpr e = parse_ivexpr("[1,1]*-x1^2", 1);
  Eigen::VectorXd x(1);
  x << 3.0;
  CHECK(ivopt::evaluate(ivopt::IVFunction(e), x).lo() ==
        doctest::Approx(-9.0));
}

TEST_CASE("plus followed by a bracket starts a new term") {
  // "x1 + 1" stays inside the basis; "+ [.." does not.
  const IVExpr e = parse_ivexpr("[1,1]*x1 + 1 + [2,2]*x2", 2);
  REQUIRE(e.terms().size() == 2);
  const Interval v = ivopt::evaluate(ivopt::IVFunction(e), pt(5, 7));
  CHECK(v.lo() == doctest::Approx(5 + 1 + 14));
}

TEST_CASE("parse errors carry a position") {
  CHECK_THROWS_AS(parse_ivexpr("[1,2]*x3", 2), ivopt::ParseError);
  CHECK_THROWS_AS(parse_ivexpr("[1,2]*x1 @", 2), ivopt::ParseError);
  CHECK_THROWS_AS(parse_ivexpr("[1,2]*x1 - [1,2]*x2", 2), ivopt::ParseError);
  CHECK_THROWS_AS(parse_ivexpr("x1 + x2", 2), ivopt::ParseError);
  CHECK_THROWS_AS(parse_ivexpr("[1,2]*x1^1.5", 2), ivopt::ParseError);
  CHECK_THROWS_AS(parse_ivexpr("[1,2]*x1^-2", 2), ivopt::ParseError);
  CHECK_THROWS_AS(parse_ivexpr("-M [1,2]*x1", 1), ivopt::ParseError);
  try {
    parse_ivexpr("[1,2]*x1 + [1,2]*zz", 2);
    CHECK(false);
  } catch (const ivopt::ParseError& e) {
    CHECK(e.position == 17);
  }
}

TEST_CASE("markov minus is not coefficient negation") {
  const ivopt::IVFunction markov(parse_ivexpr("[0,4]*x1 -M [0,1]*x1", 1));
  const ivopt::IVFunction negated(parse_ivexpr("[0,4]*x1 + [-1,0]*x1", 1));
  Eigen::VectorXd x(1);
  x << 1.0;
  CHECK(ivopt::evaluate(markov, x) == Interval(0, 3));
  CHECK(ivopt::evaluate(negated, x) == Interval(-1, 4));
}

TEST_CASE("gradient matches finite differences") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-1.5, 1.5);
  int checked = 0;
  while (checked < 50) {
    const RealExpr e = random_expr(rng, 3);
    Eigen::Vector2d x(u(rng), u(rng));
    const double plain = e.value(x);
    if (!std::isfinite(plain) || std::abs(plain) > 1e6) continue;  // exp blowup
    Eigen::VectorXd g;
    const double v = e.value_and_gradient(x, g);
    CHECK(v == doctest::Approx(plain));
    for (int i = 0; i < 2; ++i) {
      const double h = 1e-6;
      Eigen::Vector2d xp = x, xm = x;
      xp[i] += h;
      xm[i] -= h;
      const double fd = (e.value(xp) - e.value(xm)) / (2 * h);
      if (std::isfinite(fd) && std::abs(fd) < 1e6)
        CHECK(g[i] == doctest::Approx(fd).epsilon(1e-4).scale(1 + std::abs(fd)));
    }
    ++checked;
  }
}

TEST_CASE("print-parse round trip on a generated corpus") {
  std::mt19937_64 rng(12);
  int checked = 0;
  while (checked < 50) {
    std::vector<ivopt::IVTerm> terms;
    std::uniform_int_distribution<int> nterms(1, 4);
    std::uniform_real_distribution<double> c(-3.0, 3.0);
    std::bernoulli_distribution markov(0.4);
    const int n = nterms(rng);
    for (int i = 0; i < n; ++i) {
      ivopt::IVTerm t;
      t.markov = i > 0 && markov(rng);
      t.coeff = Interval(c(rng), c(rng));
      t.basis = random_expr(rng, 2);
      terms.push_back(std::move(t));
    }
    const IVExpr e(std::move(terms), 2);
    const std::string printed = e.str();
    const IVExpr reparsed = parse_ivexpr(printed, 2);
    CHECK(reparsed == e);
    CHECK(reparsed.str() == printed);
    ++checked;
  }

  const std::string example =
      "[2,4]*x1^2 + [2,3]*x1*x2 + [1,2]*x2^2 + [1,2]*x1 -M [1,3]*x2";
  const IVExpr e = parse_ivexpr(example, 2);
  CHECK(parse_ivexpr(e.str(), 2) == e);
}
