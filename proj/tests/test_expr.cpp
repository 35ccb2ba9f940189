#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <string>
#include <vector>

#include "pi3geo/expr.hpp"

using namespace pi3;

namespace {

struct Caught {
  Errc code = Errc::invalid_params;
  std::ptrdiff_t offset = -2;
  std::string message;
};

template <typename Fn>
Caught catch_error(Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return {e.code(), e.offset(), e.what()};
  }
  FAIL("expected an Error");
  return {};
}

ExprAst parse1(const std::string& text) { return ExprAst::parse(text, {"x"}); }

}  // namespace

TEST_CASE("literals, constants and arithmetic") {
  CHECK(ExprAst::parse("1 + 2", {}).value_at(0.0) == 3.0);
  CHECK(ExprAst::parse("2+3*4", {}).value_at(0.0) == 14.0);
  CHECK(ExprAst::parse("(2+3)*4", {}).value_at(0.0) == 20.0);
  CHECK(ExprAst::parse("2-3-4", {}).value_at(0.0) == -5.0);
  CHECK(ExprAst::parse("12/3/2", {}).value_at(0.0) == 2.0);
  CHECK(ExprAst::parse("2*3^2", {}).value_at(0.0) == 18.0);
  CHECK(ExprAst::parse("2*-3", {}).value_at(0.0) == -6.0);
  CHECK(ExprAst::parse("1e-3", {}).value_at(0.0) == 1e-3);
  CHECK(ExprAst::parse(".5", {}).value_at(0.0) == 0.5);
  CHECK(ExprAst::parse("2.5e2", {}).value_at(0.0) == 250.0);
  CHECK(ExprAst::parse("pi", {}).value_at(0.0) ==
        doctest::Approx(3.14159265358979323846).epsilon(1e-15));
  CHECK(ExprAst::parse("e", {}).value_at(0.0) ==
        doctest::Approx(std::exp(1.0)).epsilon(1e-15));
}

TEST_CASE("variables and simple jets") {
  const ExprAst f = parse1("2*x + 3");
  CHECK(f.value_at(2.0) == 7.0);
  const Jet1 j = f.eval_jet1(2.0);
  CHECK(j.d1 == 2.0);
  CHECK(j.d2 == 0.0);
  CHECK(j.d3 == 0.0);
}

TEST_CASE("powers take a single numeric exponent") {
  const Jet1 j = parse1("x^2").eval_jet1(3.0);
  CHECK(j.value == 9.0);
  CHECK(j.d1 == 6.0);
  CHECK(j.d2 == 2.0);
  CHECK(j.d3 == 0.0);
  CHECK(catch_error([] { parse1("x^2^3"); }).code == Errc::syntax_error);
  CHECK(catch_error([] { parse1("x^-2"); }).code == Errc::syntax_error);
  CHECK(catch_error([] { parse1("x^y"); }).code == Errc::syntax_error);
}

TEST_CASE("unary minus binds looser than the exponent") {
  CHECK(parse1("-x^2").value_at(3.0) == -9.0);
}

TEST_CASE("function values match the standard library") {
  // volatile keeps the compiler from constant-folding the reference calls
  // with its own (differently rounded) compile-time math.
  volatile double xv = 0.7;
  const double x = xv;
  CHECK(parse1("sinh(x)").value_at(x) == std::sinh(x));
  CHECK(parse1("cosh(x)").value_at(x) == std::cosh(x));
  CHECK(parse1("tanh(x)").value_at(x) == std::tanh(x));
  CHECK(parse1("sin(x)").value_at(x) == std::sin(x));
  CHECK(parse1("cos(x)").value_at(x) == std::cos(x));
  CHECK(parse1("exp(x)").value_at(x) == std::exp(x));
  CHECK(parse1("ln(x)").value_at(x) == std::log(x));
  CHECK(parse1("sqrt(x)").value_at(x) == std::sqrt(x));
  CHECK(parse1("abs(x)").value_at(-0.25) == 0.25);
  CHECK(parse1("asin(x)").value_at(0.5) ==
        doctest::Approx(0.5235987755982989).epsilon(1e-15));
}

TEST_CASE("trig derivative chain through third order") {
  const double x = 0.7;
  const Jet1 j = parse1("sin(x)").eval_jet1(x);
  CHECK(j.d1 == doctest::Approx(std::cos(x)).epsilon(1e-15));
  CHECK(j.d2 == doctest::Approx(-std::sin(x)).epsilon(1e-15));
  CHECK(j.d3 == doctest::Approx(-std::cos(x)).epsilon(1e-15));
}

TEST_CASE("composition derivatives (chain rule through third order)") {
  const double x = 0.6;
  const Jet1 j = parse1("sin(x^2)").eval_jet1(x);
  const double s = std::sin(x * x), c = std::cos(x * x);
  CHECK(j.value == doctest::Approx(s).epsilon(1e-15));
  CHECK(j.d1 == doctest::Approx(2 * x * c).epsilon(1e-14));
  CHECK(j.d2 == doctest::Approx(2 * c - 4 * x * x * s).epsilon(1e-14));
  CHECK(j.d3 ==
        doctest::Approx(-12 * x * s - 8 * x * x * x * c).epsilon(1e-13));
}

TEST_CASE("eval_jet1 truncation order") {
  const ExprAst f = parse1("x^3");
  const Jet1 j1 = f.eval_jet1(2.0, 1);
  CHECK(j1.value == 8.0);
  CHECK(j1.d1 == 12.0);
  CHECK(j1.d2 == 0.0);
  CHECK(j1.d3 == 0.0);
  const Jet1 j2 = f.eval_jet1(2.0, 2);
  CHECK(j2.d2 == 12.0);
  CHECK(j2.d3 == 0.0);
  CHECK(catch_error([&] { f.eval_jet1(2.0, 0); }).code == Errc::invalid_params);
  CHECK(catch_error([&] { f.eval_jet1(2.0, 4); }).code == Errc::invalid_params);
}

TEST_CASE("bivariate jets") {
  const ExprAst f = ExprAst::parse("x^2*y + sin(x*y)", {"x", "y"});
  const double x = 0.7, y = -0.4;
  const Jet2 j = f.eval_jet2(x, y);
  const double c = std::cos(x * y), s = std::sin(x * y);
  CHECK(j.value == doctest::Approx(x * x * y + s).epsilon(1e-14));
  CHECK(j.du == doctest::Approx(2 * x * y + y * c).epsilon(1e-14));
  CHECK(j.dv == doctest::Approx(x * x + x * c).epsilon(1e-14));
  CHECK(j.duu == doctest::Approx(2 * y - y * y * s).epsilon(1e-14));
  CHECK(j.duv ==
        doctest::Approx(2 * x + c - x * y * s).epsilon(1e-14));
  CHECK(j.dvv == doctest::Approx(-x * x * s).epsilon(1e-14));
}

TEST_CASE("syntax errors report byte offsets") {
  const Caught tail = catch_error([] { parse1("x*-"); });
  CHECK(tail.code == Errc::syntax_error);
  CHECK(tail.offset == 2);

  const Caught open = catch_error([] { parse1("(1+2"); });
  CHECK(open.code == Errc::syntax_error);
  CHECK(open.offset == 3);

  CHECK(catch_error([] { parse1(""); }).code == Errc::syntax_error);
  CHECK(catch_error([] { parse1("   "); }).code == Errc::syntax_error);
  CHECK(catch_error([] { parse1("1 + * 2"); }).code == Errc::syntax_error);
}

TEST_CASE("identifier errors") {
  CHECK(catch_error([] { parse1("foo(2)"); }).code == Errc::unknown_identifier);
  CHECK(catch_error([] { parse1("y + 1"); }).code == Errc::unknown_identifier);
  CHECK(catch_error([] { parse1("sinh"); }).code == Errc::arity_error);
  CHECK(catch_error([] { parse1("sinh + 1"); }).code == Errc::arity_error);
  CHECK(catch_error([] { parse1("pi(2)"); }).code == Errc::arity_error);
  CHECK(catch_error([] { parse1("x(2)"); }).code == Errc::arity_error);
}

TEST_CASE("declared variable lists are validated") {
  CHECK(catch_error([] { ExprAst::parse("x", {"x", "x"}); }).code ==
        Errc::invalid_params);
  CHECK(catch_error([] {
          ExprAst::parse("x+y+z", {"x", "y", "z"}).eval_jet2(0, 0);
        }).code == Errc::invalid_params);
}

TEST_CASE("evaluation domain errors carry the node offset") {
  const Caught ln0 = catch_error([] { parse1("1 + ln(x)").value_at(0.0); });
  CHECK(ln0.code == Errc::domain_error);
  CHECK(ln0.offset == 4);
  CHECK(catch_error([] { parse1("sqrt(x)").value_at(-1.0); }).code ==
        Errc::domain_error);
  CHECK(catch_error([] { parse1("asin(x)").value_at(1.5); }).code ==
        Errc::domain_error);
  CHECK(catch_error([] { parse1("abs(x)").eval_jet1(0.0).d1; }).code ==
        Errc::domain_error);
  CHECK(catch_error([] { parse1("1/x").value_at(0.0); }).code ==
        Errc::domain_error);
}

TEST_CASE("overflow is reported as a non-finite result") {
  CHECK(catch_error([] { parse1("exp(x)").value_at(1000.0); }).code ==
        Errc::non_finite);
}

TEST_CASE("to_string round trips through the parser") {
  const std::vector<std::string> sources = {
      "x^2 + 3*x - 1", "sin(x)*cosh(2*x)", "-x^3/(1+x^2)", "sqrt(x+2)",
      "2*pi*x"};
  for (const std::string& src : sources) {
    const ExprAst f = parse1(src);
    const ExprAst g = parse1(f.to_string());
    for (double x : {-0.8, -0.1, 0.4, 1.3}) {
      CHECK(g.value_at(x) == doctest::Approx(f.value_at(x)).epsilon(1e-15));
    }
  }
}

TEST_CASE("dump names node kinds and offsets") {
  const std::string d = parse1("x + 1").dump();
  CHECK(d.find("binary") != std::string::npos);
  CHECK(d.find("variable") != std::string::npos);
  CHECK(d.find("constant") != std::string::npos);
}

TEST_CASE("programmatic construction mirrors parsing") {
  const ExprAst x = ExprAst::variable("x");
  const ExprAst f = pow(x, 2.0) + ExprAst::constant(3.0) * x;
  CHECK(f.value_at(2.0) == 10.0);
  CHECK(sin(x).value_at(0.3) == std::sin(0.3));
  const ExprAst quotient = ExprAst::constant(1.0) / x;
  CHECK(quotient.value_at(4.0) == 0.25);
  CHECK((-x).value_at(2.5) == -2.5);
  CHECK(pow(x, -2.0).value_at(2.0) == 0.25);
}

TEST_CASE("variables merge across programmatic subexpressions") {
  const ExprAst u = ExprAst::variable("u");
  const ExprAst v = ExprAst::variable("v");
  const ExprAst f = u * v + sin(u);
  REQUIRE(f.vars().size() == 2);
  CHECK(f.vars()[0] == "u");
  CHECK(f.vars()[1] == "v");
  const Jet2 j = f.eval_jet2(0.5, 2.0);
  CHECK(j.value == doctest::Approx(1.0 + std::sin(0.5)).epsilon(1e-15));
  CHECK(j.duv == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("substitute replaces a variable with an expression") {
  const ExprAst f = ExprAst::parse("x + y^2", {"x", "y"});
  const ExprAst g = f.substitute("y", parse1("sin(x)"));
  REQUIRE(g.vars().size() == 1);
  const double x = 0.8;
  CHECK(g.value_at(x) ==
        doctest::Approx(x + std::sin(x) * std::sin(x)).epsilon(1e-15));
  CHECK(catch_error([&] { f.substitute("q", parse1("x")); }).code ==
        Errc::invalid_params);
}

TEST_CASE("empty expressions refuse to evaluate") {
  const ExprAst empty;
  CHECK(empty.empty());
  CHECK(catch_error([&] { empty.value_at(0.0); }).code == Errc::invalid_params);
}
