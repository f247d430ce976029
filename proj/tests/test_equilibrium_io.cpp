#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "vplin/equilibrium_io.hpp"

using namespace vplin;

TEST_SUITE_BEGIN("equilibrium_io");

TEST_CASE("parses the built-in kinds") {
  CHECK(parse_equilibrium(R"({"kind": "maxwellian"})").kind() ==
        Kind::Maxwellian);
  const auto gp = parse_equilibrium(R"({"kind": {"generalized_poisson": 3}})");
  CHECK(gp.kind() == Kind::GeneralizedPoisson);
  CHECK(gp.j() == 3);
}

TEST_CASE("rejects malformed input") {
  CHECK_THROWS_AS(parse_equilibrium("not json"), DomainError);
  CHECK_THROWS_AS(parse_equilibrium(R"({"no_kind": 1})"), DomainError);
  CHECK_THROWS_AS(parse_equilibrium(R"({"kind": "unknown"})"), DomainError);
  CHECK_THROWS_AS(parse_equilibrium(R"({"kind": "custom"})"), DomainError);
}

TEST_CASE("custom equilibrium loads a table and stays on the real axis") {
  const std::string csv = "/tmp/vplin_test_table.csv";
  {
    std::ofstream out(csv);
    out << "# r,m0\n";
    for (int i = 0; i <= 400; ++i) {
      const double r = i * 0.05;
      out << r << "," << 0.5 * std::exp(-r) << "\n";
    }
  }
  const auto eq = parse_equilibrium(
      R"({"kind": "custom", "theta": 0.3, "d": 5, "data": ")" + csv + R"("})");
  CHECK(eq.kind() == Kind::Custom);
  CHECK(eq.theta() == doctest::Approx(0.3));
  CHECK(eq.decay_order() == doctest::Approx(5.0));
  CHECK(std::abs(eq.m0(Complex(1.0, 0.0)).real() - 0.5 * std::exp(-1.0)) <
        1e-3);
  CHECK(std::abs(eq.m0(Complex(-1.0, 0.0)) - eq.m0(Complex(1.0, 0.0))) <
        1e-15);
  CHECK_THROWS_AS(eq.m0(Complex(0.5, 0.05)), DomainError);
  std::remove(csv.c_str());
}

TEST_CASE("missing files are reported") {
  CHECK_THROWS_AS(load_equilibrium("/nonexistent/eq.json"), DomainError);
}

TEST_SUITE_END();
