#include <doctest.h>

#include <cmath>

#include "meinardus/dirichlet.hpp"
#include "meinardus/error.hpp"

using namespace meinardus;

namespace {

const double kPi = 3.14159265358979323846;

// Plain partial sum with an integral tail bound, for s > 1.
double zeta_oracle(double s) {
  const int N = 200000;
  double sum = 0.0;
  for (int k = N; k >= 1; --k) sum += std::pow(k, -s);
  // int_N^inf x^-s dx - f(N)/2 approximates the tail to O(N^-s-1)
  return sum + std::pow(N, 1.0 - s) / (s - 1.0) - 0.5 * std::pow(N, -s);
}

}  // namespace

TEST_CASE("Bernoulli numbers") {
  CHECK(bernoulli(0) == 1.0);
  CHECK(bernoulli(1) == -0.5);
  CHECK(bernoulli(2) == doctest::Approx(1.0 / 6.0));
  CHECK(bernoulli(3) == 0.0);
  CHECK(bernoulli(12) == doctest::Approx(-691.0 / 2730.0));
  CHECK(bernoulli_rational(20) == boost::multiprecision::cpp_rational(-174611, 330));
  CHECK_THROWS_AS(bernoulli(65), Error);
}

TEST_CASE("zeta special values") {
  CHECK(zeta_real(2.0) == doctest::Approx(kPi * kPi / 6.0).epsilon(1e-15));
  CHECK(zeta_real(2.0) == doctest::Approx(zeta_oracle(2.0)).epsilon(1e-12));
  CHECK(zeta_real(3.0) == doctest::Approx(zeta_oracle(3.0)).epsilon(1e-12));
  CHECK(zeta_real(0.0) == -0.5);
  CHECK(zeta_real(-1.0) == doctest::Approx(-1.0 / 12.0).epsilon(1e-15));
  CHECK(zeta_real(-2.0) == 0.0);
  CHECK(zeta_real(-3.0) == doctest::Approx(1.0 / 120.0).epsilon(1e-15));
  CHECK(zeta_real(0.5) == doctest::Approx(-1.4603545088095868).epsilon(1e-14));
  CHECK(zeta_prime_zero() == doctest::Approx(-0.5 * std::log(2.0 * kPi)));
  try {
    zeta_real(1.0);
    FAIL("expected PoleAtOne");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::PoleAtOne);
  }
}

TEST_CASE("functional equation agrees with Euler-Maclaurin continuation") {
  for (double s : {-0.5, -1.5, -2.5}) {
    CAPTURE(s);
    CHECK(std::fabs(zeta_functional_equation(s) - zeta_euler_maclaurin(s)) < 1e-15);
  }
  // integer points through both paths
  for (double s : {-1.0, -3.0, -5.0}) CHECK(std::fabs(zeta_euler_maclaurin(s) - zeta_real(s)) < 1e-12);
}

TEST_CASE("eval_D_direct examples") {
  auto p = builtin("partitions");
  auto v = eval_D_direct(p, 2.0, 2000);
  const double target = zeta_real(2.0) * zeta_real(3.0);
  CHECK(std::fabs(v.value.real() - target) <= v.abs_error);
  CHECK(v.abs_error < 1e-2);
  CHECK(target == doctest::Approx(1.9773043502972961).epsilon(1e-14));

  auto d = builtin("distinct");
  auto w = eval_D_direct(d, 2.0, 2000);
  const double dtarget = zeta_real(2.0) * (1.0 - 0.25) * zeta_real(3.0);
  CHECK(std::fabs(w.value.real() - dtarget) <= w.abs_error);

  CHECK(eval_D_direct(builtin("empty-weights"), 2.0, 100).value == std::complex<double>(0.0, 0.0));
  CHECK_THROWS_AS(eval_D_direct(p, 1.0, 100), Error);
}

TEST_CASE("factorization D = D_b D_xi") {
  for (const char* name : {"partitions", "distinct"}) {
    auto m = builtin(name);
    const double rho = m.growth_exponent();
    for (double s : {rho + 0.5, rho + 1.0, rho + 2.0}) {
      CAPTURE(name);
      CAPTURE(s);
      auto D = eval_D_direct(m, s, 1500);
      auto Db = eval_Db_direct(m, s, 1500);
      auto Dx = eval_Dxi_direct(m, s, 1500);
      const double prod = Db.value.real() * Dx.value.real();
      const double err = D.abs_error + Db.abs_error * std::fabs(Dx.value.real()) + Dx.abs_error * std::fabs(Db.value.real());
      CHECK(std::fabs(D.value.real() - prod) <= err);
    }
  }
}

TEST_CASE("delta remainder") {
  auto p = profile_partitions();
  const double d = 0.1;
  CHECK(delta_remainder(p, d, 1).real() == doctest::Approx(-d / 24.0).epsilon(1e-14));
  CHECK(delta_remainder(p, 0.0, 4) == std::complex<double>(0.0, 0.0));
  CHECK(p.delta_coeffs[1] == 0.0);
  CHECK(delta_remainder(p, d, 2).real() == doctest::Approx(-d / 24.0).epsilon(1e-14));
  CHECK_THROWS_AS(delta_remainder(p, d, 20), Error);
  double prev = 1.0;
  for (double x = 0.1; x > 1e-4; x /= 2) {
    const double v = std::abs(delta_remainder(p, x, 8));
    CHECK(v < prev);
    prev = v;
  }
}

TEST_CASE("profiles") {
  auto p = profile_partitions();
  CHECK(p.h_r() == doctest::Approx(zeta_real(2.0)));
  CHECK(p.delta_coeffs[0] == doctest::Approx(1.0 / 24.0));
  CHECK(p.delta_coeffs[2] == 0.0);
  CHECK(p.A0 == -0.5);
  CHECK(p.h0 == doctest::Approx(-0.5 * std::log(2.0 * kPi)));
  auto q = profile_distinct();
  CHECK(q.delta_coeffs[0] == doctest::Approx(-1.0 / 24.0));
  CHECK(q.h_r() == doctest::Approx(zeta_real(2.0) / 2.0));
  auto r = profile_ratio_kernel(3);
  CHECK(r.delta_coeffs[0] == doctest::Approx(2.0 / 24.0));
  for (auto* prof : {&p, &q, &r}) CHECK_NOTHROW(prof->validate());
}

TEST_CASE("Euler-Maclaurin form of D_b") {
  auto w = builtin("example3(0.5)").weights;
  double direct = 0.0;
  const int N = 2000000;
  for (int k = N; k >= 2; --k) direct += std::pow(k, -2.0) / std::sqrt(std::log(k));
  // tail: int_N^inf x^-2 log^-1/2 x dx < N^-1 log^-1/2 N
  const double tail = 1.0 / (N * std::sqrt(std::log(N)));
  auto v = euler_maclaurin_Db(w, 1.0);
  CHECK(std::fabs(v.value.real() - (direct + tail)) < 1e-8);

  double prev = 1e300;
  for (double s : {0.1, 0.01, 0.001, 0.0001}) {
    const double sq = s * euler_maclaurin_Db(w, s).value.real();
    CHECK(sq > 0.0);
    CHECK(sq < prev);
    prev = sq;
  }
  CHECK(prev < 0.02);

  auto v2 = euler_maclaurin_Db(w, 2.0);
  CHECK(v2.value.real() > 0.0);
  CHECK(std::isfinite(v2.value.real()));
  CHECK_THROWS_AS(euler_maclaurin_Db(builtin("partitions").weights, 1.0), Error);
}
