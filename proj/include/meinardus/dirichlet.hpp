#pragma once

// Dirichlet generating functions of the model sequences: zeta special values,
// direct evaluation of D(s) = sum Lambda_k k^-s, the Delta remainder, the
// built-in analytic profiles, and the Euler-Maclaurin form of D_b for the
// log-damped weights.

#include <complex>
#include <cstddef>

#include <boost/multiprecision/cpp_int.hpp>

#include "meinardus/models.hpp"
#include "meinardus/profile.hpp"

namespace meinardus {

struct DirichletValue {
  std::complex<double> s;
  std::complex<double> value;
  double abs_error = 0.0;
};

// B_m as an exact rational, m <= 64 (B_1 = -1/2). Table built once.
const boost::multiprecision::cpp_rational& bernoulli_rational(std::size_t m);
double bernoulli(std::size_t m);

// Riemann zeta on the real line. Euler-Maclaurin for s >= 0 (and s in the
// reflected range), Bernoulli numbers at non-positive integers, the
// functional equation for other s < 0. Throws PoleAtOne at s = 1.
double zeta_real(double s);

// The two independent continuations used to cross-check each other.
double zeta_euler_maclaurin(double s);
double zeta_functional_equation(double s);

// zeta'(0) = -log(2 pi) / 2.
double zeta_prime_zero();

// Partial double sum over b_k xi_j a_k^j (jk)^-s with k, j <= K, with a
// power-law tail estimate in abs_error. Throws NotConvergent when s is not to
// the right of the rightmost pole.
DirichletValue eval_D_direct(const WeightedModel& model, double s, std::size_t K);

// D_b(s) = sum b_k k^-s and D_(xi,a)(s) = sum a^j xi_j j^-s truncated at K with
// the same tail estimate (constant frequency a).
DirichletValue eval_Db_direct(const WeightedModel& model, double s, std::size_t K);
DirichletValue eval_Dxi_direct(const WeightedModel& model, double s, std::size_t K);

// sum_{l=1}^{L} (-1)^l D(-l) tau^l / l!. Throws MissingDeltaCoeffs when the
// profile holds fewer than L coefficients.
std::complex<double> delta_remainder(const AsymptoticProfile& profile, std::complex<double> tau, std::size_t L);

// Analytic profiles of the built-in zeta-factored models.
AsymptoticProfile profile_partitions();
AsymptoticProfile profile_distinct();
// S = (1+z)/(1-z^p), b = 1: D(s) = zeta(s) zeta(s+1) (1 - 2^-s + p^-s).
AsymptoticProfile profile_ratio_kernel(int p);
// b_k = [m | k], S = 1/(1-z): log f(delta) = log P(e^{-m delta}).
AsymptoticProfile profile_indicator_partitions(int m);
// Von Mangoldt weights with S = 1/(1-z): only the pole at s = 1 is kept.
AsymptoticProfile profile_prime_powers_main_term();

// D_b^(1)(s; eps) = sum_{k>=2} k^{-s-1} log^{-eps} k by Euler-Maclaurin from
// k = 2: closed-form integral term, boundary term, and the periodic remainder
// integral over `terms` unit intervals. Valid for s > 0. The +1 bump of the
// Example 3 weights (4^-s zeta(s)) is not included. Throws UnsupportedForm
// for other weight kinds and for s <= 0.
DirichletValue euler_maclaurin_Db(const SequenceSpec& weights, double s, std::size_t terms = 4000);

}  // namespace meinardus
