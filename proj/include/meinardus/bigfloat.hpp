#pragma once

// Thin value-semantic wrapper around an MPFR variable.
//
// Every BigFloat carries its own precision; arithmetic results take the larger
// precision of the two operands. There is no global default precision, so
// values computed at different precisions can live side by side in different
// threads.

#include <mpfr.h>

#include <compare>
#include <cstdint>
#include <string>
#include <utility>

namespace meinardus {

class BigFloat {
 public:
  static constexpr unsigned kDefaultBits = 256;

  BigFloat() : BigFloat(0.0, kDefaultBits) {}

  BigFloat(double value, unsigned bits) {
    mpfr_init2(v_, static_cast<mpfr_prec_t>(bits));
    mpfr_set_d(v_, value, MPFR_RNDN);
  }

  static BigFloat from_int(long value, unsigned bits) {
    BigFloat r(bits, Uninit{});
    mpfr_set_si(r.v_, value, MPFR_RNDN);
    return r;
  }

  static BigFloat from_uint(std::uint64_t value, unsigned bits) {
    BigFloat r(bits, Uninit{});
    mpfr_set_ui(r.v_, static_cast<unsigned long>(value), MPFR_RNDN);
    return r;
  }

  // Exact rational p/q rounded once.
  static BigFloat ratio(long p, long q, unsigned bits) {
    BigFloat r = from_int(p, bits);
    mpfr_div_si(r.v_, r.v_, q, MPFR_RNDN);
    return r;
  }

  static BigFloat from_string(const std::string& s, unsigned bits) {
    BigFloat r(bits, Uninit{});
    mpfr_set_str(r.v_, s.c_str(), 10, MPFR_RNDN);
    return r;
  }

  BigFloat(const BigFloat& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }

  BigFloat(BigFloat&& o) noexcept {
    // MPFR has no move primitive; swap with a minimal-precision placeholder.
    mpfr_init2(v_, MPFR_PREC_MIN);
    mpfr_swap(v_, o.v_);
  }

  BigFloat& operator=(const BigFloat& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }

  BigFloat& operator=(BigFloat&& o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
  }

  ~BigFloat() { mpfr_clear(v_); }

  unsigned bits() const { return static_cast<unsigned>(mpfr_get_prec(v_)); }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  long double to_long_double() const { return mpfr_get_ld(v_, MPFR_RNDN); }

  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_finite() const { return mpfr_number_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }

  // Binary exponent e with |x| in [2^(e-1), 2^e); meaningless for zero.
  long exponent2() const { return static_cast<long>(mpfr_get_exp(v_)); }

  // Natural log of |x| as a double, valid far outside the double range.
  double log_abs() const {
    BigFloat t(bits(), Uninit{});
    mpfr_abs(t.v_, v_, MPFR_RNDN);
    mpfr_log(t.v_, t.v_, MPFR_RNDN);
    return t.to_double();
  }

  // Nearest integer as a decimal string.
  std::string round_to_integer_string() const;

  // Scientific notation with the given number of significant digits.
  std::string to_string(int digits) const;

  BigFloat& operator+=(const BigFloat& o) {
    widen(o);
    mpfr_add(v_, v_, o.v_, MPFR_RNDN);
    return *this;
  }
  BigFloat& operator-=(const BigFloat& o) {
    widen(o);
    mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
    return *this;
  }
  BigFloat& operator*=(const BigFloat& o) {
    widen(o);
    mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
    return *this;
  }
  BigFloat& operator/=(const BigFloat& o) {
    widen(o);
    mpfr_div(v_, v_, o.v_, MPFR_RNDN);
    return *this;
  }
  BigFloat& operator*=(long o) {
    mpfr_mul_si(v_, v_, o, MPFR_RNDN);
    return *this;
  }
  BigFloat& operator/=(long o) {
    mpfr_div_si(v_, v_, o, MPFR_RNDN);
    return *this;
  }

  // this += a * b, one rounding for the product and one for the sum.
  void add_product(const BigFloat& a, const BigFloat& b, BigFloat& scratch) {
    mpfr_mul(scratch.v_, a.v_, b.v_, MPFR_RNDN);
    mpfr_add(v_, v_, scratch.v_, MPFR_RNDN);
  }

  friend BigFloat operator+(BigFloat a, const BigFloat& b) { return a += b; }
  friend BigFloat operator-(BigFloat a, const BigFloat& b) { return a -= b; }
  friend BigFloat operator*(BigFloat a, const BigFloat& b) { return a *= b; }
  friend BigFloat operator/(BigFloat a, const BigFloat& b) { return a /= b; }
  friend BigFloat operator*(BigFloat a, long b) { return a *= b; }
  friend BigFloat operator/(BigFloat a, long b) { return a /= b; }
  friend BigFloat operator-(BigFloat a) {
    mpfr_neg(a.v_, a.v_, MPFR_RNDN);
    return a;
  }

  friend bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
  friend std::partial_ordering operator<=>(const BigFloat& a, const BigFloat& b) {
    if (mpfr_unordered_p(a.v_, b.v_)) return std::partial_ordering::unordered;
    const int c = mpfr_cmp(a.v_, b.v_);
    return c < 0 ? std::partial_ordering::less : c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent;
  }

  friend BigFloat abs(BigFloat a) {
    mpfr_abs(a.v_, a.v_, MPFR_RNDN);
    return a;
  }
  friend BigFloat log(BigFloat a) {
    mpfr_log(a.v_, a.v_, MPFR_RNDN);
    return a;
  }
  friend BigFloat exp(BigFloat a) {
    mpfr_exp(a.v_, a.v_, MPFR_RNDN);
    return a;
  }
  friend BigFloat sqrt(BigFloat a) {
    mpfr_sqrt(a.v_, a.v_, MPFR_RNDN);
    return a;
  }
  friend BigFloat pow(BigFloat a, const BigFloat& e) {
    mpfr_pow(a.v_, a.v_, e.v_, MPFR_RNDN);
    return a;
  }
  friend BigFloat pow(BigFloat a, unsigned long e) {
    mpfr_pow_ui(a.v_, a.v_, e, MPFR_RNDN);
    return a;
  }

  mpfr_ptr raw() { return v_; }
  mpfr_srcptr raw() const { return v_; }

 private:
  struct Uninit {};
  BigFloat(unsigned bits, Uninit) { mpfr_init2(v_, static_cast<mpfr_prec_t>(bits)); }

  void widen(const BigFloat& o) {
    if (mpfr_get_prec(o.v_) > mpfr_get_prec(v_)) mpfr_prec_round(v_, mpfr_get_prec(o.v_), MPFR_RNDN);
  }

  mpfr_t v_;
};

}  // namespace meinardus
