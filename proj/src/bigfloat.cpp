#include "meinardus/bigfloat.hpp"

#include <gmp.h>

#include <cstdio>
#include <memory>

namespace meinardus {

std::string BigFloat::round_to_integer_string() const {
  mpz_t z;
  mpz_init(z);
  mpfr_get_z(z, v_, MPFR_RNDN);
  std::unique_ptr<char, void (*)(void*)> s(mpz_get_str(nullptr, 10, z), [](void* p) {
    void (*freefunc)(void*, size_t);
    mp_get_memory_functions(nullptr, nullptr, &freefunc);
    freefunc(p, std::char_traits<char>::length(static_cast<char*>(p)) + 1);
  });
  std::string out(s.get());
  mpz_clear(z);
  return out;
}

std::string BigFloat::to_string(int digits) const {
  char* buf = nullptr;
  const int len = mpfr_asprintf(&buf, "%.*Re", digits > 0 ? digits - 1 : 0, v_);
  std::string out = len >= 0 ? std::string(buf, static_cast<std::size_t>(len)) : std::string("nan");
  mpfr_free_str(buf);
  return out;
}

}  // namespace meinardus
