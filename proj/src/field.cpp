#include "untwist/field.hpp"

#include "untwist/error.hpp"

#include <stdexcept>
#include <tuple>

namespace untwist {

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::int64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

PrimeField::PrimeField(std::int64_t p) : p_(p) {
  if (!is_prime(p)) throw Error(ErrorCode::NonPrimeModulus, std::to_string(p) + " is not prime");
  if (p > max_modulus)
    throw Error(ErrorCode::UnsupportedModulus,
                std::to_string(p) + " exceeds the largest supported modulus 2^31 - 1");
}

PrimeField::value_type PrimeField::from_integer(const Integer& n) const {
  Integer r = n % p_;
  if (r < 0) r += p_;
  return static_cast<value_type>(r);
}

PrimeField::value_type PrimeField::inv(value_type a) const {
  if (a == 0) throw std::domain_error("inverse of zero in " + name());
  // Extended Euclid on (a, p).
  std::int64_t r0 = p_, r1 = a, s0 = 0, s1 = 1;
  while (r1 != 0) {
    const std::int64_t q = r0 / r1;
    std::tie(r0, r1) = std::pair{r1, r0 - q * r1};
    std::tie(s0, s1) = std::pair{s1, s0 - q * s1};
  }
  return from_int(s0);
}

RationalField::value_type RationalField::inv(const value_type& a) const {
  if (a == 0) throw std::domain_error("inverse of zero in Q");
  return 1 / a;
}

}  // namespace untwist
