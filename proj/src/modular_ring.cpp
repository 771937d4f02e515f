#include "minorcalc/modular_ring.hpp"

#include <limits>

#include "minorcalc/errors.hpp"

namespace minorcalc {

ModularRing::ModularRing(std::uint64_t modulus) : modulus_(modulus) {
  if (modulus < 2) throw InputError("modulus must be at least 2");
  if (modulus > std::numeric_limits<std::uint32_t>::max()) {
    throw InputError("modulus must fit in 32 bits");
  }
}

ModularRing::Element ModularRing::from_integer(const BigInt& v) const {
  BigInt r = v % modulus_;
  if (r < 0) r += modulus_;
  return static_cast<Element>(r);
}

ModularRing::Element ModularRing::from_int64(std::int64_t v) const {
  const auto m = static_cast<std::int64_t>(modulus_);
  std::int64_t r = v % m;
  if (r < 0) r += m;
  return static_cast<Element>(r);
}

std::optional<ModularRing::Element> ModularRing::unit_inverse(Element a) const {
  // Extended Euclid on (a, n).
  std::int64_t old_r = static_cast<std::int64_t>(a % modulus_);
  std::int64_t r = static_cast<std::int64_t>(modulus_);
  std::int64_t old_s = 1;
  std::int64_t s = 0;
  while (r != 0) {
    const std::int64_t q = old_r / r;
    std::int64_t tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
  }
  if (old_r != 1) return std::nullopt;
  return from_int64(old_s);
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint64_t prime) : ModularRing(prime) {
  if (!is_prime(prime)) {
    throw InputError("field modulus " + std::to_string(prime) + " is not prime");
  }
}

}  // namespace minorcalc
