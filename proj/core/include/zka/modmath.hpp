#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include "zka/bytes.hpp"
#include "zka/errors.hpp"
#include "zka/rng.hpp"

namespace zka {

using BigInt = boost::multiprecision::cpp_int;

/// base^exponent mod modulus by square-and-multiply, O(log exponent)
/// multiplications.
BigInt mod_pow(const BigInt& base, const BigInt& exponent, const BigInt& modulus);

/// Multiplicative inverse mod modulus, or nullopt when gcd(value, modulus) != 1.
std::optional<BigInt> mod_inverse(const BigInt& value, const BigInt& modulus);

/// Deterministic trial division below 2^32, Miller-Rabin witnesses above.
bool is_probable_prime(const BigInt& n);

/// Uniform in [0, bound).
BigInt random_below(const BigInt& bound, Rng& rng);

/// Uniform over the units of Z_modulus.
BigInt random_unit(const BigInt& modulus, Rng& rng);

/// Minimal big-endian magnitude; zero encodes as the empty string.
Bytes bigint_to_bytes(const BigInt& value);
BigInt bigint_from_bytes(ByteView data);

}  // namespace zka
