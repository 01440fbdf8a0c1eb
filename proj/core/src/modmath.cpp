#include "zka/modmath.hpp"

#include <array>

namespace zka {

BigInt mod_pow(const BigInt& base, const BigInt& exponent, const BigInt& modulus) {
    if (modulus < 2) {
        throw BadModulus("mod_pow: modulus must be at least 2");
    }
    if (exponent < 0) {
        throw BadParameters("mod_pow: exponent must be non-negative");
    }
    BigInt result = 1;
    BigInt b = base % modulus;
    if (b < 0) {
        b += modulus;
    }
    BigInt e = exponent;
    while (e > 0) {
        if (bit_test(e, 0)) {
            result = (result * b) % modulus;
        }
        b = (b * b) % modulus;
        e >>= 1;
    }
    return result;
}

std::optional<BigInt> mod_inverse(const BigInt& value, const BigInt& modulus) {
    if (modulus < 2) {
        throw BadModulus("mod_inverse: modulus must be at least 2");
    }
    BigInt v = value % modulus;
    if (v < 0) {
        v += modulus;
    }
    // Extended Euclid tracking only the coefficient of `value`.
    BigInt old_r = v, r = modulus;
    BigInt old_s = 1, s = 0;
    while (r != 0) {
        BigInt q = old_r / r;
        BigInt tmp = old_r - q * r;
        old_r = r;
        r = tmp;
        tmp = old_s - q * s;
        old_s = s;
        s = tmp;
    }
    if (old_r != 1) {
        return std::nullopt;
    }
    if (old_s < 0) {
        old_s += modulus;
    }
    return old_s;
}

namespace {

bool miller_rabin_witness(const BigInt& n, const BigInt& a, const BigInt& d, unsigned r) {
    BigInt x = mod_pow(a, d, n);
    if (x == 1 || x == n - 1) {
        return false;
    }
    for (unsigned i = 1; i < r; ++i) {
        x = (x * x) % n;
        if (x == n - 1) {
            return false;
        }
    }
    return true;  // a proves n composite
}

}  // namespace

bool is_probable_prime(const BigInt& n) {
    if (n < 2) {
        return false;
    }
    if (n < (BigInt(1) << 32)) {
        auto v = n.convert_to<std::uint64_t>();
        if (v < 4) {
            return true;  // 2, 3
        }
        if (v % 2 == 0) {
            return false;
        }
        for (std::uint64_t d = 3; d * d <= v; d += 2) {
            if (v % d == 0) {
                return false;
            }
        }
        return true;
    }
    if (bit_test(n, 0) == false) {
        return false;
    }
    // n - 1 = d * 2^r with d odd.
    BigInt d = n - 1;
    unsigned r = 0;
    while (!bit_test(d, 0)) {
        d >>= 1;
        ++r;
    }
    // Deterministic for n < 3.3 * 10^24; a fixed strong pseudoprime test above.
    static constexpr std::array<unsigned, 12> bases = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    for (unsigned a : bases) {
        if (n == a) {
            return true;
        }
        if (miller_rabin_witness(n, a, d, r)) {
            return false;
        }
    }
    return true;
}

BigInt random_below(const BigInt& bound, Rng& rng) {
    if (bound < 1) {
        throw BadParameters("random_below: bound must be positive");
    }
    if (bound == 1) {
        return 0;
    }
    const unsigned bits = msb(bound - 1) + 1;
    const unsigned words = (bits + 63) / 64;
    const unsigned top_bits = bits - (words - 1) * 64;
    const std::uint64_t top_mask =
        top_bits == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << top_bits) - 1);
    for (;;) {
        BigInt candidate = 0;
        // Most-significant word first so narrower bounds consume fewer draws.
        candidate = rng.next_u64() & top_mask;
        for (unsigned i = 1; i < words; ++i) {
            candidate <<= 64;
            candidate += rng.next_u64();
        }
        if (candidate < bound) {
            return candidate;
        }
    }
}

BigInt random_unit(const BigInt& modulus, Rng& rng) {
    if (modulus < 2) {
        throw BadModulus("random_unit: modulus must be at least 2");
    }
    if (modulus == 2) {
        return 1;
    }
    for (;;) {
        BigInt candidate = random_below(modulus - 1, rng) + 1;
        if (gcd(candidate, modulus) == 1) {
            return candidate;
        }
    }
}

Bytes bigint_to_bytes(const BigInt& value) {
    if (value < 0) {
        throw BadParameters("bigint_to_bytes: value must be non-negative");
    }
    if (value == 0) {
        return {};
    }
    Bytes out;
    export_bits(value, std::back_inserter(out), 8);
    return out;
}

BigInt bigint_from_bytes(ByteView data) {
    if (data.empty()) {
        return 0;
    }
    BigInt value;
    import_bits(value, data.begin(), data.end(), 8);
    return value;
}

}  // namespace zka
