#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace cubic {

// All residues, moduli and codewords are nonnegative arbitrary-precision
// integers. GMP backs the representation; negative values are rejected at
// the parse/validation boundaries.
using Nat = mpz_class;

// Seedable random source for key generation and the tamper demos.
// Not thread-safe; each thread owns its own instance.
class RandomSource {
public:
    RandomSource();
    explicit RandomSource(uint64_t seed);
    ~RandomSource();

    RandomSource(const RandomSource&) = delete;
    RandomSource& operator=(const RandomSource&) = delete;

    // uniform in [0, 2^bit_count)
    Nat bits(unsigned bit_count);
    // uniform in [0, bound), bound >= 1
    Nat below(const Nat& bound);
    uint64_t u64();

private:
    gmp_randstate_t state_;
};

// bit length of x; 0 for x == 0
unsigned bit_length(const Nat& x);

// decimal, or hex with a 0x prefix; rejects negatives and junk
Nat parse_nat(const std::string& text);

std::string to_string(const Nat& x);

// minimal big-endian byte array; 0 encodes as an empty array
std::vector<uint8_t> to_bytes(const Nat& x);
Nat from_bytes(const uint8_t* data, size_t size);

} // namespace cubic
