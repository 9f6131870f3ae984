#pragma once

#include <cstdint>
#include <vector>

#include "cubic/ct.hpp"
#include "cubic/nat.hpp"

namespace cubic {

// Definitional brute-force references. Deliberately naive scans; they are
// the ground truth the fast paths are tested against, and the paper's own
// tables contain errors, so they ship in the library for the CLI `verify`
// command rather than living in test code only.

inline constexpr uint64_t kScanBudget = 1000000;      // full-range scans
inline constexpr uint64_t kRoundtripBudget = 100000;  // per-message round trips

// {x in [1, modulus) : x^3 = c (mod modulus)}, ascending
std::vector<Nat> brute_cube_preimages(const Nat& c, const Nat& modulus);

// {x in [1, modulus) : x^3 = 1 (mod modulus)}, ascending
std::vector<Nat> brute_roots_of_unity(const Nat& modulus);

struct RoundtripReport {
    uint64_t total = 0;
    std::vector<Nat> failures; // messages that did not survive the round trip
};

// decrypt(encrypt(m)) over every unit m mod s
RoundtripReport exhaustive_roundtrip(const PublicKey& pub, const PrivateKey& priv);

} // namespace cubic
