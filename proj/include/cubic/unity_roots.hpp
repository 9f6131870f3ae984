#pragma once

#include <cstddef>
#include <vector>

#include "cubic/nat.hpp"

namespace cubic {

// The complete set {x : x^3 = 1 (mod modulus)}, sorted ascending.
// Always contains 1; the size is 1, 3 or 9 for the moduli in scope.
struct RootsOfUnity {
    Nat modulus;
    std::vector<Nat> roots;

    size_t count() const { return roots.size(); }
};

// {1} when 3 does not divide p-1, else {1, a, a^2} with
// a = (-1 + sqrt(-3)) / 2 (mod p). p must be an odd prime; primality is
// the caller's contract and is not rechecked here.
RootsOfUnity cube_roots_of_unity_prime(const Nat& p);

// All CRT combinations of the per-prime root sets for n = p*q.
RootsOfUnity cube_roots_of_unity_composite(const Nat& p, const Nat& q);

} // namespace cubic
