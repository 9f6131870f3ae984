#pragma once

#include <optional>
#include <vector>

#include "cubic/error.hpp"
#include "cubic/nat.hpp"

namespace cubic {

class NotInvertibleError : public Error {
public:
    NotInvertibleError(Nat gcd_value, const std::string& what)
        : Error(Errc::not_invertible, what), gcd(std::move(gcd_value)) {}

    Nat gcd;
};

// base^exp mod modulus, modulus >= 2; 0^0 == 1
Nat mod_pow(const Nat& base, const Nat& exp, const Nat& modulus);

// multiplicative inverse; throws NotInvertibleError carrying the gcd
Nat mod_inv(const Nat& a, const Nat& modulus);

// unique T in [0, p*q) with T = a_p (mod p), T = a_q (mod q); p, q coprime
Nat crt_pair(const Nat& a_p, const Nat& p, const Nat& a_q, const Nat& q);

// Square root of a modulo an odd prime p, or nullopt when a is a
// non-residue. Returns the smaller of the two roots. Uses the exponent
// shortcut when p = 3 (mod 4), Tonelli-Shanks otherwise.
std::optional<Nat> mod_sqrt(const Nat& a, const Nat& p);

// Trial division by small primes, then Miller-Rabin. The witness bases are
// derived deterministically from n so the function stays pure.
bool is_probable_prime(const Nat& n, unsigned rounds = 64);

// candidate mod modulus == residue, or != residue when negated
struct Congruence {
    Nat residue;
    Nat modulus;
    bool negated = false;
};

struct PrimeRequest {
    unsigned bits = 0; // exact bit length, >= 4
    std::vector<Congruence> constraints;
    unsigned max_attempts = 200000;
};

// Random probable prime of the exact bit length satisfying every
// constraint; throws generation_failed once the attempt budget runs out
// (which is also how unsatisfiable constraint sets surface).
Nat random_prime(const PrimeRequest& req, RandomSource& rng);

Nat random_prime(unsigned bits, const std::vector<Congruence>& constraints,
                 RandomSource& rng);

} // namespace cubic
