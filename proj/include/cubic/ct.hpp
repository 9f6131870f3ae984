#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cubic/modmath.hpp"
#include "cubic/nat.hpp"
#include "cubic/rns.hpp"
#include "cubic/unity_roots.hpp"

namespace cubic {

// Prime3:     s = p prime, 3 | p-1, 9 does not divide p-1.
// Composite3: s = p*q, exactly one of p-1, q-1 divisible by 3,
//             phi mod 9 in {3, 6}.
// Composite9: s = p*q, both p-1 and q-1 divisible by 3 but not 9.
enum class Mode { prime3, composite3, composite9 };

const char* mode_name(Mode mode) noexcept;
std::optional<Mode> mode_from_name(std::string_view name) noexcept;

struct PublicKey {
    Mode mode;
    Nat s;               // the modulus p or p*q
    RootsOfUnity roots;  // cube roots of unity mod s
    ModuliSet moduli;    // s, r, optional watermark modulus t

    const Nat& r() const { return moduli.r(); }
    // moduli for plain two-channel codewords
    ModuliSet payload_moduli() const { return moduli.pair_only(); }
};

struct PrivateKey {
    Mode mode;
    Nat p;
    std::optional<Nat> q;
    Nat phi;
    // one cube-root exponent for prime3/composite3; per-prime exponents
    // (for p, then q) in composite9, combined with CRT at decryption
    std::vector<Nat> exponents;

    Nat modulus() const { return q ? Nat(p * *q) : p; }
};

struct KeyPair {
    PublicKey pub;
    PrivateKey priv;
};

struct KeygenOptions {
    Mode mode = Mode::composite3;
    unsigned bits = 64;                   // per prime, 4..1024
    std::optional<Nat> p;                 // force exact primes (validated)
    std::optional<Nat> q;
    std::optional<Nat> watermark_modulus; // include t in the public moduli
    unsigned max_attempts = 200000;
};

KeyPair keygen(const KeygenOptions& options, RandomSource& rng);

// {m * w mod s : w a cube root of unity} - every message sharing m's
// ciphertext, ascending.
struct CompanionSet {
    Nat modulus;
    std::vector<Nat> members;
};

CompanionSet companions(const Nat& m, const PublicKey& pub);

// 0-based position of m in its ascending companion set
Nat rank(const Nat& m, const PublicKey& pub);

// c = m^3 mod s packed with the companion rank into one codeword
Codeword encrypt(const Nat& m, const PublicKey& pub);

// One cube root of c, by private exponentiation (CRT-combined per prime in
// composite9). Verifies the result actually cubes back to c and throws
// not_a_cubic_residue otherwise.
Nat cube_root(const Nat& c, const PrivateKey& priv);

// The full preimage set of c under cubing, ascending.
CompanionSet all_cube_roots(const Nat& c, const PrivateKey& priv, const PublicKey& pub);

// Total inverse of encrypt. Corrupted codewords surface as
// out_of_range / not_a_cubic_residue / invalid_index errors, never as a
// silently wrong plaintext (assuming the index channel is intact).
Nat decrypt(const Codeword& codeword, const PrivateKey& priv, const PublicKey& pub);
Nat decrypt_value(const Nat& codeword, const PrivateKey& priv, const PublicKey& pub);

} // namespace cubic
