#include "cubic/ct.hpp"

#include <algorithm>

#include "cubic/error.hpp"

namespace cubic {
namespace {

Nat gcd(const Nat& a, const Nat& b) {
    Nat g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

// Eq.-3-style cube-root exponent for a prime with 3 | p-1, 9 not | p-1
Nat prime_cube_exponent(const Nat& p) {
    Nat residue = (p - 1) % 9;
    if (residue == 6) {
        return (p + 2) / 9;
    }
    if (residue == 3) {
        return (2 * p + 1) / 9;
    }
    raise(Errc::bad_key, "prime " + to_string(p) + " has (p-1) mod 9 = " + to_string(residue) +
                             ", expected 3 or 6");
}

void require_prime(const Nat& p, const char* label) {
    if (!is_probable_prime(p)) {
        raise(Errc::bad_key, std::string(label) + " = " + to_string(p) + " is not prime");
    }
}

// 3 | p-1 and 9 does not divide p-1
bool carries_three(const Nat& p) {
    Nat r = (p - 1) % 9;
    return r == 3 || r == 6;
}

// smallest r >= count with gcd(r, s) = 1
Nat pick_index_modulus(size_t count, const Nat& s) {
    Nat r = static_cast<unsigned long>(std::max<size_t>(count, 2));
    while (gcd(r, s) != 1) {
        ++r;
    }
    return r;
}

constexpr unsigned kMinBits = 4;
constexpr unsigned kMaxBits = 1024;

Nat draw_prime(unsigned bits, const std::vector<Congruence>& constraints,
               unsigned max_attempts, RandomSource& rng) {
    PrimeRequest req;
    req.bits = bits;
    req.constraints = constraints;
    req.max_attempts = max_attempts;
    return random_prime(req, rng);
}

// p = 1 (mod 3) but p != 1 (mod 9), i.e. (p-1) mod 9 in {3, 6}
std::vector<Congruence> cube_prime_constraints() {
    return {{Nat(1), Nat(3), false}, {Nat(1), Nat(9), true}};
}

} // namespace

const char* mode_name(Mode mode) noexcept {
    switch (mode) {
    case Mode::prime3: return "prime3";
    case Mode::composite3: return "composite3";
    case Mode::composite9: return "composite9";
    }
    return "unknown";
}

std::optional<Mode> mode_from_name(std::string_view name) noexcept {
    if (name == "prime3") {
        return Mode::prime3;
    }
    if (name == "composite3") {
        return Mode::composite3;
    }
    if (name == "composite9") {
        return Mode::composite9;
    }
    return std::nullopt;
}

KeyPair keygen(const KeygenOptions& options, RandomSource& rng) {
    bool draws_primes =
        !options.p || (options.mode != Mode::prime3 && !options.q);
    if (draws_primes && (options.bits < kMinBits || options.bits > kMaxBits)) {
        raise(Errc::out_of_range, "keygen: bits per prime must be in [4, 1024]");
    }
    if (options.watermark_modulus && *options.watermark_modulus < 2) {
        raise(Errc::invalid_modulus, "keygen: watermark modulus must be >= 2");
    }

    Nat p, q;
    switch (options.mode) {
    case Mode::prime3: {
        if (options.q) {
            raise(Errc::bad_key, "keygen: prime3 takes no q");
        }
        p = options.p ? *options.p : draw_prime(options.bits, cube_prime_constraints(),
                                                options.max_attempts, rng);
        require_prime(p, "p");
        if (!carries_three(p)) {
            raise(Errc::bad_key,
                  "keygen: prime3 requires 3 | p-1 and 9 not | p-1, got p = " + to_string(p));
        }
        break;
    }
    case Mode::composite3: {
        p = options.p ? *options.p : draw_prime(options.bits, cube_prime_constraints(),
                                                options.max_attempts, rng);
        q = options.q ? *options.q
                      : draw_prime(options.bits, {{Nat(2), Nat(3), false}},
                                   options.max_attempts, rng);
        require_prime(p, "p");
        require_prime(q, "q");
        if (p == q) {
            raise(Errc::bad_key, "keygen: p and q must differ");
        }
        // normalize so p is the factor carrying the cube structure
        bool p3 = (p - 1) % 3 == 0;
        bool q3 = (q - 1) % 3 == 0;
        if (p3 == q3) {
            raise(Errc::bad_key,
                  "keygen: composite3 requires exactly one of p-1, q-1 divisible by 3");
        }
        if (q3) {
            std::swap(p, q);
        }
        if (!carries_three(p)) {
            raise(Errc::bad_key, "keygen: composite3 requires 9 not | p-1, got p = " + to_string(p));
        }
        if (q % 3 == 0) {
            raise(Errc::bad_key, "keygen: q = 3 would make the modulus divisible by 3");
        }
        break;
    }
    case Mode::composite9: {
        p = options.p ? *options.p : draw_prime(options.bits, cube_prime_constraints(),
                                                options.max_attempts, rng);
        if (options.q) {
            q = *options.q;
        } else {
            do {
                q = draw_prime(options.bits, cube_prime_constraints(), options.max_attempts, rng);
            } while (q == p);
        }
        require_prime(p, "p");
        require_prime(q, "q");
        if (p == q) {
            raise(Errc::bad_key, "keygen: p and q must differ");
        }
        if (!carries_three(p) || !carries_three(q)) {
            raise(Errc::bad_key,
                  "keygen: composite9 requires 3 | p-1 and 3 | q-1 with 9 dividing neither");
        }
        break;
    }
    }

    PrivateKey priv;
    priv.mode = options.mode;
    priv.p = p;

    Nat s;
    RootsOfUnity roots;
    if (options.mode == Mode::prime3) {
        s = p;
        roots = cube_roots_of_unity_prime(p);
        priv.phi = p - 1;
        priv.exponents = {prime_cube_exponent(p)};
    } else {
        s = p * q;
        roots = cube_roots_of_unity_composite(p, q);
        priv.q = q;
        priv.phi = (p - 1) * (q - 1);
        if (options.mode == Mode::composite3) {
            Nat residue = priv.phi % 9;
            Nat e = residue == 6 ? (priv.phi + 3) / 9 : (2 * priv.phi + 3) / 9;
            priv.exponents = {e};
        } else {
            priv.exponents = {prime_cube_exponent(p), prime_cube_exponent(q)};
        }
    }

    Nat r = pick_index_modulus(roots.count(), s);
    if (options.watermark_modulus) {
        const Nat& t = *options.watermark_modulus;
        if (gcd(t, s) != 1 || gcd(t, r) != 1) {
            raise(Errc::moduli_not_coprime,
                  "keygen: watermark modulus " + to_string(t) + " must be coprime to s and r");
        }
        return KeyPair{PublicKey{options.mode, s, std::move(roots), ModuliSet(s, r, t)},
                       std::move(priv)};
    }
    return KeyPair{PublicKey{options.mode, s, std::move(roots), ModuliSet(s, r)},
                   std::move(priv)};
}

CompanionSet companions(const Nat& m, const PublicKey& pub) {
    if (m < 1 || m >= pub.s) {
        raise(Errc::out_of_range,
              "message " + to_string(m) + " outside [1, " + to_string(pub.s) + ")");
    }
    Nat g = gcd(m, pub.s);
    if (g != 1) {
        raise(Errc::not_a_unit, "message " + to_string(m) + " shares factor " + to_string(g) +
                                    " with the modulus");
    }
    CompanionSet out;
    out.modulus = pub.s;
    out.members.reserve(pub.roots.count());
    for (const Nat& w : pub.roots.roots) {
        out.members.push_back(m * w % pub.s);
    }
    std::sort(out.members.begin(), out.members.end());
    return out;
}

Nat rank(const Nat& m, const PublicKey& pub) {
    CompanionSet set = companions(m, pub);
    auto it = std::lower_bound(set.members.begin(), set.members.end(), m);
    return static_cast<unsigned long>(it - set.members.begin());
}

Codeword encrypt(const Nat& m, const PublicKey& pub) {
    CompanionSet set = companions(m, pub); // validates m
    auto it = std::lower_bound(set.members.begin(), set.members.end(), m);
    Nat index = static_cast<unsigned long>(it - set.members.begin());
    Nat c = mod_pow(m, Nat(3), pub.s);
    return encode(c, index, pub.payload_moduli());
}

Nat cube_root(const Nat& c, const PrivateKey& priv) {
    Nat s = priv.modulus();
    Nat value = c % s;
    if (gcd(value, s) != 1) {
        raise(Errc::not_a_unit,
              "cube_root: " + to_string(value) + " is not a unit mod " + to_string(s));
    }
    Nat root;
    if (priv.mode == Mode::composite9) {
        if (!priv.q || priv.exponents.size() != 2) {
            raise(Errc::bad_key, "cube_root: composite9 key needs q and two exponents");
        }
        Nat root_p = mod_pow(value % priv.p, priv.exponents[0], priv.p);
        Nat root_q = mod_pow(value % *priv.q, priv.exponents[1], *priv.q);
        root = crt_pair(root_p, priv.p, root_q, *priv.q);
    } else {
        if (priv.exponents.size() != 1) {
            raise(Errc::bad_key, "cube_root: key needs exactly one exponent");
        }
        root = mod_pow(value, priv.exponents[0], s);
    }
    if (mod_pow(root, Nat(3), s) != value) {
        raise(Errc::not_a_cubic_residue,
              to_string(value) + " has no cube root mod " + to_string(s));
    }
    return root;
}

CompanionSet all_cube_roots(const Nat& c, const PrivateKey& priv, const PublicKey& pub) {
    Nat base = cube_root(c, priv);
    CompanionSet out;
    out.modulus = pub.s;
    out.members.reserve(pub.roots.count());
    for (const Nat& w : pub.roots.roots) {
        out.members.push_back(base * w % pub.s);
    }
    std::sort(out.members.begin(), out.members.end());
    return out;
}

Nat decrypt(const Codeword& codeword, const PrivateKey& priv, const PublicKey& pub) {
    auto [c, index] = decode(codeword); // range-checks the codeword
    CompanionSet set = all_cube_roots(c, priv, pub);
    if (index >= set.members.size()) {
        raise(Errc::invalid_index, "companion index " + to_string(index) + " out of range (" +
                                       std::to_string(set.members.size()) +
                                       " companions); codeword corrupt");
    }
    return set.members[mpz_get_ui(index.get_mpz_t())];
}

Nat decrypt_value(const Nat& codeword, const PrivateKey& priv, const PublicKey& pub) {
    return decrypt(Codeword{codeword, pub.payload_moduli()}, priv, pub);
}

} // namespace cubic
