#include "cubic/modmath.hpp"

#include <array>

namespace cubic {
namespace {

constexpr unsigned kTrialDivisionBound = 1000;

const std::vector<unsigned long>& small_primes() {
    static const std::vector<unsigned long> primes = [] {
        std::vector<unsigned long> out;
        std::array<bool, kTrialDivisionBound + 1> composite{};
        for (unsigned long n = 2; n <= kTrialDivisionBound; ++n) {
            if (composite[n]) {
                continue;
            }
            out.push_back(n);
            for (unsigned long k = n * n; k <= kTrialDivisionBound; k += n) {
                composite[k] = true;
            }
        }
        return out;
    }();
    return primes;
}

bool miller_rabin(const Nat& n, unsigned rounds) {
    // n odd, > kTrialDivisionBound^... caller has already trial-divided
    Nat n_minus_1 = n - 1;
    unsigned long two_adic = mpz_scan1(n_minus_1.get_mpz_t(), 0);
    Nat odd_part = n_minus_1 >> two_adic;

    // Witnesses come from a generator seeded with n itself, keeping the
    // function deterministic for a given input.
    RandomSource witness_rng(0x9e3779b97f4a7c15ull ^ mpz_get_ui(n.get_mpz_t()));
    Nat span = n - 3; // bases in [2, n-2]

    Nat x;
    for (unsigned round = 0; round < rounds; ++round) {
        Nat base = witness_rng.below(span) + 2;
        mpz_powm(x.get_mpz_t(), base.get_mpz_t(), odd_part.get_mpz_t(), n.get_mpz_t());
        if (x == 1 || x == n_minus_1) {
            continue;
        }
        bool witness = true;
        for (unsigned long i = 1; i < two_adic; ++i) {
            mpz_mul(x.get_mpz_t(), x.get_mpz_t(), x.get_mpz_t());
            mpz_mod(x.get_mpz_t(), x.get_mpz_t(), n.get_mpz_t());
            if (x == n_minus_1) {
                witness = false;
                break;
            }
        }
        if (witness) {
            return false;
        }
    }
    return true;
}

// Tonelli-Shanks for odd prime p and quadratic residue a
Nat tonelli_shanks(const Nat& a, const Nat& p) {
    Nat q = p - 1;
    unsigned long s = mpz_scan1(q.get_mpz_t(), 0);
    q >>= s;

    // any quadratic non-residue works as the generator seed
    Nat z = 2;
    Nat legendre_exp = (p - 1) / 2;
    while (mod_pow(z, legendre_exp, p) != p - 1) {
        ++z;
    }

    Nat m(static_cast<unsigned long>(s));
    Nat c = mod_pow(z, q, p);
    Nat t = mod_pow(a, q, p);
    Nat root = mod_pow(a, (q + 1) / 2, p);

    while (t != 1) {
        Nat probe = t;
        unsigned long i = 0;
        while (probe != 1) {
            probe = probe * probe % p;
            ++i;
        }
        Nat exponent = Nat(1) << static_cast<unsigned long>(mpz_get_ui(m.get_mpz_t()) - i - 1);
        Nat b = mod_pow(c, exponent, p);
        m = static_cast<unsigned long>(i);
        c = b * b % p;
        t = t * c % p;
        root = root * b % p;
    }
    return root;
}

} // namespace

Nat mod_pow(const Nat& base, const Nat& exp, const Nat& modulus) {
    if (modulus < 2) {
        raise(Errc::invalid_modulus, "mod_pow: modulus must be >= 2");
    }
    Nat out;
    mpz_powm(out.get_mpz_t(), base.get_mpz_t(), exp.get_mpz_t(), modulus.get_mpz_t());
    return out;
}

Nat mod_inv(const Nat& a, const Nat& modulus) {
    if (modulus < 2) {
        raise(Errc::invalid_modulus, "mod_inv: modulus must be >= 2");
    }
    Nat out;
    if (mpz_invert(out.get_mpz_t(), a.get_mpz_t(), modulus.get_mpz_t()) == 0) {
        Nat g;
        mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), modulus.get_mpz_t());
        throw NotInvertibleError(g, "mod_inv: gcd(" + to_string(a) + ", " +
                                        to_string(modulus) + ") = " + to_string(g));
    }
    return out;
}

Nat crt_pair(const Nat& a_p, const Nat& p, const Nat& a_q, const Nat& q) {
    if (p < 2 || q < 2) {
        raise(Errc::invalid_modulus, "crt_pair: moduli must be >= 2");
    }
    Nat g;
    mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
    if (g != 1) {
        raise(Errc::moduli_not_coprime,
              "crt_pair: gcd(" + to_string(p) + ", " + to_string(q) + ") = " + to_string(g));
    }
    if (a_p >= p || a_q >= q) {
        raise(Errc::out_of_range, "crt_pair: residue exceeds its modulus");
    }
    Nat n = p * q;
    Nat combined = a_p * q * mod_inv(q % p, p) + a_q * p * mod_inv(p % q, q);
    return combined % n;
}

std::optional<Nat> mod_sqrt(const Nat& a, const Nat& p) {
    if (p < 2 || mpz_even_p(p.get_mpz_t())) {
        raise(Errc::invalid_modulus, "mod_sqrt: modulus must be an odd prime");
    }
    Nat value = a % p;
    if (value == 0) {
        return Nat(0);
    }
    if (mod_pow(value, (p - 1) / 2, p) != 1) {
        return std::nullopt; // non-residue
    }
    Nat root;
    if (p % 4 == 3) {
        root = mod_pow(value, (p + 1) / 4, p);
    } else {
        root = tonelli_shanks(value, p);
    }
    Nat other = p - root;
    return root <= other ? root : other;
}

bool is_probable_prime(const Nat& n, unsigned rounds) {
    if (rounds < 1) {
        raise(Errc::out_of_range, "is_probable_prime: rounds must be >= 1");
    }
    if (n < 2) {
        return false;
    }
    for (unsigned long prime : small_primes()) {
        if (n == prime) {
            return true;
        }
        if (mpz_divisible_ui_p(n.get_mpz_t(), prime)) {
            return false;
        }
    }
    // n > 10^6 would be needed to slip past trial division composite-free
    if (n <= Nat(kTrialDivisionBound) * kTrialDivisionBound) {
        return true;
    }
    return miller_rabin(n, rounds);
}

Nat random_prime(const PrimeRequest& req, RandomSource& rng) {
    if (req.bits < 4 || req.bits > 1024) {
        raise(Errc::out_of_range, "random_prime: bit length must be in [4, 1024]");
    }
    for (const Congruence& constraint : req.constraints) {
        if (constraint.modulus < 2) {
            raise(Errc::invalid_modulus, "random_prime: constraint modulus must be >= 2");
        }
    }

    Nat top_bit = Nat(1) << (req.bits - 1);
    for (unsigned attempt = 0; attempt < req.max_attempts; ++attempt) {
        Nat candidate = top_bit | rng.bits(req.bits - 1) | 1;
        bool ok = true;
        for (const Congruence& constraint : req.constraints) {
            bool match = candidate % constraint.modulus == constraint.residue;
            if (match == constraint.negated) {
                ok = false;
                break;
            }
        }
        if (ok && is_probable_prime(candidate)) {
            return candidate;
        }
    }
    raise(Errc::generation_failed,
          "random_prime: no prime found within " + std::to_string(req.max_attempts) +
              " attempts (constraints may be unsatisfiable)");
}

Nat random_prime(unsigned bits, const std::vector<Congruence>& constraints,
                 RandomSource& rng) {
    PrimeRequest req;
    req.bits = bits;
    req.constraints = constraints;
    return random_prime(req, rng);
}

} // namespace cubic
