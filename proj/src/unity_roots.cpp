#include "cubic/unity_roots.hpp"

#include <algorithm>

#include "cubic/error.hpp"
#include "cubic/modmath.hpp"

namespace cubic {

RootsOfUnity cube_roots_of_unity_prime(const Nat& p) {
    if (p < 3 || mpz_even_p(p.get_mpz_t())) {
        raise(Errc::invalid_modulus, "cube_roots_of_unity_prime: p must be an odd prime");
    }
    RootsOfUnity out;
    out.modulus = p;
    out.roots.push_back(1);
    if ((p - 1) % 3 != 0) {
        return out; // x^3 is a bijection, only the trivial root
    }
    // alpha = (-1 + sqrt(-3)) / 2; the square root exists for p = 1 (mod 3)
    auto s = mod_sqrt((p - 3) % p, p);
    if (!s) {
        raise(Errc::invalid_modulus,
              "cube_roots_of_unity_prime: -3 is a non-residue, p is not prime");
    }
    Nat alpha = (p - 1 + *s) * mod_inv(Nat(2), p) % p;
    out.roots.push_back(alpha);
    out.roots.push_back(alpha * alpha % p);
    std::sort(out.roots.begin(), out.roots.end());
    return out;
}

RootsOfUnity cube_roots_of_unity_composite(const Nat& p, const Nat& q) {
    if (p == q) {
        raise(Errc::unsupported, "cube_roots_of_unity_composite: p and q must differ");
    }
    RootsOfUnity roots_p = cube_roots_of_unity_prime(p);
    RootsOfUnity roots_q = cube_roots_of_unity_prime(q);

    RootsOfUnity out;
    out.modulus = p * q;
    out.roots.reserve(roots_p.count() * roots_q.count());
    for (const Nat& a : roots_p.roots) {
        for (const Nat& b : roots_q.roots) {
            out.roots.push_back(crt_pair(a, p, b, q));
        }
    }
    std::sort(out.roots.begin(), out.roots.end());
    return out;
}

} // namespace cubic
