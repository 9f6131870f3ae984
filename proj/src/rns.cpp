#include "cubic/rns.hpp"

#include "cubic/modmath.hpp"

namespace cubic {
namespace {

void check_coprime(const Nat& a, const Nat& b) {
    Nat g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    if (g != 1) {
        raise(Errc::moduli_not_coprime,
              "moduli " + to_string(a) + " and " + to_string(b) + " share factor " +
                  to_string(g));
    }
}

void check_residue(const Nat& value, const Nat& modulus, const char* channel) {
    if (value < 0 || value >= modulus) {
        raise(Errc::out_of_range, std::string(channel) + " residue " + to_string(value) +
                                      " out of range for modulus " + to_string(modulus));
    }
}

} // namespace

ModuliSet::ModuliSet(Nat s, Nat r) : s_(std::move(s)), r_(std::move(r)), channels_(2) {
    init();
}

ModuliSet::ModuliSet(Nat s, Nat r, Nat t)
    : s_(std::move(s)), r_(std::move(r)), t_(std::move(t)), channels_(3) {
    init();
}

void ModuliSet::init() {
    const Nat* moduli[3] = {&s_, &r_, t_ ? &*t_ : nullptr};
    for (unsigned k = 0; k < channels_; ++k) {
        if (*moduli[k] < 2) {
            raise(Errc::invalid_modulus, "modulus " + to_string(*moduli[k]) + " must be >= 2");
        }
    }
    check_coprime(s_, r_);
    if (t_) {
        check_coprime(s_, *t_);
        check_coprime(r_, *t_);
    }

    product_ = s_ * r_;
    if (t_) {
        product_ *= *t_;
    }
    for (unsigned k = 0; k < channels_; ++k) {
        Nat cofactor = product_ / *moduli[k];
        basis_[k] = cofactor * mod_inv(cofactor % *moduli[k], *moduli[k]) % product_;
    }

    // word-size mirrors let the desk-scale sweeps skip bignum dispatch
    small_ = mpz_fits_uint_p(product_.get_mpz_t()) != 0;
    if (small_) {
        productw_ = mpz_get_ui(product_.get_mpz_t());
        for (unsigned k = 0; k < channels_; ++k) {
            sw_[k] = mpz_get_ui(moduli[k]->get_mpz_t());
            basisw_[k] = mpz_get_ui(basis_[k].get_mpz_t());
        }
    }
}

ModuliSet ModuliSet::pair_only() const {
    return ModuliSet(s_, r_);
}

void ModuliSet::encode_into(Nat& out, const Nat& c, const Nat& i) const {
    if (channels_ != 2) {
        raise(Errc::invalid_modulus, "encode: expected a two-channel moduli set");
    }
    check_residue(c, s_, "payload");
    check_residue(i, r_, "index");
    if (small_) {
        uint64_t value = (mpz_get_ui(c.get_mpz_t()) * basisw_[0] +
                          mpz_get_ui(i.get_mpz_t()) * basisw_[1]) %
                         productw_;
        mpz_set_ui(out.get_mpz_t(), value);
        return;
    }
    static thread_local Nat scratch;
    out = c * basis_[0];
    scratch = i * basis_[1];
    out += scratch;
    out %= product_;
}

void ModuliSet::decode_into(Nat& c, Nat& i, const Nat& codeword) const {
    if (channels_ != 2) {
        raise(Errc::invalid_modulus, "decode: expected a two-channel moduli set");
    }
    if (codeword < 0 || codeword >= product_) {
        raise(Errc::out_of_range, "codeword " + to_string(codeword) +
                                      " out of range for M = " + to_string(product_));
    }
    if (small_) {
        uint64_t value = mpz_get_ui(codeword.get_mpz_t());
        mpz_set_ui(c.get_mpz_t(), value % sw_[0]);
        mpz_set_ui(i.get_mpz_t(), value % sw_[1]);
        return;
    }
    c = codeword % s_;
    i = codeword % r_;
}

void ModuliSet::encode3_into(Nat& out, const Nat& c, const Nat& i, const Nat& w) const {
    if (channels_ != 3) {
        raise(Errc::invalid_modulus, "encode3: moduli set has no watermark channel");
    }
    check_residue(c, s_, "payload");
    check_residue(i, r_, "index");
    check_residue(w, *t_, "watermark");
    if (small_) {
        // products stay below 2^64: each factor is < 2^32
        uint64_t value = (mpz_get_ui(c.get_mpz_t()) * basisw_[0]) % productw_;
        value = (value + mpz_get_ui(i.get_mpz_t()) * basisw_[1]) % productw_;
        value = (value + mpz_get_ui(w.get_mpz_t()) * basisw_[2]) % productw_;
        mpz_set_ui(out.get_mpz_t(), value);
        return;
    }
    static thread_local Nat scratch;
    out = c * basis_[0];
    scratch = i * basis_[1];
    out += scratch;
    scratch = w * basis_[2];
    out += scratch;
    out %= product_;
}

void ModuliSet::decode3_into(Nat& c, Nat& i, Nat& w, const Nat& codeword) const {
    if (channels_ != 3) {
        raise(Errc::invalid_modulus, "decode3: moduli set has no watermark channel");
    }
    if (codeword < 0 || codeword >= product_) {
        raise(Errc::out_of_range, "codeword " + to_string(codeword) +
                                      " out of range for M = " + to_string(product_));
    }
    if (small_) {
        uint64_t value = mpz_get_ui(codeword.get_mpz_t());
        mpz_set_ui(c.get_mpz_t(), value % sw_[0]);
        mpz_set_ui(i.get_mpz_t(), value % sw_[1]);
        mpz_set_ui(w.get_mpz_t(), value % sw_[2]);
        return;
    }
    c = codeword % s_;
    i = codeword % r_;
    w = codeword % *t_;
}

Nat ModuliSet::encode_value(const Nat& c, const Nat& i) const {
    Nat out;
    encode_into(out, c, i);
    return out;
}

Nat ModuliSet::encode3_value(const Nat& c, const Nat& i, const Nat& w) const {
    Nat out;
    encode3_into(out, c, i, w);
    return out;
}

Codeword encode(const Nat& c, const Nat& i, const ModuliSet& moduli) {
    return Codeword{moduli.encode_value(c, i), moduli};
}

std::pair<Nat, Nat> decode(const Codeword& codeword) {
    Nat c, i;
    codeword.moduli.decode_into(c, i, codeword.value);
    return {std::move(c), std::move(i)};
}

Codeword encode3(const Nat& c, const Nat& i, const Nat& w, const ModuliSet& moduli) {
    return Codeword{moduli.encode3_value(c, i, w), moduli};
}

std::tuple<Nat, Nat, Nat> decode3(const Codeword& codeword) {
    Nat c, i, w;
    codeword.moduli.decode3_into(c, i, w, codeword.value);
    return {std::move(c), std::move(i), std::move(w)};
}

} // namespace cubic
