#include "cubic/watermark.hpp"

#include "cubic/error.hpp"
#include "cubic/modmath.hpp"

namespace cubic {

void WatermarkKey::validate() const {
    if (t < 2) {
        raise(Errc::bad_key, "watermark key: t must be >= 2");
    }
    if (k1 < 1 || k1 >= t) {
        raise(Errc::bad_key, "watermark key: k1 must satisfy 0 < k1 < t");
    }
    if (k2 < 0 || k2 >= t) {
        raise(Errc::bad_key, "watermark key: k2 must satisfy 0 <= k2 < t");
    }
}

Nat derive_tag(const Nat& c, const Nat& i, const WatermarkKey& key) {
    key.validate();
    return (key.k1 * (c + i) + key.k2) % key.t;
}

namespace {

void check_channel(const PublicKey& pub, const WatermarkKey& key) {
    key.validate();
    if (!pub.moduli.has_watermark()) {
        raise(Errc::bad_key, "public key carries no watermark channel");
    }
    if (*pub.moduli.t() != key.t) {
        raise(Errc::bad_key, "watermark modulus mismatch: key t = " + to_string(key.t) +
                                 ", public key t = " + to_string(*pub.moduli.t()));
    }
}

} // namespace

Codeword seal(const Nat& m, const PublicKey& pub, const WatermarkKey& key) {
    check_channel(pub, key);
    Codeword plain = encrypt(m, pub);
    auto [c, i] = decode(plain);
    Nat w = derive_tag(c, i, key);
    return encode3(c, i, w, pub.moduli);
}

UnsealResult unseal(const Codeword& codeword, const PrivateKey& priv,
                    const PublicKey& pub, const WatermarkKey& key) {
    check_channel(pub, key);
    UnsealResult out;
    auto [c, i, w] = decode3(codeword);
    bool tag_ok = w == derive_tag(c, i, key);
    try {
        Codeword plain{pub.payload_moduli().encode_value(c, i), pub.payload_moduli()};
        out.message = decrypt(plain, priv, pub);
    } catch (const Error& e) {
        out.authentic = false;
        out.reason = e.what();
        return out;
    }
    out.authentic = tag_ok;
    if (!tag_ok) {
        out.reason = "watermark mismatch";
    }
    return out;
}

UnsealResult unseal_value(const Nat& codeword, const PrivateKey& priv,
                          const PublicKey& pub, const WatermarkKey& key) {
    return unseal(Codeword{codeword, pub.moduli}, priv, pub, key);
}

} // namespace cubic
