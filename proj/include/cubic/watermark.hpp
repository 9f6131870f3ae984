#pragma once

#include <optional>
#include <string>

#include "cubic/ct.hpp"
#include "cubic/nat.hpp"
#include "cubic/rns.hpp"

namespace cubic {

// Shared-secret tag key for the third codeword channel. The tag is a
// two-parameter affine function mod t - demonstrative only, not a MAC.
struct WatermarkKey {
    Nat k1; // 0 < k1 < t
    Nat k2; // 0 <= k2 < t
    Nat t;  // tag modulus, coprime to s and r

    void validate() const; // throws bad_key on a violated invariant
};

// w = (k1 * (c + i) + k2) mod t; binds both channels so index flips are
// detected too.
Nat derive_tag(const Nat& c, const Nat& i, const WatermarkKey& key);

// encrypt, then pack (c, i, tag) into a three-channel codeword.
// Requires pub.moduli to carry t equal to key.t.
Codeword seal(const Nat& m, const PublicKey& pub, const WatermarkKey& key);

struct UnsealResult {
    std::optional<Nat> message; // present whenever the (c, i) part decrypts
    bool authentic = false;
    std::string reason;         // empty when authentic
};

// Total over codewords below the channel product: decode failures and tag
// mismatches come back as authentic == false, never as an exception.
UnsealResult unseal(const Codeword& codeword, const PrivateKey& priv,
                    const PublicKey& pub, const WatermarkKey& key);
UnsealResult unseal_value(const Nat& codeword, const PrivateKey& priv,
                          const PublicKey& pub, const WatermarkKey& key);

} // namespace cubic
