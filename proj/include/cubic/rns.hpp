#pragma once

#include <cstdint>
#include <optional>
#include <tuple>
#include <utility>

#include "cubic/error.hpp"
#include "cubic/nat.hpp"

namespace cubic {

// Pairwise-coprime moduli for the codeword channels: s carries the
// ciphertext residue, r the companion index, and the optional t a
// watermark tag. Construction validates the moduli and precomputes the
// CRT basis so encoding is a couple of multiplications.
class ModuliSet {
public:
    ModuliSet(Nat s, Nat r);
    ModuliSet(Nat s, Nat r, Nat t);

    const Nat& s() const { return s_; }
    const Nat& r() const { return r_; }
    const std::optional<Nat>& t() const { return t_; }
    const Nat& product() const { return product_; }
    bool has_watermark() const { return t_.has_value(); }

    // the {s, r} subset used by plain (unwatermarked) codewords
    ModuliSet pair_only() const;

    // Allocation-light cores; `out` arguments may alias the inputs' storage
    // lifetimes but not each other. Range-checked.
    void encode_into(Nat& out, const Nat& c, const Nat& i) const;
    void decode_into(Nat& c, Nat& i, const Nat& codeword) const;
    void encode3_into(Nat& out, const Nat& c, const Nat& i, const Nat& w) const;
    void decode3_into(Nat& c, Nat& i, Nat& w, const Nat& codeword) const;

    Nat encode_value(const Nat& c, const Nat& i) const;
    Nat encode3_value(const Nat& c, const Nat& i, const Nat& w) const;

    friend bool operator==(const ModuliSet& a, const ModuliSet& b) {
        return a.s_ == b.s_ && a.r_ == b.r_ && a.t_ == b.t_;
    }

private:
    void init();

    Nat s_;
    Nat r_;
    std::optional<Nat> t_;
    Nat product_;
    // basis_[k] = (M/m_k) * ((M/m_k)^-1 mod m_k) mod M
    Nat basis_[3];
    unsigned channels_ = 2;
    // single-word mirrors, used when every modulus fits 32 bits
    bool small_ = false;
    uint64_t sw_[3] = {0, 0, 0};
    uint64_t basisw_[3] = {0, 0, 0};
    uint64_t productw_ = 0;
};

// The transmitted integer T together with its moduli record.
struct Codeword {
    Nat value;
    ModuliSet moduli;
};

Codeword encode(const Nat& c, const Nat& i, const ModuliSet& moduli);
std::pair<Nat, Nat> decode(const Codeword& codeword);
Codeword encode3(const Nat& c, const Nat& i, const Nat& w, const ModuliSet& moduli);
std::tuple<Nat, Nat, Nat> decode3(const Codeword& codeword);

} // namespace cubic
