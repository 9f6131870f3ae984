#include "cubic/nat.hpp"

#include <random>

#include "cubic/error.hpp"

namespace cubic {

RandomSource::RandomSource() {
    gmp_randinit_mt(state_);
    std::random_device rd;
    uint64_t seed = (static_cast<uint64_t>(rd()) << 32) ^ rd();
    gmp_randseed_ui(state_, seed);
}

RandomSource::RandomSource(uint64_t seed) {
    gmp_randinit_mt(state_);
    gmp_randseed_ui(state_, seed);
}

RandomSource::~RandomSource() {
    gmp_randclear(state_);
}

Nat RandomSource::bits(unsigned bit_count) {
    Nat out;
    mpz_urandomb(out.get_mpz_t(), state_, bit_count);
    return out;
}

Nat RandomSource::below(const Nat& bound) {
    if (bound <= 0) {
        raise(Errc::out_of_range, "random bound must be positive");
    }
    Nat out;
    mpz_urandomm(out.get_mpz_t(), state_, bound.get_mpz_t());
    return out;
}

uint64_t RandomSource::u64() {
    Nat x = bits(64);
    uint64_t lo = mpz_get_ui(x.get_mpz_t());
    if (sizeof(unsigned long) >= 8) {
        return lo;
    }
    Nat hi = x >> 32;
    return (static_cast<uint64_t>(mpz_get_ui(hi.get_mpz_t())) << 32) | lo;
}

unsigned bit_length(const Nat& x) {
    if (x == 0) {
        return 0;
    }
    return static_cast<unsigned>(mpz_sizeinbase(x.get_mpz_t(), 2));
}

Nat parse_nat(const std::string& text) {
    std::string_view body = text;
    int base = 10;
    if (body.size() > 2 && body[0] == '0' && (body[1] == 'x' || body[1] == 'X')) {
        body.remove_prefix(2);
        base = 16;
    }
    if (body.empty()) {
        raise(Errc::parse, "empty number: '" + text + "'");
    }
    Nat out;
    if (mpz_set_str(out.get_mpz_t(), std::string(body).c_str(), base) != 0) {
        raise(Errc::parse, "not a number: '" + text + "'");
    }
    if (out < 0) {
        raise(Errc::parse, "negative value not allowed: '" + text + "'");
    }
    return out;
}

std::string to_string(const Nat& x) {
    return x.get_str(10);
}

std::vector<uint8_t> to_bytes(const Nat& x) {
    if (x == 0) {
        return {};
    }
    std::vector<uint8_t> out((bit_length(x) + 7) / 8);
    size_t written = 0;
    mpz_export(out.data(), &written, 1, 1, 1, 0, x.get_mpz_t());
    out.resize(written);
    return out;
}

Nat from_bytes(const uint8_t* data, size_t size) {
    Nat out;
    if (size > 0) {
        mpz_import(out.get_mpz_t(), size, 1, 1, 1, 0, data);
    }
    return out;
}

} // namespace cubic
