#include "cubic/error.hpp"

namespace cubic {

const char* errc_name(Errc code) noexcept {
    switch (code) {
    case Errc::invalid_modulus: return "invalid-modulus";
    case Errc::not_invertible: return "not-invertible";
    case Errc::moduli_not_coprime: return "moduli-not-coprime";
    case Errc::out_of_range: return "out-of-range";
    case Errc::generation_failed: return "generation-failed";
    case Errc::not_a_unit: return "message-not-unit";
    case Errc::not_a_cubic_residue: return "not-a-cubic-residue";
    case Errc::invalid_index: return "invalid-index";
    case Errc::budget_exceeded: return "budget-exceeded";
    case Errc::bad_key: return "bad-key";
    case Errc::bad_frame: return "bad-frame";
    case Errc::parse: return "parse-error";
    case Errc::io: return "io-error";
    case Errc::net: return "network-error";
    case Errc::unsupported: return "unsupported";
    }
    return "unknown";
}

void raise(Errc code, const std::string& what) {
    throw Error(code, what);
}

} // namespace cubic
