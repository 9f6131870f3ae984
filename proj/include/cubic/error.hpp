#pragma once

#include <stdexcept>
#include <string>

namespace cubic {

enum class Errc {
    invalid_modulus,
    not_invertible,
    moduli_not_coprime,
    out_of_range,
    generation_failed,
    not_a_unit,
    not_a_cubic_residue,
    invalid_index,
    budget_exceeded,
    bad_key,
    bad_frame,
    parse,
    io,
    net,
    unsupported,
};

const char* errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

[[noreturn]] void raise(Errc code, const std::string& what);

} // namespace cubic
