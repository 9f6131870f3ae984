#pragma once

#include <string>

#include "cubic/ct.hpp"
#include "cubic/watermark.hpp"

namespace cubic {

// Key files are single JSON objects with decimal-string number fields.
//   public:    {"mode", "s", "roots": [...], "r", "t"?}
//   private:   {"mode", "p", "q"?, "phi", "exponents": [...]}
//   watermark: {"k1", "k2", "t"}
// Parsing validates the structural invariants (roots cube to 1, channel
// coprimality, exponent arity) and throws bad_key on violations.

std::string to_json(const PublicKey& key);
std::string to_json(const PrivateKey& key);
std::string to_json(const WatermarkKey& key);

PublicKey public_key_from_json(const std::string& text);
PrivateKey private_key_from_json(const std::string& text);
WatermarkKey watermark_key_from_json(const std::string& text);

PublicKey load_public_key(const std::string& path);
PrivateKey load_private_key(const std::string& path);
WatermarkKey load_watermark_key(const std::string& path);

void save_key(const std::string& path, const std::string& json_text);

} // namespace cubic
