#pragma once

#include <optional>
#include <string>

namespace casefs::util {

std::string base64Encode(const std::string& bytes);

// Strict decoder: standard alphabet, '=' padding. Returns nullopt on bad input.
std::optional<std::string> base64Decode(const std::string& text);

}  // namespace casefs::util
