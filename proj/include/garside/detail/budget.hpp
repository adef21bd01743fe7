#pragma once

#include <cstdlib>
#include <exception>
#include <string>

namespace garside::detail {

/// Enumeration cap: GARSIDE_BUDGET when set, otherwise `fallback`.
inline std::size_t budget(std::size_t fallback) {
  if (const char* env = std::getenv("GARSIDE_BUDGET")) {
    try {
      return static_cast<std::size_t>(std::stoull(env));
    } catch (const std::exception&) {
    }
  }
  return fallback;
}

}  // namespace garside::detail
