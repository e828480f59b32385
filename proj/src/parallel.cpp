// SPDX-License-Identifier: Apache-2.0
#include "lunehankel/parallel.hpp"

#include <charconv>
#include <cstdlib>
#include <cstring>

namespace lunehankel {

std::size_t thread_count() {
  static const std::size_t n = [] {
    if (const char* env = std::getenv("LUNEHANKEL_THREADS")) {
      std::size_t v = 0;
      const char* end = env + std::strlen(env);
      auto [ptr, ec] = std::from_chars(env, end, v);
      if (ec == std::errc{} && ptr == end && v > 0) return v;
    }
    return std::max<std::size_t>(1, std::thread::hardware_concurrency());
  }();
  return n;
}

}  // namespace lunehankel
