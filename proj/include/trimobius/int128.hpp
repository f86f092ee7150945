#pragma once

#include <cstdint>
#include <string>

namespace trimobius {

__extension__ typedef unsigned __int128 uint128_t;

inline std::string to_string(uint128_t v) {
  if (v == 0) return "0";
  std::string out;
  while (v != 0) {
    out.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
    v /= 10;
  }
  return {out.rbegin(), out.rend()};
}

// floor(sqrt(v)), exact.
std::uint64_t isqrt(uint128_t v);

}  // namespace trimobius
