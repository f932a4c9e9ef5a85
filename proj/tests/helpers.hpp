#pragma once

#include <cstdlib>
#include <random>
#include <string>

#include "onerel/words.hpp"

namespace onerel::testing {

inline std::string fixture_path(const std::string& name) {
  const char* dir = std::getenv("ONEREL_FIXTURES");
  return std::string(dir ? dir : "fixtures") + "/" + name;
}

/// Random letter sequence (not necessarily reduced).
inline std::vector<Letter> random_letters(std::mt19937_64& rng, int alphabet, std::size_t len) {
  std::uniform_int_distribution<int> gen(1, alphabet);
  std::uniform_int_distribution<int> sgn(0, 1);
  std::vector<Letter> out;
  out.reserve(len);
  for (std::size_t i = 0; i < len; ++i)
    out.push_back({static_cast<std::uint16_t>(gen(rng)), static_cast<std::int8_t>(sgn(rng) ? 1 : -1)});
  return out;
}

inline Word random_word(std::mt19937_64& rng, int alphabet, std::size_t len) {
  return Word(random_letters(rng, alphabet, len), alphabet);
}

/// Uniformly random freely reduced word of exactly the given length.
inline Word random_reduced_word(std::mt19937_64& rng, int alphabet, std::size_t len) {
  std::vector<Letter> out;
  std::uniform_int_distribution<int> first(0, 2 * alphabet - 1);
  while (out.size() < len) {
    if (out.empty()) {
      int v = first(rng);
      out.push_back({static_cast<std::uint16_t>(v / 2 + 1), static_cast<std::int8_t>(v % 2 ? -1 : 1)});
    } else {
      std::uniform_int_distribution<int> next(0, 2 * alphabet - 2);
      int v = next(rng);
      Letter banned = out.back().inverse();
      // enumerate the 2k-1 non-cancelling letters deterministically
      for (int g = 1, idx = 0; g <= alphabet; ++g) {
        for (int s : {+1, -1}) {
          Letter cand{static_cast<std::uint16_t>(g), static_cast<std::int8_t>(s)};
          if (cand == banned) continue;
          if (idx++ == v) {
            out.push_back(cand);
            g = alphabet + 1;
            break;
          }
        }
      }
    }
  }
  return Word(out, alphabet);
}

}  // namespace onerel::testing
