#pragma once

#include <cstdint>
#include <string_view>

namespace vgnet {

/// splitmix64 finalizer; used to derive independent per-task seeds from one
/// run-level seed so results do not depend on task scheduling.
constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

constexpr std::uint64_t derive_seed(std::uint64_t base, std::uint64_t task) noexcept {
  return splitmix64(base ^ splitmix64(task + 0x632be59bd9b4e019ull));
}

/// FNV-1a over bytes; used for content-derived seeds (e.g. per-window
/// substreams keyed by window name) and for config fingerprints.
constexpr std::uint64_t fnv1a64(std::string_view s) noexcept {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (char c : s) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ull;
  }
  return h;
}

}  // namespace vgnet
