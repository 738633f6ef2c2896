#pragma once

#include <cstdint>
#include <random>

namespace contra {

using Rng = std::mt19937_64;

/// Default seed used by the CLI and the experiment configs.
inline constexpr std::uint64_t kDefaultSeed = 20260415;

/// Independent stream for (seed, index). `tag` separates experiments that
/// share a seed. Results do not depend on the order streams are consumed.
inline Rng derive_stream(std::uint64_t seed, std::uint64_t index, std::uint64_t tag = 0) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32),
                    static_cast<std::uint32_t>(tag), static_cast<std::uint32_t>(tag >> 32)};
  return Rng(seq);
}

}  // namespace contra
