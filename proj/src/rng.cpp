#include "eprb/rng.hpp"

namespace eprb {

std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t salt) noexcept {
  return splitmix64(splitmix64(base) ^ (salt * 0xD1B54A32D192ED03ULL + 0x8CB92BA72F3D8DD7ULL));
}

RngStream::RngStream(std::uint64_t seed, std::uint32_t stream_id)
    : seed_(seed), stream_id_(stream_id), engine_(derive_seed(seed, stream_id)) {}

}  // namespace eprb
