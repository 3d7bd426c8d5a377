#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace eprb {

/// Named stream ids. Each station owns its own switch and tag streams so that
/// nothing drawn for one station can shift the sequence seen by the other.
enum class StreamId : std::uint32_t {
  kSource = 0,
  kSwitch1 = 1,
  kSwitch2 = 2,
  kTags1 = 3,
  kTags2 = 4,
};

/// Deterministic uniform variates in [0, 1) for a (seed, stream_id) pair.
///
/// The engine is mt19937_64 seeded with a SplitMix64 hash of the seed and the
/// stream id. Variates use the top 53 bits of each draw, so the sequence is the
/// same on every platform (std::uniform_real_distribution is not).
class RngStream {
 public:
  static constexpr std::string_view kAlgorithm = "mt19937_64+splitmix64";

  RngStream(std::uint64_t seed, std::uint32_t stream_id);
  RngStream(std::uint64_t seed, StreamId id) : RngStream(seed, static_cast<std::uint32_t>(id)) {}

  RngStream(const RngStream&) = delete;
  RngStream& operator=(const RngStream&) = delete;
  RngStream(RngStream&&) = default;
  RngStream& operator=(RngStream&&) = default;

  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  /// Uniform on (0, 1].
  double uniform_open_closed() { return 1.0 - uniform(); }

  std::uint64_t seed() const noexcept { return seed_; }
  std::uint32_t stream_id() const noexcept { return stream_id_; }

 private:
  std::uint64_t seed_;
  std::uint32_t stream_id_;
  std::mt19937_64 engine_;
};

/// SplitMix64 finalizer; also used to derive per-point seeds in sweeps.
std::uint64_t splitmix64(std::uint64_t x) noexcept;

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t salt) noexcept;

}  // namespace eprb
