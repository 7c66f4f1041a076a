#pragma once

#include <cstdint>
#include <random>

namespace qvb {

/// Purpose tags separate the streams drawn for one circuit index.
enum class StreamPurpose : std::uint32_t {
  Generation = 1,
  Sampling = 2,
  Layout = 3,
};

/// Deterministic pseudorandom stream keyed by (base_seed, key, purpose).
/// Identical keys give identical streams independent of thread scheduling.
class RngStream {
 public:
  RngStream(std::uint64_t base_seed, std::uint64_t key,
            StreamPurpose purpose = StreamPurpose::Generation);

  std::mt19937_64& engine() noexcept { return engine_; }

  double uniform();        // [0, 1)
  double normal();         // standard normal
  std::uint64_t below(std::uint64_t n);  // uniform in [0, n)

 private:
  std::mt19937_64 engine_;
};

}  // namespace qvb
