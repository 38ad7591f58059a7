#pragma once

#include <complex>
#include <cstdint>
#include <random>

namespace invfield {

/// Deterministic random stream keyed by (seed, stream_id).
///
/// The engine is std::mt19937_64, whose output sequence is fixed by the
/// standard. Uniform and normal variates are derived here rather than through
/// the std distributions, whose algorithms are implementation-defined, so a
/// given key reproduces the same draws on every platform.
///
/// A stream is single-owner. Parallel work obtains independent streams with
/// split(), never by sharing one.
class RngStream {
 public:
  RngStream(std::uint64_t seed, std::uint64_t stream_id);

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream_id() const { return stream_id_; }

  /// Child stream number `child`; children of distinct parents or with
  /// distinct indices are distinct keys.
  RngStream split(std::uint64_t child) const;

  std::uint64_t next_u64() { return engine_(); }
  /// Uniform on [0, 1) with 53 random bits.
  double uniform();
  /// Standard normal (Box-Muller, the second variate is cached).
  double normal();

 private:
  std::uint64_t seed_;
  std::uint64_t stream_id_;
  std::mt19937_64 engine_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

std::uint64_t splitmix64(std::uint64_t x);

}  // namespace invfield
