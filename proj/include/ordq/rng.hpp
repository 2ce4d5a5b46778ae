#ifndef ORDQ_RNG_HPP
#define ORDQ_RNG_HPP

#include <cstdint>
#include <cmath>

#include "ordq/errors.hpp"
#include "ordq/stats.hpp"

namespace ordq {

namespace detail {
// SplitMix64 finalizer; bijective on 64-bit words.
inline std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}
}  // namespace detail

// PCG64 (XSL-RR 128/64). One owner per stream; identical (seed, stream_id)
// give identical sequences. fork() hands out sub-streams whose PCG
// increments differ from each other, so sibling streams never coincide.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed, std::uint64_t stream_id = 0)
      : seed_(seed), stream_id_(stream_id), forks_(0) {
    const unsigned __int128 initseq =
        (static_cast<unsigned __int128>(detail::mix64(stream_id ^ 0x5851f42d4c957f2dULL)) << 64) |
        detail::mix64(stream_id + 0x14057b7ef767814fULL);
    inc_ = (initseq << 1) | 1u;
    state_ = 0;
    step();
    state_ += (static_cast<unsigned __int128>(detail::mix64(seed)) << 64) |
              detail::mix64(seed ^ 0x9e3779b97f4a7c15ULL);
    step();
  }

  std::uint64_t next_u64() {
    step();
    const std::uint64_t xored =
        static_cast<std::uint64_t>(state_ >> 64) ^ static_cast<std::uint64_t>(state_);
    const unsigned rot = static_cast<unsigned>(state_ >> 122);
    return (xored >> rot) | (xored << ((-rot) & 63u));
  }

  // Strictly inside (0,1); safe to feed to inverse cdfs and logs.
  double uniform() {
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  double normal() { return normal_quantile(uniform()); }

  double normal(double mean, double sd) { return mean + sd * normal(); }

  double exponential(double rate = 1.0) {
    if (!(rate > 0.0)) throw DomainError("RngStream::exponential: rate must be > 0");
    return -std::log(uniform()) / rate;
  }

  // Marsaglia-Tsang; shape boost below 1.
  double gamma(double shape, double rate = 1.0) {
    if (!(shape > 0.0) || !(rate > 0.0))
      throw DomainError("RngStream::gamma: shape and rate must be > 0");
    if (shape < 1.0) {
      const double u = uniform();
      return gamma(shape + 1.0, rate) * std::pow(u, 1.0 / shape);
    }
    const double d = shape - 1.0 / 3.0;
    const double c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
      double x, v;
      do {
        x = normal();
        v = 1.0 + c * x;
      } while (v <= 0.0);
      v = v * v * v;
      const double u = uniform();
      if (u < 1.0 - 0.0331 * x * x * x * x) return d * v / rate;
      if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v / rate;
    }
  }

  // Sub-stream with a distinct PCG increment. Sibling forks of one parent
  // get distinct ids (mix64 is a bijection), hence distinct sequences.
  RngStream fork() {
    ++forks_;
    return RngStream(seed_, detail::mix64(stream_id_) ^ forks_);
  }

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream_id() const { return stream_id_; }

 private:
  void step() { state_ = state_ * kMult + inc_; }

  static constexpr unsigned __int128 kMult =
      (static_cast<unsigned __int128>(0x2360ed051fc65da4ULL) << 64) | 0x4385df649fccf645ULL;

  unsigned __int128 state_;
  unsigned __int128 inc_;
  std::uint64_t seed_;
  std::uint64_t stream_id_;
  std::uint64_t forks_;
};

}  // namespace ordq

#endif  // ORDQ_RNG_HPP
