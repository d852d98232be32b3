#include "dirsinr/random.hpp"

namespace dirsinr {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

RngStream make_stream(std::uint64_t master_seed, StreamPurpose purpose, std::uint64_t index) {
  const std::uint64_t a = splitmix64(master_seed);
  const std::uint64_t b = splitmix64(a ^ static_cast<std::uint64_t>(purpose));
  const std::uint64_t c = splitmix64(b ^ splitmix64(index));
  return RngStream(c);
}

}  // namespace dirsinr
