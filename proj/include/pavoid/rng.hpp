#pragma once

#include <cstdint>
#include <vector>

namespace pavoid {

// splitmix64 (Steele/Lea/Flood splittable generator). Chosen because its output
// is fully specified by the seed alone, so every sampled object in this project
// is reproducible across platforms; std:: distributions are not.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform draw from [0, n). Rejection keeps it unbiased.
  std::uint64_t bounded(std::uint64_t n) {
    std::uint64_t threshold = (0ULL - n) % n;
    for (;;) {
      std::uint64_t x = next();
      if (x >= threshold) return x % n;
    }
  }

  bool coin(double p) {  // p in [0,1]; 53-bit resolution
    return static_cast<double>(next() >> 11) * 0x1.0p-53 < p;
  }

 private:
  std::uint64_t state_;
};

// Fisher-Yates over v using g; uniform over all |v|! orders.
template <typename T>
void shuffle(std::vector<T>& v, SplitMix64& g) {
  for (std::size_t i = v.size(); i > 1; --i) {
    std::size_t j = static_cast<std::size_t>(g.bounded(i));
    std::swap(v[i - 1], v[j]);
  }
}

}  // namespace pavoid
