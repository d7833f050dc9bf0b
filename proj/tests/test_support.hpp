#pragma once

// Shared fixtures for the test binaries.

#include "gastro/params.hpp"

#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>

namespace testsup {

// Locates params/default.params next to the source tree, walking up from the
// current directory so tests run from any build layout.
inline std::string default_params_path() {
  namespace fs = std::filesystem;
  fs::path dir = fs::current_path();
  for (int depth = 0; depth < 6; ++depth) {
    const fs::path candidate = dir / "params" / "default.params";
    if (fs::exists(candidate)) return candidate.string();
    if (!dir.has_parent_path() || dir.parent_path() == dir) break;
    dir = dir.parent_path();
  }
  throw std::runtime_error("cannot locate params/default.params from " +
                           fs::current_path().string());
}

inline gastro::ModelParams default_params() {
  static const gastro::ModelParams p = gastro::load_params(default_params_path());
  return p;
}

// splitmix64: tiny deterministic generator, stable across platforms.
struct Rng {
  std::uint64_t state;
  explicit Rng(std::uint64_t seed) : state(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  // uniform in [0, 1)
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
};

}  // namespace testsup
