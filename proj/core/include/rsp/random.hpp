// Copyright 2026 The rsp-solver Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace rsp {

/// Seeded RNG for generators and schedules.  mt19937_64 is fully specified by
/// the standard; the derived draws below avoid std distributions on purpose,
/// since those may differ between standard-library implementations and seeds
/// are frozen into test suites.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t raw() { return eng_(); }

  /// Uniform integer in [lo, hi], inclusive.
  int uniform(int lo, int hi) {
    return lo + static_cast<int>(raw() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  /// True with probability percent/100.
  bool percent(int p) { return uniform(0, 99) < p; }

  template <class T>
  void shuffle(std::vector<T>& v) {
    for (int i = static_cast<int>(v.size()) - 1; i > 0; --i)
      std::swap(v[i], v[uniform(0, i)]);
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace rsp
