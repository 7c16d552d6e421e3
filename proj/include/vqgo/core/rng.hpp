// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>

namespace vqgo {

/// Stateless 64-bit mixer used to derive per-task seeds.
std::uint64_t splitmix64(std::uint64_t x) noexcept;

/// Seed for task `path` under a master seed. Identical inputs give identical streams.
std::uint64_t derive_seed(std::uint64_t master, std::initializer_list<std::uint64_t> path) noexcept;

inline std::mt19937_64 make_rng(std::uint64_t master, std::initializer_list<std::uint64_t> path) {
  return std::mt19937_64(derive_seed(master, path));
}

}  // namespace vqgo
