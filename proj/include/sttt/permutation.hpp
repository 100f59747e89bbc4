// Copyright 2026 The sttt Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "sttt/error.hpp"

namespace sttt {

/// A bijection on the labels {1, ..., size}.
///
/// Composition follows function notation: (p * q)(x) == p(q(x)), so q is
/// applied first.
class Permutation {
 public:
  Permutation() = default;

  static Permutation identity(int size) {
    Permutation p;
    p.image_.resize(static_cast<std::size_t>(size) + 1);
    std::iota(p.image_.begin(), p.image_.end(), 0);
    return p;
  }

  /// Builds from images of 1..size; images[i - 1] is the image of i.
  static Permutation from_images(const std::vector<int>& images) {
    Permutation p;
    p.image_.reserve(images.size() + 1);
    p.image_.push_back(0);
    p.image_.insert(p.image_.end(), images.begin(), images.end());
    p.validate();
    return p;
  }

  /// Builds from disjoint cycles; labels not mentioned are fixed.
  static Permutation from_cycles(int size,
                                 const std::vector<std::vector<int>>& cycles) {
    Permutation p = identity(size);
    std::vector<bool> seen(static_cast<std::size_t>(size) + 1, false);
    for (const auto& cycle : cycles) {
      for (std::size_t i = 0; i < cycle.size(); ++i) {
        const int from = cycle[i];
        const int to = cycle[(i + 1) % cycle.size()];
        if (from < 1 || from > size || to < 1 || to > size) {
          throw Error("cycle entry out of range");
        }
        if (seen[static_cast<std::size_t>(from)]) {
          throw Error("cycles are not disjoint");
        }
        seen[static_cast<std::size_t>(from)] = true;
        p.image_[static_cast<std::size_t>(from)] = to;
      }
    }
    return p;
  }

  int size() const {
    return image_.empty() ? 0 : static_cast<int>(image_.size()) - 1;
  }

  int operator()(int label) const {
    return image_[static_cast<std::size_t>(label)];
  }

  /// Images of 1..size in order.
  std::vector<int> images() const {
    return image_.empty() ? std::vector<int>{}
                          : std::vector<int>(image_.begin() + 1, image_.end());
  }

  friend Permutation operator*(const Permutation& outer,
                               const Permutation& inner) {
    if (outer.size() != inner.size()) {
      throw SizeMismatch("cannot compose permutations of different sizes");
    }
    Permutation p;
    p.image_.resize(inner.image_.size());
    for (std::size_t x = 1; x < inner.image_.size(); ++x) {
      p.image_[x] = outer(inner.image_[x]);
    }
    return p;
  }

  Permutation inverse() const {
    Permutation p;
    p.image_.resize(image_.size());
    for (std::size_t x = 1; x < image_.size(); ++x) {
      p.image_[static_cast<std::size_t>(image_[x])] = static_cast<int>(x);
    }
    return p;
  }

  Permutation pow(long long exponent) const {
    Permutation result = identity(size());
    Permutation base = exponent < 0 ? inverse() : *this;
    unsigned long long e = exponent < 0 ? -static_cast<unsigned long long>(exponent)
                                        : static_cast<unsigned long long>(exponent);
    while (e > 0) {
      if (e & 1u) result = base * result;
      base = base * base;
      e >>= 1u;
    }
    return result;
  }

  bool is_identity() const {
    for (std::size_t x = 1; x < image_.size(); ++x) {
      if (image_[x] != static_cast<int>(x)) return false;
    }
    return true;
  }

  /// Cycle decomposition, each cycle starting at its smallest label, cycles
  /// ordered by that label. Fixed points are included when requested.
  std::vector<std::vector<int>> cycles(bool include_fixed = false) const {
    std::vector<std::vector<int>> result;
    std::vector<bool> seen(image_.size(), false);
    for (std::size_t start = 1; start < image_.size(); ++start) {
      if (seen[start]) continue;
      std::vector<int> cycle;
      for (std::size_t x = start; !seen[x];
           x = static_cast<std::size_t>(image_[x])) {
        seen[x] = true;
        cycle.push_back(static_cast<int>(x));
      }
      if (cycle.size() > 1 || include_fixed) result.push_back(std::move(cycle));
    }
    return result;
  }

  /// Least common multiple of the cycle lengths.
  std::uint64_t order() const {
    std::uint64_t result = 1;
    for (const auto& cycle : cycles()) {
      result = std::lcm(result, static_cast<std::uint64_t>(cycle.size()));
    }
    return result;
  }

  /// "(1,2,3,4)(5,6)"; the identity prints as "()".
  std::string to_cycle_string() const {
    const auto cs = cycles();
    if (cs.empty()) return "()";
    std::ostringstream out;
    for (const auto& cycle : cs) {
      out << '(';
      for (std::size_t i = 0; i < cycle.size(); ++i) {
        if (i) out << ',';
        out << cycle[i];
      }
      out << ')';
    }
    return out.str();
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  void validate() const {
    std::vector<bool> hit(image_.size(), false);
    for (std::size_t x = 1; x < image_.size(); ++x) {
      const int y = image_[x];
      if (y < 1 || y >= static_cast<int>(image_.size()) ||
          hit[static_cast<std::size_t>(y)]) {
        throw Error("images do not form a bijection");
      }
      hit[static_cast<std::size_t>(y)] = true;
    }
  }

  std::vector<int> image_;  // index 0 unused
};

inline std::uint64_t perm_order(const Permutation& p) { return p.order(); }

}  // namespace sttt
