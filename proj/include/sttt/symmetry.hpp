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
#include <set>
#include <string>
#include <vector>

#include "sttt/error.hpp"
#include "sttt/permutation.hpp"
#include "sttt/spiral.hpp"

namespace sttt {

/// One-step rotation of ring k along the spiral: k_0 -> k_1 -> ... -> k_0.
inline Permutation layer_rotation(const NumberedSquare& sq, int k) {
  return Permutation::from_cycles(sq.size(), {sq.level_set(k)});
}

/// Reflection of ring k across its main diagonal. With s the ring size this
/// swaps k_i and k_{s-i}; k_0 (and k_{s/2} for even s) stay fixed.
inline Permutation layer_reflection(const NumberedSquare& sq, int k) {
  const auto& ring = sq.level_set(k);
  const std::size_t s = ring.size();
  std::vector<std::vector<int>> swaps;
  for (std::size_t i = 1; i <= (s - 1) / 2; ++i) {
    swaps.push_back({ring[i], ring[s - i]});
  }
  return Permutation::from_cycles(sq.size(), swaps);
}

inline Permutation full_rotation(const NumberedSquare& sq) {
  Permutation p = Permutation::identity(sq.size());
  for (int k = 1; k <= sq.layer_count(); ++k) p = layer_rotation(sq, k) * p;
  return p;
}

inline Permutation full_reflection(const NumberedSquare& sq) {
  Permutation p = Permutation::identity(sq.size());
  for (int k = 1; k <= sq.layer_count(); ++k) p = layer_reflection(sq, k) * p;
  return p;
}

/// Ring sizes of an n x n square, outermost first: 4n-4, 4n-12, ... ending at
/// 4 (n even) or 8 then 1 (n odd).
inline std::vector<std::uint64_t> ring_sizes(int n) {
  if (n < 1) throw InvalidSize(n);
  std::vector<std::uint64_t> sizes;
  const long long last = (n % 2 == 0) ? 4 : 8;
  for (long long t = 4LL * n - 4; t >= last; t -= 8) {
    sizes.push_back(static_cast<std::uint64_t>(t));
  }
  if (n % 2 == 1) sizes.push_back(1);
  return sizes;
}

/// Order m of the full rotation, as the LCM of the ring sizes.
inline std::uint64_t dihedral_order(int n) {
  std::uint64_t m = 1;
  for (auto s : ring_sizes(n)) m = std::lcm(m, s);
  return m;
}

/// sigma^a rho^b; rho is applied first when b == 1.
struct GroupElement {
  std::uint64_t a = 0;
  int b = 0;
  Permutation perm;

  int operator()(int label) const { return perm(label); }

  std::string name() const {
    return "sigma^" + std::to_string(a) + (b ? " rho" : "");
  }
};

/// The dihedral group D_m generated by the full rotation and reflection of an
/// n x n numbered square, materialized as its 2m elements.
class DihedralGroup {
 public:
  explicit DihedralGroup(int n)
      : square_(n),
        sigma_(full_rotation(square_)),
        rho_(full_reflection(square_)),
        m_(dihedral_order(n)) {
    elements_.reserve(2 * m_);
    Permutation rotation = Permutation::identity(square_.size());
    for (std::uint64_t a = 0; a < m_; ++a) {
      elements_.push_back({a, 0, rotation});
      elements_.push_back({a, 1, rotation * rho_});
      rotation = sigma_ * rotation;
    }
    std::set<Permutation> distinct;
    for (const auto& g : elements_) distinct.insert(g.perm);
    distinct_ = distinct.size();
  }

  int n() const { return square_.n(); }
  std::uint64_t m() const { return m_; }
  std::uint64_t order() const { return 2 * m_; }
  const NumberedSquare& square() const { return square_; }
  const Permutation& rotation() const { return sigma_; }
  const Permutation& reflection() const { return rho_; }

  /// Ordered by a ascending, then b.
  const std::vector<GroupElement>& elements() const { return elements_; }

  const GroupElement& element(std::uint64_t a, int b) const {
    if (a >= m_ || (b != 0 && b != 1)) {
      throw Error("group element (" + std::to_string(a) + "," +
                  std::to_string(b) + ") out of range; m = " +
                  std::to_string(m_));
    }
    return elements_[2 * a + static_cast<std::uint64_t>(b)];
  }

  const GroupElement& identity() const { return elements_.front(); }

  /// g * h on (a, b) pairs, using rho sigma^a = sigma^-a rho.
  const GroupElement& compose(const GroupElement& g,
                              const GroupElement& h) const {
    const std::uint64_t ha = g.b ? (m_ - h.a) % m_ : h.a;
    return element((g.a + ha) % m_, g.b ^ h.b);
  }

  const GroupElement& inverse(const GroupElement& g) const {
    return g.b ? g : element((m_ - g.a) % m_, 0);
  }

  /// Number of distinct permutations among the 2m elements.
  std::size_t distinct_permutations() const { return distinct_; }

  /// True when the action collapses (n == 1: both generators are trivial).
  bool degenerate() const { return distinct_ < order(); }

 private:
  NumberedSquare square_;
  Permutation sigma_;
  Permutation rho_;
  std::uint64_t m_;
  std::vector<GroupElement> elements_;
  std::size_t distinct_ = 0;
};

inline std::vector<GroupElement> group_elements(int n) {
  return DihedralGroup(n).elements();
}

/// Relabels a numbered square: the label sitting at spiral slot p moves to
/// slot g(p). Returns the row-major grid of labels after the move.
inline std::vector<int> act_on_square(const NumberedSquare& sq,
                                      const Permutation& g) {
  if (g.size() != sq.size()) throw SizeMismatch("permutation/square size");
  const Permutation back = g.inverse();
  std::vector<int> grid(static_cast<std::size_t>(sq.size()));
  for (int r = 0; r < sq.n(); ++r) {
    for (int c = 0; c < sq.n(); ++c) {
      grid[static_cast<std::size_t>(r * sq.n() + c)] = back(sq.label_at(r, c));
    }
  }
  return grid;
}

struct Relation {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct DihedralReport {
  int n = 0;
  std::uint64_t m = 0;
  std::uint64_t group_order = 0;
  std::vector<Relation> relations;

  bool passed() const {
    for (const auto& r : relations) {
      if (!r.passed) return false;
    }
    return true;
  }

  /// Throws VerificationFailure naming the first failed relation.
  void require() const {
    for (const auto& r : relations) {
      if (!r.passed) throw VerificationFailure(r.name, r.detail);
    }
  }
};

inline std::vector<std::uint64_t> proper_divisors(std::uint64_t m) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 1; d < m; ++d) {
    if (m % d == 0) out.push_back(d);
  }
  return out;
}

/// Checks the presentation <sigma, rho | sigma^m = rho^2 = (sigma rho)^2 = 1>
/// by direct composition, plus exactness of the rotation order and
/// distinctness of the 2m elements.
inline DihedralReport verify_dihedral(int n) {
  if (n < 2) throw Error("dihedral verification requires n >= 2");
  const NumberedSquare sq(n);
  const Permutation sigma = full_rotation(sq);
  const Permutation rho = full_reflection(sq);
  const std::uint64_t m = dihedral_order(n);

  DihedralReport report;
  report.n = n;
  report.m = m;
  report.group_order = 2 * m;

  const std::uint64_t sigma_order = perm_order(sigma);
  report.relations.push_back(
      {"order(sigma) = m", sigma_order == m,
       "order " + std::to_string(sigma_order) + ", m " + std::to_string(m)});

  report.relations.push_back(
      {"sigma^m = 1", sigma.pow(static_cast<long long>(m)).is_identity(),
       "m = " + std::to_string(m)});

  std::string divisor_detail = "all proper divisors give non-identity";
  bool exact = true;
  for (auto d : proper_divisors(m)) {
    if (sigma.pow(static_cast<long long>(d)).is_identity()) {
      exact = false;
      divisor_detail = "sigma^" + std::to_string(d) + " = 1";
      break;
    }
  }
  report.relations.push_back({"sigma^d != 1 for d | m, d < m", exact,
                              divisor_detail});

  report.relations.push_back(
      {"rho^2 = 1", (rho * rho).is_identity(), rho.to_cycle_string()});

  const Permutation sr = sigma * rho;
  report.relations.push_back(
      {"(sigma rho)^2 = 1", (sr * sr).is_identity(), sr.to_cycle_string()});

  std::set<Permutation> seen;
  Permutation rotation = Permutation::identity(sq.size());
  for (std::uint64_t a = 0; a < m; ++a) {
    seen.insert(rotation);
    seen.insert(rotation * rho);
    rotation = sigma * rotation;
  }
  report.relations.push_back(
      {"2m elements distinct", seen.size() == 2 * m,
       std::to_string(seen.size()) + " distinct of " + std::to_string(2 * m)});
  return report;
}

}  // namespace sttt
