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

#include <algorithm>
#include <array>
#include <cstddef>
#include <vector>

#include "sttt/error.hpp"

namespace sttt {

struct Cell {
  int row = 0;
  int col = 0;

  friend bool operator==(const Cell&, const Cell&) = default;
};

/// Counter-clockwise spiral labelling of an n x n square.
///
/// Label 1 sits in the top-left corner and the walk goes down the left column
/// first, turning (down -> right -> up -> left) whenever the next cell is off
/// the grid or already labelled. Cells are 0-indexed (row, col) from the
/// top-left; labels are 1-indexed. Layer 1 is the innermost ring.
class NumberedSquare {
 public:
  explicit NumberedSquare(int n) : n_(n) {
    if (n < 1) throw InvalidSize(n);
    const int count = n * n;
    labels_.assign(static_cast<std::size_t>(count), 0);
    cells_.resize(static_cast<std::size_t>(count) + 1);

    constexpr std::array<Cell, 4> kSteps{{{1, 0}, {0, 1}, {-1, 0}, {0, -1}}};
    Cell at{0, 0};
    int dir = 0;
    for (int label = 1; label <= count; ++label) {
      labels_[index(at)] = label;
      cells_[static_cast<std::size_t>(label)] = at;
      if (label == count) break;
      for (int turns = 0; turns < 4; ++turns) {
        const Cell next{at.row + kSteps[dir].row, at.col + kSteps[dir].col};
        if (in_bounds(next) && labels_[index(next)] == 0) {
          at = next;
          break;
        }
        dir = (dir + 1) % 4;
      }
    }

    layer_count_ = (n + 1) / 2;
    layers_.assign(static_cast<std::size_t>(count) + 1, 0);
    level_sets_.resize(static_cast<std::size_t>(layer_count_) + 1);
    for (int label = 1; label <= count; ++label) {
      const Cell c = cells_[static_cast<std::size_t>(label)];
      const int depth = std::min({c.row, c.col, n - 1 - c.row, n - 1 - c.col});
      const int layer = layer_count_ - depth;
      layers_[static_cast<std::size_t>(label)] = layer;
      level_sets_[static_cast<std::size_t>(layer)].push_back(label);
    }
    // Labels were visited in ascending order, so each level set is sorted.
  }

  int n() const { return n_; }
  int size() const { return n_ * n_; }
  int layer_count() const { return layer_count_; }

  int label_at(int row, int col) const {
    if (!in_bounds({row, col})) throw Error("cell out of range");
    return labels_[index({row, col})];
  }
  int label_at(Cell c) const { return label_at(c.row, c.col); }

  Cell cell_of(int label) const {
    check_label(label);
    return cells_[static_cast<std::size_t>(label)];
  }

  int layer_of(int label) const {
    check_label(label);
    return layers_[static_cast<std::size_t>(label)];
  }

  /// Sorted labels of layer k (1 = innermost).
  const std::vector<int>& level_set(int k) const {
    if (k < 1 || k > layer_count_) throw InvalidLayer(k, layer_count_);
    return level_sets_[static_cast<std::size_t>(k)];
  }

  /// Row-major grid of labels.
  const std::vector<int>& row_major_labels() const { return labels_; }

  /// 1-based reading-order index (row-major) of a spiral label.
  int reading_index(int label) const {
    const Cell c = cell_of(label);
    return c.row * n_ + c.col + 1;
  }

  /// Spiral label at a 1-based reading-order index.
  int label_at_reading_index(int index) const {
    if (index < 1 || index > size()) throw Error("reading index out of range");
    return labels_[static_cast<std::size_t>(index - 1)];
  }

  friend bool operator==(const NumberedSquare& a, const NumberedSquare& b) {
    return a.n_ == b.n_ && a.labels_ == b.labels_;
  }

 private:
  bool in_bounds(Cell c) const {
    return c.row >= 0 && c.col >= 0 && c.row < n_ && c.col < n_;
  }
  std::size_t index(Cell c) const {
    return static_cast<std::size_t>(c.row * n_ + c.col);
  }
  void check_label(int label) const {
    if (label < 1 || label > size()) {
      throw Error("label " + std::to_string(label) + " out of range 1.." +
                  std::to_string(size()));
    }
  }

  int n_;
  int layer_count_ = 0;
  std::vector<int> labels_;          // row-major
  std::vector<Cell> cells_;          // by label, index 0 unused
  std::vector<int> layers_;          // by label, index 0 unused
  std::vector<std::vector<int>> level_sets_;  // by layer, index 0 unused
};

inline NumberedSquare spiral_numbering(int n) { return NumberedSquare(n); }

inline const std::vector<int>& level_set(const NumberedSquare& sq, int k) {
  return sq.level_set(k);
}

}  // namespace sttt
