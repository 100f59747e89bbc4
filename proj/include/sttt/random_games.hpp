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

#include <cstddef>
#include <random>

#include "sttt/board.hpp"
#include "sttt/game.hpp"

namespace sttt {

/// Random playout from the empty state, stopping at a terminal state or after
/// `max_moves` moves, whichever comes first.
template <typename Rng>
MoveList random_game(int n, Rng& rng, std::size_t max_moves) {
  GameState s(n);
  while (!s.terminal() && s.history().size() < max_moves) {
    const auto moves = legal_moves(s);
    std::uniform_int_distribution<std::size_t> pick(0, moves.size() - 1);
    s = apply_move(s, moves[pick(rng)]);
  }
  return s.history();
}

/// Random playout truncated at a uniformly chosen length.
template <typename Rng>
MoveList random_game_prefix(int n, Rng& rng) {
  const std::size_t cells = static_cast<std::size_t>(n) * n * n * n;
  std::uniform_int_distribution<std::size_t> length(0, cells);
  return random_game(n, rng, length(rng));
}

/// Each cell independently X with probability `density`.
template <typename Rng>
Board random_board(int n, Rng& rng, double density = 0.5) {
  Board b(n);
  std::bernoulli_distribution coin(density);
  for (int f = 1; f <= b.labels(); ++f) {
    for (int p = 1; p <= b.labels(); ++p) {
      if (coin(rng)) b.set(f, p, CellState::X);
    }
  }
  return b;
}

}  // namespace sttt
