/*
 * Copyright 2026 The fband Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// Product of two free band elements given by transducers.
//
// The product machine keeps both operands and adds a grid of states (i, j)
// standing for (x circ 1^i)(y circ 0^j).  On 0 a grid state either moves
// right along the 0-spine of y, by K0(i, j) steps, or (when K0 is undefined)
// falls into x; symmetrically on 1.  Cells on the far edges of the grid are
// the spine states of the operands themselves and are wired straight to them.
//
// K0(i, j) is the least k >= 1 such that y ast 0^(j+k) is defined and not in
// cont(x circ 1^i); K1(i, j) is the least k such that x ast 1^(i+k) is defined
// and not in cont(y circ 0^j).  Both satisfy K(i, j) = 1 + K(next cell) when
// the first letter is blocked, so a single reverse sweep fills each table.

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "transducer.hpp"
#include "word.hpp"

namespace fband {

  class KTable {
   public:
    KTable() = default;
    KTable(Bit side, std::size_t rows, std::size_t cols)
        : _side(side), _rows(rows), _cols(cols), _values(rows * cols, 0) {}

    Bit side() const noexcept {
      return _side;
    }
    // i ranges over 0..|cont(x)|, j over 0..|cont(y)|
    std::size_t rows() const noexcept {
      return _rows;
    }
    std::size_t cols() const noexcept {
      return _cols;
    }

    std::optional<std::size_t> at(std::size_t i, std::size_t j) const {
      std::uint32_t v = _values.at(index(i, j));
      return v == 0 ? std::nullopt : std::optional<std::size_t>(v);
    }

    // 0 means undefined
    std::uint32_t raw(std::size_t i, std::size_t j) const {
      return _values[index(i, j)];
    }

    void set(std::size_t i, std::size_t j, std::uint32_t v) {
      _values.at(index(i, j)) = v;
    }

   private:
    std::size_t index(std::size_t i, std::size_t j) const {
      if (i >= _rows || j >= _cols) {
        throw std::out_of_range("KTable index out of range");
      }
      return i * _cols + j;
    }

    Bit                        _side = 0;
    std::size_t                _rows = 0;
    std::size_t                _cols = 0;
    std::vector<std::uint32_t> _values;
  };

  // x_spine[i] = q_x after reading 1^i, x_letters[i] = output of its i-th
  // step (slot 0 unused); likewise for y along 0^j.
  struct BoundaryMaps {
    std::vector<StateId> x_spine;
    std::vector<StateId> y_spine;
    Word                 x_letters;
    Word                 y_letters;

    std::size_t x_content_size() const noexcept {
      return x_spine.size() - 1;
    }
    std::size_t y_content_size() const noexcept {
      return y_spine.size() - 1;
    }
  };

  namespace detail {
    inline void walk_spine(Transducer const&     t,
                           Bit                   b,
                           std::vector<StateId>& spine,
                           Word&                 letters) {
      spine.assign(1, t.initial());
      letters.assign(1, kNoLetter);
      StateId q = t.initial();
      while (!t.is_terminal(q)) {
        letters.push_back(t.out(q, b));
        q = t.target(q, b);
        spine.push_back(q);
      }
    }
  }  // namespace detail

  inline BoundaryMaps compute_boundary(Transducer const& tx, Transducer const& ty) {
    require_valid(tx);
    require_valid(ty);
    BoundaryMaps m;
    detail::walk_spine(tx, 1, m.x_spine, m.x_letters);
    detail::walk_spine(ty, 0, m.y_spine, m.y_letters);
    return m;
  }

  namespace detail {
    inline KTable compute_k(BoundaryMaps const& m, std::size_t alphabet_size, Bit side) {
      std::size_t const cx = m.x_content_size();
      std::size_t const cy = m.y_content_size();
      KTable            table(side, cx + 1, cy + 1);
      std::vector<bool> seen(alphabet_size, false);
      if (side == 0) {
        // seen = cont(x circ 1^i), growing as i decreases
        for (std::size_t i = cx + 1; i-- > 0;) {
          for (std::size_t j = cy; j-- > 0;) {
            Letter a = m.y_letters[j + 1];
            if (!seen[a]) {
              table.set(i, j, 1);
            } else if (std::uint32_t next = table.raw(i, j + 1); next != 0) {
              table.set(i, j, next + 1);
            }
          }
          if (i != 0) {
            seen[m.x_letters[i]] = true;
          }
        }
      } else {
        for (std::size_t j = cy + 1; j-- > 0;) {
          for (std::size_t i = cx; i-- > 0;) {
            Letter a = m.x_letters[i + 1];
            if (!seen[a]) {
              table.set(i, j, 1);
            } else if (std::uint32_t next = table.raw(i + 1, j); next != 0) {
              table.set(i, j, next + 1);
            }
          }
          if (j != 0) {
            seen[m.y_letters[j]] = true;
          }
        }
      }
      return table;
    }
  }  // namespace detail

  inline KTable compute_k(Transducer const& tx, Transducer const& ty, Bit side) {
    if (side > 1) {
      throw std::invalid_argument("compute_k: side must be 0 or 1");
    }
    std::size_t const m = std::max(tx.alphabet_size(), ty.alphabet_size());
    return detail::compute_k(compute_boundary(tx, ty), m, side);
  }

  inline Transducer multiply(Transducer const& tx, Transducer const& ty) {
    require_valid(tx);
    require_valid(ty);
    std::size_t const alphabet_size = std::max(tx.alphabet_size(), ty.alphabet_size());
    if (tx.is_terminal(tx.initial())) {
      return Transducer({ty.states().begin(), ty.states().end()}, ty.initial(), alphabet_size);
    }
    if (ty.is_terminal(ty.initial())) {
      return Transducer({tx.states().begin(), tx.states().end()}, tx.initial(), alphabet_size);
    }

    BoundaryMaps const m  = compute_boundary(tx, ty);
    KTable const       k0 = detail::compute_k(m, alphabet_size, 0);
    KTable const       k1 = detail::compute_k(m, alphabet_size, 1);
    std::size_t const  cx = m.x_content_size();
    std::size_t const  cy = m.y_content_size();

    // ids: states of x, then states of y, then the grid [0, cx) x [0, cy)
    StateId const      y_base    = static_cast<StateId>(tx.size());
    StateId const      grid_base = static_cast<StateId>(tx.size() + ty.size());
    std::vector<State> states;
    states.reserve(tx.size() + ty.size() + cx * cy);
    states.insert(states.end(), tx.states().begin(), tx.states().end());
    for (State s : ty.states()) {
      for (Edge& e : s.edges) {
        if (e.defined()) {
          e.target += y_base;
        }
      }
      states.push_back(s);
    }

    auto cell = [&](std::size_t i, std::size_t j) -> StateId {
      if (j == cy) {
        return m.x_spine[i];
      }
      if (i == cx) {
        return y_base + m.y_spine[j];
      }
      return grid_base + static_cast<StateId>(i * cy + j);
    };

    for (std::size_t i = 0; i < cx; ++i) {
      for (std::size_t j = 0; j < cy; ++j) {
        State s;
        if (auto k = k0.at(i, j)) {
          s.edges[0] = Edge{cell(i, j + *k), m.y_letters[j + *k]};
        } else {
          StateId p  = m.x_spine[i];
          s.edges[0] = Edge{tx.target(p, 0), tx.out(p, 0)};
        }
        if (auto k = k1.at(i, j)) {
          s.edges[1] = Edge{cell(i + *k, j), m.x_letters[i + *k]};
        } else {
          StateId p  = m.y_spine[j];
          s.edges[1] = Edge{y_base + ty.target(p, 1), ty.out(p, 1)};
        }
        states.push_back(s);
      }
    }
    return Transducer(std::move(states), cell(0, 0), alphabet_size);
  }

}  // namespace fband
