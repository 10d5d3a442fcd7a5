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

// The interval transducer of a word w = a_1 ... a_n.
//
// Its states are the intervals (i, j) such that w_(i, j) is a prefix maximal
// or suffix maximal content-k subword for some k >= 1, plus a single
// terminal sink.  An interval with k > 1 distinct letters moves on 0 to
// (i, rght_{k-1}(i)) emitting the letter just after it, and on 1 to
// (lft_{k-1}(j), j) emitting the letter just before it.  Intervals with one
// letter move to the sink on both inputs.
//
// rght_k and lft_k are filled for every k by sliding windows with a
// multiplicity counter, so construction is O(|A| * |w|).

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "transducer.hpp"
#include "word.hpp"

namespace fband {

  // Level-k slice of the maximal subword index.  Positions are 1-based and
  // vectors are indexed by position (slot 0 unused); 0 encodes "undefined".
  struct MaximalSubwords {
    std::size_t              k = 0;
    std::vector<std::size_t> rght;
    std::vector<std::size_t> lft;

    std::optional<std::size_t> right(std::size_t i) const {
      return rght.at(i) == 0 ? std::nullopt : std::optional(rght[i]);
    }
    std::optional<std::size_t> left(std::size_t j) const {
      return lft.at(j) == 0 ? std::nullopt : std::optional(lft[j]);
    }
  };

  namespace detail {
    // rght_k(i) for all i: the largest j such that w_(i, j) has exactly k
    // distinct letters, or 0 when the suffix starting at i has fewer.
    inline void fill_right(Word const&               w,
                           std::size_t               k,
                           std::vector<std::size_t>& rght,
                           std::vector<std::uint32_t>& count) {
      std::size_t const n = w.size();
      rght.assign(n + 1, 0);
      std::size_t distinct = 0;
      std::size_t j        = 0;  // window is w_(i, j)
      for (std::size_t i = 1; i <= n; ++i) {
        while (j < n && (distinct < k || count[w[j]] != 0)) {
          if (count[w[j]]++ == 0) {
            ++distinct;
          }
          ++j;
        }
        if (distinct == k) {
          rght[i] = j;
        }
        if (--count[w[i - 1]] == 0) {
          --distinct;
        }
      }
    }

    inline void fill_left(Word const&               w,
                          std::size_t               k,
                          std::vector<std::size_t>& lft,
                          std::vector<std::uint32_t>& count) {
      std::size_t const n = w.size();
      lft.assign(n + 1, 0);
      std::size_t distinct = 0;
      std::size_t i        = n + 1;  // window is w_(i, j)
      for (std::size_t j = n; j >= 1; --j) {
        while (i > 1 && (distinct < k || count[w[i - 2]] != 0)) {
          if (count[w[i - 2]]++ == 0) {
            ++distinct;
          }
          --i;
        }
        if (distinct == k) {
          lft[j] = i;
        }
        if (--count[w[j - 1]] == 0) {
          --distinct;
        }
      }
    }
  }  // namespace detail

  inline MaximalSubwords maximal_subwords(Word const& w, std::size_t k) {
    if (k == 0 || k > content(w).size()) {
      throw std::invalid_argument("maximal_subwords: k must be in [1, |content(w)|]");
    }
    std::vector<std::uint32_t> count(alphabet_size_of(w), 0);
    MaximalSubwords            result;
    result.k = k;
    detail::fill_right(w, k, result.rght, count);
    detail::fill_left(w, k, result.lft, count);
    return result;
  }

  enum class IntervalStates {
    // every prefix or suffix maximal interval, as in the textbook definition
    all,
    // only the intervals reachable from (1, n)
    reachable,
  };

  inline Transducer interval_transducer(Word const&    w,
                                        std::size_t    alphabet_size = 0,
                                        IntervalStates which = IntervalStates::all) {
    alphabet_size = std::max(alphabet_size, alphabet_size_of(w));
    std::size_t const n = w.size();
    if (n == 0) {
      return Transducer(std::vector<State>(1, State{true, {}}), 0, alphabet_size);
    }

    std::vector<std::uint32_t> count(alphabet_size, 0);
    std::size_t                kmax = 0;
    for (Letter a : w) {
      if (count[a]++ == 0) {
        ++kmax;
      }
    }
    std::fill(count.begin(), count.end(), 0);

    // rght[k][i], lft[k][j] for k = 1..kmax
    std::vector<std::vector<std::size_t>> rght(kmax + 1), lft(kmax + 1);
    for (std::size_t k = 1; k <= kmax; ++k) {
      detail::fill_right(w, k, rght[k], count);
      detail::fill_left(w, k, lft[k], count);
    }

    // State ids: prefix_id[k][i] for (i, rght_k(i)), suffix_id[k][j] for
    // (lft_k(j), j).  A suffix maximal interval that is also prefix maximal
    // shares the prefix id.
    std::vector<std::vector<StateId>> prefix_id(kmax + 1), suffix_id(kmax + 1);
    for (std::size_t k = 1; k <= kmax; ++k) {
      prefix_id[k].assign(n + 1, kNoState);
      suffix_id[k].assign(n + 1, kNoState);
    }

    std::vector<State> states;
    states.push_back(State{true, {}});  // the sink
    constexpr StateId sink = 0;

    struct Interval {
      std::size_t i, j, k;
    };
    std::vector<Interval> intervals{{0, 0, 0}};

    auto new_state = [&](std::size_t i, std::size_t j, std::size_t k) {
      states.push_back(State{});
      intervals.push_back({i, j, k});
      return static_cast<StateId>(states.size() - 1);
    };

    auto prefix_state = [&](std::size_t k, std::size_t i) {
      StateId& id = prefix_id[k][i];
      if (id == kNoState) {
        id = new_state(i, rght[k][i], k);
      }
      return id;
    };

    auto suffix_state = [&](std::size_t k, std::size_t j) {
      StateId& id = suffix_id[k][j];
      if (id == kNoState) {
        std::size_t i = lft[k][j];
        id = rght[k][i] == j ? prefix_state(k, i) : new_state(i, j, k);
      }
      return id;
    };

    auto connect = [&](StateId q) {
      auto [i, j, k] = intervals[q];
      if (k == 1) {
        states[q].edges[0] = Edge{sink, w[i - 1]};
        states[q].edges[1] = Edge{sink, w[i - 1]};
        return;
      }
      std::size_t r = rght[k - 1][i];
      std::size_t l = lft[k - 1][j];
      // r < j and l > i since w_(i, j) has k > k - 1 distinct letters
      StateId t0 = prefix_state(k - 1, i);
      StateId t1 = suffix_state(k - 1, j);
      states[q].edges[0] = Edge{t0, w[r]};
      states[q].edges[1] = Edge{t1, w[l - 2]};
    };

    StateId initial = prefix_state(kmax, 1);  // rght_kmax(1) = n
    if (which == IntervalStates::all) {
      for (std::size_t k = kmax; k >= 1; --k) {
        for (std::size_t i = 1; i <= n; ++i) {
          if (rght[k][i] != 0) {
            prefix_state(k, i);
          }
        }
        for (std::size_t j = 1; j <= n; ++j) {
          if (lft[k][j] != 0) {
            suffix_state(k, j);
          }
        }
      }
    }
    // Connecting may create new states (reachable mode); they are appended
    // and picked up by the same loop.
    for (StateId q = 1; q < states.size(); ++q) {
      connect(q);
    }
    return Transducer(std::move(states), initial, alphabet_size);
  }

}  // namespace fband
