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

// Short-lex least representative of the element realised by a minimal
// transducer.
//
// min(w) is glued together from s = min(w circ 0)(w ast 0) and
// t = (w ast 1)min(w circ 1).  The two pieces overlap in at most one way:
//
//   I    w ast 0 = w ast 1, and the overlap is that single letter;
//   II   the overlap is (w ast 1)min(w circ 01^k)(w ast 0) for the unique k
//        with w circ 01^k = w circ 10^k and matching ast letters;
//   III  no overlap at all.
//
// min_word walks the transducer depth first, appending to a single buffer
// and remembering for each finished state the span of the buffer spelling
// its minimal word, so every state is expanded once.

#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "interval.hpp"
#include "minimize.hpp"
#include "transducer.hpp"
#include "word.hpp"

namespace fband {

  struct OverlapCase {
    enum Kind { I = 1, II = 2, III = 3 };

    Kind        kind;
    // the k of case II; level(q) for the other two cases
    std::size_t k;

    friend bool operator==(OverlapCase const&, OverlapCase const&) = default;
  };

  inline OverlapCase classify_case(Transducer const& t, StateId q) {
    if (t.is_terminal(q)) {
      throw std::invalid_argument("classify_case: state is terminal");
    }
    std::size_t const level = t.level(q);
    if (t.out(q, 0) == t.out(q, 1)) {
      return {OverlapCase::I, level};
    }
    StateId u = t.target(q, 0);
    StateId v = t.target(q, 1);
    for (std::size_t k = 1; k <= level; ++k) {
      if (t.is_terminal(u) || t.is_terminal(v)) {
        break;
      }
      if (t.out(u, 1) == t.out(q, 1) && t.out(v, 0) == t.out(q, 0)
          && t.target(u, 1) == t.target(v, 0)) {
        return {OverlapCase::II, k};
      }
      u = t.target(u, 1);
      v = t.target(v, 0);
    }
    return {OverlapCase::III, level};
  }

  namespace detail {
    struct MinWordRun {
      Transducer const&                               t;
      Word                                            w;
      // 1-based span of w spelling min of each finished state; (0, 0) for
      // terminals and for states not yet finished, told apart by done
      std::vector<std::pair<std::size_t, std::size_t>> memo;
      std::vector<bool>                                done;

      explicit MinWordRun(Transducer const& tt)
          : t(tt), memo(tt.size(), {0, 0}), done(tt.size(), false) {
        for (StateId q = 0; q < t.size(); ++q) {
          done[q] = t.is_terminal(q);
        }
      }

      void append_span(std::size_t i, std::size_t j) {
        if (i == 0 || i > j) {
          return;
        }
        // w grows while we copy from it, so copy by index
        w.reserve(w.size() + (j - i + 1));
        for (std::size_t p = i; p <= j; ++p) {
          w.push_back(w[p - 1]);
        }
      }

      std::size_t span_length(StateId q) const {
        auto [i, j] = memo[q];
        return (i == 0 || i > j) ? 0 : j - i + 1;
      }

      // Appends min(q) minus its first l letters, which w already ends with.
      void run(StateId q, std::size_t l) {
        std::size_t const s = w.size() - l + 1;
        if (done[q]) {
          auto [i, j] = memo[q];
          append_span(i + l, j);
          return;
        }
        run(t.target(q, 0), l);
        OverlapCase c  = classify_case(t, q);
        std::size_t l1 = 0;
        if (c.kind == OverlapCase::I) {
          w.push_back(t.out(q, 0));
        } else if (c.kind == OverlapCase::II) {
          // the state reached from q by 0 1^k is already finished
          StateId p = t.target(q, 0);
          for (std::size_t n = 0; n < c.k; ++n) {
            p = t.target(p, 1);
          }
          l1 = span_length(p);
        } else {
          w.push_back(t.out(q, 0));
          w.push_back(t.out(q, 1));
        }
        run(t.target(q, 1), l1);
        memo[q] = {s, w.size()};
        done[q] = true;
      }
    };
  }  // namespace detail

  inline Word min_word(Transducer const& t) {
    if (!is_minimal(t)) {
      throw std::invalid_argument("min_word: transducer must be minimal");
    }
    detail::MinWordRun r(t);
    r.run(t.initial(), 0);
    return std::move(r.w);
  }

  // min(w), through the interval transducer.
  inline Word normalize(Word const& w) {
    return min_word(minimize(interval_transducer(w, 0, IntervalStates::reachable)));
  }

}  // namespace fband
