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

// Minimization of acyclic transducers and isomorphism of trim transducers.
//
// In an acyclic machine two states can only be equivalent when they sit at
// the same level, and states at level L are equivalent exactly when their
// signatures (terminal flag, class and output of each edge) agree once the
// states at lower levels have been collapsed (Revuz).  minimize therefore
// sweeps the levels upwards, merging by hashed signature, and then renumbers
// the quotient breadth first from the initial state (0-edge before 1-edge)
// so that the result is canonical.

#pragma once

#include <cstddef>
#include <cstdint>
#include <deque>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "interval.hpp"
#include "transducer.hpp"
#include "word.hpp"

namespace fband {

  namespace detail {
    struct Signature {
      StateId t0, t1;
      Letter  o0, o1;

      friend bool operator==(Signature const&, Signature const&) = default;
    };

    struct SignatureHash {
      std::size_t operator()(Signature const& s) const noexcept {
        std::uint64_t h = (std::uint64_t(s.t0) << 32) ^ s.t1;
        h ^= (std::uint64_t(s.o0) << 17) ^ (std::uint64_t(s.o1) << 43);
        h *= 0x9E3779B97F4A7C15ULL;
        return static_cast<std::size_t>(h ^ (h >> 29));
      }
    };

    inline Signature signature(State const& s, std::vector<StateId> const& cls) {
      return {cls[s.edges[0].target], cls[s.edges[1].target], s.edges[0].out, s.edges[1].out};
    }

    // Renumbers states breadth first from the initial state, 0-edge first.
    // Assumes every state is reachable.
    inline Transducer canonical_numbering(Transducer const& t) {
      std::vector<StateId> order(t.size(), kNoState);
      std::vector<StateId> queue;
      queue.reserve(t.size());
      queue.push_back(t.initial());
      order[t.initial()] = 0;
      for (std::size_t head = 0; head < queue.size(); ++head) {
        for (Edge const& e : t.state(queue[head]).edges) {
          if (e.defined() && order[e.target] == kNoState) {
            order[e.target] = static_cast<StateId>(queue.size());
            queue.push_back(e.target);
          }
        }
      }
      std::vector<State> states(queue.size());
      for (std::size_t p = 0; p < queue.size(); ++p) {
        State s = t.state(queue[p]);
        for (Edge& e : s.edges) {
          if (e.defined()) {
            e.target = order[e.target];
          }
        }
        states[p] = s;
      }
      return Transducer(std::move(states), 0, t.alphabet_size());
    }
  }  // namespace detail

  inline Transducer minimize(Transducer const& input) {
    require_valid(input);
    Transducer const t = trim(input);
    std::size_t const n = t.size();

    // bucket states by level
    std::size_t              top = t.level(t.initial());
    std::vector<std::size_t> start(top + 2, 0);
    for (StateId q = 0; q < n; ++q) {
      ++start[t.level(q) + 1];
    }
    for (std::size_t l = 0; l <= top; ++l) {
      start[l + 1] += start[l];
    }
    std::vector<StateId> by_level(n);
    {
      std::vector<std::size_t> fill(start.begin(), start.end() - 1);
      for (StateId q = 0; q < n; ++q) {
        by_level[fill[t.level(q)]++] = q;
      }
    }

    std::vector<StateId> cls(n, kNoState);
    std::vector<State>   classes;
    // level 0 holds only terminals, which all collapse into one class
    classes.push_back(State{true, {}});
    for (std::size_t p = start[0]; p < start[1]; ++p) {
      cls[by_level[p]] = 0;
    }
    std::unordered_map<detail::Signature, StateId, detail::SignatureHash> seen;
    for (std::size_t l = 1; l <= top; ++l) {
      seen.clear();
      seen.reserve(start[l + 1] - start[l]);
      for (std::size_t p = start[l]; p < start[l + 1]; ++p) {
        StateId      q   = by_level[p];
        State const& s   = t.state(q);
        auto         sig = detail::signature(s, cls);
        auto [it, fresh] = seen.try_emplace(sig, static_cast<StateId>(classes.size()));
        if (fresh) {
          State c;
          c.edges[0] = Edge{sig.t0, sig.o0};
          c.edges[1] = Edge{sig.t1, sig.o1};
          classes.push_back(c);
        }
        cls[q] = it->second;
      }
    }
    Transducer quotient(std::move(classes), cls[t.initial()], t.alphabet_size());
    return detail::canonical_numbering(quotient);
  }

  // True when the transducer is trim and no two states are equivalent.
  inline bool is_minimal(Transducer const& t) {
    if (!t.valid() || !is_trim(t)) {
      return false;
    }
    std::size_t terminals = 0;
    std::unordered_set<detail::Signature, detail::SignatureHash> seen;
    std::vector<StateId> identity(t.size());
    for (StateId q = 0; q < t.size(); ++q) {
      identity[q] = q;
    }
    for (StateId q = 0; q < t.size(); ++q) {
      if (t.is_terminal(q)) {
        if (++terminals > 1) {
          return false;
        }
      } else if (!seen.insert(detail::signature(t.state(q), identity)).second) {
        return false;
      }
    }
    return true;
  }

  // Isomorphism of trim transducers: walk both machines in parallel from
  // their initial states, matching edges by (input, output) and growing a
  // bijection between the states.
  inline bool isomorphic(Transducer const& a, Transducer const& b) {
    if (!is_trim(a) || !is_trim(b)) {
      throw std::invalid_argument("isomorphic: both transducers must be trim");
    }
    if (a.size() != b.size()) {
      return false;
    }
    std::vector<StateId> fwd(a.size(), kNoState), bwd(b.size(), kNoState);
    std::vector<std::pair<StateId, StateId>> todo{{a.initial(), b.initial()}};
    fwd[a.initial()] = b.initial();
    bwd[b.initial()] = a.initial();
    while (!todo.empty()) {
      auto [p, q] = todo.back();
      todo.pop_back();
      State const& sp = a.state(p);
      State const& sq = b.state(q);
      if (sp.terminal != sq.terminal) {
        return false;
      }
      for (Bit x : {Bit(0), Bit(1)}) {
        Edge const& ep = sp.edges[x];
        Edge const& eq = sq.edges[x];
        if (ep.defined() != eq.defined()) {
          return false;
        }
        if (!ep.defined()) {
          continue;
        }
        if (ep.out != eq.out) {
          return false;
        }
        StateId& f = fwd[ep.target];
        StateId& g = bwd[eq.target];
        if (f == kNoState && g == kNoState) {
          f = eq.target;
          g = ep.target;
          todo.emplace_back(ep.target, eq.target);
        } else if (f != eq.target || g != ep.target) {
          return false;
        }
      }
    }
    return true;
  }

  inline bool equal_transducers(Transducer const& a, Transducer const& b) {
    return isomorphic(minimize(a), minimize(b));
  }

  // u ~ v in the free band with identity.
  inline bool equal_in_free_band(Word const& u, Word const& v) {
    std::size_t const m = std::max(alphabet_size_of(u), alphabet_size_of(v));
    return isomorphic(minimize(interval_transducer(u, m, IntervalStates::reachable)),
                      minimize(interval_transducer(v, m, IntervalStates::reachable)));
  }

}  // namespace fband
