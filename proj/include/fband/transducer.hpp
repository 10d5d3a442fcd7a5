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

// Deterministic synchronous transducers with input alphabet {0, 1} and
// letter outputs.  A transducer *represents* an element x of the free band
// when the output along every accepted input equals f_x of that input.
//
// States live in a flat array with two inline transition slots.  Transducers
// are immutable once built; levels (the common length of every path from a
// state to a terminal) are computed on construction whenever the machine is
// well formed, and `validate` reports the first defect otherwise.

#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "word.hpp"

namespace fband {

  using StateId = std::uint32_t;

  inline constexpr StateId kNoState  = std::numeric_limits<StateId>::max();
  inline constexpr Letter  kNoLetter = std::numeric_limits<Letter>::max();

  struct Edge {
    StateId target = kNoState;
    Letter  out    = kNoLetter;

    bool defined() const noexcept {
      return target != kNoState;
    }
    friend bool operator==(Edge const&, Edge const&) = default;
  };

  struct State {
    bool                terminal = false;
    std::array<Edge, 2> edges{};

    friend bool operator==(State const&, State const&) = default;
  };

  enum class ViolationKind {
    bad_initial,
    dangling_target,
    letter_out_of_range,
    paired_definedness,
    terminal_with_edges,
    missing_transition,
    cycle,
    non_uniform_depth,
  };

  struct Violation {
    ViolationKind kind;
    StateId       state;
    std::string   message;
  };

  class Transducer {
   public:
    Transducer() : Transducer(std::vector<State>(1, State{true, {}}), 0, 0) {}

    Transducer(std::vector<State> states,
               StateId            initial,
               std::size_t        alphabet_size)
        : _states(std::move(states)),
          _initial(initial),
          _alphabet_size(alphabet_size) {
      analyse();
    }

    std::size_t size() const noexcept {
      return _states.size();
    }

    StateId initial() const noexcept {
      return _initial;
    }

    std::size_t alphabet_size() const noexcept {
      return _alphabet_size;
    }

    std::span<State const> states() const noexcept {
      return _states;
    }

    State const& state(StateId q) const {
      return _states.at(q);
    }

    bool is_terminal(StateId q) const {
      return _states[q].terminal;
    }

    StateId target(StateId q, Bit b) const {
      return _states[q].edges[b].target;
    }

    Letter out(StateId q, Bit b) const {
      return _states[q].edges[b].out;
    }

    // nullopt when the transducer is well formed.
    std::optional<Violation> const& violation() const noexcept {
      return _violation;
    }

    bool valid() const noexcept {
      return !_violation.has_value();
    }

    // Number of transitions on any path from q to a terminal.  Only
    // available for valid transducers.
    std::size_t level(StateId q) const {
      if (!valid()) {
        throw std::logic_error("levels are undefined for an invalid transducer: "
                               + _violation->message);
      }
      return _levels[q];
    }

   private:
    void analyse();
    void fail(ViolationKind kind, StateId q, std::string msg) {
      if (!_violation) {
        _violation = Violation{kind, q, std::move(msg)};
      }
    }

    std::vector<State>       _states;
    StateId                  _initial;
    std::size_t              _alphabet_size;
    std::vector<std::size_t> _levels;
    std::optional<Violation> _violation;
  };

  // Single-owner helper for building transducers state by state.
  class TransducerBuilder {
   public:
    explicit TransducerBuilder(std::size_t alphabet_size = 0)
        : _alphabet_size(alphabet_size) {}

    StateId add_state(bool terminal = false) {
      _states.push_back(State{terminal, {}});
      return static_cast<StateId>(_states.size() - 1);
    }

    TransducerBuilder& set_edge(StateId q, Bit b, StateId target, Letter out) {
      _states.at(q).edges[b] = Edge{target, out};
      if (out != kNoLetter && out >= _alphabet_size) {
        _alphabet_size = static_cast<std::size_t>(out) + 1;
      }
      return *this;
    }

    TransducerBuilder& set_terminal(StateId q, bool value = true) {
      _states.at(q).terminal = value;
      return *this;
    }

    TransducerBuilder& set_initial(StateId q) {
      _initial = q;
      return *this;
    }

    std::size_t size() const noexcept {
      return _states.size();
    }

    Transducer build() && {
      return Transducer(std::move(_states), _initial, _alphabet_size);
    }

    Transducer build() const& {
      return Transducer(_states, _initial, _alphabet_size);
    }

   private:
    std::vector<State> _states;
    StateId            _initial = 0;
    std::size_t        _alphabet_size;
  };

  inline void Transducer::analyse() {
    std::size_t const n = _states.size();
    if (_initial >= n) {
      fail(ViolationKind::bad_initial, _initial, "initial state out of range");
      return;
    }
    for (StateId q = 0; q < n; ++q) {
      auto const& s = _states[q];
      for (Bit b : {Bit(0), Bit(1)}) {
        Edge const& e = s.edges[b];
        if (e.defined() != (e.out != kNoLetter)) {
          fail(ViolationKind::paired_definedness,
               q,
               "state " + std::to_string(q) + ": state and letter transitions on "
                   + std::to_string(b) + " must be defined together");
          return;
        }
        if (e.defined() && e.target >= n) {
          fail(ViolationKind::dangling_target,
               q,
               "state " + std::to_string(q) + ": transition target out of range");
          return;
        }
        if (e.defined() && e.out >= _alphabet_size) {
          fail(ViolationKind::letter_out_of_range,
               q,
               "state " + std::to_string(q) + ": output letter out of range");
          return;
        }
      }
      if (s.terminal && (s.edges[0].defined() || s.edges[1].defined())) {
        fail(ViolationKind::terminal_with_edges,
             q,
             "state " + std::to_string(q) + ": terminal state has transitions");
        return;
      }
      if (!s.terminal && (!s.edges[0].defined() || !s.edges[1].defined())) {
        fail(ViolationKind::missing_transition,
             q,
             "state " + std::to_string(q)
                 + ": non-terminal state needs both transitions");
        return;
      }
    }

    // Iterative post-order DFS; grey states on the stack detect cycles.
    constexpr std::size_t kUnset = std::numeric_limits<std::size_t>::max();
    std::vector<std::size_t>   levels(n, kUnset);
    std::vector<std::uint8_t>  colour(n, 0);  // 0 white, 1 grey, 2 black
    std::vector<std::pair<StateId, int>> stack;
    for (StateId root = 0; root < n; ++root) {
      if (colour[root] != 0) {
        continue;
      }
      stack.emplace_back(root, 0);
      colour[root] = 1;
      while (!stack.empty()) {
        auto& [q, next] = stack.back();
        auto const& s   = _states[q];
        if (!s.terminal && next < 2) {
          StateId t = s.edges[next].target;
          ++next;
          if (colour[t] == 1) {
            fail(ViolationKind::cycle,
                 t,
                 "state " + std::to_string(t) + " lies on a cycle");
            return;
          }
          if (colour[t] == 0) {
            colour[t] = 1;
            stack.emplace_back(t, 0);
          }
          continue;
        }
        if (s.terminal) {
          levels[q] = 0;
        } else {
          std::size_t l0 = levels[s.edges[0].target];
          std::size_t l1 = levels[s.edges[1].target];
          if (l0 != l1) {
            fail(ViolationKind::non_uniform_depth,
                 q,
                 "state " + std::to_string(q)
                     + ": paths to terminals have different lengths");
            return;
          }
          levels[q] = l0 + 1;
        }
        colour[q] = 2;
        stack.pop_back();
      }
    }
    _levels = std::move(levels);
  }

  inline std::optional<Violation> validate(Transducer const& t) {
    return t.violation();
  }

  inline void require_valid(Transducer const& t) {
    if (!t.valid()) {
      throw std::invalid_argument("malformed transducer: "
                                  + t.violation()->message);
    }
  }

  // A transducer together with a state treated as its initial state.  Shares
  // the states of the underlying transducer.
  struct RootedView {
    Transducer const* transducer;
    StateId           root;
  };

  inline RootedView rooted_at(Transducer const& t, StateId q) {
    if (q >= t.size()) {
      throw std::out_of_range("rooted_at: state out of range");
    }
    return RootedView{&t, q};
  }

  inline std::optional<StateId> step(Transducer const& t,
                                     StateId           q,
                                     Bits const&       alpha) {
    if (q >= t.size()) {
      throw std::out_of_range("step: state out of range");
    }
    for (Bit b : alpha) {
      q = t.target(q, b);
      if (q == kNoState) {
        return std::nullopt;
      }
    }
    return q;
  }

  // Letters emitted along alpha from q; the empty input has no output.
  inline std::optional<Word> output(Transducer const& t,
                                    StateId           q,
                                    Bits const&       alpha) {
    if (q >= t.size()) {
      throw std::out_of_range("output: state out of range");
    }
    if (alpha.empty()) {
      return std::nullopt;
    }
    Word w;
    w.reserve(alpha.size());
    for (Bit b : alpha) {
      Edge const& e = t.state(q).edges[b];
      if (!e.defined()) {
        return std::nullopt;
      }
      w.push_back(e.out);
      q = e.target;
    }
    return w;
  }

  // Exhaustively checks that the view realizes f_w.  Inputs are enumerated,
  // so |content(w)| is limited by max_content.
  inline bool realizes(RootedView v, Word const& w, std::size_t max_content = 20) {
    Transducer const& t = *v.transducer;
    std::size_t const k = content(w).size();
    if (k > max_content) {
      throw std::length_error("realizes: content too large to enumerate");
    }
    if (!t.valid() || t.level(v.root) != k) {
      return false;
    }
    if (k == 0) {
      return t.is_terminal(v.root);
    }
    Bits alpha(k, 0);
    for (std::uint64_t code = 0; code < (std::uint64_t(1) << k); ++code) {
      for (std::size_t p = 0; p < k; ++p) {
        alpha[p] = static_cast<Bit>((code >> (k - 1 - p)) & 1);
      }
      auto end = step(t, v.root, alpha);
      if (!end || !t.is_terminal(*end)) {
        return false;
      }
      if (output(t, v.root, alpha) != f_eval(w, alpha)) {
        return false;
      }
    }
    return true;
  }

  inline bool realizes(Transducer const& t, Word const& w, std::size_t max_content = 20) {
    return realizes(RootedView{&t, t.initial()}, w, max_content);
  }

  // Complete binary tree on {0,1}^{<=k}: the state for the bit string p has
  // its b-edge labelled w ast pb.  Realizes f_w by construction.
  inline Transducer treelike(Word const& w, std::size_t alphabet_size = 0) {
    std::size_t const k = content(w).size();
    if (k >= 31) {
      throw std::length_error("treelike: content too large");
    }
    alphabet_size = std::max(alphabet_size, alphabet_size_of(w));
    TransducerBuilder builder(alphabet_size);
    // Heap numbering: state s has children 2s+1 (input 0) and 2s+2 (input 1).
    std::size_t const n = (std::size_t(1) << (k + 1)) - 1;
    for (std::size_t s = 0; s < n; ++s) {
      builder.add_state();
    }
    // Iterate the prefixes breadth first, tracking each node's word.
    std::vector<Word> node_word(n);
    node_word[0] = w;
    for (std::size_t s = 0; s < n; ++s) {
      if (node_word[s].empty()) {
        builder.set_terminal(static_cast<StateId>(s));
        continue;
      }
      for (Bit b : {Bit(0), Bit(1)}) {
        std::size_t child = 2 * s + 1 + b;
        Letter      a     = detail::ast_step(node_word[s], b);
        node_word[child]  = detail::circ_step(node_word[s], b);
        builder.set_edge(static_cast<StateId>(s),
                         b,
                         static_cast<StateId>(child),
                         a);
      }
      node_word[s].clear();
      node_word[s].shrink_to_fit();
    }
    builder.set_initial(0);
    return std::move(builder).build();
  }

  namespace detail {
    // Marks states reachable from `from` along edges (forward) or against
    // them (backward, seeded with every terminal).
    inline std::vector<bool> forward_reachable(Transducer const& t, StateId from) {
      std::vector<bool>    seen(t.size(), false);
      std::vector<StateId> todo{from};
      seen[from] = true;
      while (!todo.empty()) {
        StateId q = todo.back();
        todo.pop_back();
        for (Edge const& e : t.state(q).edges) {
          if (e.defined() && e.target < t.size() && !seen[e.target]) {
            seen[e.target] = true;
            todo.push_back(e.target);
          }
        }
      }
      return seen;
    }

    inline std::vector<bool> coreachable(Transducer const& t) {
      std::size_t const             n = t.size();
      std::vector<std::vector<StateId>> preds(n);
      std::vector<StateId>          todo;
      std::vector<bool>             seen(n, false);
      for (StateId q = 0; q < n; ++q) {
        for (Edge const& e : t.state(q).edges) {
          if (e.defined() && e.target < n) {
            preds[e.target].push_back(q);
          }
        }
        if (t.is_terminal(q)) {
          seen[q] = true;
          todo.push_back(q);
        }
      }
      while (!todo.empty()) {
        StateId q = todo.back();
        todo.pop_back();
        for (StateId p : preds[q]) {
          if (!seen[p]) {
            seen[p] = true;
            todo.push_back(p);
          }
        }
      }
      return seen;
    }
  }  // namespace detail

  inline bool is_trim(Transducer const& t) {
    auto fwd = detail::forward_reachable(t, t.initial());
    auto bwd = detail::coreachable(t);
    for (std::size_t q = 0; q < t.size(); ++q) {
      if (!fwd[q] || !bwd[q]) {
        return false;
      }
    }
    return true;
  }

  // Keeps the states that lie on some initial-to-terminal path.  Edges into
  // discarded states are dropped; the kept states are renumbered in their
  // original relative order.
  inline Transducer trim(Transducer const& t) {
    if (t.initial() >= t.size()) {
      throw std::invalid_argument("trim: initial state out of range");
    }
    auto fwd = detail::forward_reachable(t, t.initial());
    auto bwd = detail::coreachable(t);
    if (!bwd[t.initial()]) {
      throw std::invalid_argument("trim: no terminal state is reachable");
    }
    std::vector<StateId> remap(t.size(), kNoState);
    std::vector<State>   kept;
    for (StateId q = 0; q < t.size(); ++q) {
      if (fwd[q] && bwd[q]) {
        remap[q] = static_cast<StateId>(kept.size());
        kept.push_back(t.state(q));
      }
    }
    for (State& s : kept) {
      for (Edge& e : s.edges) {
        if (e.defined()) {
          StateId r = e.target < t.size() ? remap[e.target] : kNoState;
          e         = r == kNoState ? Edge{} : Edge{r, e.out};
        }
      }
    }
    return Transducer(std::move(kept), remap[t.initial()], t.alphabet_size());
  }

}  // namespace fband
