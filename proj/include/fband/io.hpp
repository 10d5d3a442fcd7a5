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

// Text formats.
//
// Words are written either as character strings, with a-z, A-Z, 0-9 standing
// for letters 0..61 in that order, or as comma separated integers.
//
// Transducers use a line based format:
//
//   FBT 1 <nstates> <initial> <alphabet_size>
//   <id> <terminal 0|1> <t0_target|-> <t0_out|-> <t1_target|-> <t1_out|->
//   ...
//
// and can be exported to Graphviz, with edges labelled "input|output".

#pragma once

#include <charconv>
#include <cstddef>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "transducer.hpp"
#include "word.hpp"

namespace fband {

  // Thrown for malformed textual input.
  class ParseError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  inline constexpr std::string_view kLetterChars
      = "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789";

  enum class WordFormat { chars, ints };

  inline Word parse_word(std::string_view s, WordFormat fmt = WordFormat::chars) {
    Word w;
    if (fmt == WordFormat::chars) {
      w.reserve(s.size());
      for (char ch : s) {
        auto p = kLetterChars.find(ch);
        if (p == std::string_view::npos) {
          throw ParseError(std::string("unknown letter '") + ch + "'");
        }
        w.push_back(static_cast<Letter>(p));
      }
      return w;
    }
    if (s.empty()) {
      return w;
    }
    std::size_t pos = 0;
    while (true) {
      std::size_t      comma = s.find(',', pos);
      std::string_view tok   = s.substr(pos, comma == std::string_view::npos ? s.npos : comma - pos);
      unsigned long long v   = 0;
      auto [end, ec]         = std::from_chars(tok.data(), tok.data() + tok.size(), v);
      if (tok.empty() || ec != std::errc{} || end != tok.data() + tok.size()) {
        throw ParseError("bad integer token '" + std::string(tok) + "'");
      }
      if (v >= kMaxAlphabetSize) {
        throw ParseError("letter " + std::string(tok) + " exceeds the alphabet limit of "
                         + std::to_string(kMaxAlphabetSize));
      }
      w.push_back(static_cast<Letter>(v));
      if (comma == std::string_view::npos) {
        break;
      }
      pos = comma + 1;
    }
    return w;
  }

  inline std::string format_word(Word const& w, WordFormat fmt = WordFormat::chars) {
    std::string s;
    if (fmt == WordFormat::chars) {
      for (Letter a : w) {
        if (a >= kLetterChars.size()) {
          throw std::out_of_range("letter " + std::to_string(a) + " has no character form");
        }
        s.push_back(kLetterChars[a]);
      }
      return s;
    }
    for (std::size_t p = 0; p < w.size(); ++p) {
      if (p != 0) {
        s.push_back(',');
      }
      s += std::to_string(w[p]);
    }
    return s;
  }

  inline void write_fbt(std::ostream& os, Transducer const& t) {
    os << "FBT 1 " << t.size() << ' ' << t.initial() << ' ' << t.alphabet_size() << '\n';
    for (StateId q = 0; q < t.size(); ++q) {
      State const& s = t.state(q);
      os << q << ' ' << (s.terminal ? 1 : 0);
      for (Edge const& e : s.edges) {
        if (e.defined()) {
          os << ' ' << e.target << ' ' << e.out;
        } else {
          os << " - -";
        }
      }
      os << '\n';
    }
  }

  inline std::string to_fbt(Transducer const& t) {
    std::ostringstream os;
    write_fbt(os, t);
    return os.str();
  }

  namespace detail {
    inline std::uint64_t parse_number(std::string const& tok, std::string_view what) {
      std::uint64_t v = 0;
      auto [end, ec]  = std::from_chars(tok.data(), tok.data() + tok.size(), v);
      if (tok.empty() || ec != std::errc{} || end != tok.data() + tok.size()) {
        throw ParseError("FBT: bad " + std::string(what) + " '" + tok + "'");
      }
      return v;
    }
  }  // namespace detail

  // Reads an FBT document.  The result is not validated; call validate or
  // require_valid on it.
  inline Transducer read_fbt(std::istream& is) {
    std::string magic, version, tok;
    if (!(is >> magic >> version) || magic != "FBT" || version != "1") {
      throw ParseError("FBT: missing 'FBT 1' header");
    }
    std::string n_tok, init_tok, m_tok;
    if (!(is >> n_tok >> init_tok >> m_tok)) {
      throw ParseError("FBT: truncated header");
    }
    std::uint64_t const n       = detail::parse_number(n_tok, "state count");
    std::uint64_t const initial = detail::parse_number(init_tok, "initial state");
    std::uint64_t const m       = detail::parse_number(m_tok, "alphabet size");
    if (n == 0 || n >= kNoState) {
      throw ParseError("FBT: state count out of range");
    }
    if (initial >= n) {
      throw ParseError("FBT: initial state out of range");
    }
    if (m > kMaxAlphabetSize) {
      throw ParseError("FBT: alphabet size out of range");
    }
    std::vector<State> states(n);
    std::vector<bool>  seen(n, false);
    for (std::uint64_t line = 0; line < n; ++line) {
      std::string f[6];
      for (auto& x : f) {
        if (!(is >> x)) {
          throw ParseError("FBT: truncated state table");
        }
      }
      std::uint64_t const id = detail::parse_number(f[0], "state id");
      if (id >= n || seen[id]) {
        throw ParseError("FBT: bad or repeated state id " + f[0]);
      }
      seen[id] = true;
      if (f[1] != "0" && f[1] != "1") {
        throw ParseError("FBT: terminal flag must be 0 or 1");
      }
      State& s   = states[id];
      s.terminal = f[1] == "1";
      for (std::size_t b = 0; b < 2; ++b) {
        std::string const& tgt = f[2 + 2 * b];
        std::string const& out = f[3 + 2 * b];
        if ((tgt == "-") != (out == "-")) {
          throw ParseError("FBT: target and output of an edge must both be given or both be '-'");
        }
        if (tgt == "-") {
          continue;
        }
        std::uint64_t t = detail::parse_number(tgt, "target");
        std::uint64_t a = detail::parse_number(out, "output letter");
        if (t >= n) {
          throw ParseError("FBT: target " + tgt + " out of range");
        }
        if (a >= m) {
          throw ParseError("FBT: output letter " + out + " out of range");
        }
        s.edges[b] = Edge{static_cast<StateId>(t), static_cast<Letter>(a)};
      }
    }
    if (is >> tok) {
      throw ParseError("FBT: trailing data '" + tok + "'");
    }
    return Transducer(std::move(states), static_cast<StateId>(initial), m);
  }

  inline Transducer from_fbt(std::string const& text) {
    std::istringstream is(text);
    return read_fbt(is);
  }

  // Graphviz rendering; letters are printed in character form when they have
  // one and as integers otherwise.
  inline void write_dot(std::ostream& os, Transducer const& t) {
    auto letter = [](Letter a) {
      return a < kLetterChars.size() ? std::string(1, kLetterChars[a]) : std::to_string(a);
    };
    os << "digraph transducer {\n  rankdir=TB;\n  start [shape=point];\n";
    for (StateId q = 0; q < t.size(); ++q) {
      os << "  " << q << " [shape=" << (t.is_terminal(q) ? "doublecircle" : "circle") << "];\n";
    }
    os << "  start -> " << t.initial() << ";\n";
    for (StateId q = 0; q < t.size(); ++q) {
      for (Bit b : {Bit(0), Bit(1)}) {
        Edge const& e = t.state(q).edges[b];
        if (e.defined()) {
          os << "  " << q << " -> " << e.target << " [label=\"" << int(b) << '|' << letter(e.out)
             << "\"];\n";
        }
      }
    }
    os << "}\n";
  }

  inline std::string to_dot(Transducer const& t) {
    std::ostringstream os;
    write_dot(os, t);
    return os.str();
  }

}  // namespace fband
