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

// Words over a dense integer alphabet and the prefix/suffix calculus that
// characterises equality in the free band:
//
//   circ(w, 0)  longest prefix of w with one fewer distinct letter
//   circ(w, 1)  longest suffix of w with one fewer distinct letter
//   ast(w, 0)   the letter immediately after circ(w, 0)
//   ast(w, 1)   the letter immediately before circ(w, 1)
//
// Both extend to bit strings by left folding, and f_eval(w, bits) records the
// ast letters met along a full-length path.  Undefined results are returned
// as std::nullopt.

#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string_view>
#include <vector>

namespace fband {

  using Letter = std::uint32_t;
  using Word   = std::vector<Letter>;
  using Bit    = std::uint8_t;
  using Bits   = std::vector<Bit>;

  // Sorted, duplicate free.
  using Content = std::vector<Letter>;

  // Letters are dense integers, so anything at or above this is rejected by
  // the parsers.  Large enough for every benchmark in this project.
  inline constexpr std::size_t kMaxAlphabetSize = std::size_t(1) << 16;

  // Parses a string over {0, 1}, e.g. bits("010").
  inline Bits bits(std::string_view s) {
    Bits result;
    result.reserve(s.size());
    for (char c : s) {
      if (c != '0' && c != '1') {
        throw std::invalid_argument("bit string may only contain 0 and 1");
      }
      result.push_back(static_cast<Bit>(c - '0'));
    }
    return result;
  }

  inline Bits repeat_bit(Bit b, std::size_t n) {
    return Bits(n, b);
  }

  inline Bits concat(Bits a, Bits const& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
  }

  inline Word concat(Word a, Word const& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
  }

  inline std::size_t alphabet_size_of(Word const& w) {
    return w.empty() ? 0 : *std::max_element(w.begin(), w.end()) + 1;
  }

  inline Content content(Word const& w) {
    Content c(w.begin(), w.end());
    std::sort(c.begin(), c.end());
    c.erase(std::unique(c.begin(), c.end()), c.end());
    return c;
  }

  inline bool contains(Content const& c, Letter a) {
    return std::binary_search(c.begin(), c.end(), a);
  }

  // 1-based subword w_(i, j) = w_i ... w_j; empty when i > j.  Index 0 is
  // accepted as "before the start", so (0, 0) is the empty word.
  inline Word subword(Word const& w, std::size_t i, std::size_t j) {
    if (i == 0 || i > j) {
      return {};
    }
    if (j > w.size()) {
      throw std::out_of_range("subword end past end of word");
    }
    return Word(w.begin() + (i - 1), w.begin() + j);
  }

  namespace detail {
    inline std::size_t count_distinct(Word const& w) {
      return content(w).size();
    }

    // Position (0-based) of the letter that completes the content of w when
    // scanning from the left (dir == 0) or from the right (dir == 1).
    inline std::size_t completing_position(Word const& w, Bit dir) {
      std::size_t const k = count_distinct(w);
      std::vector<Letter> seen;
      seen.reserve(k);
      auto visit = [&](std::size_t p) {
        if (std::find(seen.begin(), seen.end(), w[p]) == seen.end()) {
          seen.push_back(w[p]);
        }
        return seen.size() == k;
      };
      if (dir == 0) {
        for (std::size_t p = 0; p < w.size(); ++p) {
          if (visit(p)) {
            return p;
          }
        }
      } else {
        for (std::size_t p = w.size(); p-- > 0;) {
          if (visit(p)) {
            return p;
          }
        }
      }
      // unreachable for non-empty w
      return w.size();
    }

    inline Word circ_step(Word const& w, Bit b) {
      std::size_t const p = completing_position(w, b);
      if (b == 0) {
        return Word(w.begin(), w.begin() + p);
      }
      return Word(w.begin() + p + 1, w.end());
    }

    inline Letter ast_step(Word const& w, Bit b) {
      return w[completing_position(w, b)];
    }
  }  // namespace detail

  // w circ bits; nullopt once the word runs out of content.
  inline std::optional<Word> circ(Word const& w, Bits const& alpha) {
    Word cur = w;
    for (Bit b : alpha) {
      if (cur.empty()) {
        return std::nullopt;
      }
      cur = detail::circ_step(cur, b);
    }
    return cur;
  }

  // w ast bits = (w circ bits[0..n-1)) ast bits[n-1]; undefined for empty bits.
  inline std::optional<Letter> ast(Word const& w, Bits const& alpha) {
    if (alpha.empty()) {
      return std::nullopt;
    }
    Bits prefix(alpha.begin(), alpha.end() - 1);
    auto pre = circ(w, prefix);
    if (!pre || pre->empty()) {
      return std::nullopt;
    }
    return detail::ast_step(*pre, alpha.back());
  }

  // f_w(alpha), defined exactly when |alpha| = |content(w)|.
  inline std::optional<Word> f_eval(Word const& w, Bits const& alpha) {
    Word cur = w;
    Word out;
    out.reserve(alpha.size());
    for (Bit b : alpha) {
      if (cur.empty()) {
        return std::nullopt;
      }
      out.push_back(detail::ast_step(cur, b));
      cur = detail::circ_step(cur, b);
    }
    if (!cur.empty()) {
      return std::nullopt;
    }
    return out;
  }

  // Short-lex order: shorter first, then lexicographic on letters.
  inline bool shortlex_less(Word const& u, Word const& v) {
    if (u.size() != v.size()) {
      return u.size() < v.size();
    }
    return u < v;
  }

  struct WordHash {
    std::size_t operator()(Word const& w) const noexcept {
      std::uint64_t h = 1469598103934665603ULL;
      for (Letter a : w) {
        h ^= a;
        h *= 1099511628211ULL;
      }
      return static_cast<std::size_t>(h);
    }
  };

}  // namespace fband
