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

// Slow reference implementations, used by the tests to check the fast
// algorithms.  Nothing here touches transducers.
//
// green_rees_equal recurses directly on words: u ~ v iff they have the same
// content and u circ b ~ v circ b, u ast b = v ast b for b in {0, 1}.  Every
// word met in the recursion is a factor of u or v, so the memo is keyed on
// index spans.

#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "word.hpp"

namespace fband {

  namespace detail {
    // Half-open span [begin, end) of a word.
    struct Span {
      std::size_t begin, end;

      bool empty() const noexcept {
        return begin == end;
      }
    };

    class GreenRees {
     public:
      GreenRees(Word const& u, Word const& v) : _u(u), _v(v) {}

      bool equal(Span a, Span b) {
        if (a.empty() || b.empty()) {
          return a.empty() && b.empty();
        }
        Key key{a.begin, a.end, b.begin, b.end};
        if (auto it = _memo.find(key); it != _memo.end()) {
          return it->second;
        }
        bool result = same_content(a, b);
        for (Bit d : {Bit(0), Bit(1)}) {
          if (!result) {
            break;
          }
          auto [pa, la] = split(_u, a, d);
          auto [pb, lb] = split(_v, b, d);
          result = la == lb && equal(pa, pb);
        }
        _memo.emplace(key, result);
        return result;
      }

     private:
      using Key = std::array<std::size_t, 4>;

      struct KeyHash {
        std::size_t operator()(Key const& k) const noexcept {
          std::uint64_t h = 0;
          for (std::size_t x : k) {
            h = (h ^ x) * 0x100000001B3ULL + 0x9E3779B97F4A7C15ULL;
          }
          return static_cast<std::size_t>(h);
        }
      };

      bool same_content(Span a, Span b) const {
        Content ca(_u.begin() + a.begin, _u.begin() + a.end);
        Content cb(_v.begin() + b.begin, _v.begin() + b.end);
        std::sort(ca.begin(), ca.end());
        ca.erase(std::unique(ca.begin(), ca.end()), ca.end());
        std::sort(cb.begin(), cb.end());
        cb.erase(std::unique(cb.begin(), cb.end()), cb.end());
        return ca == cb;
      }

      // (s circ d, s ast d) for non-empty s
      static std::pair<Span, Letter> split(Word const& w, Span s, Bit d) {
        std::size_t const   k = count_distinct(Word(w.begin() + s.begin, w.begin() + s.end));
        std::vector<Letter> seen;
        if (d == 0) {
          for (std::size_t p = s.begin; p < s.end; ++p) {
            if (std::find(seen.begin(), seen.end(), w[p]) == seen.end()) {
              seen.push_back(w[p]);
              if (seen.size() == k) {
                return {{s.begin, p}, w[p]};
              }
            }
          }
        } else {
          for (std::size_t p = s.end; p-- > s.begin;) {
            if (std::find(seen.begin(), seen.end(), w[p]) == seen.end()) {
              seen.push_back(w[p]);
              if (seen.size() == k) {
                return {{p + 1, s.end}, w[p]};
              }
            }
          }
        }
        throw std::logic_error("split: empty span");
      }

      Word const&                                _u;
      Word const&                                _v;
      std::unordered_map<Key, bool, KeyHash>     _memo;
    };
  }  // namespace detail

  inline bool green_rees_equal(Word const& u, Word const& v) {
    detail::GreenRees g(u, v);
    return g.equal({0, u.size()}, {0, v.size()});
  }

  namespace detail {
    // True if the word ends in a square xx.
    inline bool ends_in_square(Word const& w) {
      std::size_t const n = w.size();
      for (std::size_t h = 1; 2 * h <= n; ++h) {
        if (std::equal(w.end() - h, w.end(), w.end() - 2 * h)) {
          return true;
        }
      }
      return false;
    }
  }  // namespace detail

  // The short-lex least v ~ w, by exhaustive search over words in content(w)
  // of length at most |w|.  A word containing a square xx is never least
  // (xx ~ x is shorter), so square-containing prefixes are pruned.  Throws
  // std::length_error after budget candidates have been compared.
  inline Word brute_min_word(Word const& w, std::size_t budget = 5'000'000) {
    Content const c = content(w);
    if (c.empty()) {
      return {};
    }
    std::size_t tried = 0;
    for (std::size_t len = c.size(); len <= w.size(); ++len) {
      // depth-first in lexicographic order; digits index into c
      Word                     cand;
      std::vector<std::size_t> digit;
      cand.reserve(len);
      digit.reserve(len);
      digit.push_back(0);
      cand.push_back(c[0]);
      while (!digit.empty()) {
        bool extend = !detail::ends_in_square(cand);
        if (extend && cand.size() == len) {
          if (++tried > budget) {
            throw std::length_error("brute_min_word: search budget exceeded");
          }
          if (green_rees_equal(cand, w)) {
            return cand;
          }
          extend = false;
        }
        if (extend) {
          digit.push_back(0);
          cand.push_back(c[0]);
          continue;
        }
        // advance to the next sibling, backtracking as needed
        while (!digit.empty() && digit.back() + 1 == c.size()) {
          digit.pop_back();
          cand.pop_back();
        }
        if (!digit.empty()) {
          cand.back() = c[++digit.back()];
        }
      }
    }
    throw std::logic_error("brute_min_word: w itself was not found");
  }

  // K_side(x circ 1^i, y circ 0^j) straight from its definition.
  inline std::optional<std::size_t>
  brute_k(Word const& x, Word const& y, Bit side, std::size_t i, std::size_t j) {
    auto xi = circ(x, repeat_bit(1, i));
    auto yj = circ(y, repeat_bit(0, j));
    if (!xi || !yj) {
      return std::nullopt;
    }
    Word const& from  = side == 0 ? *yj : *xi;
    Content     other = content(side == 0 ? *xi : *yj);
    Bit const   dir   = side == 0 ? 0 : 1;
    for (std::size_t k = 1;; ++k) {
      auto a = ast(from, repeat_bit(dir, k));
      if (!a) {
        return std::nullopt;
      }
      if (!contains(other, *a)) {
        return k;
      }
    }
  }

}  // namespace fband
