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

// Counting the elements of a finitely generated free band by closing the
// generators under right multiplication.  Elements are stored as their
// minimal words.

#pragma once

#include <cstddef>
#include <limits>
#include <stdexcept>
#include <unordered_set>
#include <vector>

#include "minword.hpp"
#include "word.hpp"

namespace fband {

  // |FB(A)| for |A| = alphabet_size, not counting the identity.  Throws
  // std::length_error once more than budget elements have been found.
  inline std::size_t enumerate_fb(std::size_t alphabet_size,
                                  std::size_t budget = std::numeric_limits<std::size_t>::max()) {
    std::unordered_set<Word, WordHash> elements;
    std::vector<Word const*>           queue;
    auto add = [&](Word w) {
      auto [it, fresh] = elements.insert(std::move(w));
      if (fresh) {
        if (elements.size() > budget) {
          throw std::length_error("enumerate_fb: budget exceeded");
        }
        // node based container, so the address is stable
        queue.push_back(&*it);
      }
    };
    for (Letter a = 0; a < alphabet_size; ++a) {
      add(Word{a});
    }
    for (std::size_t head = 0; head < queue.size(); ++head) {
      Word const& w = *queue[head];
      for (Letter a = 0; a < alphabet_size; ++a) {
        Word v = w;
        v.push_back(a);
        add(normalize(v));
      }
    }
    return elements.size();
  }

}  // namespace fband
