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

// Timing harness.
//
// Random words are drawn letter by letter as splitmix64() % m, so a sample is
// fully determined by (seed, alphabet size, length, count).  The full grid is
// alphabets 2, 7, ..., 47 by lengths 20, 520, ..., 4520 with 100 words per
// cell; a scale s < 1 keeps max(3, ceil(10 s)) evenly spaced values of each
// and max(1, round(100 s)) words per cell.
//
// Each routine is repeated until at least kMinBatch seconds have elapsed and
// the mean per call is reported, one row per word.

#pragma once

#include <chrono>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <cstdio>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "interval.hpp"
#include "minimize.hpp"
#include "minword.hpp"
#include "multiply.hpp"
#include "transducer.hpp"
#include "word.hpp"

namespace fband {

  class SplitMix64 {
   public:
    explicit SplitMix64(std::uint64_t seed) noexcept : _state(seed) {}

    std::uint64_t next() noexcept {
      std::uint64_t z = (_state += 0x9E3779B97F4A7C15ULL);
      z               = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
      z               = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
      return z ^ (z >> 31);
    }

    // n must be positive
    std::uint64_t below(std::uint64_t n) noexcept {
      return next() % n;
    }

   private:
    std::uint64_t _state;
  };

  inline Word random_word(SplitMix64& rng, std::size_t alphabet_size, std::size_t length) {
    Word w(length);
    for (Letter& a : w) {
      a = static_cast<Letter>(rng.below(alphabet_size));
    }
    return w;
  }

  struct BenchSample {
    std::size_t   alphabet_size;
    std::size_t   word_length;
    std::size_t   count;
    std::uint64_t seed;
  };

  struct BenchRow {
    double x;
    double seconds;
  };

  enum class BenchSuite { interval, minimize, isomorphism, equal, multiply, minword };

  inline BenchSuite parse_suite(std::string_view name) {
    if (name == "interval") {
      return BenchSuite::interval;
    } else if (name == "minimize") {
      return BenchSuite::minimize;
    } else if (name == "isomorphism") {
      return BenchSuite::isomorphism;
    } else if (name == "equal") {
      return BenchSuite::equal;
    } else if (name == "multiply") {
      return BenchSuite::multiply;
    } else if (name == "minword") {
      return BenchSuite::minword;
    }
    throw std::invalid_argument("unknown bench suite '" + std::string(name) + "'");
  }

  inline std::vector<std::string_view> suite_names() {
    return {"interval", "minimize", "isomorphism", "equal", "multiply", "minword"};
  }

  namespace detail {
    inline constexpr double kMinBatch = 2e-4;

    // Runs f until kMinBatch seconds have passed, returns the mean time.
    template <typename F>
    double time_mean(F&& f) {
      using clock       = std::chrono::steady_clock;
      std::size_t reps  = 0;
      std::size_t batch = 1;
      auto const  start = clock::now();
      double      elapsed;
      while (true) {
        for (std::size_t r = 0; r < batch; ++r) {
          f();
        }
        reps += batch;
        elapsed = std::chrono::duration<double>(clock::now() - start).count();
        if (elapsed >= kMinBatch) {
          break;
        }
        batch *= 2;
      }
      return elapsed / static_cast<double>(reps);
    }

    // Stops the compiler from discarding a result.
    template <typename T>
    void keep(T const& value) {
      asm volatile("" : : "g"(&value) : "memory");
    }

    inline std::vector<std::size_t> pick_evenly(std::vector<std::size_t> const& all,
                                                 std::size_t                     count) {
      if (count >= all.size()) {
        return all;
      }
      std::vector<std::size_t> out;
      for (std::size_t t = 0; t < count; ++t) {
        std::size_t idx = (t * (all.size() - 1) + (count - 1) / 2) / (count - 1);
        out.push_back(all[idx]);
      }
      return out;
    }
  }  // namespace detail

  inline std::vector<BenchSample> bench_grid(double scale, std::uint64_t seed) {
    if (!(scale > 0.0) || scale > 1.0) {
      throw std::invalid_argument("bench scale must be in (0, 1]");
    }
    std::vector<std::size_t> alphabets, lengths;
    for (std::size_t m = 2; m <= 47; m += 5) {
      alphabets.push_back(m);
    }
    for (std::size_t l = 20; l <= 4520; l += 500) {
      lengths.push_back(l);
    }
    std::size_t const keep  = std::max<std::size_t>(3, std::size_t(std::ceil(10 * scale)));
    std::size_t const count = std::max<std::size_t>(1, std::size_t(std::lround(100 * scale)));
    std::vector<BenchSample> grid;
    std::uint64_t            cell = 0;
    for (std::size_t m : detail::pick_evenly(alphabets, keep)) {
      for (std::size_t l : detail::pick_evenly(lengths, keep)) {
        // each cell gets its own stream so cells are independent of order
        grid.push_back({m, l, count, seed ^ (0xD1B54A32D192ED03ULL * ++cell)});
      }
    }
    return grid;
  }

  inline std::vector<BenchRow> run_bench(BenchSuite suite, std::vector<BenchSample> const& samples) {
    std::vector<BenchRow> rows;
    for (BenchSample const& s : samples) {
      SplitMix64 rng(s.seed);
      double const m = static_cast<double>(s.alphabet_size);
      for (std::size_t n = 0; n < s.count; ++n) {
        Word const u = random_word(rng, s.alphabet_size, s.word_length);
        switch (suite) {
          case BenchSuite::interval: {
            double t = detail::time_mean(
                [&] { detail::keep(interval_transducer(u, s.alphabet_size)); });
            rows.push_back({m * static_cast<double>(u.size()), t});
            break;
          }
          case BenchSuite::minimize: {
            Transducer const tu = interval_transducer(u, s.alphabet_size);
            double t = detail::time_mean([&] { detail::keep(minimize(tu)); });
            rows.push_back({static_cast<double>(tu.size()), t});
            break;
          }
          case BenchSuite::isomorphism: {
            Transducer const a = minimize(interval_transducer(u, s.alphabet_size));
            Transducer const b = a;
            double t = detail::time_mean([&] { detail::keep(isomorphic(a, b)); });
            rows.push_back({static_cast<double>(a.size()), t});
            break;
          }
          case BenchSuite::equal: {
            Word const v = random_word(rng, s.alphabet_size, s.word_length);
            double t = detail::time_mean([&] { detail::keep(equal_in_free_band(u, v)); });
            rows.push_back({static_cast<double>(u.size() + v.size()) * m, t});
            break;
          }
          case BenchSuite::multiply: {
            Word const       v  = random_word(rng, s.alphabet_size, s.word_length);
            Transducer const tu = minimize(interval_transducer(u, s.alphabet_size));
            Transducer const tv = minimize(interval_transducer(v, s.alphabet_size));
            double t = detail::time_mean([&] { detail::keep(multiply(tu, tv)); });
            rows.push_back({static_cast<double>(tu.size() + tv.size()) + m * m, t});
            break;
          }
          case BenchSuite::minword: {
            Transducer const tu = minimize(interval_transducer(u, s.alphabet_size));
            double t = detail::time_mean([&] { detail::keep(min_word(tu)); });
            rows.push_back({static_cast<double>(tu.size()) * m, t});
            break;
          }
        }
      }
    }
    return rows;
  }

  inline void write_dat(std::ostream& os, std::vector<BenchRow> const& rows) {
    char buf[64];
    for (BenchRow const& r : rows) {
      std::snprintf(buf, sizeof buf, "%.0f\t%.9e\n", r.x, r.seconds);
      os << buf;
    }
  }

}  // namespace fband
