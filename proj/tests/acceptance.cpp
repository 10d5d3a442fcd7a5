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

// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.  Limits and sample sizes are fixed below.
//
//   acceptance [--quick]
//
// --quick skips the four generator count of criterion 5 and the timing of
// the whole benchmark grid in criterion 10.

#include <chrono>
#include <cstdio>
#include <cstring>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fband/bench.hpp"
#include "fband/enumerate.hpp"
#include "fband/interval.hpp"
#include "fband/io.hpp"
#include "fband/minimize.hpp"
#include "fband/minword.hpp"
#include "fband/multiply.hpp"
#include "fband/oracles.hpp"
#include "fband/word.hpp"

using namespace fband;

namespace {

  // time limits, seconds
  constexpr double kLimitGoldenTable = 1e-3;
  constexpr double kLimitKTables     = 10e-3;
  constexpr double kLimitSmallFB     = 10.0;
  constexpr double kLimitFB4         = 30 * 60.0;
  constexpr double kLimitBenchGrid   = 10 * 60.0;

  // scaling band for doubling the x-axis quantity
  constexpr double kRatioLow  = 1.2;
  constexpr double kRatioHigh = 3.5;

  // sample sizes
  constexpr std::size_t kEqualRandomPairs   = 10'000;
  constexpr std::size_t kNormalizeRandom    = 10'000;
  constexpr std::size_t kMultiplyPairs      = 5'000;
  constexpr std::size_t kAssociativeTriples = 1'000;
  constexpr std::size_t kSizeBoundWords     = 10'000;

  using clock_type = std::chrono::steady_clock;

  double seconds_since(clock_type::time_point start) {
    return std::chrono::duration<double>(clock_type::now() - start).count();
  }

  struct Outcome {
    bool        pass;
    std::string detail;
  };

  std::string fmt(char const* f, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
  }

  Word w(char const* s) {
    return parse_word(s);
  }

  Word random_word(SplitMix64& rng, std::size_t m, std::size_t lo, std::size_t hi) {
    return fband::random_word(rng, m, lo + rng.below(hi - lo + 1));
  }

  std::vector<Word> all_words(std::size_t m, std::size_t max_len) {
    std::vector<Word> out{Word{}};
    std::size_t       from = 0;
    for (std::size_t len = 1; len <= max_len; ++len) {
      std::size_t const to = out.size();
      for (std::size_t p = from; p < to; ++p) {
        for (Letter a = 0; a < m; ++a) {
          Word x = out[p];
          x.push_back(a);
          out.push_back(std::move(x));
        }
      }
      from = to;
    }
    return out;
  }

  // doubles a random factor, which does not change the element
  Word inflate(SplitMix64& rng, Word x) {
    if (x.empty()) {
      return x;
    }
    std::size_t i = rng.below(x.size());
    std::size_t j = i + 1 + rng.below(x.size() - i);
    Word        f(x.begin() + i, x.begin() + j);
    x.insert(x.begin() + j, f.begin(), f.end());
    return x;
  }

  //////////////////////////////////////////////////////////////////////////

  Outcome golden_table() {
    std::map<std::string, std::string> expected = {{"000", "cba"},
                                                   {"001", "cba"},
                                                   {"010", "cba"},
                                                   {"011", "cba"},
                                                   {"100", "bca"},
                                                   {"101", "bca"},
                                                   {"110", "bac"},
                                                   {"111", "bac"}};
    std::vector<Bits> inputs;
    for (auto const& [a, v] : expected) {
      inputs.push_back(bits(a));
    }
    Word const  abac  = w("abac");
    auto        start = clock_type::now();
    std::vector<std::optional<Word>> got;
    for (Bits const& a : inputs) {
      got.push_back(f_eval(abac, a));
    }
    double      t    = seconds_since(start);
    std::size_t good = 0, p = 0;
    for (auto const& [a, v] : expected) {
      good += got[p] && format_word(*got[p]) == v;
      ++p;
    }
    return {good == 8 && t < kLimitGoldenTable,
            fmt("%zu/8 values match, %.3f ms (limit %.0f ms)", good, t * 1e3, kLimitGoldenTable * 1e3)};
  }

  Outcome circ_ast_golden() {
    Word x   = w("ababdbddcccb");
    auto c0  = circ(x, bits("0"));
    auto c1  = circ(x, bits("1"));
    auto a0  = ast(x, bits("0"));
    auto a1  = ast(x, bits("1"));
    bool ok  = c0 && c1 && a0 && a1;
    std::string got = ok ? format_word(*c0) + ", " + format_word(Word{*a0}) + ", "
                               + format_word(Word{*a1}) + ", " + format_word(*c1)
                         : "undefined";
    ok = ok && got == "ababdbdd, c, a, bdbddcccb";
    return {ok, "got (" + got + ")"};
  }

  Outcome k_tables() {
    Word x = w("eaec"), y = w("bcacbcd");
    // rows i = 0..3, columns j = 0..4, 0 standing for undefined
    std::size_t const left[4][5] = {{1, 3, 2, 1, 0}, {1, 1, 2, 1, 0}, {1, 1, 2, 1, 0}, {1, 1, 1, 1, 0}};
    Transducer        tx = minimize(interval_transducer(x, 5));
    Transducer        ty = minimize(interval_transducer(y, 5));
    auto              start = clock_type::now();
    KTable            k0    = compute_k(tx, ty, 0);
    KTable            k1    = compute_k(tx, ty, 1);
    double            t     = seconds_since(start);
    std::size_t       left_ok = 0, right_ok = 0;
    bool              shape = k0.rows() == 4 && k0.cols() == 5 && k1.rows() == 4 && k1.cols() == 5;
    if (shape) {
      for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = 0; j < 5; ++j) {
          left_ok += k0.at(i, j).value_or(0) == left[i][j];
          right_ok += k1.at(i, j) == brute_k(x, y, 1, i, j);
        }
      }
    }
    bool k1_00 = shape && k1.at(0, 0) == 2u;
    return {shape && left_ok == 20 && right_ok == 20 && k1_00 && t < kLimitKTables,
            fmt("left %zu/20 exact, right %zu/20 match the definition, K1(0,0)=%s, %.3f ms (limit %.0f ms)",
                left_ok,
                right_ok,
                shape && k1.at(0, 0) ? std::to_string(*k1.at(0, 0)).c_str() : "undefined",
                t * 1e3,
                kLimitKTables * 1e3)};
  }

  Outcome minimal_sizes() {
    std::size_t a = minimize(interval_transducer(w("eaec"))).size();
    std::size_t b = minimize(interval_transducer(w("bcacbcd"))).size();
    return {a == 6 && b == 10, fmt("eaec -> %zu states (want 6), bcacbcd -> %zu states (want 10)", a, b)};
  }

  Outcome free_band_sizes(bool quick) {
    auto        start = clock_type::now();
    std::size_t n1 = enumerate_fb(1), n2 = enumerate_fb(2), n3 = enumerate_fb(3);
    double      t_small = seconds_since(start);
    bool        ok      = n1 == 1 && n2 == 6 && n3 == 159 && t_small < kLimitSmallFB;
    std::string detail  = fmt("|FB(1..3)| = %zu, %zu, %zu in %.2f s (limit %.0f s)",
                             n1, n2, n3, t_small, kLimitSmallFB);
    if (quick) {
      return {ok, detail + "; |FB(4)| skipped (--quick)"};
    }
    start          = clock_type::now();
    std::size_t n4 = enumerate_fb(4);
    double      t4 = seconds_since(start);
    ok             = ok && n4 == 332'380 && t4 < kLimitFB4;
    return {ok, detail + fmt("; |FB(4)| = %zu in %.1f s (limit %.0f s)", n4, t4, kLimitFB4)};
  }

  Outcome equality_oracle() {
    std::size_t mismatches = 0, checked = 0, equal = 0;
    auto        words      = all_words(3, 6);
    for (std::size_t p = 0; p < words.size(); ++p) {
      for (std::size_t q = p; q < words.size(); ++q) {
        bool slow = green_rees_equal(words[p], words[q]);
        mismatches += equal_in_free_band(words[p], words[q]) != slow;
        equal += slow;
        ++checked;
      }
    }
    std::size_t const exhaustive = checked;
    // random pairs: independent words, inflated copies, and inflated copies
    // with one letter changed
    SplitMix64  rng(0xACCE97);
    std::size_t random_equal = 0;
    for (std::size_t n = 0; n < kEqualRandomPairs; ++n) {
      std::size_t m = 1 + rng.below(8);
      Word        u = random_word(rng, m, 0, 200);
      Word        v;
      switch (n % 3) {
        case 0: v = random_word(rng, m, 0, 200); break;
        case 1: v = u; break;
        default: v = u; if (!v.empty()) { v[rng.below(v.size())] = static_cast<Letter>(rng.below(m)); }
      }
      while (n % 3 != 0 && !v.empty() && v.size() < 200) {
        Word bigger = inflate(rng, v);
        if (bigger.size() > 200) {
          break;
        }
        v = std::move(bigger);
      }
      bool slow = green_rees_equal(u, v);
      mismatches += equal_in_free_band(u, v) != slow;
      random_equal += slow;
      ++checked;
    }
    return {mismatches == 0,
            fmt("%zu mismatches in %zu exhaustive pairs (%zu equal) and %zu random pairs (%zu equal)",
                mismatches, exhaustive, equal, kEqualRandomPairs, random_equal)};
  }

  Outcome normalize_oracle() {
    std::size_t mismatches = 0, exhaustive = 0;
    for (Word const& x : all_words(3, 7)) {
      mismatches += normalize(x) != brute_min_word(x);
      ++exhaustive;
    }
    SplitMix64  rng(0x5EED);
    std::size_t law_failures = 0;
    for (std::size_t n = 0; n < kNormalizeRandom; ++n) {
      std::size_t m = 1 + rng.below(8);
      Word        x = random_word(rng, m, 8, 200);
      Word        y = normalize(x);
      law_failures += normalize(y) != y || y.size() > x.size() || !green_rees_equal(x, y);
    }
    return {mismatches == 0 && law_failures == 0,
            fmt("%zu mismatches against exhaustive search over %zu words, %zu law failures in %zu random words",
                mismatches, exhaustive, law_failures, kNormalizeRandom)};
  }

  Outcome multiplication() {
    SplitMix64  rng(0xB00B5);
    std::size_t product_failures = 0;
    for (std::size_t n = 0; n < kMultiplyPairs; ++n) {
      std::size_t m = 1 + rng.below(6);
      Word        u = random_word(rng, m, 0, 50);
      Word        v = random_word(rng, m, 0, 50);
      Transducer  p = multiply(interval_transducer(u, m), interval_transducer(v, m));
      product_failures += !equal_transducers(p, interval_transducer(concat(u, v), m));
    }
    std::size_t assoc_failures = 0;
    for (std::size_t n = 0; n < kAssociativeTriples; ++n) {
      std::size_t m  = 1 + rng.below(6);
      Transducer  ta = interval_transducer(random_word(rng, m, 0, 50), m);
      Transducer  tb = interval_transducer(random_word(rng, m, 0, 50), m);
      Transducer  tc = interval_transducer(random_word(rng, m, 0, 50), m);
      assoc_failures += !equal_transducers(multiply(multiply(ta, tb), tc), multiply(ta, multiply(tb, tc)));
    }
    return {product_failures == 0 && assoc_failures == 0,
            fmt("%zu/%zu products differ from the concatenation, %zu/%zu triples not associative",
                product_failures, kMultiplyPairs, assoc_failures, kAssociativeTriples)};
  }

  Outcome size_bound() {
    SplitMix64  rng(0x51E);
    std::size_t violations = 0;
    double      worst      = 0;
    for (std::size_t n = 0; n < kSizeBoundWords; ++n) {
      std::size_t m     = 1 + rng.below(10);
      Word        x     = random_word(rng, m, 0, 300);
      std::size_t size  = minimize(interval_transducer(x, m)).size();
      std::size_t bound = 2 * normalize(x).size() * m + 1;
      violations += size > bound;
      worst = std::max(worst, double(size) / double(bound));
    }
    return {violations == 0,
            fmt("%zu violations in %zu words, largest size/bound %.3f", violations, kSizeBoundWords, worst)};
  }

  // Mean time and mean x over a fixed set of inputs.
  struct Measured {
    double x = 0, seconds = 0;
  };

  template <typename Setup>
  Measured measure(std::size_t samples, Setup&& setup) {
    Measured r;
    for (std::size_t s = 0; s < samples; ++s) {
      auto [x, run] = setup(s);
      // repeat until the batch is long enough for the clock
      std::size_t reps = 0;
      auto        start = clock_type::now();
      double      t;
      do {
        run();
        ++reps;
        t = seconds_since(start);
      } while (t < 5e-3);
      r.x += x;
      r.seconds += t / double(reps);
    }
    r.x /= double(samples);
    r.seconds /= double(samples);
    return r;
  }

  std::string ratio_line(char const* name, Measured const& a, Measured const& b, bool& ok) {
    double xr = b.x / a.x, tr = b.seconds / a.seconds;
    bool   in = tr >= kRatioLow && tr <= kRatioHigh;
    ok        = ok && in;
    return fmt("%s x %.2f -> t %.2f%s", name, xr, tr, in ? "" : " (out of band)");
  }

  Outcome scaling(bool quick) {
    constexpr std::size_t m       = 8;
    constexpr std::size_t samples = 20;
    bool                  ok      = true;
    std::vector<std::string> parts;

    auto equal_at = [&](std::size_t len) {
      SplitMix64 rng(1000 + len);
      std::vector<std::pair<Word, Word>> pairs;
      for (std::size_t s = 0; s < samples; ++s) {
        Word u = fband::random_word(rng, m, len);
        pairs.emplace_back(u, fband::random_word(rng, m, len));
      }
      return measure(samples, [&](std::size_t s) {
        auto const& [u, v] = pairs[s];
        return std::pair{double((u.size() + v.size()) * m),
                         std::function<void()>([&] { (void) equal_in_free_band(u, v); })};
      });
    };
    parts.push_back(ratio_line("equal", equal_at(2000), equal_at(4000), ok));

    // Random words saturate: past a few hundred letters |T| stops growing
    // with |w|.  So min_word and multiply inputs are drawn from words of
    // varied length over kGroupAlphabet letters and kept when x falls in
    // [X, 1.1 X] or in [2X, 2.2 X].
    constexpr std::size_t kGroupAlphabet = 32;
    auto minimal_random = [&](SplitMix64& rng) {
      return minimize(interval_transducer(random_word(rng, kGroupAlphabet, 20, 400), kGroupAlphabet));
    };
    auto in_bin = [](double x, double lo) { return x >= lo && x <= 1.1 * lo; };

    auto minword_at = [&](double target) {
      SplitMix64              rng(2000 + std::size_t(target));
      std::vector<Transducer> ts;
      while (ts.size() < samples) {
        Transducer t = minimal_random(rng);
        if (in_bin(double(t.size() * kGroupAlphabet), target)) {
          ts.push_back(std::move(t));
        }
      }
      return measure(samples, [&](std::size_t s) {
        Transducer const& t = ts[s];
        return std::pair{double(t.size() * kGroupAlphabet), std::function<void()>([&] { (void) min_word(t); })};
      });
    };
    parts.push_back(ratio_line("min_word", minword_at(16'000), minword_at(32'000), ok));

    auto multiply_at = [&](double target) {
      SplitMix64                                     rng(3000 + std::size_t(target));
      std::vector<std::pair<Transducer, Transducer>> ts;
      while (ts.size() < samples) {
        Transducer a = minimal_random(rng), b = minimal_random(rng);
        if (in_bin(double(a.size() + b.size() + kGroupAlphabet * kGroupAlphabet), target)) {
          ts.emplace_back(std::move(a), std::move(b));
        }
      }
      return measure(samples, [&](std::size_t s) {
        auto const& [a, b] = ts[s];
        return std::pair{double(a.size() + b.size() + kGroupAlphabet * kGroupAlphabet),
                         std::function<void()>([&] { (void) multiply(a, b); })};
      });
    };
    parts.push_back(ratio_line("multiply", multiply_at(2'500), multiply_at(5'000), ok));

    std::string detail = "equal |A|=" + std::to_string(m) + ", |w| 2000 -> 4000: " + parts[0]
                         + "; |A|=" + std::to_string(kGroupAlphabet) + ": " + parts[1] + "; " + parts[2]
                         + fmt(" (band [%.1f, %.1f])", kRatioLow, kRatioHigh);
    if (quick) {
      return {ok, detail + "; benchmark grid skipped (--quick)"};
    }
    auto start = clock_type::now();
    for (auto name : suite_names()) {
      (void) run_bench(parse_suite(name), bench_grid(0.1, 1));
    }
    double t = seconds_since(start);
    ok       = ok && t < kLimitBenchGrid;
    return {ok, detail + fmt("; all six suites at scale 0.1 in %.1f s (limit %.0f s)", t, kLimitBenchGrid)};
  }

}  // namespace

int main(int argc, char** argv) {
  bool quick = false;
  for (int a = 1; a < argc; ++a) {
    if (std::strcmp(argv[a], "--quick") == 0) {
      quick = true;
    } else {
      std::fprintf(stderr, "usage: acceptance [--quick]\n");
      return 2;
    }
  }

  struct Criterion {
    int                      id;
    char const*              name;
    std::function<Outcome()> check;
  };
  std::vector<Criterion> criteria = {
      {1, "f_abac golden table", golden_table},
      {2, "circ/ast of ababdbddcccb", circ_ast_golden},
      {3, "K tables of eaec, bcacbcd", k_tables},
      {4, "minimal transducer sizes", minimal_sizes},
      {5, "free band sizes", [&] { return free_band_sizes(quick); }},
      {6, "equality vs oracle", equality_oracle},
      {7, "normal forms vs oracle", normalize_oracle},
      {8, "multiplication consistency", multiplication},
      {9, "minimal transducer size bound", size_bound},
      {10, "scaling", [&] { return scaling(quick); }},
  };

  int failed = 0;
  for (auto const& c : criteria) {
    auto    start = clock_type::now();
    Outcome o;
    try {
      o = c.check();
    } catch (std::exception const& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += !o.pass;
    std::printf("%s  %2d  %-32s %s [%.1f s]\n",
                o.pass ? "PASS" : "FAIL",
                c.id,
                c.name,
                o.detail.c_str(),
                seconds_since(start));
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", int(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
