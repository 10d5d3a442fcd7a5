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

// The fband command line, kept in a header so the tests can drive it with
// string streams.  Exit codes: 0 success, 1 "false" from eq --exit-status,
// 2 usage or input errors.

#pragma once

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <limits>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fband/bench.hpp"
#include "fband/enumerate.hpp"
#include "fband/interval.hpp"
#include "fband/io.hpp"
#include "fband/minimize.hpp"
#include "fband/minword.hpp"
#include "fband/multiply.hpp"

namespace fband::cli {

  inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Computations in the free band", "fband"};
    app.require_subcommand(1);

    bool ints = false;
    app.add_flag("--ints", ints, "read and write words as comma separated integers");

    std::string w1, w2;

    auto* eq = app.add_subcommand("eq", "print whether two words are equal in the free band");
    bool  exit_status = false;
    eq->add_option("u", w1, "first word")->required();
    eq->add_option("v", w2, "second word")->required();
    eq->add_flag("--exit-status", exit_status, "exit with status 1 when the words differ");

    auto* min = app.add_subcommand("min", "print the short-lex least equivalent word");
    min->add_option("w", w1, "word")->required();

    auto* mul = app.add_subcommand("mul", "print the least word of the product of two words");
    mul->add_option("u", w1, "left factor")->required();
    mul->add_option("v", w2, "right factor")->required();

    auto*       tr      = app.add_subcommand("transducer", "print the interval transducer of a word");
    bool        minimal = false;
    std::string format  = "fbt";
    tr->add_option("w", w1, "word")->required();
    tr->add_flag("--minimal", minimal, "minimize before printing");
    tr->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"fbt", "dot"}))
        ->capture_default_str();

    auto*       en = app.add_subcommand("enum", "count the elements of the free band on K letters");
    std::size_t k  = 0;
    std::size_t max_elements = std::numeric_limits<std::size_t>::max();
    en->add_option("K", k, "number of generators")->required();
    en->add_option("--max", max_elements, "give up after this many elements");

    auto*         bn    = app.add_subcommand("bench", "time one routine over random words");
    std::string   suite = "equal";
    std::string   out_path;
    double        scale = 0.1;
    std::uint64_t seed  = 1;
    std::vector<std::string> names;
    for (auto name : suite_names()) {
      names.emplace_back(name);
    }
    bn->add_option("--suite", suite, "routine to time")->required()->check(CLI::IsMember(names));
    bn->add_option("--out", out_path, "output .dat file")->required();
    bn->add_option("--scale", scale, "fraction of the full sample grid")
        ->check(CLI::Range(1e-9, 1.0))
        ->capture_default_str();
    bn->add_option("--seed", seed, "random seed")->capture_default_str();

    std::reverse(args.begin(), args.end());
    try {
      app.parse(std::move(args));
    } catch (CLI::CallForHelp const& e) {
      return app.exit(e, out, err);
    } catch (CLI::CallForAllHelp const& e) {
      return app.exit(e, out, err);
    } catch (CLI::ParseError const& e) {
      app.exit(e, out, err);
      return 2;
    }

    WordFormat const fmt = ints ? WordFormat::ints : WordFormat::chars;
    try {
      if (eq->parsed()) {
        bool result = equal_in_free_band(parse_word(w1, fmt), parse_word(w2, fmt));
        out << (result ? "true" : "false") << '\n';
        return exit_status && !result ? 1 : 0;
      }
      if (min->parsed()) {
        out << format_word(normalize(parse_word(w1, fmt)), fmt) << '\n';
        return 0;
      }
      if (mul->parsed()) {
        Word const u  = parse_word(w1, fmt);
        Word const v  = parse_word(w2, fmt);
        std::size_t m = std::max(alphabet_size_of(u), alphabet_size_of(v));
        Transducer p  = multiply(interval_transducer(u, m, IntervalStates::reachable),
                                interval_transducer(v, m, IntervalStates::reachable));
        out << format_word(min_word(minimize(p)), fmt) << '\n';
        return 0;
      }
      if (tr->parsed()) {
        Transducer t = interval_transducer(parse_word(w1, fmt));
        if (minimal) {
          t = minimize(t);
        }
        if (format == "dot") {
          write_dot(out, t);
        } else {
          write_fbt(out, t);
        }
        return 0;
      }
      if (en->parsed()) {
        out << enumerate_fb(k, max_elements) << '\n';
        return 0;
      }
      if (bn->parsed()) {
        std::ofstream file(out_path);
        if (!file) {
          err << "fband: cannot open " << out_path << " for writing\n";
          return 2;
        }
        write_dat(file, run_bench(parse_suite(suite), bench_grid(scale, seed)));
        return 0;
      }
    } catch (std::exception const& e) {
      // malformed words, budgets, unwritable files
      err << "fband: " << e.what() << '\n';
      return 2;
    }
    return 2;
  }

}  // namespace fband::cli
