// Prints one PASS/FAIL line per acceptance criterion; exits 1 if any fail.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "rowinc/bijections.hpp"
#include "rowinc/cli.hpp"
#include "rowinc/enumerate.hpp"
#include "rowinc/formulas.hpp"
#include "rowinc/schroeder.hpp"
#include "rowinc/stats.hpp"
#include "rowinc/verify.hpp"

using namespace rowinc;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

std::string nk(int n, int k) { return "n=" + std::to_string(n) + " k=" + std::to_string(k); }

Outcome maj_generating_function() {
  Outcome o;
  for (int n = 1; n <= 6; ++n) {
    for (int k = 0; k <= n; ++k) {
      o.require(sum_q_maj_row_increasing(n, k) == row_increasing_maj(n, k), nk(n, k));
    }
  }
  return o;
}

Outcome amaj_generating_function() {
  Outcome o;
  for (int n = 1; n <= 6; ++n) {
    for (int k = 0; k <= n; ++k) {
      o.require(sum_q_amaj_row_increasing(n, k) == row_increasing_amaj(n, k), nk(n, k));
    }
    o.require(sum_q_amaj_row_increasing(n, 0) == catalan_amaj(n), nk(n, 0) + " standard");
  }
  return o;
}

Outcome increasing_and_hook() {
  Outcome o;
  for (int n = 1; n <= 6; ++n) {
    for (int k = 0; k <= n; ++k) {
      const QPoly brute = sum_q_maj_increasing(n, k);
      o.require(brute == increasing_maj(n, k), nk(n, k));
      if (k < n) {
        std::vector<int> parts{n - k, n - k};
        parts.insert(parts.end(), static_cast<std::size_t>(k), 1);
        o.require(brute == q_hook_maj_sum(Partition(parts)), nk(n, k) + " hook shape");
      }
    }
  }
  for (int size = 0; size <= 8; ++size) {
    for (const auto& shape : partitions_of(size)) {
      o.require(sum_q_maj_standard(shape) == q_hook_maj_sum(shape),
                "partition of " + std::to_string(size));
    }
  }
  return o;
}

Outcome recurrence_and_collapse() {
  Outcome o;
  for (int n = 2; n <= 8; ++n) {
    for (int k = 1; k < n; ++k) {
      o.require(row_increasing_maj_recurrence(n, k) == row_increasing_maj(n, k), nk(n, k));
    }
  }
  for (int n = 1; n <= 8; ++n) {
    for (int k = 0; k <= n; ++k) {
      o.require(count_row_increasing(n, k) == count_increasing(n, k) + count_increasing(n, k - 1),
                nk(n, k) + " counting");
    }
  }
  for (int n = 1; n <= 6; ++n) {
    for (int k = 1; k <= n; ++k) {
      std::set<Tableau> images;
      std::size_t sources = 0;
      for_each_row_increasing(n, k, 0, [&](const Tableau& t) {
        if (!t.has_equal_column()) return;
        ++sources;
        const Tableau s = collapse_equal_column(t);
        o.require(s.strict_columns() && s.doubled() == k - 1, nk(n, k) + " image class");
        o.require(expand_equal_column(s) == t, nk(n, k) + " round trip");
        images.insert(s);
      });
      std::size_t targets = 0;
      for_each_increasing(n, k - 1, [&](const Tableau& s) {
        ++targets;
        o.require(collapse_equal_column(expand_equal_column(s)) == s, nk(n, k) + " reverse");
      });
      o.require(images.size() == sources && images.size() == targets, nk(n, k) + " counts");
    }
  }
  return o;
}

Outcome amaj_to_maj_bijection() {
  Outcome o;
  for (int n = 1; n <= 6; ++n) {
    for (int k = 0; k <= n; ++k) {
      for_each_row_increasing(n, k, 0, [&](const Tableau& t) {
        const Tableau s = amaj_to_maj(t);
        o.require(maj_to_amaj(s) == t, nk(n, k) + " round trip");
        o.require(std::ranges::equal(s.bottom(), t.bottom()), nk(n, k) + " bottom row");
        o.require(maj(s) == amaj(t) + n - k, nk(n, k) + " statistic");
      });
    }
  }
  for (int n = 1; n <= 5; ++n) {
    for (int k = 0; k <= n; ++k) {
      for (int m : {0, 1, 4}) {
        for_each_row_increasing(n, k, m, [&](const Tableau& t) {
          if (!is_prime(t)) return;
          const bool first_equal = t.top()[0] == t.bottom()[0];
          o.require(maj(prime_transform(t)) - amaj(t) == n - k + (first_equal ? 0 : m),
                    nk(n, k) + " m=" + std::to_string(m) + " prime branch");
        });
      }
    }
  }
  return o;
}

Outcome schroeder_words() {
  Outcome o;
  for (int n = 1; n <= 6; ++n) {
    for (int k = 0; k <= n; ++k) {
      for_each_row_increasing(n, k, 0, [&](const Tableau& t) {
        o.require(word_to_tableau(tableau_to_word(t)) == t, nk(n, k) + " tableau round trip");
      });
      for_each_word(n, k, [&](const SchroederWord& w) {
        o.require(tableau_to_word(word_to_tableau(w)) == w, nk(n, k) + " word round trip");
      });
    }
  }
  for (int n = 1; n <= 8; ++n) {
    for (int k = 0; k <= n; ++k) {
      const QPoly words = schroeder_maj_sum(n, k);
      o.require(sum_q_word_maj(n, k) == words, nk(n, k) + " word maj sum");
      o.require(row_increasing_amaj(n, k) == words.shifted(k * (k - 1) / 2),
                nk(n, k) + " amaj prefactor");
      o.require(row_increasing_maj(n, k) == row_increasing_amaj(n, k).shifted(n - k),
                nk(n, k) + " maj prefactor");
    }
  }
  return o;
}

struct Golden {
  std::vector<std::string> args;
  std::string input;
  std::string expected;
};

Outcome golden_values() {
  const std::string three_blocks =
      "1 2 4 5 6 9 10 12 13 14 16 18 20\n2 3 6 7 8 9 11 13 15 16 17 19 20\n";
  const std::string three_blocks_image =
      "1 3 4 5 8 9 10 11 12 14 15 18 19\n2 3 6 7 8 9 11 13 15 16 17 19 20\n";
  const std::vector<Golden> cases = {
      {{"stats"},
       "1 2 4 5 6 8\n3 4 6 7 8 9\n",
       "{\"descents\":[2,5,6,8],\"ascents\":[3,4,7],\"maj\":21,\"amaj\":14}\n"},
      {{"map", "--map", "f"}, "1 3 4 5 6\n2 3 4 6 7\n", "1 3 4 5 6\n2 4 6 7 8\n"},
      {{"map", "--map", "g"}, "5 7 8 10 11 12\n6 8 9 12 13 14\n", "5 6 7 9 10 11\n6 8 9 12 13 14\n"},
      {{"map", "--map", "g"}, "1 2 4 5 6 9\n2 3 6 7 8 9\n", "1 3 4 5 8 9\n2 3 6 7 8 9\n"},
      {{"map", "--map", "g"}, "5 6 8 9 10 13\n7 8 11 12 13 14\n",
       "5 6 7 9 10 12\n7 8 11 12 13 14\n"},
      {{"stats", "--skew"}, "5 6 8 9 10 13\n7 8 11 12 13 14\n",
       "{\"descents\":[6,10],\"ascents\":[8],\"d\":2,\"x\":[2,4],\"y\":[2]}\n"},
      {{"map", "--map", "phi"}, three_blocks, three_blocks_image},
      {{"stats"}, three_blocks,
       "{\"descents\":[1,2,5,6,10,12,14,16,18],\"ascents\":[3,8,9,11,13,15,17,19],"
       "\"maj\":84,\"amaj\":95}\n"},
      {{"stats"}, three_blocks_image,
       "{\"descents\":[1,5,8,10,12,14,15,18,19],\"ascents\":[2,3,7,8,9,11,13,17],"
       "\"maj\":102,\"amaj\":70}\n"},
      {{"convert", "--from", "path", "--to", "word"}, "UUFUUUDFDDDUDD\n", "00100021222022\n"},
  };
  Outcome o;
  for (const auto& c : cases) {
    std::istringstream in(c.input);
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run(c.args, in, out, err);
    std::string label;
    for (const auto& a : c.args) label += a + " ";
    o.require(code == 0 && out.str() == c.expected, label + "-> " + out.str() + err.str());
  }
  return o;
}

Outcome counting_spot_checks() {
  Outcome o;
  const std::int64_t large[] = {2, 6, 22, 90, 394, 1806};
  const std::int64_t catalan_numbers[] = {1, 2, 5, 14, 42, 132};
  for (int n = 1; n <= 6; ++n) {
    std::int64_t closed = 0;
    std::int64_t enumerated = 0;
    for (int k = 0; k <= n; ++k) {
      closed += count_row_increasing(n, k);
      for_each_row_increasing(n, k, 0, [&](const Tableau&) { ++enumerated; });
    }
    o.require(closed == large[n - 1] && enumerated == large[n - 1],
              "row-increasing total n=" + std::to_string(n));
    std::int64_t standard = 0;
    for_each_increasing(n, 0, [&](const Tableau&) { ++standard; });
    o.require(count_increasing(n, 0) == catalan_numbers[n - 1] &&
                  standard == catalan_numbers[n - 1],
              "standard count n=" + std::to_string(n));
  }
  return o;
}

struct Criterion {
  int id;
  const char* name;
  double limit_ms;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "maj generating function over row-increasing tableaux, n<=6", 5000,
       maj_generating_function},
      {2, "amaj generating function over row-increasing tableaux, n<=6", 5000,
       amaj_generating_function},
      {3, "increasing tableaux and q-hook formula, n<=6, partitions up to 8", 10000,
       increasing_and_hook},
      {4, "recurrence n<=8, counting identity n<=8, equal-column collapse n<=6", 5000,
       recurrence_and_collapse},
      {5, "amaj-to-maj bijection n<=6, prime transform branches n<=5", 10000,
       amaj_to_maj_bijection},
      {6, "word correspondence n<=6, word maj sums and prefactors n<=8", 5000, schroeder_words},
      {7, "worked examples through the command line, byte-exact", 5000, golden_values},
      {8, "counting spot checks", 5000, counting_spot_checks},
  };
  bool all_ok = true;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    if (ms > c.limit_ms) {
      o.require(false, "took " + std::to_string(ms) + " ms");
    }
    all_ok = all_ok && o.ok;
    std::printf("%s criterion %d: %s (%.1f ms, limit %.0f ms)%s%s\n", o.ok ? "PASS" : "FAIL", c.id,
                c.name, ms, c.limit_ms, o.ok ? "" : " -- ", o.detail.c_str());
  }
  return all_ok ? 0 : 1;
}
