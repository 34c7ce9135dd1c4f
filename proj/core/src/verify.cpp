#include "rowinc/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <numeric>
#include <set>

#include <nlohmann/json.hpp>
#include "rowinc/bijections.hpp"
#include "rowinc/enumerate.hpp"
#include "rowinc/error.hpp"
#include "rowinc/formulas.hpp"
#include "rowinc/io.hpp"
#include "rowinc/schroeder.hpp"
#include "rowinc/stats.hpp"

namespace rowinc {

namespace {

// Histogram of exponents -> polynomial.
class ExponentTally {
 public:
  void add(int exponent) {
    if (static_cast<std::size_t>(exponent) >= counts_.size()) {
      counts_.resize(static_cast<std::size_t>(exponent) + 1, 0);
    }
    ++counts_[static_cast<std::size_t>(exponent)];
  }
  QPoly poly() const { return QPoly(counts_); }

 private:
  std::vector<QPoly::Coeff> counts_;
};

std::string nk(int n, int k) { return "n=" + std::to_string(n) + " k=" + std::to_string(k); }

std::string set_string(const std::vector<int>& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s + "}";
}

class ReportBuilder {
 public:
  ReportBuilder(std::string check, std::string range)
      : start_(std::chrono::steady_clock::now()) {
    report_.check = std::move(check);
    report_.range = std::move(range);
  }

  // Records one assertion; only the first failure is kept.
  bool expect(bool ok, const std::function<Counterexample()>& describe) {
    ++report_.cases;
    if (!ok && report_.passed) {
      report_.passed = false;
      report_.counterexample = describe();
    }
    return ok;
  }

  bool expect_poly(const QPoly& expected, const QPoly& actual, const std::string& input) {
    return expect(expected == actual,
                  [&] { return Counterexample{input, to_human(expected), to_human(actual)}; });
  }

  bool expect_int(std::int64_t expected, std::int64_t actual, const std::string& input) {
    return expect(expected == actual, [&] {
      return Counterexample{input, std::to_string(expected), std::to_string(actual)};
    });
  }

  bool expect_tableau(const Tableau& expected, const Tableau& actual, const std::string& input) {
    return expect(expected == actual,
                  [&] { return Counterexample{input, to_text(expected), to_text(actual)}; });
  }

  void fail_with(const std::string& input, const std::exception& e) {
    expect(false, [&] { return Counterexample{input, "no exception", e.what()}; });
  }

  VerificationReport finish() {
    const auto elapsed = std::chrono::steady_clock::now() - start_;
    report_.wall_ms = std::chrono::duration<double, std::milli>(elapsed).count();
    return std::move(report_);
  }

 private:
  VerificationReport report_;
  std::chrono::steady_clock::time_point start_;
};

// Runs body, turning any escaped exception into a recorded failure so a
// broken case cannot abort the remaining checks.
template <typename Body>
void guarded(ReportBuilder& rb, const std::string& input, Body&& body) {
  try {
    body();
  } catch (const std::exception& e) {
    rb.fail_with(input, e);
  }
}

std::string range_str(const VerifyOptions& o, bool tableaux, bool formulas) {
  std::string s;
  if (tableaux) s += "tableaux n<=" + std::to_string(o.tableau_n_max);
  if (formulas) {
    if (!s.empty()) s += "; ";
    s += "formulas n<=" + std::to_string(o.formula_n_max);
  }
  return s;
}

Partition hook_shape(int n, int k) {
  std::vector<int> parts{n - k, n - k};
  parts.insert(parts.end(), static_cast<std::size_t>(k), 1);
  return Partition(std::move(parts));
}

}  // namespace

QPoly sum_q_maj_row_increasing(int n, int k) {
  ExponentTally tally;
  for_each_row_increasing(n, k, 0, [&](const Tableau& t) { tally.add(maj(t)); });
  return tally.poly();
}

QPoly sum_q_amaj_row_increasing(int n, int k) {
  ExponentTally tally;
  for_each_row_increasing(n, k, 0, [&](const Tableau& t) { tally.add(amaj(t)); });
  return tally.poly();
}

QPoly sum_q_maj_increasing(int n, int k) {
  ExponentTally tally;
  for_each_increasing(n, k, [&](const Tableau& t) { tally.add(maj(t)); });
  return tally.poly();
}

QPoly sum_q_maj_standard(const Partition& shape) {
  ExponentTally tally;
  for_each_standard(shape, [&](const GeneralTableau& t) { tally.add(maj(t)); });
  return tally.poly();
}

QPoly sum_q_word_maj(int n, int k) {
  ExponentTally tally;
  for_each_word(n, k, [&](const SchroederWord& w) { tally.add(word_maj(w)); });
  return tally.poly();
}

VerificationReport check_maj(const VerifyOptions& o) {
  ReportBuilder rb("maj", range_str(o, true, false));
  for (int n = 1; n <= o.tableau_n_max; ++n) {
    for (int k = 0; k <= n; ++k) {
      guarded(rb, nk(n, k), [&] {
        rb.expect_poly(row_increasing_maj(n, k), sum_q_maj_row_increasing(n, k), nk(n, k));
      });
    }
    guarded(rb, nk(n, 0), [&] {
      rb.expect_poly(catalan_maj(n), sum_q_maj_row_increasing(n, 0), nk(n, 0) + " (standard)");
    });
  }
  return rb.finish();
}

VerificationReport check_amaj(const VerifyOptions& o) {
  ReportBuilder rb("amaj", range_str(o, true, false));
  for (int n = 1; n <= o.tableau_n_max; ++n) {
    for (int k = 0; k <= n; ++k) {
      guarded(rb, nk(n, k), [&] {
        rb.expect_poly(row_increasing_amaj(n, k), sum_q_amaj_row_increasing(n, k), nk(n, k));
      });
    }
    guarded(rb, nk(n, 0), [&] {
      rb.expect_poly(catalan_amaj(n), sum_q_amaj_row_increasing(n, 0), nk(n, 0) + " (standard)");
      rb.expect_poly(catalan_amaj(n), row_increasing_amaj(n, 0), nk(n, 0) + " (closed forms)");
    });
  }
  return rb.finish();
}

VerificationReport check_increasing(const VerifyOptions& o) {
  ReportBuilder rb("sq", range_str(o, true, true));
  for (int n = 1; n <= o.tableau_n_max; ++n) {
    for (int k = 0; k <= n - 1; ++k) {
      guarded(rb, nk(n, k), [&] {
        const QPoly brute = sum_q_maj_increasing(n, k);
        rb.expect_poly(increasing_maj(n, k), brute, nk(n, k));
        rb.expect_poly(q_hook_maj_sum(hook_shape(n, k)), brute, nk(n, k) + " (hook shape)");
        rb.expect_int(count_increasing(n, k), brute.at_one(), nk(n, k) + " (count)");
      });
    }
    guarded(rb, nk(n, 0), [&] {
      rb.expect_poly(catalan_maj(n), increasing_maj(n, 0), nk(n, 0) + " (standard)");
    });
  }
  for (int size = 0; size <= o.formula_n_max; ++size) {
    for (const Partition& shape : partitions_of(size)) {
      std::string label = "shape=";
      for (int i = 0; i < shape.rows(); ++i) label += (i ? "," : "") + std::to_string(shape[i]);
      guarded(rb, label, [&] {
        rb.expect_poly(sum_q_maj_standard(shape), q_hook_maj_sum(shape), label);
      });
    }
  }
  return rb.finish();
}

VerificationReport check_recurrences(const VerifyOptions& o) {
  ReportBuilder rb("recurrences", range_str(o, true, true));
  for (int n = 1; n <= o.formula_n_max; ++n) {
    for (int k = 0; k <= n; ++k) {
      guarded(rb, nk(n, k), [&] {
        if (k >= 1 && k < n) {
          rb.expect_poly(row_increasing_maj(n, k), row_increasing_maj_recurrence(n, k),
                         nk(n, k) + " (recurrence)");
        }
        rb.expect_int(count_row_increasing(n, k),
                      count_increasing(n, k) + count_increasing(n, k - 1),
                      nk(n, k) + " (r = s + s)");
        rb.expect_int(count_row_increasing(n, k), row_increasing_maj(n, k).at_one(),
                      nk(n, k) + " (r at q=1)");
        rb.expect_int(count_increasing(n, k), increasing_maj(n, k).at_one(),
                      nk(n, k) + " (s at q=1)");
        rb.expect_poly(row_increasing_maj(n, k), row_increasing_amaj(n, k).shifted(n - k),
                       nk(n, k) + " (maj = q^(n-k) amaj)");
      });
    }
  }
  for (int n = 1; n <= o.tableau_n_max; ++n) {
    for (int k = 0; k <= n; ++k) {
      guarded(rb, nk(n, k), [&] {
        std::int64_t rinc = 0;
        for_each_row_increasing(n, k, 0, [&](const Tableau&) { ++rinc; });
        rb.expect_int(count_row_increasing(n, k), rinc, nk(n, k) + " (|RInc|)");
        std::int64_t inc = 0;
        for_each_increasing(n, k, [&](const Tableau&) { ++inc; });
        rb.expect_int(count_increasing(n, k), inc, nk(n, k) + " (|Inc|)");
      });
    }
  }
  return rb.finish();
}

namespace {

void check_equal_column_bijection(ReportBuilder& rb, int n, int k) {
  // Source: row-increasing with an equal column; target: increasing, k-1.
  std::set<Tableau> images;
  std::int64_t sources = 0;
  for_each_row_increasing(n, k, 0, [&](const Tableau& t) {
    if (!t.has_equal_column()) return;
    ++sources;
    const std::string in = to_text(t);
    guarded(rb, in, [&] {
      const Tableau s = collapse_equal_column(t);
      rb.expect(classify(s) >= TableauClass::Increasing && s.doubled() == k - 1,
                [&] { return Counterexample{in, "increasing, k-1 doubled", to_text(s)}; });
      rb.expect_tableau(t, expand_equal_column(s), in + "(expand after collapse)");
      images.insert(s);
    });
  });
  rb.expect_int(sources, static_cast<std::int64_t>(images.size()), nk(n, k) + " (injective)");
  rb.expect_int(count_increasing(n, k - 1), static_cast<std::int64_t>(images.size()),
                nk(n, k) + " (image size)");
  for_each_increasing(n, k - 1, [&](const Tableau& s) {
    const std::string in = to_text(s);
    guarded(rb, in, [&] {
      const Tableau t = expand_equal_column(s);
      rb.expect(t.has_equal_column() && t.doubled() == k,
                [&] { return Counterexample{in, "equal column, k doubled", to_text(t)}; });
      rb.expect_tableau(s, collapse_equal_column(t), in + "(collapse after expand)");
    });
  });
}

void check_prime_transform(ReportBuilder& rb, const Tableau& t) {
  const std::string in = to_text(t) + "m=" + std::to_string(t.offset()) + "\n";
  const int n = t.columns();
  const int k = t.doubled();
  const int m = t.offset();
  const Tableau g = prime_transform(t);
  rb.expect(std::ranges::equal(g.bottom(), t.bottom()) && g.doubled() == k && g.offset() == m,
            [&] { return Counterexample{in, "bottom row, k and m preserved", to_text(g)}; });
  rb.expect_tableau(t, prime_transform_inverse(g), in + "(inverse)");

  // Domination and last-column clauses on the image.
  const bool first_bottom_doubled = t.is_doubled(t.bottom()[0]);
  if (!first_bottom_doubled) {
    bool dominated = true;
    for (int i = 0; i + 1 < n; ++i) {
      if (g.top()[static_cast<std::size_t>(i + 1)] > g.bottom()[static_cast<std::size_t>(i)]) {
        dominated = false;
      }
    }
    rb.expect(dominated, [&] { return Counterexample{in, "g top[i+1] <= g bottom[i]", to_text(g)}; });
  }
  const bool last_equal = g.top().back() == g.bottom().back();
  rb.expect(first_bottom_doubled == last_equal, [&] {
    return Counterexample{in, "first bottom doubled iff last column of image equal", to_text(g)};
  });

  // maj shift, by branch on the first column.
  const bool first_equal = t.top()[0] == t.bottom()[0];
  const int expected = amaj(t) + n - k + (first_equal ? 0 : m);
  rb.expect_int(expected, maj(g), in + "(maj of image)");

  // Descent transfer and the skew profile.
  const SkewProfile p = skew_profile(t);
  std::vector<int> gained;
  const auto dg = descent_set(g);
  std::set_difference(dg.begin(), dg.end(), p.descents.begin(), p.descents.end(),
                      std::back_inserter(gained));
  std::vector<int> lost;
  const auto at = ascent_set(t);
  std::set_difference(at.begin(), at.end(), p.ascents.begin(), p.ascents.end(),
                      std::back_inserter(lost));
  rb.expect(gained == lost, [&] {
    return Counterexample{in, "D(g) \\ D(T0) = " + set_string(lost), set_string(gained)};
  });

  const int skew_maj = std::accumulate(p.descents.begin(), p.descents.end(), 0);
  const int skew_amaj = std::accumulate(p.ascents.begin(), p.ascents.end(), 0);
  rb.expect_int(n - k + (first_equal ? 0 : m), skew_maj - skew_amaj, in + "(skew maj - amaj)");

  if (!first_equal) {
    std::vector<int> d_rebuilt;
    std::vector<int> a_rebuilt;
    const bool sized = p.d >= 1 && static_cast<int>(p.x.size()) == p.d &&
                       static_cast<int>(p.y.size()) == p.d - 1;
    if (sized) {
      d_rebuilt.push_back(m + p.x[0]);
      for (int i = 1; i < p.d; ++i) {
        d_rebuilt.push_back(m + p.x[static_cast<std::size_t>(i)] + p.y[static_cast<std::size_t>(i - 1)]);
      }
      for (int i = 0; i + 1 < p.d; ++i) {
        a_rebuilt.push_back(m + p.x[static_cast<std::size_t>(i)] + p.y[static_cast<std::size_t>(i)]);
      }
    }
    rb.expect(sized && p.x.back() == n - k && d_rebuilt == p.descents && a_rebuilt == p.ascents,
              [&] {
                return Counterexample{in, "interleaved D/A from X,Y",
                                      "X=" + set_string(p.x) + " Y=" + set_string(p.y) +
                                          " D=" + set_string(p.descents) +
                                          " A=" + set_string(p.ascents)};
              });
  }
}

void check_amaj_to_maj(ReportBuilder& rb, int n, int k) {
  std::set<Tableau> images;
  std::int64_t sources = 0;
  for_each_row_increasing(n, k, 0, [&](const Tableau& t) {
    ++sources;
    const std::string in = to_text(t);
    guarded(rb, in, [&] {
      const Tableau s = amaj_to_maj(t);
      rb.expect(std::ranges::equal(s.bottom(), t.bottom()) && s.doubled() == k,
                [&] { return Counterexample{in, "bottom row preserved", to_text(s)}; });
      rb.expect_int(amaj(t) + n - k, maj(s), in + "(maj of image)");
      rb.expect_tableau(t, maj_to_amaj(s), in + "(inverse)");
      const auto cuts = prime_decompose(t).cuts();
      const auto recovered = image_cuts(s);
      rb.expect(cuts == recovered, [&] {
        return Counterexample{in, "cuts " + set_string(cuts), "cuts " + set_string(recovered)};
      });
      images.insert(s);
    });
  });
  rb.expect_int(sources, static_cast<std::int64_t>(images.size()), nk(n, k) + " (injective)");
  for_each_row_increasing(n, k, 0, [&](const Tableau& s) {
    const std::string in = to_text(s);
    guarded(rb, in, [&] { rb.expect_tableau(s, amaj_to_maj(maj_to_amaj(s)), in + "(forward)"); });
  });
}

void check_worked_examples(ReportBuilder& rb) {
  guarded(rb, "equal-column example", [&] {
    const Tableau t({1, 3, 4, 5, 6}, {2, 3, 4, 6, 7}, 0);
    rb.expect_tableau(Tableau({1, 3, 4, 5, 6}, {2, 4, 6, 7, 8}, 0), collapse_equal_column(t),
                      to_text(t));
  });
  guarded(rb, "prime transform examples", [&] {
    const Tableau a({5, 7, 8, 10, 11, 12}, {6, 8, 9, 12, 13, 14}, 4);
    rb.expect_tableau(Tableau({5, 6, 7, 9, 10, 11}, {6, 8, 9, 12, 13, 14}, 4),
                      prime_transform(a), to_text(a));
    const Tableau b({1, 2, 4, 5, 6, 9}, {2, 3, 6, 7, 8, 9}, 0);
    rb.expect_tableau(Tableau({1, 3, 4, 5, 8, 9}, {2, 3, 6, 7, 8, 9}, 0), prime_transform(b),
                      to_text(b));
    const Tableau c({5, 6, 8, 9, 10, 13}, {7, 8, 11, 12, 13, 14}, 4);
    rb.expect_tableau(Tableau({5, 6, 7, 9, 10, 12}, {7, 8, 11, 12, 13, 14}, 4),
                      prime_transform(c), to_text(c));
    const SkewProfile p = skew_profile(c);
    const SkewProfile want{{6, 10}, {8}, 2, {2, 4}, {2}};
    rb.expect(p == want, [&] {
      return Counterexample{to_text(c), "D={6,10} A={8} X={2,4} Y={2}",
                            "D=" + set_string(p.descents) + " A=" + set_string(p.ascents) +
                                " X=" + set_string(p.x) + " Y=" + set_string(p.y)};
    });
  });
  guarded(rb, "three-block example", [&] {
    const Tableau t({1, 2, 4, 5, 6, 9, 10, 12, 13, 14, 16, 18, 20},
                    {2, 3, 6, 7, 8, 9, 11, 13, 15, 16, 17, 19, 20}, 0);
    const Tableau want({1, 3, 4, 5, 8, 9, 10, 11, 12, 14, 15, 18, 19},
                       {2, 3, 6, 7, 8, 9, 11, 13, 15, 16, 17, 19, 20}, 0);
    const Tableau s = amaj_to_maj(t);
    rb.expect_tableau(want, s, to_text(t));
    rb.expect_int(95, amaj(t), to_text(t) + "(amaj)");
    rb.expect_int(102, maj(s), to_text(s) + "(maj)");
    rb.expect(prime_decompose(t).cuts() == std::vector<int>{6, 11},
              [&] { return Counterexample{to_text(t), "cuts {6,11}", set_string(prime_decompose(t).cuts())}; });
  });
}

}  // namespace

VerificationReport check_bijections(const VerifyOptions& o) {
  ReportBuilder rb("bijections", range_str(o, true, false) + "; primes n<=" +
                                     std::to_string(o.prime_n_max) + " m in " +
                                     set_string(o.prime_offsets));
  check_worked_examples(rb);
  for (int n = 1; n <= o.tableau_n_max; ++n) {
    for (int k = 1; k <= n; ++k) {
      guarded(rb, nk(n, k), [&] { check_equal_column_bijection(rb, n, k); });
    }
    for (int k = 0; k <= n; ++k) {
      guarded(rb, nk(n, k), [&] { check_amaj_to_maj(rb, n, k); });
    }
  }
  for (int n = 1; n <= o.prime_n_max; ++n) {
    for (int k = 0; k <= n; ++k) {
      for (int m : o.prime_offsets) {
        guarded(rb, nk(n, k) + " m=" + std::to_string(m), [&] {
          for_each_row_increasing(n, k, m, [&](const Tableau& t) {
            if (!is_prime(t)) return;
            guarded(rb, to_text(t), [&] { check_prime_transform(rb, t); });
          });
        });
      }
    }
  }
  return rb.finish();
}

VerificationReport check_schroeder(const VerifyOptions& o) {
  ReportBuilder rb("schroeder", range_str(o, true, true));
  guarded(rb, "UUFUUUDFDDDUDD", [&] {
    const SchroederWord w = word_from_path(SchroederPath("UUFUUUDFDDDUDD"));
    rb.expect(w.letters() == "00100021222022", [&] {
      return Counterexample{"UUFUUUDFDDDUDD", "00100021222022", std::string(w.letters())};
    });
    rb.expect_int(21, word_maj(w), "00100021222022 (maj)");
  });
  bool ascent_implication_fails = false;
  for (int n = 1; n <= o.tableau_n_max; ++n) {
    for (int k = 0; k <= n; ++k) {
      guarded(rb, nk(n, k), [&] {
        std::int64_t words = 0;
        for_each_word(n, k, [&](const SchroederWord& w) {
          ++words;
          const std::string in(w.letters());
          guarded(rb, in, [&] {
            const SchroederWord back = tableau_to_word(word_to_tableau(w));
            rb.expect(back == w, [&] { return Counterexample{in, in, std::string(back.letters())}; });
            rb.expect(word_from_path(path_from_word(w)) == w,
                      [&] { return Counterexample{in, in, "path round trip differs"}; });
          });
        });
        rb.expect_int(count_row_increasing(n, k), words, nk(n, k) + " (word count)");
        for_each_row_increasing(n, k, 0, [&](const Tableau& t) {
          const std::string in = to_text(t);
          guarded(rb, in, [&] {
            const SchroederWord w = tableau_to_word(t);
            rb.expect_tableau(t, word_to_tableau(w), in + "(word round trip)");
            rb.expect_int(k, w.flats(), in + "(flats)");
            // Equal columns <-> flats on the diagonal, value by value.
            std::vector<int> equal_values;
            for (int c = 0; c < n; ++c) {
              if (t.top()[static_cast<std::size_t>(c)] == t.bottom()[static_cast<std::size_t>(c)]) {
                equal_values.push_back(t.top()[static_cast<std::size_t>(c)]);
              }
            }
            const auto diag = diagonal_flats(w);
            rb.expect(equal_values == diag, [&] {
              return Counterexample{in, set_string(equal_values), set_string(diag)};
            });
            rb.expect(is_small(w) == t.strict_columns(),
                      [&] { return Counterexample{in, "small iff increasing", std::string(w.letters())}; });
            const auto a = ascent_set(t);
            const auto d = word_descents(w);
            for (int i : a) {
              if (!std::binary_search(d.begin(), d.end(), i)) ascent_implication_fails = true;
            }
          });
        });
      });
    }
  }
  if (o.tableau_n_max >= 2) {
    // Ascents of a tableau are not always descents of its word.
    rb.expect(ascent_implication_fails, [] {
      return Counterexample{"all tableaux", "some ascent that is not a word descent", "none"};
    });
  }
  for (int n = 1; n <= o.formula_n_max; ++n) {
    for (int k = 0; k <= n; ++k) {
      guarded(rb, nk(n, k), [&] {
        const QPoly closed = schroeder_maj_sum(n, k);
        rb.expect_poly(closed, sum_q_word_maj(n, k), nk(n, k) + " (word maj sum)");
        rb.expect_poly(row_increasing_amaj(n, k), closed.shifted(k * (k - 1) / 2),
                       nk(n, k) + " (amaj = q^(k(k-1)/2) words)");
        rb.expect_poly(row_increasing_maj(n, k), row_increasing_amaj(n, k).shifted(n - k),
                       nk(n, k) + " (maj = q^(n-k) amaj)");
      });
    }
  }
  return rb.finish();
}

const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names{"maj",         "amaj",       "sq",
                                              "recurrences", "bijections", "schroeder"};
  return names;
}

std::vector<VerificationReport> run_checks(std::string_view which, const VerifyOptions& opts) {
  using Check = VerificationReport (*)(const VerifyOptions&);
  static const Check checks[] = {check_maj,         check_amaj,       check_increasing,
                                 check_recurrences, check_bijections, check_schroeder};
  const auto& names = check_names();
  std::vector<VerificationReport> out;
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (which == "all" || which == names[i]) out.push_back(checks[i](opts));
  }
  if (out.empty()) throw InputError("unknown check '" + std::string(which) + "'");
  return out;
}

bool all_passed(const std::vector<VerificationReport>& reports) {
  return std::all_of(reports.begin(), reports.end(),
                     [](const VerificationReport& r) { return r.passed; });
}

std::string reports_to_json(const std::vector<VerificationReport>& reports, bool timing) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& r : reports) {
    nlohmann::ordered_json j;
    j["check"] = r.check;
    j["range"] = r.range;
    j["status"] = r.passed ? "pass" : "fail";
    j["cases"] = r.cases;
    if (r.counterexample) {
      j["counterexample"] = {{"input", r.counterexample->input},
                             {"expected", r.counterexample->expected},
                             {"actual", r.counterexample->actual}};
    } else {
      j["counterexample"] = nullptr;
    }
    if (timing) j["wall_ms"] = r.wall_ms;
    arr.push_back(std::move(j));
  }
  return arr.dump(2) + "\n";
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string ms(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1f", v);
  return buf;
}

}  // namespace

std::string reports_to_csv(const std::vector<VerificationReport>& reports, bool timing) {
  std::string out = "check,range,status,cases,input,expected,actual";
  out += timing ? ",wall_ms\n" : "\n";
  for (const auto& r : reports) {
    const Counterexample ce = r.counterexample.value_or(Counterexample{});
    out += csv_field(r.check) + "," + csv_field(r.range) + "," + (r.passed ? "pass" : "fail") +
           "," + std::to_string(r.cases) + "," + csv_field(ce.input) + "," +
           csv_field(ce.expected) + "," + csv_field(ce.actual);
    out += timing ? "," + ms(r.wall_ms) + "\n" : "\n";
  }
  return out;
}

std::string reports_to_text(const std::vector<VerificationReport>& reports, bool timing) {
  std::string out;
  for (const auto& r : reports) {
    out += (r.passed ? "PASS " : "FAIL ") + r.check + " [" + r.range + "] " +
           std::to_string(r.cases) + " cases";
    if (timing) out += " " + ms(r.wall_ms) + " ms";
    out += "\n";
    if (r.counterexample) {
      out += "  input:\n";
      std::string_view rest = r.counterexample->input;
      while (!rest.empty()) {
        const auto end = std::min(rest.find('\n'), rest.size());
        out += "    " + std::string(rest.substr(0, end)) + "\n";
        rest.remove_prefix(std::min(end + 1, rest.size()));
      }
      out += "  expected: " + r.counterexample->expected + "\n";
      out += "  actual:   " + r.counterexample->actual + "\n";
    }
  }
  return out;
}

}  // namespace rowinc
