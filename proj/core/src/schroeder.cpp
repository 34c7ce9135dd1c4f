#include "rowinc/schroeder.hpp"

#include <numeric>

#include "rowinc/error.hpp"

namespace rowinc {

namespace {

// Shared validation for words ("012") and paths ("UFD").
struct Counts {
  int up = 0;
  int flat = 0;
  int down = 0;
};

Counts validate_steps(std::string_view s, std::string_view alphabet, const char* kind) {
  if (s.empty()) throw InputError(std::string(kind) + " is empty (n must be at least 1)");
  Counts c;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const auto pos = alphabet.find(s[i]);
    if (pos == std::string_view::npos) {
      throw InputError(std::string(kind) + " has invalid letter '" + std::string(1, s[i]) +
                       "' at position " + std::to_string(i + 1));
    }
    if (pos == 0) ++c.up;
    if (pos == 1) ++c.flat;
    if (pos == 2) ++c.down;
    if (c.down > c.up) {
      throw InputError(std::string(kind) + " goes below the diagonal at position " +
                       std::to_string(i + 1));
    }
  }
  if (c.up != c.down) {
    throw InputError(std::string(kind) + " does not end on the diagonal (" +
                     std::to_string(c.up) + " up vs " + std::to_string(c.down) + " down)");
  }
  return c;
}

}  // namespace

SchroederWord::SchroederWord(std::string letters) : letters_(std::move(letters)) {
  const Counts c = validate_steps(letters_, "012", "Schroeder word");
  semilength_ = c.up + c.flat;
  flats_ = c.flat;
}

SchroederPath::SchroederPath(std::string steps) : steps_(std::move(steps)) {
  validate_steps(steps_, "UFD", "Schroeder path");
}

SchroederWord word_from_path(const SchroederPath& path) {
  std::string w;
  w.reserve(path.steps().size());
  for (char s : path.steps()) w.push_back(s == 'U' ? '0' : s == 'F' ? '1' : '2');
  return SchroederWord(std::move(w));
}

SchroederPath path_from_word(const SchroederWord& word) {
  std::string p;
  p.reserve(word.letters().size());
  for (char l : word.letters()) p.push_back(l == '0' ? 'U' : l == '1' ? 'F' : 'D');
  return SchroederPath(std::move(p));
}

std::vector<int> word_descents(const SchroederWord& w) {
  std::vector<int> out;
  for (int i = 0; i + 1 < w.size(); ++i) {
    if (w[i] > w[i + 1]) out.push_back(i + 1);
  }
  return out;
}

int word_maj(const SchroederWord& w) {
  const auto d = word_descents(w);
  return std::accumulate(d.begin(), d.end(), 0);
}

std::vector<int> diagonal_flats(const SchroederWord& w) {
  std::vector<int> out;
  int height = 0;  // #0 - #2 so far
  for (int i = 0; i < w.size(); ++i) {
    if (w[i] == '1' && height == 0) out.push_back(i + 1);
    if (w[i] == '0') ++height;
    if (w[i] == '2') --height;
  }
  return out;
}

bool is_small(const SchroederWord& w) { return diagonal_flats(w).empty(); }

SchroederWord tableau_to_word(const Tableau& t) {
  if (t.offset() != 0) throw InputError("tableau_to_word needs m = 0");
  std::string w;
  w.reserve(static_cast<std::size_t>(t.span_size()));
  for (int v = 1; v <= t.span_size(); ++v) {
    const auto m = t.membership(v);
    w.push_back(m == Tableau::kTop ? '0' : m == Tableau::kBottom ? '2' : '1');
  }
  return SchroederWord(std::move(w));
}

Tableau word_to_tableau(const SchroederWord& w) {
  std::vector<int> top;
  std::vector<int> bottom;
  for (int i = 0; i < w.size(); ++i) {
    const int v = i + 1;
    if (w[i] != '2') top.push_back(v);
    if (w[i] != '0') bottom.push_back(v);
  }
  return Tableau(std::move(top), std::move(bottom), 0);
}

void for_each_word(int n, int k, const WordVisitor& visit) {
  if (n < 1) throw InputError("n must be at least 1");
  if (k < 0 || k > n) return;
  const int length = 2 * n - k;
  std::string w;
  w.reserve(static_cast<std::size_t>(length));
  auto rec = [&](auto&& self, int ups, int flats, int downs) -> void {
    if (static_cast<int>(w.size()) == length) {
      visit(SchroederWord(w));
      return;
    }
    if (ups < n - k) {
      w.push_back('0');
      self(self, ups + 1, flats, downs);
      w.pop_back();
    }
    if (flats < k) {
      w.push_back('1');
      self(self, ups, flats + 1, downs);
      w.pop_back();
    }
    if (downs < ups) {
      w.push_back('2');
      self(self, ups, flats, downs + 1);
      w.pop_back();
    }
  };
  rec(rec, 0, 0, 0);
}

std::vector<SchroederWord> enumerate_words(int n, int k) {
  std::vector<SchroederWord> out;
  for_each_word(n, k, [&](const SchroederWord& w) { out.push_back(w); });
  return out;
}

QPoly schroeder_maj_sum(int n, int k) {
  if (n < 1) throw InputError("n must be at least 1");
  if (k < 0 || k > n) return {};
  const QPoly num = q_binomial(2 * n - k, k) * q_binomial(2 * n - 2 * k, n - k);
  return exact_div(num, q_int(n - k + 1));
}

}  // namespace rowinc
