#include "rowinc/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iterator>
#include <map>
#include <optional>

#include "CLI11.hpp"
#include "rowinc/bijections.hpp"
#include "rowinc/enumerate.hpp"
#include "rowinc/error.hpp"
#include "rowinc/formulas.hpp"
#include "rowinc/io.hpp"
#include "rowinc/schroeder.hpp"
#include "rowinc/stats.hpp"
#include "rowinc/verify.hpp"

namespace rowinc::cli {

namespace {

struct Options {
  std::string input;
  std::string format;

  std::string family = "rinc";
  std::optional<int> n;
  std::optional<int> k;
  int m = 0;
  std::string shape;

  bool skew = false;
  std::string formula;
  std::string which;
  std::string map;
  std::string from;
  std::string to;

  std::string check = "all";
  int nmax = 6;
  std::optional<int> formula_nmax;
  bool no_timing = false;
};

std::string read_all(const Options& o, std::istream& in) {
  if (o.input.empty() || o.input == "-") {
    return std::string(std::istreambuf_iterator<char>(in), {});
  }
  std::ifstream file(o.input, std::ios::binary);
  if (!file) throw InputError("cannot open input file '" + o.input + "'");
  return std::string(std::istreambuf_iterator<char>(file), {});
}

int need(const std::optional<int>& v, const char* flag) {
  if (!v) throw InputError(std::string("missing required flag ") + flag);
  return *v;
}

TableauFormat tableau_format(const std::string& flag, TableauFormat fallback) {
  if (flag == "json") return TableauFormat::Json;
  if (flag == "text") return TableauFormat::Text;
  return fallback;
}

std::string shape_json(const GeneralTableau& t) {
  std::string s = "{\"shape\":[";
  for (int i = 0; i < t.shape.rows(); ++i) s += (i ? "," : "") + std::to_string(t.shape[i]);
  s += "],\"rows\":[";
  for (std::size_t r = 0; r < t.cells.size(); ++r) {
    s += r ? ",[" : "[";
    for (std::size_t c = 0; c < t.cells[r].size(); ++c) {
      s += (c ? "," : "") + std::to_string(t.cells[r][c]);
    }
    s += "]";
  }
  return s + "]}";
}

std::string shape_text(const GeneralTableau& t) {
  std::string s;
  for (const auto& row : t.cells) {
    for (std::size_t c = 0; c < row.size(); ++c) s += (c ? " " : "") + std::to_string(row[c]);
    s += "\n";
  }
  return s;
}

void cmd_enumerate(const Options& o, std::ostream& out) {
  const bool json = o.format != "text";
  bool first = true;
  auto emit_tableau = [&](const Tableau& t) {
    if (json) {
      out << to_json(t) << "\n";
    } else {
      if (!first) out << "\n";
      out << to_text(t);
    }
    first = false;
  };
  if (o.family == "rinc") {
    for_each_row_increasing(need(o.n, "--n"), need(o.k, "--k"), o.m, emit_tableau);
  } else if (o.family == "inc") {
    if (o.m != 0) throw InputError("--m applies only to --family rinc");
    for_each_increasing(need(o.n, "--n"), need(o.k, "--k"), emit_tableau);
  } else if (o.family == "syt") {
    if (o.shape.empty()) throw InputError("--family syt needs --shape");
    for_each_standard(parse_shape(o.shape), [&](const GeneralTableau& t) {
      if (json) {
        out << shape_json(t) << "\n";
      } else {
        if (!first) out << "\n";
        out << shape_text(t);
      }
      first = false;
    });
  } else {
    for_each_word(need(o.n, "--n"), need(o.k, "--k"),
                  [&](const SchroederWord& w) { out << w.letters() << "\n"; });
  }
}

void cmd_stats(const Options& o, std::istream& in, std::ostream& out) {
  const Tableau t = parse_tableau(read_all(o, in)).tableau;
  out << (o.skew ? to_json(skew_profile(t)) : to_json(stat_profile(t))) << "\n";
}

void emit_poly(const QPoly& p, const std::string& format, std::ostream& out) {
  out << (format == "human" ? to_human(p) : to_json(p)) << "\n";
}

void cmd_poly(const Options& o, std::ostream& out) {
  const std::string& f = o.formula;
  QPoly p;
  if (f == "Cq") {
    p = catalan_maj(need(o.n, "--n"));
  } else if (f == "Ctq") {
    p = catalan_amaj(need(o.n, "--n"));
  } else if (f == "Sq") {
    p = increasing_maj(need(o.n, "--n"), need(o.k, "--k"));
  } else if (f == "Rq") {
    p = row_increasing_maj(need(o.n, "--n"), need(o.k, "--k"));
  } else if (f == "Rtq") {
    p = row_increasing_amaj(need(o.n, "--n"), need(o.k, "--k"));
  } else if (f == "words") {
    p = schroeder_maj_sum(need(o.n, "--n"), need(o.k, "--k"));
  } else if (f == "recurrence") {
    p = row_increasing_maj_recurrence(need(o.n, "--n"), need(o.k, "--k"));
  } else if (f == "qint") {
    p = q_int(need(o.n, "--n"));
  } else if (f == "qfact") {
    p = q_factorial(need(o.n, "--n"));
  } else {
    p = q_binomial(need(o.n, "--n"), need(o.k, "--k"));
  }
  emit_poly(p, o.format, out);
}

void cmd_count(const Options& o, std::ostream& out) {
  const std::string& w = o.which;
  std::int64_t v = 0;
  if (w == "r") {
    v = count_row_increasing(need(o.n, "--n"), need(o.k, "--k"));
  } else if (w == "s") {
    v = count_increasing(need(o.n, "--n"), need(o.k, "--k"));
  } else if (w == "catalan") {
    v = catalan(need(o.n, "--n"));
  } else if (w == "large-schroeder") {
    v = large_schroeder(need(o.n, "--n"));
  } else if (w == "small-schroeder") {
    v = small_schroeder(need(o.n, "--n"));
  } else {
    v = binomial(need(o.n, "--n"), need(o.k, "--k"));
  }
  out << v << "\n";
}

void cmd_map(const Options& o, std::istream& in, std::ostream& out) {
  const std::string text = read_all(o, in);
  if (o.map == "thetainv") {
    const Tableau t = word_to_tableau(parse_word(text));
    out << format_tableau(t, tableau_format(o.format, TableauFormat::Json));
    return;
  }
  const ParsedTableau parsed = parse_tableau(text);
  const Tableau& t = parsed.tableau;
  if (o.map == "theta") {
    out << tableau_to_word(t).letters() << "\n";
    return;
  }
  static const std::map<std::string, Tableau (*)(const Tableau&)> maps{
      {"f", collapse_equal_column},  {"finv", expand_equal_column},
      {"g", prime_transform},        {"ginv", prime_transform_inverse},
      {"phi", amaj_to_maj},          {"phiinv", maj_to_amaj},
  };
  out << format_tableau(maps.at(o.map)(t), tableau_format(o.format, parsed.format));
}

void cmd_convert(const Options& o, std::istream& in, std::ostream& out) {
  const std::string text = read_all(o, in);
  std::optional<SchroederWord> word;
  if (o.from == "path") {
    word = word_from_path(parse_path(text));
  } else if (o.from == "word") {
    word = parse_word(text);
  } else {
    word = tableau_to_word(parse_tableau(text).tableau);
  }
  if (o.to == "word") {
    out << word->letters() << "\n";
  } else if (o.to == "path") {
    out << path_from_word(*word).steps() << "\n";
  } else {
    out << format_tableau(word_to_tableau(*word), tableau_format(o.format, TableauFormat::Json));
  }
}

void cmd_hook(const Options& o, std::ostream& out) {
  emit_poly(q_hook_maj_sum(parse_shape(o.shape)), o.format, out);
}

int cmd_verify(const Options& o, std::ostream& out) {
  if (o.nmax < 1) throw InputError("--nmax must be at least 1");
  VerifyOptions opts;
  opts.tableau_n_max = o.nmax;
  opts.prime_n_max = std::min(5, o.nmax);
  opts.formula_n_max = o.formula_nmax ? *o.formula_nmax : std::max(8, o.nmax);
  if (opts.formula_n_max < 1) throw InputError("--formula-nmax must be at least 1");
  const auto reports = run_checks(o.check, opts);
  const bool timing = !o.no_timing;
  if (o.format == "csv") {
    out << reports_to_csv(reports, timing);
  } else if (o.format == "text") {
    out << reports_to_text(reports, timing);
  } else {
    out << reports_to_json(reports, timing);
  }
  return all_passed(reports) ? kOk : kVerificationFailed;
}

void add_nk(CLI::App* cmd, Options& o) {
  cmd->add_option("--n", o.n, "Number of columns (or q-integer argument)");
  cmd->add_option("--k", o.k, "Number of doubled values (or lower binomial argument)");
}

void add_input(CLI::App* cmd, Options& o) {
  cmd->add_option("--input", o.input, "Read from this file instead of stdin");
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  Options o;
  CLI::App app{"Row-increasing tableaux of shape 2 x n: enumeration, statistics, "
               "q-polynomials, bijections and verification.",
               "rowinc"};
  app.require_subcommand(1);

  auto* enumerate = app.add_subcommand("enumerate", "List tableaux or Schroeder words");
  enumerate->add_option("--family", o.family, "rinc, inc, syt or words")
      ->check(CLI::IsMember({"rinc", "inc", "syt", "words"}));
  add_nk(enumerate, o);
  enumerate->add_option("--m", o.m, "Entry offset (rinc only)");
  enumerate->add_option("--shape", o.shape, "Partition for syt, e.g. 3,3,1,1");
  enumerate->add_option("--format", o.format, "json (one object per line) or text")
      ->check(CLI::IsMember({"json", "text"}));

  auto* stats = app.add_subcommand("stats", "Descent and ascent statistics of a tableau");
  add_input(stats, o);
  stats->add_flag("--skew", o.skew, "Report the skew profile used by the prime transform");

  auto* poly = app.add_subcommand("poly", "Closed-form q-polynomials");
  poly->add_option("--formula", o.formula)
      ->required()
      ->check(CLI::IsMember(
          {"Cq", "Ctq", "Sq", "Rq", "Rtq", "words", "recurrence", "qint", "qbinom", "qfact"}));
  add_nk(poly, o);
  poly->add_option("--format", o.format, "json or human")->check(CLI::IsMember({"json", "human"}));

  auto* count = app.add_subcommand("count", "Closed-form counts");
  count->add_option("--which", o.which)
      ->required()
      ->check(CLI::IsMember(
          {"r", "s", "catalan", "large-schroeder", "small-schroeder", "binomial"}));
  add_nk(count, o);

  auto* map = app.add_subcommand("map", "Apply a bijection to a tableau (or word for thetainv)");
  map->add_option("--map", o.map)
      ->required()
      ->check(CLI::IsMember({"f", "finv", "g", "ginv", "phi", "phiinv", "theta", "thetainv"}));
  add_input(map, o);
  map->add_option("--format", o.format, "Output tableau format; defaults to the input's")
      ->check(CLI::IsMember({"json", "text"}));

  auto* convert = app.add_subcommand("convert", "Convert between paths, words and tableaux");
  convert->add_option("--from", o.from)->required()->check(
      CLI::IsMember({"path", "word", "tableau"}));
  convert->add_option("--to", o.to)->required()->check(CLI::IsMember({"path", "word", "tableau"}));
  add_input(convert, o);
  convert->add_option("--format", o.format, "Tableau output format")
      ->check(CLI::IsMember({"json", "text"}));

  auto* hook = app.add_subcommand("hook", "q-hook formula for a partition");
  hook->add_option("--shape", o.shape, "Comma-separated parts")->required();
  hook->add_option("--format", o.format, "json or human")->check(CLI::IsMember({"json", "human"}));

  auto* verify = app.add_subcommand("verify", "Exhaustive checks against brute force");
  verify->add_option("--check", o.check)->check(CLI::IsMember(
      {"all", "maj", "amaj", "sq", "recurrences", "bijections", "schroeder"}));
  verify->add_option("--nmax", o.nmax, "Largest n for tableau enumeration");
  verify->add_option("--formula-nmax", o.formula_nmax,
                     "Largest n for polynomial identities (default max(8, nmax))");
  verify->add_option("--format", o.format, "json, csv or text")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  verify->add_flag("--no-timing", o.no_timing, "Omit wall times");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kBadInput;
  }

  try {
    if (enumerate->parsed()) cmd_enumerate(o, out);
    if (stats->parsed()) cmd_stats(o, in, out);
    if (poly->parsed()) cmd_poly(o, out);
    if (count->parsed()) cmd_count(o, out);
    if (map->parsed()) cmd_map(o, in, out);
    if (convert->parsed()) cmd_convert(o, in, out);
    if (hook->parsed()) cmd_hook(o, out);
    if (verify->parsed()) return cmd_verify(o, out);
  } catch (const std::exception& e) {
    // InputError, DomainError and arithmetic failures all mean bad input.
    err << "error: " << e.what() << "\n";
    return kBadInput;
  }
  return kOk;
}

}  // namespace rowinc::cli
