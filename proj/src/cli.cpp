#include "balseg/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <json.hpp>
#include <ostream>
#include <string>
#include <vector>

#include "balseg/asymptotics.hpp"
#include "balseg/counting.hpp"
#include "balseg/enumerate.hpp"
#include "balseg/errors.hpp"
#include "balseg/format.hpp"
#include "balseg/genfun.hpp"
#include "balseg/render.hpp"
#include "balseg/verify.hpp"

namespace balseg {

namespace {

using nlohmann::ordered_json;

// All numeric values in JSON output travel as decimal strings ("-4", "1/6"),
// so extreme counts never hit double precision on the consumer side.
ordered_json rational_strings(const std::vector<Rational>& values) {
  ordered_json arr = ordered_json::array();
  for (const Rational& v : values) arr.push_back(to_string(v));
  return arr;
}

ordered_json count_strings(const std::vector<Count>& values) {
  ordered_json arr = ordered_json::array();
  for (const Count& v : values) arr.push_back(v.get_str());
  return arr;
}

ordered_json document(const std::string& command, ordered_json parameters,
                      ordered_json result) {
  return ordered_json{{"command", command},
                      {"parameters", std::move(parameters)},
                      {"result", std::move(result)},
                      {"status", "ok"}};
}

void emit(std::ostream& out, const ordered_json& doc) {
  out << doc.dump() << '\n';
}

struct CountArgs {
  std::string family;
  long long length = 0;
  long long height = 0;
  std::string format = "pretty";
};

struct TableArgs {
  std::string family;
  long long max_length = 0;
  std::string format = "pretty";
};

struct EnumerateArgs {
  long long length = 0;
  long long height = 0;
  bool palindromes = false;
  std::string render;
  long long cap = 24;
  std::string format = "pretty";
};

struct GenfuncArgs {
  std::string family;
  long long height = 0;
  long long terms = 10;
  std::string format = "pretty";
};

struct AsymptoticArgs {
  std::string family;
  long long height = 0;
  std::string format = "pretty";
};

struct VerifyArgs {
  VerifyOptions options;
  std::string format = "pretty";
};

int run_count(const CountArgs& a, std::ostream& out) {
  Counter counter;
  const Count value =
      counter.count(*parse_family(a.family), a.length, a.height);
  if (a.format == "json") {
    emit(out, document("count",
                       {{"family", a.family},
                        {"length", std::to_string(a.length)},
                        {"height", std::to_string(a.height)}},
                       {{"count", value.get_str()}}));
  } else {
    out << value.get_str() << '\n';
  }
  return exit_ok;
}

int run_table(const TableArgs& a, std::ostream& out) {
  Counter counter;
  const Family family = *parse_family(a.family);
  const auto rows = family == Family::balanced ? counter.s_table(a.max_length)
                                               : counter.p_table(a.max_length);
  std::vector<Count> totals;
  for (long long l = 0; l <= a.max_length; ++l)
    totals.push_back(family == Family::balanced ? s_total(l) : p_total(l));
  if (a.format == "json") {
    ordered_json rows_json = ordered_json::array();
    for (const auto& row : rows) rows_json.push_back(count_strings(row));
    emit(out, document("table",
                       {{"family", a.family},
                        {"max_length", std::to_string(a.max_length)}},
                       {{"rows", std::move(rows_json)},
                        {"totals", count_strings(totals)}}));
  } else if (a.format == "csv") {
    out << table_csv(rows, totals);
  } else {
    out << table_pretty(rows, totals);
  }
  return exit_ok;
}

int run_enumerate(const EnumerateArgs& a, std::ostream& out,
                  std::ostream& err) {
  if (a.length < 0 || a.height < 0 || a.height > a.length) {
    err << "error: height must lie in [0, length]\n";
    return exit_usage;
  }
  if (a.length > a.cap) {
    err << "length " << a.length << " exceeds the enumeration cap " << a.cap
        << " (raise with --cap or BALSEG_CAP)\n";
    return exit_cap;
  }
  const auto words = a.palindromes
                         ? enumerate_balanced_palindromes(a.length, a.height)
                         : enumerate_balanced(a.length, a.height);
  const bool rendering = !a.render.empty();
  const PathStyle style =
      a.render == "standard" ? PathStyle::standard : PathStyle::naive;
  if (a.format == "json") {
    ordered_json params{{"length", std::to_string(a.length)},
                        {"height", std::to_string(a.height)},
                        {"palindromes", a.palindromes}};
    if (rendering) params["render"] = a.render;
    ordered_json result{{"count", std::to_string(words.size())}};
    if (rendering) {
      ordered_json items = ordered_json::array();
      for (const Word& w : words)
        items.push_back({{"word", w}, {"render", render_path(w, style)}});
      result["items"] = std::move(items);
    } else {
      result["words"] = words;
    }
    emit(out, document("enumerate", std::move(params), std::move(result)));
  } else {
    for (const Word& w : words) {
      out << w << '\n';
      if (rendering) out << render_path(w, style) << '\n' << '\n';
    }
  }
  return exit_ok;
}

int run_genfunc(const GenfuncArgs& a, std::ostream& out) {
  Counter counter;
  const GeneratingFunction g =
      generating_function(counter, *parse_family(a.family), a.height);
  std::vector<Rational> series;
  if (a.terms > 0) series = series_coefficients(g.ratio(), a.terms - 1);
  std::vector<Rational> numerator = g.numerator.coefficients();
  if (numerator.empty()) numerator.push_back(0);
  if (a.format == "json") {
    ordered_json orders = ordered_json::array();
    for (long long k : g.denominator_orders)
      orders.push_back(std::to_string(k));
    emit(out, document("genfunc",
                       {{"family", a.family},
                        {"height", std::to_string(a.height)},
                        {"terms", std::to_string(a.terms)}},
                       {{"numerator", rational_strings(numerator)},
                        {"denominator_orders", std::move(orders)},
                        {"denominator", denominator_factors(g.denominator_orders)},
                        {"series", rational_strings(series)}}));
  } else {
    out << "numerator: " << coefficient_list(numerator) << '\n'
        << "denominator: " << denominator_factors(g.denominator_orders) << '\n'
        << "series: " << coefficient_list(series) << '\n';
  }
  return exit_ok;
}

int run_asymptotic(const AsymptoticArgs& a, std::ostream& out) {
  Counter counter;
  const AsymptoticProfile prof =
      asymptotic_profile(counter, *parse_family(a.family), a.height);
  if (a.format == "json") {
    emit(out, document("asymptotic",
                       {{"family", a.family},
                        {"height", std::to_string(a.height)}},
                       {{"alpha", to_string(prof.alpha)},
                        {"beta", to_string(prof.beta)},
                        {"parity_form", prof.parity_form},
                        {"period", std::to_string(prof.period)},
                        {"residual", rational_strings(prof.residual)}}));
  } else {
    out << "alpha: " << to_string(prof.alpha) << '\n'
        << "beta: " << to_string(prof.beta) << '\n'
        << "parity_form: " << (prof.parity_form ? "true" : "false") << '\n'
        << "period: " << prof.period << '\n'
        << "residual: " << coefficient_list(prof.residual) << '\n';
  }
  return exit_ok;
}

int run_verify(const VerifyArgs& a, std::ostream& out) {
  const VerifyReport report = run_verification(a.options);
  if (a.format == "json") {
    ordered_json suites = ordered_json::array();
    for (const SuiteResult& s : report.suites) {
      ordered_json entry{
          {"name", s.name},
          {"status", !s.ran ? "skip" : s.passed ? "pass" : "fail"}};
      if (!s.detail.empty()) entry["detail"] = s.detail;
      suites.push_back(std::move(entry));
    }
    ordered_json doc{
        {"command", "verify"},
        {"parameters",
         {{"max_length", std::to_string(a.options.max_length)},
          {"brute_max", std::to_string(a.options.brute_max)},
          {"h_max", std::to_string(a.options.h_max)}}},
        {"result", {{"suites", std::move(suites)}}},
        {"status", report.all_passed() ? "ok" : "inconsistent"}};
    emit(out, doc);
  } else {
    for (const SuiteResult& s : report.suites) {
      if (!s.ran)
        out << "SKIP " << s.name << '\n';
      else if (s.passed)
        out << "PASS " << s.name << '\n';
      else
        out << "FAIL " << s.name << ": " << s.detail << '\n';
    }
    out << (report.all_passed() ? "all suites passed"
                                : "verification FAILED")
        << '\n';
  }
  return report.all_passed() ? exit_ok : exit_inconsistent;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"counts, enumerations, generating functions, and asymptotics "
               "of balanced binary words"};
  app.name("balseg");
  app.require_subcommand(1);

  const auto family_check = CLI::IsMember({"s", "p"});
  const auto format_check = CLI::IsMember({"pretty", "json"});

  CountArgs count_args;
  auto* count_cmd = app.add_subcommand(
      "count", "Number of balanced words (s) or palindromes (p)");
  count_cmd->add_option("family", count_args.family, "s or p")
      ->required()
      ->check(family_check);
  count_cmd->add_option("length", count_args.length, "word length (any integer)")
      ->required();
  count_cmd->add_option("height", count_args.height, "number of 1s (any integer)")
      ->required();
  count_cmd->add_option("--format", count_args.format)->check(format_check);

  TableArgs table_args;
  auto* table_cmd =
      app.add_subcommand("table", "Triangle of counts with row totals");
  table_cmd->add_option("family", table_args.family, "s or p")
      ->required()
      ->check(family_check);
  table_cmd->add_option("--max-L", table_args.max_length, "last row")
      ->required()
      ->check(CLI::NonNegativeNumber);
  table_cmd->add_option("--format", table_args.format)
      ->check(CLI::IsMember({"pretty", "csv", "json"}));

  EnumerateArgs enum_args;
  auto* enum_cmd =
      app.add_subcommand("enumerate", "List the words themselves");
  enum_cmd->add_option("length", enum_args.length, "word length")->required();
  enum_cmd->add_option("height", enum_args.height, "number of 1s")->required();
  enum_cmd->add_flag("--palindromes", enum_args.palindromes,
                     "restrict to palindromes");
  enum_cmd->add_option("--render", enum_args.render, "draw each path")
      ->check(CLI::IsMember({"naive", "standard"}));
  enum_cmd
      ->add_option("--cap", enum_args.cap,
                   "refuse lengths above this bound (default 24)")
      ->check(CLI::NonNegativeNumber)
      ->envname("BALSEG_CAP");
  enum_cmd->add_option("--format", enum_args.format)->check(format_check);

  GenfuncArgs genfunc_args;
  auto* genfunc_cmd = app.add_subcommand(
      "genfunc", "Generating function of a fixed-height column");
  genfunc_cmd->add_option("family", genfunc_args.family, "s or p")
      ->required()
      ->check(family_check);
  genfunc_cmd->add_option("height", genfunc_args.height, "column height")
      ->required()
      ->check(CLI::NonNegativeNumber);
  genfunc_cmd
      ->add_option("--terms", genfunc_args.terms,
                   "series coefficients to print (default 10)")
      ->check(CLI::NonNegativeNumber);
  genfunc_cmd->add_option("--format", genfunc_args.format)->check(format_check);

  AsymptoticArgs asym_args;
  auto* asym_cmd = app.add_subcommand(
      "asymptotic", "Exact polynomial-plus-periodic decomposition");
  asym_cmd->add_option("family", asym_args.family, "s or p")
      ->required()
      ->check(family_check);
  asym_cmd->add_option("height", asym_args.height, "column height, >= 2")
      ->required();
  asym_cmd->add_option("--format", asym_args.format)->check(format_check);

  VerifyArgs verify_args;
  auto* verify_cmd = app.add_subcommand(
      "verify", "Cross-check the library against independent ground truth");
  verify_cmd->add_option("--max-L", verify_args.options.max_length,
                         "bijection suite length bound (default 12)");
  verify_cmd->add_option("--brute-max", verify_args.options.brute_max,
                         "counting oracle length bound, 0 skips (default 12)");
  verify_cmd->add_option("--h-max", verify_args.options.h_max,
                         "generating function height bound (default 6)");
  verify_cmd->add_option("--format", verify_args.format)->check(format_check);

  std::vector<std::string> reversed_args(args.rbegin(), args.rend());
  try {
    app.parse(reversed_args);
  } catch (const CLI::CallForHelp&) {
    const auto parsed = app.get_subcommands();
    out << (parsed.empty() ? app.help() : parsed.front()->help());
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return exit_usage;
  }

  try {
    if (count_cmd->parsed()) return run_count(count_args, out);
    if (table_cmd->parsed()) return run_table(table_args, out);
    if (enum_cmd->parsed()) return run_enumerate(enum_args, out, err);
    if (genfunc_cmd->parsed()) return run_genfunc(genfunc_args, out);
    if (asym_cmd->parsed()) return run_asymptotic(asym_args, out);
    if (verify_cmd->parsed()) return run_verify(verify_args, out);
  } catch (const inconsistency_error& e) {
    err << "internal inconsistency: " << e.what() << '\n';
    return exit_inconsistent;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return exit_inconsistent;
  }
  return exit_usage;
}

}  // namespace balseg
