// graygreed: enumerate, greedily order, verify, and count constrained
// binary-word languages from the command line.
//
// Exit codes: 0 success, 1 property or agreement failure, 2 usage/input
// error. Lines output keeps stdout to one word per line; summaries go to
// stderr so output pipes cleanly into `verify`.
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "graygreed/checks.hpp"
#include "graygreed/generators.hpp"
#include "graygreed/greedy.hpp"
#include "graygreed/language.hpp"
#include "graygreed/search.hpp"
#include "graygreed/word.hpp"

namespace {

using graygreed::BigInt;
using graygreed::BinaryWord;
using graygreed::CheckReport;
using graygreed::LanguageSpec;
using graygreed::MoveOrder;
using graygreed::Rational;
using graygreed::WordList;
using Json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitPropertyFailure = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SpecOptions {
  std::string family;
  int n = 0;
  int k = 0;
  std::string p;
};

void add_spec_options(CLI::App* cmd, SpecOptions* opts) {
  cmd->add_option("--family", opts->family, "language family: fib | prefix")
      ->required()
      ->check(CLI::IsMember({"fib", "prefix"}));
  cmd->add_option("--n", opts->n, "word length")->required();
  cmd->add_option("--k", opts->k, "word weight (number of 1s)")->required();
  cmd->add_option("--p", opts->p,
                  "constraint parameter; integer >= 2 for fib (default 2), "
                  "rational a or a/b for prefix (required)");
}

LanguageSpec build_spec(const SpecOptions& opts) {
  if (opts.family == "fib") {
    const Rational p =
        opts.p.empty() ? Rational(2) : Rational::parse(opts.p);
    if (!p.is_integer()) {
      throw UsageError("--family fib requires an integer --p");
    }
    return LanguageSpec::run_constrained(opts.n, opts.k, p.num());
  }
  if (opts.p.empty()) {
    throw UsageError("--family prefix requires --p");
  }
  return LanguageSpec::prefix_constrained(opts.n, opts.k,
                                          Rational::parse(opts.p));
}

MoveOrder parse_move_order(const std::string& text) {
  return text == "zero-first" ? MoveOrder::ZeroFirst : MoveOrder::OneFirst;
}

BigInt sweep_limit() {
  if (const char* env = std::getenv("GRAYGREED_MAX_SWEEP")) {
    try {
      return BigInt(std::string(env));
    } catch (const std::exception&) {
      throw UsageError("GRAYGREED_MAX_SWEEP is not an integer");
    }
  }
  return BigInt(2000000);
}

void require_sweepable(const LanguageSpec& spec) {
  const BigInt count = graygreed::language_count(spec);
  if (count > sweep_limit()) {
    std::ostringstream msg;
    msg << "language has " << count << " words, above the sweep bound "
        << sweep_limit() << " (set GRAYGREED_MAX_SWEEP to raise it)";
    throw UsageError(msg.str());
  }
}

void emit_json(const Json& doc) { std::cout << doc.dump(2) << "\n"; }

Json words_json(const WordList& words) {
  Json arr = Json::array();
  for (const auto& w : words) arr.push_back(w.to_string());
  return arr;
}

Json words_json(const graygreed::OrderedWordSet& words) {
  Json arr = Json::array();
  for (const auto& w : words) arr.push_back(w.to_string());
  return arr;
}

// ---- enumerate ----------------------------------------------------------

int cmd_enumerate(const SpecOptions& opts, const std::string& format) {
  const LanguageSpec spec = build_spec(opts);
  const WordList words = graygreed::enumerate_lex(spec);
  if (format == "json") {
    Json doc;
    doc["words"] = words_json(words);
    doc["count"] = words.size();
    emit_json(doc);
  } else {
    for (const auto& w : words) std::cout << w.to_string() << "\n";
  }
  return kExitOk;
}

// ---- greedy --------------------------------------------------------------

int cmd_greedy(const SpecOptions& opts, const std::string& start,
               const std::string& move_order, const std::string& format) {
  const LanguageSpec spec = build_spec(opts);
  BinaryWord start_word = BinaryWord::parse(start);
  if (!graygreed::member(spec, start_word)) {
    throw UsageError("start word '" + start + "' is not in the language");
  }
  const auto trace =
      graygreed::greedy_run(start_word, spec, parse_move_order(move_order));

  const CheckReport gray = graygreed::is_homogeneous_gray(trace.words);
  const CheckReport suffix = graygreed::is_suffix_partitioned(trace.words);
  const CheckReport rt = graygreed::is_rt_partitioned(trace.words);

  if (format == "json") {
    Json doc;
    doc["words"] = words_json(trace.words);
    doc["count"] = trace.words.size();
    doc["exhausted"] = trace.exhausted_language;
    doc["last_word"] = trace.words.back().to_string();
    doc["checks"] = {
        {"gray", gray.results.at("gray")},
        {"homogeneous", gray.results.at("homogeneous")},
        {"suffix_partitioned", suffix.results.at("suffix_partitioned")},
        {"rt_partitioned", rt.results.at("rt_partitioned")},
    };
    emit_json(doc);
  } else {
    for (const auto& w : trace.words) std::cout << w.to_string() << "\n";
    std::cerr << "words=" << trace.words.size()
              << " exhausted=" << (trace.exhausted_language ? "true" : "false")
              << " last=" << trace.words.back().to_string() << "\n";
  }
  return kExitOk;
}

// ---- gens ----------------------------------------------------------------

int cmd_gens(const SpecOptions& opts, const std::string& method,
             const std::string& move_order, const std::string& format) {
  const LanguageSpec spec = build_spec(opts);
  const MoveOrder order = parse_move_order(move_order);

  std::optional<graygreed::OrderedWordSet> brute;
  std::optional<graygreed::OrderedWordSet> closed;
  if (method == "brute" || method == "both") {
    require_sweepable(spec);
    brute = graygreed::brute_force_gen_set(spec, order);
  }
  if (method == "closed" || method == "both") {
    closed = graygreed::closed_form_gen_set(spec);
  }
  const bool agree = !brute || !closed || *brute == *closed;
  const auto& primary = brute ? *brute : *closed;

  if (format == "json") {
    Json doc;
    doc["method"] = method;
    if (brute) doc["brute"] = words_json(*brute);
    if (closed) doc["closed"] = words_json(*closed);
    if (brute && closed) doc["agree"] = agree;
    doc["cardinality"] = primary.size();
    emit_json(doc);
  } else {
    for (const auto& w : primary) std::cout << w.to_string() << "\n";
    if (brute && closed) {
      std::cerr << "agree=" << (agree ? "true" : "false") << "\n";
    }
  }
  return agree ? kExitOk : kExitPropertyFailure;
}

// ---- verify ----------------------------------------------------------------

WordList read_word_list(std::istream& in) {
  WordList words;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) {
      throw UsageError("blank line in word list");
    }
    words.push_back(BinaryWord::parse(line));
    if (words.size() > 1 && words.back().length() != words.front().length()) {
      throw UsageError("words of unequal length in input");
    }
  }
  return words;
}

int cmd_verify(const std::string& checks_csv, const std::string& file,
               const std::string& format) {
  WordList words;
  if (file.empty() || file == "-") {
    words = read_word_list(std::cin);
  } else {
    std::ifstream in(file);
    if (!in) throw UsageError("cannot open '" + file + "'");
    words = read_word_list(in);
  }

  std::vector<std::string> requested;
  {
    std::stringstream ss(checks_csv);
    std::string token;
    while (std::getline(ss, token, ',')) {
      if (token == "gray" || token == "homogeneous") {
        requested.push_back(token);
      } else if (token == "suffix" || token == "suffix_partitioned") {
        requested.push_back("suffix_partitioned");
      } else if (token == "rt" || token == "rt_partitioned") {
        requested.push_back("rt_partitioned");
      } else {
        throw UsageError("unknown check '" + token + "'");
      }
    }
  }
  if (requested.empty()) throw UsageError("no checks requested");

  CheckReport merged;
  std::optional<CheckReport> gray_report;
  for (const auto& name : requested) {
    CheckReport report;
    if (name == "gray" || name == "homogeneous") {
      if (!gray_report) gray_report = graygreed::is_homogeneous_gray(words);
      report = *gray_report;
      merged.results[name] = report.results.at(name);
      if (!report.results.at(name)) {
        merged.first_violation = merged.first_violation
                                     ? std::min(*merged.first_violation,
                                                *report.first_violation)
                                     : report.first_violation;
      }
      continue;
    }
    report = name == "suffix_partitioned"
                 ? graygreed::is_suffix_partitioned(words)
                 : graygreed::is_rt_partitioned(words);
    merged.results[name] = report.results.at(name);
    if (!report.results.at(name)) {
      merged.first_violation =
          merged.first_violation
              ? std::min(*merged.first_violation, *report.first_violation)
              : report.first_violation;
    }
  }

  if (format == "json") {
    Json doc;
    doc["words"] = words.size();
    Json checks = Json::object();
    for (const auto& [name, ok] : merged.results) checks[name] = ok;
    doc["checks"] = checks;
    doc["first_violation"] =
        merged.first_violation ? Json(*merged.first_violation) : Json(nullptr);
    emit_json(doc);
  } else {
    for (const auto& [name, ok] : merged.results) {
      std::cout << name << "=" << (ok ? "true" : "false") << "\n";
    }
    if (merged.first_violation) {
      std::cout << "first_violation=" << *merged.first_violation << "\n";
    }
  }
  return merged.all_ok() ? kExitOk : kExitPropertyFailure;
}

// ---- count -----------------------------------------------------------------

int cmd_count(const SpecOptions& opts, const std::string& method,
              const std::string& format) {
  const LanguageSpec spec = build_spec(opts);

  std::optional<BigInt> formula;
  std::optional<BigInt> brute;
  if (method == "formula" || method == "both") {
    if (spec.family() == graygreed::Family::RunConstrained) {
      formula = graygreed::count_run_constrained(spec.n(), spec.p().num(),
                                                 spec.k());
    } else if (spec.p().is_integer()) {
      formula =
          graygreed::count_prefix_formula(spec.n(), spec.p().num(), spec.k());
    } else {
      throw UsageError("formula counting requires integer p for the prefix "
                       "family");
    }
  }
  if (method == "brute" || method == "both") {
    brute = BigInt(graygreed::enumerate_lex(spec).size());
  }
  const bool agree = !formula || !brute || *formula == *brute;

  if (format == "json") {
    Json doc;
    doc["method"] = method;
    if (formula) doc["formula"] = formula->str();
    if (brute) doc["brute"] = brute->str();
    if (formula && brute) doc["agree"] = agree;
    emit_json(doc);
  } else {
    if (formula) std::cout << *formula << "\n";
    if (brute) std::cout << *brute << "\n";
    if (formula && brute && !agree) {
      std::cerr << "count mismatch: formula=" << *formula
                << " brute=" << *brute << "\n";
    }
  }
  return agree ? kExitOk : kExitPropertyFailure;
}

// ---- search ----------------------------------------------------------------

int cmd_search(const SpecOptions& opts, const std::string& format) {
  const LanguageSpec spec = build_spec(opts);
  require_sweepable(spec);
  const auto result = graygreed::search_suffix_partitioned_gray_codes(spec);
  if (format == "json") {
    Json doc;
    doc["codes"] = result.codes;
    doc["rt_violations"] = result.rt_violations;
    emit_json(doc);
  } else {
    std::cout << "codes=" << result.codes
              << " rt_violations=" << result.rt_violations << "\n";
  }
  return result.rt_violations == 0 ? kExitOk : kExitPropertyFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Greedy homogeneous-transposition Gray codes for run-constrained "
      "(fib) and prefix-constrained binary words"};
  app.require_subcommand(1);

  SpecOptions spec_opts;
  std::string format = "lines";
  std::string move_order = "one-first";
  std::string start;
  std::string method = "both";
  std::string checks = "gray,homogeneous,suffix,rt";
  std::string file;

  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "output format: lines | json")
        ->check(CLI::IsMember({"lines", "json"}));
  };
  auto add_move_order = [&](CLI::App* cmd) {
    cmd->add_option("--move-order", move_order,
                    "candidate transposition order: one-first | zero-first")
        ->check(CLI::IsMember({"one-first", "zero-first"}));
  };

  CLI::App* enumerate = app.add_subcommand(
      "enumerate", "list all language members in lexicographic order");
  add_spec_options(enumerate, &spec_opts);
  add_format(enumerate);

  CLI::App* greedy = app.add_subcommand(
      "greedy", "run the greedy Gray code algorithm from a start word");
  add_spec_options(greedy, &spec_opts);
  greedy->add_option("--start", start, "start word")->required();
  add_move_order(greedy);
  add_format(greedy);

  CLI::App* gens = app.add_subcommand(
      "gens", "generator words: starts whose greedy run is exhaustive");
  add_spec_options(gens, &spec_opts);
  gens->add_option("--method", method,
                   "brute (sweep all starts) | closed (formula) | both")
      ->check(CLI::IsMember({"brute", "closed", "both"}));
  add_move_order(gens);
  add_format(gens);

  CLI::App* verify = app.add_subcommand(
      "verify", "check list-structure properties of a word list");
  verify->add_option("--checks", checks,
                     "comma list of: gray, homogeneous, suffix, rt");
  verify->add_option("file", file, "word list file ('-' or absent: stdin)");
  add_format(verify);

  CLI::App* count =
      app.add_subcommand("count", "count language members exactly");
  add_spec_options(count, &spec_opts);
  count->add_option("--method", method, "formula | brute | both")
      ->check(CLI::IsMember({"formula", "brute", "both"}));
  add_format(count);

  CLI::App* search = app.add_subcommand(
      "search", "exhaustively count homogeneous suffix-partitioned Gray "
                "codes (tiny instances)");
  add_spec_options(search, &spec_opts);
  add_format(search);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (enumerate->parsed()) return cmd_enumerate(spec_opts, format);
    if (greedy->parsed()) {
      return cmd_greedy(spec_opts, start, move_order, format);
    }
    if (gens->parsed()) return cmd_gens(spec_opts, method, move_order, format);
    if (verify->parsed()) return cmd_verify(checks, file, format);
    if (count->parsed()) return cmd_count(spec_opts, method, format);
    if (search->parsed()) return cmd_search(spec_opts, format);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
