// Acceptance suite: nine pass/fail properties covering exact counting,
// generator-set closed forms, last-word prediction, and the structural
// guarantees of greedy traces. Prints one line per criterion and exits
// nonzero if any fails.
#include <cstdint>
#include <cstdio>
#include <set>
#include <string>
#include <vector>

#include "graygreed/checks.hpp"
#include "graygreed/generators.hpp"
#include "graygreed/greedy.hpp"
#include "graygreed/language.hpp"
#include "graygreed/search.hpp"
#include "graygreed/word.hpp"

using namespace graygreed;

namespace {

// Greedy runs from every member of one language, with per-trace
// structural checks folded in so each criterion reads one sweep.
struct SweepStats {
  OrderedWordSet gens;                    // starts whose run is exhaustive
  std::uint64_t traces = 0;
  std::uint64_t last_word_mismatches = 0;
  std::uint64_t suffix_failures = 0;
  std::uint64_t theorem1_failures = 0;
  std::uint64_t validity_failures = 0;    // distinct/member/adjacency
};

struct SweepOptions {
  bool structural_checks = true;  // criteria 5-8 bookkeeping
  bool predictions = true;        // compare against predict_last_word
};

SweepStats sweep_language(const LanguageSpec& spec, const SweepOptions& opt) {
  const WordList members = enumerate_lex(spec);
  const std::uint64_t count =
      language_count(spec).convert_to<std::uint64_t>();
  SweepStats stats;
  stats.traces = members.size();

  const int total = static_cast<int>(members.size());
#pragma omp parallel
  {
    SweepStats local;
#pragma omp for schedule(dynamic) nowait
    for (int idx = 0; idx < total; ++idx) {
      const BinaryWord& start = members[static_cast<std::size_t>(idx)];
      const WordList trace = greedy_words(start, spec);
      if (trace.size() == count) local.gens.insert(start);

      if (opt.predictions &&
          trace.back() != predict_last_word(spec, start)) {
        ++local.last_word_mismatches;
      }
      if (opt.structural_checks) {
        const CheckReport gray = is_homogeneous_gray(trace);
        const CheckReport suffix = is_suffix_partitioned(trace);
        const bool gray_ok = gray.results.at("gray");
        const bool homog_ok = gray.results.at("homogeneous");
        const bool suffix_ok = suffix.results.at("suffix_partitioned");
        bool members_ok = true;
        for (const auto& w : trace) {
          if (!member(spec, w)) members_ok = false;
        }
        if (!gray_ok || !homog_ok || !members_ok) ++local.validity_failures;
        if (!suffix_ok) ++local.suffix_failures;
        const bool rt_ok =
            is_rt_partitioned(trace).results.at("rt_partitioned");
        if ((gray_ok && homog_ok && suffix_ok) && !rt_ok) {
          ++local.theorem1_failures;
        }
      }
    }
#pragma omp critical
    {
      stats.gens.insert(local.gens.begin(), local.gens.end());
      stats.last_word_mismatches += local.last_word_mismatches;
      stats.suffix_failures += local.suffix_failures;
      stats.theorem1_failures += local.theorem1_failures;
      stats.validity_failures += local.validity_failures;
    }
  }
  return stats;
}

struct Tally {
  std::uint64_t instances = 0;
  std::uint64_t traces = 0;
  std::uint64_t gen_set_mismatches = 0;   // brute != closed form
  std::uint64_t cardinality_errors = 0;
  std::uint64_t last_word_mismatches = 0;
  std::uint64_t suffix_failures = 0;
  std::uint64_t theorem1_failures = 0;
  std::uint64_t validity_failures = 0;

  void absorb(const SweepStats& s) {
    ++instances;
    traces += s.traces;
    last_word_mismatches += s.last_word_mismatches;
    suffix_failures += s.suffix_failures;
    theorem1_failures += s.theorem1_failures;
    validity_failures += s.validity_failures;
  }
};

Tally g_fib;      // criterion 2 instances: F_n(2,k), n <= 14
Tally g_prefix;   // criterion 3 instances: C_n(p,k), integer p, n <= 12
bool g_swept = false;

void run_sweeps() {
  if (g_swept) return;
  g_swept = true;
  const SweepOptions full{};

  for (int n = 0; n <= 14; ++n) {
    for (int k = 0; 2 * k - 1 <= n && k <= n; ++k) {
      const auto spec = LanguageSpec::run_constrained(n, k);
      SweepStats stats = sweep_language(spec, full);
      if (stats.gens != closed_form_gen_set(spec)) ++g_fib.gen_set_mismatches;
      if (k >= 1 &&
          stats.gens.size() != static_cast<std::size_t>(n - 2 * k + 2)) {
        ++g_fib.cardinality_errors;
      }
      g_fib.absorb(stats);
    }
  }

  for (std::int64_t p = 0; p <= 3; ++p) {
    for (int n = 0; n <= 12; ++n) {
      for (int k = 0; (p + 1) * k <= n; ++k) {
        const auto spec = LanguageSpec::prefix_constrained(n, k, Rational(p));
        SweepStats stats = sweep_language(spec, full);
        if (stats.gens != closed_form_gen_set(spec)) {
          ++g_prefix.gen_set_mismatches;
        }
        if (k >= 1 &&
            stats.gens.size() != static_cast<std::size_t>(n - k + 1 - p)) {
          ++g_prefix.cardinality_errors;
        }
        g_prefix.absorb(stats);
      }
    }
  }
}

// --- criteria -------------------------------------------------------------

bool criterion1(std::string* detail) {
  std::uint64_t checks = 0;
  for (std::int64_t p = 0; p <= 3; ++p) {
    for (int n = 0; n <= 14; ++n) {
      for (int k = 0; (p + 1) * k <= n; ++k) {
        const auto spec = LanguageSpec::prefix_constrained(n, k, Rational(p));
        if (BigInt(enumerate_lex(spec).size()) !=
            count_prefix_formula(n, p, k)) {
          *detail = "prefix count mismatch at p=" + std::to_string(p) +
                    " n=" + std::to_string(n) + " k=" + std::to_string(k);
          return false;
        }
        ++checks;
      }
    }
  }
  const BigInt catalan[] = {1, 2, 5, 14};
  for (std::int64_t p = 1; p <= 2; ++p) {
    for (int n = 1; n <= 4; ++n) {
      const auto spec = LanguageSpec::prefix_constrained(
          static_cast<int>(p + 1) * n, n, Rational(p));
      const BigInt size(enumerate_lex(spec).size());
      if (size != fuss_catalan(p, n) ||
          (p == 1 && size != catalan[n - 1])) {
        *detail = "Fuss-Catalan mismatch at p=" + std::to_string(p) +
                  " n=" + std::to_string(n);
        return false;
      }
      ++checks;
    }
  }
  for (std::int64_t p = 2; p <= 3; ++p) {
    for (int n = 0; n <= 14; ++n) {
      for (int k = 0; k <= n; ++k) {
        const auto spec = LanguageSpec::run_constrained(n, k, p);
        if (BigInt(enumerate_lex(spec).size()) !=
            count_run_constrained(n, p, k)) {
          *detail = "run count mismatch at p=" + std::to_string(p) +
                    " n=" + std::to_string(n) + " k=" + std::to_string(k);
          return false;
        }
        ++checks;
      }
    }
  }
  *detail = std::to_string(checks) + " exact comparisons";
  return true;
}

bool criterion2(std::string* detail) {
  run_sweeps();
  *detail = std::to_string(g_fib.instances) + " instances, " +
            std::to_string(g_fib.gen_set_mismatches) + " set mismatches, " +
            std::to_string(g_fib.cardinality_errors) + " cardinality errors";
  return g_fib.gen_set_mismatches == 0 && g_fib.cardinality_errors == 0;
}

bool criterion3(std::string* detail) {
  run_sweeps();
  *detail = std::to_string(g_prefix.instances) + " instances, " +
            std::to_string(g_prefix.gen_set_mismatches) +
            " set mismatches, " +
            std::to_string(g_prefix.cardinality_errors) +
            " cardinality errors";
  return g_prefix.gen_set_mismatches == 0 &&
         g_prefix.cardinality_errors == 0;
}

bool criterion4(std::string* detail) {
  std::uint64_t instances = 0;
  const Rational ps[] = {Rational(1, 2), Rational(3, 2), Rational(5, 2)};
  const SweepOptions gens_only{.structural_checks = false,
                               .predictions = false};
  for (const Rational& p : ps) {
    for (int n = 0; n <= 10; ++n) {
      for (int k = 1; (p.num() + p.den()) * k <= std::int64_t{n} * p.den();
           ++k) {
        const auto spec = LanguageSpec::prefix_constrained(n, k, p);
        const SweepStats stats = sweep_language(spec, gens_only);
        const auto expected =
            static_cast<std::size_t>(n - k + 1 - p.ceil());
        if (stats.gens.size() != expected) {
          *detail = "|gens| != n-k+1-ceil(p) at p=" + p.to_string() +
                    " n=" + std::to_string(n) + " k=" + std::to_string(k);
          return false;
        }
        ++instances;
      }
    }
  }
  *detail = std::to_string(instances) + " rational-p instances";
  return true;
}

bool criterion5(std::string* detail) {
  run_sweeps();
  const std::uint64_t mismatches =
      g_fib.last_word_mismatches + g_prefix.last_word_mismatches;
  *detail = std::to_string(g_fib.traces + g_prefix.traces) + " traces, " +
            std::to_string(mismatches) + " prediction mismatches";
  return mismatches == 0;
}

bool criterion6(std::string* detail) {
  run_sweeps();
  const std::uint64_t failures =
      g_fib.suffix_failures + g_prefix.suffix_failures;
  *detail = std::to_string(failures) + " suffix-partition failures";
  return failures == 0;
}

bool criterion7(std::string* detail) {
  run_sweeps();
  const std::uint64_t greedy_failures =
      g_fib.theorem1_failures + g_prefix.theorem1_failures;

  std::uint64_t orderings = 0;
  std::uint64_t rt_violations = 0;
  for (int n = 1; n <= 8; ++n) {
    for (int k = 1; 2 * k - 1 <= n; ++k) {
      const auto result = search_suffix_partitioned_gray_codes(
          LanguageSpec::run_constrained(n, k));
      orderings += result.codes;
      rt_violations += result.rt_violations;
    }
  }
  *detail = std::to_string(greedy_failures) + " greedy failures; " +
            std::to_string(orderings) + " orderings searched, " +
            std::to_string(rt_violations) + " rt violations";
  return greedy_failures == 0 && orderings > 0 && rt_violations == 0;
}

bool criterion8(std::string* detail) {
  run_sweeps();
  const std::uint64_t failures =
      g_fib.validity_failures + g_prefix.validity_failures;
  *detail = std::to_string(g_fib.traces + g_prefix.traces) + " traces, " +
            std::to_string(failures) + " validity failures";
  return failures == 0;
}

bool criterion9(std::string* detail) {
  for (int n = 0; n <= 14; ++n) {
    const WordList words =
        enumerate_lex(LanguageSpec::run_constrained(n, 0));
    if (words.size() != 1 ||
        words.front() != BinaryWord::parse(std::string(
                             static_cast<std::size_t>(n), '0'))) {
      *detail = "F_n(2,0) is not the single all-zero word at n=" +
                std::to_string(n);
      return false;
    }
  }
  for (int k = 1; k <= 6; ++k) {
    const int n = 2 * k - 1;
    std::string expected = "1";
    for (int i = 1; i < k; ++i) expected += "01";
    const WordList words =
        enumerate_lex(LanguageSpec::run_constrained(n, k));
    if (words.size() != 1 || words.front() != BinaryWord::parse(expected)) {
      *detail = "F_{2k-1}(2,k) is not the single word 1(01)^{k-1} at k=" +
                std::to_string(k);
      return false;
    }
  }
  *detail = "singleton shapes for n <= 14 and k <= 6";
  return true;
}

}  // namespace

int main() {
  struct Criterion {
    int index;
    const char* name;
    bool (*check)(std::string*);
  };
  const Criterion criteria[] = {
      {1, "counting agreement (formula vs enumeration)", criterion1},
      {2, "run-constrained generator sets (brute vs closed form)",
       criterion2},
      {3, "prefix-constrained generator sets (brute vs closed form)",
       criterion3},
      {4, "rational-p generator cardinality", criterion4},
      {5, "last-word prediction on every trace", criterion5},
      {6, "suffix partitioning on every trace", criterion6},
      {7, "recursive tail partitioning (greedy + exhaustive search)",
       criterion7},
      {8, "trace validity (distinct, members, homogeneous steps)",
       criterion8},
      {9, "singleton language shapes", criterion9},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    std::string detail;
    const bool ok = c.check(&detail);
    if (!ok) ++failures;
    std::printf("[%s] criterion %d: %s — %s\n", ok ? "PASS" : "FAIL",
                c.index, c.name, detail.c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
