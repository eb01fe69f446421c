#include "graygreed/generators.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace graygreed {

namespace {

void append_run(std::string& s, char c, std::int64_t count) {
  if (count < 0) throw std::invalid_argument("negative run in word formula");
  s.append(static_cast<std::size_t>(count), c);
}

BinaryWord word_of(const std::string& s) { return BinaryWord::parse(s); }

void require_fibonacci(const LanguageSpec& spec, const char* who) {
  if (spec.family() != Family::RunConstrained || spec.p().num() != 2) {
    throw std::invalid_argument(std::string(who) +
                                ": run-constrained results cover p = 2 only");
  }
}

void require_integer_p(const LanguageSpec& spec, const char* who) {
  if (!spec.p().is_integer()) {
    throw std::invalid_argument(std::string(who) +
                                ": no closed form for non-integer p");
  }
}

}  // namespace

BinaryWord gamma_word(const LanguageSpec& spec) {
  const int n = spec.n();
  const int k = spec.k();
  std::string s;
  if (spec.family() == Family::RunConstrained) {
    require_fibonacci(spec, "gamma_word");
    if (n < 2 * k) {
      throw std::invalid_argument("gamma_word requires n >= 2k");
    }
    append_run(s, '0', n - 2 * k);
    for (int t = 0; t < k; ++t) s += "01";
  } else {
    append_run(s, '0', n - k);
    append_run(s, '1', k);
  }
  return word_of(s);
}

BinaryWord alpha_fib(int n, int k, int i) {
  if (k < 1 || i < 0 || n - 2 * k + 1 - i < 0) {
    throw std::invalid_argument("alpha_fib requires k >= 1 and "
                                "0 <= i <= n-2k+1");
  }
  std::string s;
  append_run(s, '0', i);
  s += '1';
  for (int t = 0; t < k - 1; ++t) s += "01";
  append_run(s, '0', n - 2 * k + 1 - i);
  return word_of(s);
}

BinaryWord alpha_prefix(int n, std::int64_t p, int k, int i, int j) {
  if (p < 1 || j < 1 || j > k || i < 0 || p * j - i < 0 ||
      n - (p + 1) * k < 0) {
    throw std::invalid_argument("alpha_prefix index out of range");
  }
  std::string s;
  append_run(s, '0', p * j - i);
  append_run(s, '1', j - 1);
  append_run(s, '0', i);
  s += '1';
  for (int t = 0; t < k - j; ++t) {
    append_run(s, '0', p);
    s += '1';
  }
  append_run(s, '0', n - (p + 1) * k);
  return word_of(s);
}

BinaryWord beta_prefix(int n, int k, int i) {
  if (i < 0 || i > n - k || k < 0) {
    throw std::invalid_argument("beta_prefix requires 0 <= i <= n-k");
  }
  std::string s;
  append_run(s, '0', i);
  append_run(s, '1', k);
  append_run(s, '0', n - i - k);
  return word_of(s);
}

BinaryWord alpha_prefix_p0(int n, int k) { return beta_prefix(n, k, 0); }

OrderedWordSet closed_form_gen_set(const LanguageSpec& spec) {
  const int n = spec.n();
  const int k = spec.k();
  OrderedWordSet gens;
  if (k == 0) {
    // Both families degenerate to the singleton language {0^n}.
    gens.insert(word_of(std::string(static_cast<std::size_t>(n), '0')));
    return gens;
  }
  if (spec.family() == Family::RunConstrained) {
    require_fibonacci(spec, "closed_form_gen_set");
    if (n < 2 * k - 1) {
      throw std::invalid_argument("closed_form_gen_set: empty language "
                                  "(n < 2k-1)");
    }
    for (int i = 0; i <= n - 2 * k + 1; ++i) gens.insert(alpha_fib(n, k, i));
    if (gens.size() != static_cast<std::size_t>(n - 2 * k + 2)) {
      throw std::logic_error("generator cardinality law n-2k+2 violated");
    }
    return gens;
  }
  require_integer_p(spec, "closed_form_gen_set");
  const std::int64_t p = spec.p().num();
  if (p == 0) {
    for (int i = 0; i <= n - k; ++i) gens.insert(beta_prefix(n, k, i));
  } else {
    for (int j = 1; j <= k; ++j) {
      for (int i = 0; i < p; ++i) gens.insert(alpha_prefix(n, p, k, i, j));
    }
    for (std::int64_t i = p * k + 1; i <= n - k; ++i) {
      gens.insert(beta_prefix(n, k, static_cast<int>(i)));
    }
  }
  if (static_cast<std::int64_t>(gens.size()) != n - k + 1 - p) {
    throw std::logic_error("generator cardinality law n-k+1-p violated");
  }
  return gens;
}

OrderedWordSet sweep_gen_set_serial(const LanguageSpec& spec,
                                    MoveOrder order) {
  const WordList members = enumerate_lex(spec);
  const std::size_t total = members.size();
  OrderedWordSet gens;
  for (const auto& start : members) {
    if (greedy_words(start, spec, order).size() == total) gens.insert(start);
  }
  return gens;
}

OrderedWordSet sweep_gen_set_parallel(const LanguageSpec& spec,
                                      MoveOrder order) {
  const WordList members = enumerate_lex(spec);
  const std::size_t total = members.size();
  std::vector<unsigned char> is_gen(total, 0);
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t idx = 0;
       idx < static_cast<std::ptrdiff_t>(members.size()); ++idx) {
    const auto& start = members[static_cast<std::size_t>(idx)];
    is_gen[static_cast<std::size_t>(idx)] =
        greedy_words(start, spec, order).size() == total;
  }
  OrderedWordSet gens;
  for (std::size_t idx = 0; idx < total; ++idx) {
    if (is_gen[idx]) gens.insert(members[idx]);
  }
  return gens;
}

OrderedWordSet brute_force_gen_set(const LanguageSpec& spec, MoveOrder order) {
  return sweep_gen_set_parallel(spec, order);
}

GenSetResult compare_gen_sets(const LanguageSpec& spec, MoveOrder order) {
  GenSetResult result;
  result.brute = brute_force_gen_set(spec, order);
  result.closed = closed_form_gen_set(spec);
  result.agree = result.brute == result.closed;
  result.cardinality = result.brute.size();
  return result;
}

BinaryWord predict_last_word(const LanguageSpec& spec,
                             const BinaryWord& start) {
  if (!member(spec, start)) {
    throw std::invalid_argument("predict_last_word: start word '" +
                                start.to_string() +
                                "' is not in the language");
  }
  const int n = spec.n();
  const int k = spec.k();
  if (k == 0) return start;  // language is {0^n}

  if (spec.family() == Family::RunConstrained) {
    require_fibonacci(spec, "predict_last_word");
    if (n == 2 * k - 1) return start;  // singleton {1(01)^{k-1}}
    const BinaryWord gamma = gamma_word(spec);
    if (!(start == gamma)) return gamma;
    return k % 2 == 0 ? alpha_fib(n, k, 0) : alpha_fib(n, k, n - 2 * k);
  }

  require_integer_p(spec, "predict_last_word");
  const std::int64_t p = spec.p().num();
  const BinaryWord gamma = gamma_word(spec);
  if (!(start == gamma)) return gamma;
  if (n == p + 1 && k == 1) return gamma;  // 0^p 1, the singleton case
  if (k % 2 == 1 && n != (p + 1) * k) return beta_prefix(n, k, n - k - 1);
  if (k % 2 == 1) {  // k >= 3 odd, n = (p+1)k
    if (p == 0) return beta_prefix(n, k, 0);  // 1^k (here n = k)
    return alpha_prefix(n, p, k, 1, k - 1);
  }
  // k even
  if (p == 0) return alpha_prefix_p0(n, k);  // 1^k 0^{n-k}
  return alpha_prefix(n, p, k, 1, k);
}

}  // namespace graygreed
