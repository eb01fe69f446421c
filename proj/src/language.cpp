#include "graygreed/language.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace graygreed {

namespace {

std::int64_t parse_int(std::string_view text, const char* what) {
  std::int64_t value = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last || text.empty()) {
    throw std::invalid_argument(std::string("invalid ") + what + ": '" +
                                std::string(text) + "'");
  }
  return value;
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
  if (num_ < 0 || den_ <= 0) {
    throw std::invalid_argument("rational must be nonnegative with positive "
                                "denominator");
  }
  const std::int64_t g = std::gcd(num_, den_);
  num_ /= g;
  den_ /= g;
}

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return Rational(parse_int(text, "rational numerator"));
  }
  return Rational(parse_int(text.substr(0, slash), "rational numerator"),
                  parse_int(text.substr(slash + 1), "rational denominator"));
}

std::string Rational::to_string() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

LanguageSpec LanguageSpec::run_constrained(int n, int k, std::int64_t p) {
  if (n < 0 || k < 0 || k > n) {
    throw std::invalid_argument("run-constrained family requires 0 <= k <= n");
  }
  if (p < 2) {
    throw std::invalid_argument("run-constrained family requires p >= 2");
  }
  return LanguageSpec(Family::RunConstrained, n, k, Rational(p));
}

LanguageSpec LanguageSpec::prefix_constrained(int n, int k, Rational p) {
  if (n < 0 || k < 0 || k > n) {
    throw std::invalid_argument("prefix-constrained family requires "
                                "0 <= k <= n");
  }
  // (p+1)k <= n, exactly: (num + den)*k <= n*den.
  if ((p.num() + p.den()) * k > static_cast<std::int64_t>(n) * p.den()) {
    throw std::invalid_argument("prefix-constrained family requires "
                                "(p+1)k <= n");
  }
  return LanguageSpec(Family::PrefixConstrained, n, k, p);
}

bool member(const LanguageSpec& spec, const BinaryWord& w) {
  if (w.length() != spec.n()) {
    throw std::invalid_argument("word length " + std::to_string(w.length()) +
                                " does not match n = " +
                                std::to_string(spec.n()));
  }
  if (w.weight() != spec.k()) return false;
  if (spec.family() == Family::RunConstrained) {
    const auto p = spec.p().num();
    std::int64_t run = 0;
    for (int i = 0; i < w.length(); ++i) {
      run = w.bit(i) ? run + 1 : 0;
      if (run >= p) return false;
    }
    return true;
  }
  // Every prefix: zeros*den >= num*ones.
  const std::int64_t num = spec.p().num();
  const std::int64_t den = spec.p().den();
  std::int64_t zeros = 0;
  std::int64_t ones = 0;
  for (int i = 0; i < w.length(); ++i) {
    w.bit(i) ? ++ones : ++zeros;
    if (zeros * den < num * ones) return false;
  }
  return true;
}

namespace {

// Max 1s placeable in m fresh slots with runs capped at p-1.
std::int64_t run_capacity(std::int64_t m, std::int64_t p) {
  return m - m / p;
}

struct LexEnumerator {
  const LanguageSpec& spec;
  WordList out;
  std::string buf;

  // state: run of trailing 1s (run family) or zeros so far (prefix family)
  void extend(int pos, int ones, std::int64_t state) {
    const int n = spec.n();
    const int k = spec.k();
    if (k - ones > n - pos) return;
    if (spec.family() == Family::RunConstrained) {
      const std::int64_t p = spec.p().num();
      const std::int64_t room = std::min<std::int64_t>(p - 1 - state, n - pos);
      std::int64_t cap = room;
      if (n - pos > room) cap += run_capacity(n - pos - room - 1, p);
      if (ones + cap < k) return;
    }
    if (pos == n) {
      out.push_back(BinaryWord::parse(buf));
      return;
    }
    if (spec.family() == Family::RunConstrained) {
      buf[static_cast<std::size_t>(pos)] = '0';
      extend(pos + 1, ones, 0);
      if (ones < k && state + 1 < spec.p().num()) {
        buf[static_cast<std::size_t>(pos)] = '1';
        extend(pos + 1, ones + 1, state + 1);
      }
    } else {
      buf[static_cast<std::size_t>(pos)] = '0';
      extend(pos + 1, ones, state + 1);
      // A 1 is legal when zeros*den >= num*(ones+1); pushing the remaining
      // 1s to the very end stays legal afterwards, so weight feasibility is
      // the only other condition.
      if (ones < k && state * spec.p().den() >= spec.p().num() * (ones + 1)) {
        buf[static_cast<std::size_t>(pos)] = '1';
        extend(pos + 1, ones + 1, state);
      }
    }
  }
};

}  // namespace

WordList enumerate_lex(const LanguageSpec& spec) {
  LexEnumerator e{spec, {},
                  std::string(static_cast<std::size_t>(spec.n()), '0')};
  e.extend(0, 0, 0);
  return e.out;
}

BigInt binomial(int n, int k) {
  if (k < 0 || k > n || n < 0) return 0;
  if (k > n - k) k = n - k;
  BigInt r = 1;
  for (int i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;  // exact: r equals binom(n-k+i, i) after each step
  }
  return r;
}

BigInt count_prefix_formula(int n, std::int64_t p, int k) {
  if (p < 0) {
    throw std::invalid_argument("count_prefix_formula requires p >= 0");
  }
  if ((p + 1) * k > n || k < 0) {
    throw std::invalid_argument("count_prefix_formula requires (p+1)k <= n");
  }
  return binomial(n, k) - p * binomial(n, k - 1);
}

BigInt fuss_catalan(std::int64_t p, int n) {
  if (p < 0 || n < 0) throw std::invalid_argument("fuss_catalan: p, n >= 0");
  const BigInt b = binomial(static_cast<int>((p + 1) * n), n);
  const BigInt d = p * n + 1;
  BigInt q, r;
  divide_qr(b, d, q, r);
  if (r != 0) throw std::logic_error("fuss_catalan division not exact");
  return q;
}

BigInt count_run_constrained(int n, std::int64_t p, int k) {
  if (p < 2) {
    throw std::invalid_argument("count_run_constrained requires p >= 2");
  }
  if (k < 0 || k > n) return 0;
  // ways[j][r]: completions of the current suffix length with j ones still
  // to place and a run of r ones immediately before the suffix.
  const auto runs = static_cast<std::size_t>(p);
  std::vector<std::vector<BigInt>> ways(static_cast<std::size_t>(k) + 1,
                                        std::vector<BigInt>(runs, 0));
  for (std::size_t r = 0; r < runs; ++r) ways[0][r] = 1;
  for (int len = 1; len <= n; ++len) {
    std::vector<std::vector<BigInt>> next(static_cast<std::size_t>(k) + 1,
                                          std::vector<BigInt>(runs, 0));
    for (std::size_t j = 0; j <= static_cast<std::size_t>(k); ++j) {
      for (std::size_t r = 0; r < runs; ++r) {
        BigInt v = ways[j][0];                       // place a 0
        if (j >= 1 && r + 1 < runs) v += ways[j - 1][r + 1];  // place a 1
        next[j][r] = std::move(v);
      }
    }
    ways = std::move(next);
  }
  return ways[static_cast<std::size_t>(k)][0];
}

BigInt language_count(const LanguageSpec& spec) {
  if (spec.family() == Family::RunConstrained) {
    return count_run_constrained(spec.n(), spec.p().num(), spec.k());
  }
  if (spec.p().is_integer()) {
    return count_prefix_formula(spec.n(), spec.p().num(), spec.k());
  }
  return BigInt(enumerate_lex(spec).size());
}

}  // namespace graygreed
