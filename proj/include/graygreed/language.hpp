// The two constrained families: F_n(p,k), length-n weight-k words with no
// p consecutive 1s, and C_n(p,k), length-n weight-k words whose every
// prefix has at least p times as many 0s as 1s (p may be rational).
// Membership, pruned lexicographic enumeration, and exact counting.
#ifndef GRAYGREED_LANGUAGE_HPP
#define GRAYGREED_LANGUAGE_HPP

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "graygreed/word.hpp"

namespace graygreed {

using BigInt = boost::multiprecision::cpp_int;

// Exact nonnegative rational, always in lowest terms.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t num, std::int64_t den = 1);

  // Accepts "a" or "a/b" with nonnegative integer a and positive b.
  static Rational parse(std::string_view text);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  bool is_integer() const { return den_ == 1; }
  std::int64_t ceil() const { return (num_ + den_ - 1) / den_; }

  std::string to_string() const;

  friend bool operator==(const Rational&, const Rational&) = default;

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

enum class Family {
  RunConstrained,     // F_n(p,k): integer p >= 2
  PrefixConstrained,  // C_n(p,k): rational p >= 0, (p+1)k <= n
};

class LanguageSpec {
 public:
  // F_n(p,k). Throws unless p >= 2 and 0 <= k <= n.
  static LanguageSpec run_constrained(int n, int k, std::int64_t p = 2);
  // C_n(p,k). Throws unless (p+1)k <= n, evaluated exactly.
  static LanguageSpec prefix_constrained(int n, int k, Rational p);

  Family family() const { return family_; }
  int n() const { return n_; }
  int k() const { return k_; }
  const Rational& p() const { return p_; }

  friend bool operator==(const LanguageSpec&, const LanguageSpec&) = default;

 private:
  LanguageSpec(Family family, int n, int k, Rational p)
      : family_(family), n_(n), k_(k), p_(p) {}

  Family family_;
  int n_;
  int k_;
  Rational p_;
};

// Throws if w's length differs from spec.n.
bool member(const LanguageSpec& spec, const BinaryWord& w);

// All members in lexicographic order, generated by prefix extension with
// constraint pruning. Ground truth for every count and generator check.
WordList enumerate_lex(const LanguageSpec& spec);

// |C_n(p,k)| = binom(n,k) - p*binom(n,k-1), integer p only.
BigInt count_prefix_formula(int n, std::int64_t p, int k);

// binom((p+1)n, n) / (pn+1); the division is always exact.
BigInt fuss_catalan(std::int64_t p, int n);

// |F_n(p,k)| by dynamic programming over (position, ones used, run length).
BigInt count_run_constrained(int n, std::int64_t p, int k);

// Dispatch: formula/DP where available, enumeration count otherwise
// (prefix family with non-integer p).
BigInt language_count(const LanguageSpec& spec);

BigInt binomial(int n, int k);

}  // namespace graygreed

#endif  // GRAYGREED_LANGUAGE_HPP
