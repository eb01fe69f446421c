// Closed-form generator words and sets, brute-force generator discovery
// (every start word swept, serial or OpenMP-parallel), and last-word
// prediction for greedy runs.
#ifndef GRAYGREED_GENERATORS_HPP
#define GRAYGREED_GENERATORS_HPP

#include <cstddef>
#include <set>

#include "graygreed/greedy.hpp"
#include "graygreed/language.hpp"
#include "graygreed/word.hpp"

namespace graygreed {

using OrderedWordSet = std::set<BinaryWord>;

// The sink word gamma: 0^{n-2k}(01)^k for F_n(2,k) (needs n >= 2k),
// 0^{n-k}1^k for C_n(p,k).
BinaryWord gamma_word(const LanguageSpec& spec);

// 0^i 1 (01)^{k-1} 0^{n-2k+1-i}; requires k >= 1 and both exponents >= 0.
BinaryWord alpha_fib(int n, int k, int i);

// 0^{pj-i} 1^{j-1} 0^i 1 (0^p 1)^{k-j} 0^{n-(p+1)k}; requires p >= 1,
// 1 <= j <= k, i >= 0 and all exponents >= 0. (Index ranges beyond the
// generator-set ones are deliberately allowed: the last-word cases
// instantiate i = 1 for p = 1 and similar.)
BinaryWord alpha_prefix(int n, std::int64_t p, int k, int i, int j);

// 0^i 1^k 0^{n-i-k}; requires 0 <= i <= n-k.
BinaryWord beta_prefix(int n, int k, int i);

// 1^k 0^{n-k}, the p = 0 alpha word.
BinaryWord alpha_prefix_p0(int n, int k);

// The set of start words whose greedy run is exhaustive, by formula:
// {alpha_fib(n,k,i)} for F_n(2,k); the deduplicated alpha/beta union for
// C_n(p,k) with integer p. k = 0 gives {0^n} for either family. Throws
// for F with p != 2 and for non-integer p (no closed form applies).
OrderedWordSet closed_form_gen_set(const LanguageSpec& spec);

// Reference sweep: greedy run from every language member, collecting the
// starts whose trace is exhaustive.
OrderedWordSet sweep_gen_set_serial(const LanguageSpec& spec,
                                    MoveOrder order = MoveOrder::OneFirst);

// Same result, runs distributed over OpenMP threads (each run owns its
// visited set; collation is order-independent).
OrderedWordSet sweep_gen_set_parallel(const LanguageSpec& spec,
                                      MoveOrder order = MoveOrder::OneFirst);

OrderedWordSet brute_force_gen_set(const LanguageSpec& spec,
                                   MoveOrder order = MoveOrder::OneFirst);

struct GenSetResult {
  OrderedWordSet brute;
  OrderedWordSet closed;
  bool agree = false;
  std::size_t cardinality = 0;  // |brute|
};

GenSetResult compare_gen_sets(const LanguageSpec& spec,
                              MoveOrder order = MoveOrder::OneFirst);

// The final word of greedy_run(start): gamma when start != gamma, else the
// parity/shape case analysis. Integer p only; throws when start is not a
// member or no closed form is stated for the parameters.
BinaryWord predict_last_word(const LanguageSpec& spec,
                             const BinaryWord& start);

}  // namespace graygreed

#endif  // GRAYGREED_GENERATORS_HPP
