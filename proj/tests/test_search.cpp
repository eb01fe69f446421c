#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "graygreed/language.hpp"
#include "graygreed/search.hpp"

using namespace graygreed;

TEST_CASE("singleton and two-word languages") {
  const auto one = search_suffix_partitioned_gray_codes(
      LanguageSpec::run_constrained(4, 0));
  CHECK(one.codes == 1);
  CHECK(one.rt_violations == 0);

  // C_4(1,2) = {0011, 0101}, adjacent by one homogeneous transposition:
  // both orderings count.
  const auto two = search_suffix_partitioned_gray_codes(
      LanguageSpec::prefix_constrained(4, 2, Rational(1)));
  CHECK(two.codes == 2);
  CHECK(two.rt_violations == 0);
}

TEST_CASE("exhaustive counts over small run-constrained languages") {
  struct Row {
    int n;
    int k;
    std::uint64_t codes;
  };
  // Counts frozen from an independent implementation of the same search.
  const Row rows[] = {
      {3, 1, 4},  {4, 1, 8},  {4, 2, 2},  {5, 1, 16}, {5, 2, 4},
      {6, 1, 32}, {6, 2, 12}, {6, 3, 2},  {7, 2, 64}, {7, 3, 4},
  };
  for (const auto& row : rows) {
    const auto result = search_suffix_partitioned_gray_codes(
        LanguageSpec::run_constrained(row.n, row.k));
    CHECK_MESSAGE(result.codes == row.codes,
                  "n=", row.n, " k=", row.k, " got ", result.codes);
    CHECK(result.rt_violations == 0);
  }
}

TEST_CASE("every found ordering satisfies the recursive tail property") {
  // The heavier instance exercised by the acceptance suite in miniature.
  const auto result = search_suffix_partitioned_gray_codes(
      LanguageSpec::run_constrained(8, 3));
  CHECK(result.codes == 16);
  CHECK(result.rt_violations == 0);
}
