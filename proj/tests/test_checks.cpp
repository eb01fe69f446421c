#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>
#include <vector>

#include "graygreed/checks.hpp"
#include "graygreed/greedy.hpp"
#include "graygreed/language.hpp"

using namespace graygreed;

namespace {

WordList words_of(const std::vector<std::string>& texts) {
  WordList out;
  out.reserve(texts.size());
  for (const auto& t : texts) out.push_back(BinaryWord::parse(t));
  return out;
}

}  // namespace

TEST_CASE("tail_length ranks words by their 01^m suffix") {
  CHECK(tail_length(BinaryWord::parse("0101")) == 2);
  CHECK(tail_length(BinaryWord::parse("0111")) == 4);
  CHECK(tail_length(BinaryWord::parse("0100")) == 1);  // tail "0"
  CHECK(tail_length(BinaryWord::parse("1111")) == 0);  // no tail
  CHECK(tail_length(BinaryWord::parse("0001")) == 2);
}

TEST_CASE("is_homogeneous_gray accepts a greedy trace") {
  const auto spec = LanguageSpec::run_constrained(6, 2);
  const auto trace = greedy_run(BinaryWord::parse("000101"), spec);
  const auto report = is_homogeneous_gray(trace.words);
  CHECK(report.results.at("gray"));
  CHECK(report.results.at("homogeneous"));
  CHECK(report.all_ok());
  CHECK_FALSE(report.first_violation.has_value());
}

TEST_CASE("is_homogeneous_gray flags repeats, jumps, and blocked swaps") {
  const auto dup = is_homogeneous_gray(words_of({"0101", "0011", "0101"}));
  CHECK_FALSE(dup.results.at("gray"));
  CHECK(dup.first_violation == 2);

  // 010101 -> 101010 moves all three 1s at once.
  const auto jump = is_homogeneous_gray(words_of({"010101", "101010"}));
  CHECK_FALSE(jump.results.at("gray"));
  CHECK(jump.first_violation == 1);

  // 1100 -> 0101 swaps across the intermediate 1.
  const auto blocked = is_homogeneous_gray(words_of({"1100", "0101"}));
  CHECK(blocked.results.at("gray"));
  CHECK_FALSE(blocked.results.at("homogeneous"));
  CHECK(blocked.first_violation == 1);
  CHECK_FALSE(blocked.all_ok());
}

TEST_CASE("structure checks reject ragged input") {
  CHECK_THROWS_AS(is_homogeneous_gray(words_of({"01", "011"})),
                  std::invalid_argument);
  CHECK_THROWS_AS(is_homogeneous_gray(words_of({"01", "11"})),
                  std::invalid_argument);  // mixed weight
  CHECK_THROWS_AS(is_suffix_partitioned(words_of({"01", "011"})),
                  std::invalid_argument);
  CHECK_THROWS_AS(is_rt_partitioned(words_of({"01", "011"})),
                  std::invalid_argument);
}

TEST_CASE("empty and singleton lists pass every check") {
  const WordList empty;
  CHECK(is_homogeneous_gray(empty).all_ok());
  CHECK(is_suffix_partitioned(empty).all_ok());
  CHECK(is_rt_partitioned(empty).all_ok());
  CHECK(theorem1_holds(empty));

  const auto one = words_of({"0101"});
  CHECK(is_homogeneous_gray(one).all_ok());
  CHECK(is_suffix_partitioned(one).all_ok());
  CHECK(is_rt_partitioned(one).all_ok());
}

TEST_CASE("is_suffix_partitioned detects a reopened suffix block") {
  CHECK(is_suffix_partitioned(words_of({"0011", "0101", "0110"})).all_ok());

  // Suffix "1" is left after index 1 and then reopened at index 3.
  const auto report =
      is_suffix_partitioned(words_of({"0101", "0011", "0110", "1001"}));
  CHECK_FALSE(report.results.at("suffix_partitioned"));
  CHECK(report.first_violation == 3);
}

TEST_CASE("tail_partition_direction classifies monotone tail runs") {
  CHECK(tail_partition_direction(words_of({"0100", "0010", "0001"})) ==
        TailDirection::Increasing);
  CHECK(tail_partition_direction(words_of({"0001", "0010", "0100"})) ==
        TailDirection::Decreasing);
  CHECK(tail_partition_direction(words_of({"0101", "1001"})) ==
        TailDirection::Both);
  CHECK(tail_partition_direction(words_of({"0100", "0001", "0010"})) ==
        TailDirection::Neither);
  CHECK(std::string(to_string(TailDirection::Both)) == "both");
}

TEST_CASE("is_rt_partitioned accepts greedy traces and orders by tails") {
  const auto spec = LanguageSpec::run_constrained(7, 2);
  for (const char* start : {"0000101", "1010000", "0100100"}) {
    const auto trace = greedy_run(BinaryWord::parse(start), spec);
    CHECK(is_rt_partitioned(trace.words).all_ok());
  }
}

TEST_CASE("is_rt_partitioned rejects non-monotone tail groups") {
  // Tail lengths 2, 1, 2: neither increasing nor decreasing.
  const auto report =
      is_rt_partitioned(words_of({"0101", "0110", "1001"}));
  CHECK_FALSE(report.results.at("rt_partitioned"));
  CHECK(report.first_violation.has_value());
}

TEST_CASE("is_rt_partitioned recurses into stripped groups") {
  // Both words have tail "01"; stripped they read 01 and 10 — a fine
  // one-level group — but inserting a word that breaks the inner
  // ordering fails.
  CHECK(is_rt_partitioned(words_of({"0101", "1001"})).all_ok());

  // Stripped group 01,10,01 repeats a tail length pattern 2,1,2 inside.
  const auto bad = is_rt_partitioned(words_of({"0101", "1001", "0101"}));
  CHECK_FALSE(bad.results.at("rt_partitioned"));
}

TEST_CASE("theorem1_holds on greedy traces and vacuous cases") {
  const auto spec = LanguageSpec::prefix_constrained(8, 3, Rational(1));
  for (const auto& start : enumerate_lex(spec)) {
    const auto trace = greedy_run(start, spec);
    CHECK(theorem1_holds(trace.words));
  }
  // Mixed weight lists are outside the theorem's scope.
  CHECK(theorem1_holds(words_of({"01", "11"})));
  // A suffix-partitioned homogeneous Gray list that is rt-partitioned.
  CHECK(theorem1_holds(words_of({"0011", "0101", "0110"})));
}
