#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <fstream>
#include <string>

#include "twoadic/binary_sequence.hpp"

#include "test_util.hpp"

using namespace twoadic;

TEST_CASE("text format parsing") {
  SECTION("plain line") {
    const BinarySequence s = parse_sequence_text("110");
    REQUIRE(s.period() == 3);
    REQUIRE(s.bits() == std::vector<std::uint8_t>{1, 1, 0});
  }
  SECTION("trailing newline is accepted") {
    REQUIRE(parse_sequence_text("110\n") == parse_sequence_text("110"));
  }
  SECTION("empty input is rejected") {
    REQUIRE_THROWS_MATCHES(parse_sequence_text(""), error,
                           Catch::Matchers::Predicate<error>(
                               [](const error& e) { return e.code() == errc::format; }));
    REQUIRE_THROWS_AS(parse_sequence_text("\n"), error);
  }
  SECTION("bad byte is reported with its offset") {
    try {
      parse_sequence_text("1102");
      FAIL("expected a format error");
    } catch (const error& e) {
      REQUIRE(e.code() == errc::format);
      REQUIRE_THAT(e.what(), Catch::Matchers::ContainsSubstring("offset 3"));
    }
  }
  SECTION("newline anywhere but the end is a format error") {
    try {
      parse_sequence_text("11\n0");
      FAIL("expected a format error");
    } catch (const error& e) {
      REQUIRE(e.code() == errc::format);
      REQUIRE_THAT(e.what(), Catch::Matchers::ContainsSubstring("offset 2"));
    }
  }
}

TEST_CASE("text format round trip") {
  std::mt19937 rng(20240817);
  for (int i = 0; i < 50; ++i) {
    const BinarySequence s = test_util::random_sequence(rng, 1, 128);
    REQUIRE(parse_sequence_text(to_text(s)) == s);
  }
}

TEST_CASE("sequence file io") {
  const std::string path = "io_test_tmp.seq";
  const BinarySequence s = parse_sequence_text("1001011");
  write_sequence_file(path, s);
  REQUIRE(read_sequence_file(path) == s);
  std::remove(path.c_str());

  try {
    read_sequence_file("does_not_exist.seq");
    FAIL("expected an io error");
  } catch (const error& e) {
    REQUIRE(e.code() == errc::io);
  }
}

TEST_CASE("sequence invariants are enforced") {
  REQUIRE_THROWS_AS(BinarySequence(std::vector<std::uint8_t>{}), error);
  REQUIRE_THROWS_AS(BinarySequence(std::vector<std::uint8_t>{0, 2}), error);
}

TEST_CASE("reversal and complement") {
  const BinarySequence s = parse_sequence_text("1101000");
  REQUIRE(s.reversed() == parse_sequence_text("0001011"));
  REQUIRE(s.complemented() == parse_sequence_text("0010111"));
  REQUIRE(s.reversed().reversed() == s);
  REQUIRE(s.complemented().complemented() == s);
}
