#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <string>

#include "doctest.h"
#include "pavoid/constructions.hpp"
#include "pavoid/highdim.hpp"
#include "pavoid/io.hpp"
#include "pavoid/rng.hpp"

using namespace pavoid;

namespace {

std::string thrown_message(const std::string& text) {
  try {
    parse_input_text(text);
  } catch (const std::exception& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("the three documented formats") {
  ParsedInput m = parse_input_text("2 2\n10\n01\n");
  CHECK(input_kind(m) == std::string("matrix"));
  CHECK(std::get<BinaryMatrix>(m) == Permutation::identity(2).matrix());

  ParsedInput p = parse_input_text("1 4 3 2 5");
  CHECK(input_kind(p) == std::string("permutation"));
  CHECK(std::get<Permutation>(p) == cross(5));

  ParsedInput d = parse_input_text("3 2\n1 1 1\n2 2 2\n");
  CHECK(input_kind(d) == std::string("ddim"));
  CHECK(std::get<DDimPermutation>(d) == DDimPermutation::identity(3, 2));
}

TEST_CASE("tolerant framing") {
  // Blank lines, trailing spaces, and CRLF endings are all accepted.
  CHECK(std::get<BinaryMatrix>(parse_input_text("\n2 2\r\n10 \r\n\n01\r\n\n")) ==
        Permutation::identity(2).matrix());
  CHECK(std::get<Permutation>(parse_input_text("  1  \n")) == Permutation({1}));
}

TEST_CASE("interior spaces select the coordinate format") {
  // "1 1" rows are coordinate lines, not matrix rows.
  ParsedInput d = parse_input_text("2 2\n1 1\n2 2\n");
  CHECK(input_kind(d) == std::string("ddim"));
  CHECK(std::get<DDimPermutation>(d).layer(2) == Permutation::identity(2));
}

TEST_CASE("diagnostics carry line numbers") {
  CHECK(thrown_message("x 2\n10\n01\n").find("line 1") != std::string::npos);
  CHECK(thrown_message("2 2\n10\n0a\n").find("line 3") != std::string::npos);
  CHECK(thrown_message("2 2\n10\n011\n").find("line 3") != std::string::npos);
  CHECK(thrown_message("1 1 2").find("line 1") != std::string::npos);
  // Two-sided failure explains both attempted readings.
  CHECK(thrown_message("3 2\n1 1 3\n2 2 1\n").find("no known format") !=
        std::string::npos);
  CHECK_THROWS_AS(parse_input_text("1 1 2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_input_text(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_input_text("2 2\n10\n"), std::invalid_argument);
}

TEST_CASE("emit then parse is the identity") {
  SplitMix64 gen(0x10);
  for (int trial = 0; trial < 40; ++trial) {
    BinaryMatrix m(1 + static_cast<int>(gen.bounded(6)),
                   1 + static_cast<int>(gen.bounded(6)));
    for (int r = 1; r <= m.rows(); ++r)
      for (int c = 1; c <= m.cols(); ++c)
        if (gen.coin(0.5)) m.set(r, c, true);
    CHECK(std::get<BinaryMatrix>(parse_input_text(emit_text(m))) == m);

    Permutation p = random_permutation(2 + gen.bounded(7), gen);
    CHECK(std::get<Permutation>(parse_input_text(emit_text(p))) == p);

    std::vector<Permutation> layers{random_permutation(3, gen),
                                    random_permutation(3, gen)};
    DDimPermutation dd = DDimPermutation::from_layers(layers);
    CHECK(std::get<DDimPermutation>(parse_input_text(emit_text(dd))) == dd);
  }
  // A length-1 permutation survives even though its text is a single number.
  CHECK(std::get<Permutation>(parse_input_text(emit_text(Permutation({1})))) ==
        Permutation({1}));
}

TEST_CASE("conversions between kinds") {
  ParsedInput m = parse_input_text("2 2\n01\n10\n");
  CHECK(as_permutation(m) == Permutation::reversal(2));

  ParsedInput p = parse_input_text("2 1");
  CHECK(as_binary_matrix(p) == Permutation::reversal(2).matrix());

  ParsedInput flat = parse_input_text("2 2\n1 2\n2 1\n");
  CHECK(as_permutation(flat) == Permutation({2, 1}));
  CHECK(as_binary_matrix(flat) == Permutation({2, 1}).matrix());

  ParsedInput deep = parse_input_text("3 2\n1 1 1\n2 2 2\n");
  CHECK_THROWS_AS(as_permutation(deep), std::invalid_argument);
  CHECK_THROWS_AS(as_binary_matrix(deep), std::invalid_argument);

  // A non-permutation matrix cannot become a permutation.
  ParsedInput j = parse_input_text("2 2\n11\n11\n");
  CHECK_THROWS_AS(as_permutation(j), std::invalid_argument);
}

TEST_CASE("file parsing") {
  const char* path = "io_roundtrip_tmp.txt";
  {
    std::ofstream out(path);
    out << "3 3\n010\n100\n001\n";
  }
  ParsedInput m = parse_input_file(path);
  CHECK(std::get<BinaryMatrix>(m) == Permutation({2, 1, 3}).matrix());
  std::remove(path);

  CHECK_THROWS_WITH_AS(parse_input_file("definitely_missing_file.txt"),
                       doctest::Contains("definitely_missing_file"),
                       std::runtime_error);

  // Parse errors from files carry the path.
  {
    std::ofstream out(path);
    out << "2 2\nxy\nzw\n";
  }
  try {
    parse_input_file(path);
    CHECK(false);
  } catch (const std::invalid_argument& e) {
    CHECK(std::string(e.what()).find(path) != std::string::npos);
  }
  std::remove(path);
}
