#include <doctest.h>

#include "wbalg/corpus.hpp"
#include "wbalg/dualization.hpp"
#include "wbalg/io.hpp"

using namespace wbalg;

TEST_SUITE("io") {

TEST_CASE("serialize then parse is the identity on the corpus") {
  for (const auto& name : corpus_names()) {
    CAPTURE(name);
    const StructureConstants sc = corpus_algebra(name).constants();
    const std::string text = serialize(sc);
    CHECK(parse_constants(text) == sc);
    CHECK(serialize(parse_constants(text)) == text);
    CHECK(serialize(dual_constants(dual_constants(sc))) == text);
  }
}

TEST_CASE("integers, rationals and order-insensitivity") {
  const std::string a = R"({"dim": 1, "mult": [[0,0,0,1]], "comult": [[0,0,0,"2/2"]],
                            "unit": [[0, "1"]], "counit": [[0, 1]]})";
  const StructureConstants sc = parse_constants(a);
  CHECK(sc.mu(0, 0, 0) == 1);
  CHECK(sc.delta(0, 0, 0) == 1);
  const std::string b = R"({"counit": [[0, 1]], "unit": [[0, 1]], "comult": [[0,0,0,1]], "dim": 1, "mult": [[0,0,0,"1"]]})";
  CHECK(serialize(parse_constants(b)) == serialize(sc));
  CHECK(serialize(sc) == "{\n  \"dim\": 1,\n  \"mult\": [\n    [0, 0, 0, \"1\"]\n  ],\n  \"comult\": [\n    [0, 0, 0, \"1\"]\n  ],\n"
                         "  \"unit\": [[0, \"1\"]],\n  \"counit\": [[0, \"1\"]]\n}\n");
}

TEST_CASE("zero entries are dropped and rationals canonicalized") {
  const std::string a = R"({"dim": 2, "mult": [[0,0,0,1],[0,1,1,1],[1,0,1,1],[1,1,0,"0"]],
                            "comult": [[0,0,0,1],[1,1,1,"4/4"]], "unit": [[0,1]], "counit": [[0,1],[1,1]]})";
  const std::string text = serialize(parse_constants(a));
  CHECK(text.find("\"0\"") == std::string::npos);
  CHECK(text.find("[1, 1, 1, \"1\"]") != std::string::npos);
}

TEST_CASE("malformed input is an InputError") {
  const char* bad[] = {
      "{\"dim\": 1",
      "[]",
      R"({"mult": [], "comult": [], "unit": [], "counit": []})",
      R"({"dim": 0, "mult": [], "comult": [], "unit": [], "counit": []})",
      R"({"dim": 1, "mult": [[0,0,1,1]], "comult": [], "unit": [], "counit": []})",
      R"({"dim": 1, "mult": [[0,0,0,1],[0,0,0,1]], "comult": [], "unit": [], "counit": []})",
      R"({"dim": 1, "mult": [[0,0,0,1.5]], "comult": [], "unit": [], "counit": []})",
      R"({"dim": 1, "mult": [[0,0,0,"1/0"]], "comult": [], "unit": [], "counit": []})",
      R"({"dim": 1, "mult": [[0,0,0]], "comult": [], "unit": [], "counit": []})",
      R"({"dim": 1, "mult": [], "comult": [], "unit": [], "counit": [], "colour": "red"})",
      R"({"dim": 1, "mult": [], "comult": [], "unit": [[-1, 1]], "counit": []})",
      R"({"dim": 2, "mult": [], "comult": [], "unit": [], "counit": [], "basis": ["a"]})",
      R"({"dim": 1, "mult": [], "comult": [], "unit": []})",
  };
  for (const char* text : bad) {
    CAPTURE(text);
    CHECK_THROWS_AS(parse_constants(text), InputError);
  }
}

TEST_CASE("files") {
  CHECK_THROWS_AS(read_constants("/nonexistent/dir/file.json"), InputError);
}

}
