#include <doctest.h>

#include <sstream>

#include "detcoh/ext_engine.hpp"
#include "detcoh/serialize.hpp"

using namespace detcoh;

TEST_CASE("integer lists and ranges") {
  CHECK(parse_int_list("3,-1,0") == std::vector<int>{3, -1, 0});
  CHECK(parse_int_list("").empty());
  try {
    parse_int_list("2,1,x");
    FAIL("no exception");
  } catch (const std::invalid_argument& e) {
    CHECK(std::string(e.what()).find("position 3") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_int_list("2,,1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_int_list("2 ,1"), std::invalid_argument);
  CHECK(parse_partition("2,1,0", 3) == Partition({2, 1}, 3));
  CHECK_THROWS_AS(parse_partition("1,2", 3), std::invalid_argument);
  CHECK(parse_range("-8:0") == ZWindow{-8, 0});
  CHECK(parse_range("-8:-3") == ZWindow{-8, -3});
  CHECK_THROWS_AS(parse_range("3:1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_range("3"), std::invalid_argument);
}

TEST_CASE("JSON forms of partitions, weights and ideals") {
  CHECK(to_json(Partition({5, 2, 1}, 5)).dump() == "[5,2,1]");
  CHECK(to_json(DominantWeight({-1, -2})).dump() == "[-1,-2]");
  const auto dims = Dimensions::make(3, 2);
  const auto ideal = ideal_from_generators({Partition({3}, 2), Partition({1, 1}, 2)}, dims);
  const auto j = to_json(ideal);
  CHECK(j.dump() == R"({"generators":[[1,1],[3]],"m":3,"n":2})");
  CHECK(ideal_from_json(j) == ideal);
  CHECK(partition_from_json(Json::parse("[2,2,0]"), 3) == Partition({2, 2}, 3));
}

TEST_CASE("big integers fall back to strings") {
  const BigInt big = BigInt(1) << 80;
  CHECK(bigint_to_json(big).is_string());
  CHECK(bigint_from_json(bigint_to_json(big)) == big);
  CHECK(bigint_to_json(BigInt(-7)).get<long long>() == -7);
}

TEST_CASE("character records round trip") {
  const auto dims = Dimensions::make(3, 2);
  const TruncationBox box(-6, 1);
  const auto c = ext_character_quotient(Partition({2, 1}, 2), dims, box);
  std::ostringstream os;
  write_character(os, c, OutputFormat::Json, true);
  std::istringstream is(os.str());
  EquivariantCharacter back(dims, box);
  std::string line;
  std::size_t count = 0;
  while (std::getline(is, line)) {
    const auto j = Json::parse(line);
    const auto r = term_from_json(j);
    CHECK(bigint_from_json(j["dim"]) == r.mult * weyl_dimension(r.key.alpha) * weyl_dimension(r.key.beta));
    back.add(r.key.alpha, r.key.beta, r.key.wdeg, r.mult);
    ++count;
  }
  CHECK(count == c.size());
  CHECK(equal_on_box(back, c));
}

TEST_CASE("TSV output has the same columns") {
  const auto dims = Dimensions::make(2, 1);
  const auto c = ext_character_J(Partition({2}, 1), 1, dims, TruncationBox(-3, -2));
  std::ostringstream os;
  write_header(os, OutputHeader{"ext-sub", Json{{"m", 2}}, TruncationBox(-3, -2), false}, OutputFormat::Tsv);
  write_character(os, c, OutputFormat::Tsv, false);
  CHECK(os.str() ==
        "# {\"record\":\"header\",\"command\":\"ext-sub\",\"params\":{\"m\":2},\"box\":{\"lo\":-3,\"hi\":-2},"
        "\"transposed\":false,\"version\":\"0.1.0\"}\n"
        "alpha\tbeta\tzdeg\twdeg\tmult\n"
        "-1,-2\t-3\t-3\t1\t1\n"
        "-1,-1\t-2\t-2\t1\t1\n");
}
