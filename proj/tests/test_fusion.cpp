#include <catch_amalgamated.hpp>

#include <fstream>

#include "gybe/error.hpp"
#include "gybe/fusion.hpp"

using gybe::builtin_category;
using gybe::CategoryData;
using gybe::FusionRing;
using gybe::gen_so_odd_level2;
using gybe::Json;

namespace {

Json load_data_file(const std::string& name) {
  return gybe::load_json_file(std::string(GYBE_DATA_DIR) + "/" + name);
}

std::vector<std::string> fuse_names(const FusionRing& ring,
                                    const std::string& a,
                                    const std::string& b) {
  std::vector<std::string> out;
  for (int c : ring.fuse(ring.index_of(a), ring.index_of(b)))
    out.push_back(ring.labels[c]);
  return out;
}

}  // namespace

TEST_CASE("so rings implement the level-2 fusion rules") {
  const FusionRing r1 = gen_so_odd_level2(1);
  CHECK(r1.size() == 5);
  CHECK(fuse_names(r1, "X1", "X1") == std::vector<std::string>{"1", "Z", "X1"});
  CHECK(fuse_names(r1, "Xe", "Xe") == std::vector<std::string>{"1", "X1"});
  CHECK(fuse_names(r1, "Xe", "Xep") == std::vector<std::string>{"Z", "X1"});

  const FusionRing r2 = gen_so_odd_level2(2);
  // Rule (8): X1 x X2 = X_{2-1} + X_{min(3, 5-3)} = X1 + X2.
  CHECK(fuse_names(r2, "X1", "X2") == std::vector<std::string>{"X1", "X2"});
  CHECK(fuse_names(r2, "X2", "X2") == std::vector<std::string>{"1", "Z", "X1"});

  CHECK_THROWS_AS(gen_so_odd_level2(0), gybe::Error);
}

TEST_CASE("so rings validate for every rank up to 8") {
  for (int r = 1; r <= 8; ++r) {
    const FusionRing ring = gen_so_odd_level2(r);
    CHECK_NOTHROW(ring.validate());
    CHECK(ring.size() == r + 4);
    const int z = ring.index_of("Z");
    CHECK(ring.fuse(z, z) == std::vector<int>{ring.unit});
    for (int i = 1; i <= r; ++i) {
      const int xi = ring.index_of("X" + std::to_string(i));
      CHECK(ring.fuse(z, xi) == std::vector<int>{xi});
    }
  }
}

TEST_CASE("jk relabeling reproduces the jk6 ring") {
  const FusionRing relabeled = gybe::relabel_jk(gen_so_odd_level2(1));
  CHECK(relabeled.labels == std::vector<std::string>{"0", "1", "2", "3", "4"});
  CHECK(relabeled == builtin_category("jk6").ring);
  CHECK_THROWS_AS(gybe::relabel_jk(gen_so_odd_level2(2)), gybe::Error);
}

TEST_CASE("builtin jk6 category data") {
  const CategoryData cat = builtin_category("jk6");
  CHECK(cat.ring.labels == std::vector<std::string>{"0", "1", "2", "3", "4"});
  CHECK(cat.field_order == 24);
  REQUIRE(cat.kauffman_variable.has_value());
  CHECK(*cat.kauffman_variable == gybe::root_of_unity(5, 24));

  const int one = cat.ring.index_of("1");
  const int two = cat.ring.index_of("2");
  const auto* f = cat.find_f(one, two, two, one);
  REQUIRE(f != nullptr);
  CHECK(f->row_channels ==
        std::vector<int>{cat.ring.index_of("0"), cat.ring.index_of("2")});
  // The F-matrix is the Hadamard matrix: involutive and unitary.
  CHECK(f->matrix * f->matrix == gybe::ExactMatrix::identity(2));
  CHECK(f->matrix.is_unitary());

  const auto* f13 = cat.find_f(one, two, two, cat.ring.index_of("3"));
  REQUIRE(f13 != nullptr);
  CHECK(f13->row_channels ==
        std::vector<int>{cat.ring.index_of("4"), cat.ring.index_of("2")});

  CHECK(*cat.find_r(two, two, cat.ring.index_of("0")) ==
        gybe::root_of_unity(2, 6));
  CHECK(*cat.find_r(two, two, two) == gybe::root_of_unity(4, 6));
  CHECK(*cat.find_r(two, two, cat.ring.index_of("4")) ==
        gybe::root_of_unity(5, 6));
}

TEST_CASE("unknown builtin is rejected") {
  CHECK_THROWS_AS(builtin_category("fib"), gybe::Error);
}

TEST_CASE("builtins match the shipped data files") {
  for (const char* name : {"ising", "jk6"}) {
    const CategoryData embedded = builtin_category(name);
    const CategoryData from_file =
        gybe::parse_category(load_data_file(std::string(name) + ".json"));
    CHECK(embedded == from_file);
  }
}

TEST_CASE("category files round-trip through serialization") {
  for (const char* name : {"ising", "jk6"}) {
    const CategoryData cat = builtin_category(name);
    const CategoryData reparsed = gybe::parse_category(serialize_category(cat));
    CHECK(cat == reparsed);
  }
}

TEST_CASE("parse rejects an incomplete fusion table") {
  Json j = Json::parse(gybe::builtin_category_text("jk6"));
  Json fusion = Json::array();
  for (const auto& entry : j.at("fusion"))
    if (!(entry.at("a") == "2" && entry.at("b") == "2"))
      fusion.push_back(entry);
  j["fusion"] = fusion;
  CHECK_THROWS_WITH(gybe::parse_category(j),
                    Catch::Matchers::ContainsSubstring("incomplete fusion"));
}

TEST_CASE("parse rejects a singular F-matrix") {
  Json j = Json::parse(gybe::builtin_category_text("jk6"));
  for (auto& f : j.at("F"))
    for (auto& entry : f.at("entries")) entry = Json::array();  // zero scalars
  CHECK_THROWS_WITH(gybe::parse_category(j),
                    Catch::Matchers::ContainsSubstring("singular F-matrix"));
}

TEST_CASE("parse rejects unknown labels and bad channel lists") {
  Json j = Json::parse(gybe::builtin_category_text("jk6"));
  SECTION("unknown fusion label") {
    j["fusion"][5]["c"] = {"0", "9"};
    CHECK_THROWS_WITH(gybe::parse_category(j),
                      Catch::Matchers::ContainsSubstring("not a listed label"));
  }
  SECTION("non-associative fusion") {
    // 1x1 = {0} drops the channel 2 and breaks associativity (and duals).
    j["fusion"][5]["c"] = {"0"};
    CHECK_THROWS_AS(gybe::parse_category(j), gybe::Error);
  }
  SECTION("non-commutative fusion pair") {
    Json extra;
    extra["a"] = "2";
    extra["b"] = "1";
    extra["c"] = {"1"};
    j["fusion"].push_back(extra);
    CHECK_THROWS_WITH(gybe::parse_category(j),
                      Catch::Matchers::ContainsSubstring("commutative"));
  }
  SECTION("R-symbol off the admissible channels") {
    j["R"][0]["c"] = "3";
    CHECK_THROWS_WITH(gybe::parse_category(j),
                      Catch::Matchers::ContainsSubstring("admissible"));
  }
  SECTION("zero R-symbol") {
    j["R"][0]["value"] = Json::array();
    CHECK_THROWS_WITH(gybe::parse_category(j),
                      Catch::Matchers::ContainsSubstring("nonzero"));
  }
  SECTION("wrong F channel list") {
    j["F"][0]["row_channels"] = {"0", "4"};
    CHECK_THROWS_WITH(gybe::parse_category(j),
                      Catch::Matchers::ContainsSubstring("row channels"));
  }
  SECTION("fusion multiplicities rejected") {
    j["fusion"][5]["c"] = {"0", "2", "2"};
    CHECK_THROWS_WITH(
        gybe::parse_category(j),
        Catch::Matchers::ContainsSubstring("multiplicities are not supported"));
  }
}

TEST_CASE("serialized category files are deterministic") {
  const Json a = serialize_category(builtin_category("jk6"));
  const Json b = serialize_category(builtin_category("jk6"));
  CHECK(a.dump() == b.dump());
}
