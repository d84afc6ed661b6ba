#include "doctest.h"
#include "documents.hpp"

using namespace subent::cli;
using nlohmann::json;

TEST_CASE("subspace documents") {
  SUBCASE("basis with mixed real and complex entries") {
    const auto doc = parse_subspace_document(json::parse(R"({"d1":1,"d2":2,"basis":[[1,[0,0]]]})"));
    REQUIRE(doc.basis);
    CHECK((*doc.basis)[0][0] == ComplexPair{1, 0});
    CHECK_FALSE(doc.projector);
  }
  SUBCASE("flat and nested projectors agree") {
    const auto flat = parse_subspace_document(json::parse(R"({"d1":1,"d2":2,"projector":[1,0,0,0]})"));
    const auto nested =
        parse_subspace_document(json::parse(R"({"d1":1,"d2":2,"projector":[[[1,0],[0,0]],[[0,0],[0,0]]]})"));
    CHECK(*flat.projector == *nested.projector);
  }
  SUBCASE("rejections") {
    CHECK_THROWS_AS(parse_subspace_document(json::parse(R"({"d1":2,"d2":2})")), InputError);
    CHECK_THROWS_AS(parse_subspace_document(json::parse(R"({"d1":0,"d2":2,"basis":[[1]]})")), InputError);
    CHECK_THROWS_AS(parse_subspace_document(json::parse(R"({"d1":1,"d2":2,"basis":[[1]]})")), InputError);
    CHECK_THROWS_AS(parse_subspace_document(json::parse(R"({"d1":1,"d2":2,"basis":[[1,"x"]]})")), InputError);
    CHECK_THROWS_AS(
        parse_subspace_document(json::parse(R"({"d1":1,"d2":1,"basis":[[1]],"projector":[1]})")), InputError);
    CHECK_THROWS_AS(read_subspace_document("/nonexistent/file.json"), InputError);
  }
}

TEST_CASE("pipeline over the C API") {
  const auto doc = parse_subspace_document(json::parse(R"({"d1":2,"d2":2,"basis":[[1,0,0,1],[2,0,0,2]]})"));
  std::size_t dropped = 0;
  auto p = build_projector(doc, {}, &dropped);
  CHECK(dropped == 1);
  const auto r = evaluate(p.get(), "bell", {}, dropped);
  CHECK(r.dim == 1);
  CHECK(r.schmidt_string.size() == 4);
  CHECK(r.defects.passed);
  CHECK(r.rank_dropped == 1);

  PipelineOptions strict;
  strict.orthonormalize = false;
  try {
    build_projector(doc, strict, &dropped);
    FAIL("expected a library error");
  } catch (const LibraryError& e) {
    CHECK(e.status() == SUBENT_ERR_NOT_ORTHONORMAL);
  }
}

TEST_CASE("result documents round-trip") {
  auto p = build_preset({"spin", 0, 3, 0, SUBENT_BRANCH_MINUS});
  const auto r = evaluate(p.get(), "spin", {});
  const auto back = result_from_json(json::parse(to_json(r).dump()));
  CHECK(back == r);
  CHECK(csv_header(2) == "label,d1,d2,dim,p1,p2,e_d,e_i,e_t");
  const auto row = csv_row(r, 4);
  CHECK(row.rfind("spin,4,2,3,", 0) == 0);
  CHECK(std::count(row.begin(), row.end(), ',') == 10);
  CHECK(table({r}).find("spin") != std::string::npos);
}

TEST_CASE("preset specs") {
  CHECK_FALSE(parse_preset_spec("data.json"));
  const auto s = parse_preset_spec("preset:spin:two_j=5:branch=minus");
  REQUIRE(s);
  CHECK(s->name == "spin");
  CHECK(s->two_j == 5);
  CHECK(s->branch == SUBENT_BRANCH_MINUS);
  CHECK(preset_label(*s) == "spin_2j5_minus");
  CHECK(parse_preset_spec("preset:limiting")->name == "limiting");
  CHECK_THROWS_AS(parse_preset_spec("preset:antisym:n"), InputError);
  CHECK_THROWS_AS(parse_preset_spec("preset:antisym:n=x"), InputError);
  CHECK_THROWS_AS(parse_preset_spec("preset:spin:branch=up"), InputError);
  CHECK_THROWS_AS(build_preset({"cube"}), InputError);
  CHECK_THROWS_AS(build_preset({"antisym", 1}), LibraryError);
}
