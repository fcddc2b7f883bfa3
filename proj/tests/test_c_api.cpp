#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <string>
#include <unistd.h>

#include "aksch/aksch.h"
#include "json.hpp"

using json = nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct Ctx {
  aksch_context* ctx = nullptr;
  Ctx() { REQUIRE(aksch_context_new(&ctx) == AKSCH_OK); }
  ~Ctx() { aksch_context_free(ctx); }
};

struct Params {
  aksch_params* p = nullptr;
  Params(aksch_context* ctx, long e, std::vector<long> f) {
    REQUIRE(aksch_params_new(ctx, e, f.data(), f.size(), 0, &p) == AKSCH_OK);
  }
  ~Params() { aksch_params_free(p); }
};

json take(aksch_result* r) {
  REQUIRE(r != nullptr);
  json j = json::parse(aksch_result_json(r));
  aksch_result_free(r);
  return j;
}

}  // namespace

TEST_CASE("context and errors") {
  CHECK(std::string(aksch_version()) == "1.0.0");
  CHECK(std::string(aksch_status_string(AKSCH_REGIME)) != "");
  Ctx c;
  CHECK(std::string(aksch_last_error(c.ctx)).empty());
  aksch_params* p = nullptr;
  const long bad[1] = {7};
  CHECK(aksch_params_new(c.ctx, 5, bad, 1, 0, &p) == AKSCH_INVALID_ARGUMENT);
  CHECK(p == nullptr);
  CHECK(std::string(aksch_last_error(c.ctx)).find("f_i") != std::string::npos);
  CHECK(aksch_params_new(c.ctx, 5, nullptr, 0, 0, &p) == AKSCH_INVALID_ARGUMENT);
  CHECK(aksch_context_new(nullptr) == AKSCH_INVALID_ARGUMENT);
}

TEST_CASE("classification through the C interface") {
  Ctx c;
  Params s3(c.ctx, 6, {0, 1, 3});
  aksch_verdict_kind k;
  REQUIRE(aksch_classify_kind(c.ctx, 5, s3.p, &k) == AKSCH_OK);
  CHECK(k == AKSCH_INFINITE);
  aksch_result* r = nullptr;
  REQUIRE(aksch_classify(c.ctx, 5, s3.p, &r) == AKSCH_OK);
  CHECK(take(r)["kind"] == "INFINITE");

  aksch_params* one = nullptr;
  REQUIRE(aksch_params_new_q_one(c.ctx, 2, 0, &one) == AKSCH_OK);
  REQUIRE(aksch_classify_kind(c.ctx, 3, one, &k) == AKSCH_OK);
  CHECK(k == AKSCH_WILD);
  aksch_params_free(one);

  int ss = -1;
  Params e5(c.ctx, 5, {0, 3});
  REQUIRE(aksch_is_semisimple(c.ctx, 2, e5.p, &ss) == AKSCH_OK);
  CHECK(ss == 1);

  Params o4(c.ctx, 4, {0});
  const aksch_params* orbits[2] = {o4.p, o4.p};
  REQUIRE(aksch_classify_orbits(c.ctx, 3, orbits, 2, &r) == AKSCH_OK);
  CHECK(take(r)["kind"] == "FINITE");
}

TEST_CASE("blocks, Jantzen and decomposition") {
  Ctx c;
  Params p(c.ctx, 5, {0, 1});
  aksch_result* r = nullptr;
  REQUIRE(aksch_blocks(c.ctx, 2, p.p, &r) == AKSCH_OK);
  const json blocks = take(r);
  REQUIRE(blocks["blocks"].size() == 3);

  aksch_modular* m = nullptr;
  REQUIRE(aksch_modular_new(c.ctx, 2, &m) == AKSCH_OK);
  const long content[2] = {1, 0};
  REQUIRE(aksch_decompose(c.ctx, 2, p.p, m, content, 2, &r) == AKSCH_OK);
  const json d = take(r);
  CHECK(d["D"] == json::parse("[[1,0,0],[1,1,0],[0,1,1]]"));
  CHECK(d["C"] == json::parse("[[2,1,0],[1,2,1],[0,1,1]]"));
  CHECK(d["config"]["deformExponents"] == json::parse("[2,4]"));

  long coeff = 0;
  REQUIRE(aksch_jantzen_coefficient(c.ctx, p.p, m, "[[2],[]]", "[[1],[1]]", &coeff) == AKSCH_OK);
  CHECK(coeff == 2);
  CHECK(aksch_jantzen_coefficient(c.ctx, p.p, m, "[[2],", "[[1],[1]]", &coeff) == AKSCH_INVALID_ARGUMENT);

  // n >= e without q-deformation
  CHECK(aksch_jantzen(c.ctx, 5, p.p, m, nullptr, 0, &r) == AKSCH_REGIME);
  CHECK(std::string(aksch_last_error(c.ctx)) == "modular system requires n < e or q-deformation");
  REQUIRE(aksch_modular_set_q_deform(c.ctx, m, 5) == AKSCH_OK);
  REQUIRE(aksch_jantzen(c.ctx, 5, p.p, m, nullptr, 0, &r) == AKSCH_OK);
  CHECK(take(r)["config"]["qDeformExponent"] == 5);
  CHECK(aksch_modular_set_deform(c.ctx, m, 3, 2) == AKSCH_INVALID_ARGUMENT);
  aksch_modular_free(m);

  // infinite type: decomposition is a regime error
  Params s3(c.ctx, 6, {0, 1, 3});
  aksch_modular* m3 = nullptr;
  REQUIRE(aksch_modular_new(c.ctx, 3, &m3) == AKSCH_OK);
  CHECK(aksch_decompose(c.ctx, 5, s3.p, m3, nullptr, 0, &r) == AKSCH_REGIME);
  aksch_modular_free(m3);
}

TEST_CASE("dimensions, cache and grading") {
  Ctx c;
  std::uint64_t d = 0;
  REQUIRE(aksch_dim_hecke(c.ctx, 3, 2, &d) == AKSCH_OK);
  CHECK(d == 48);
  const int two[1] = {2};
  REQUIRE(aksch_dim_schur(c.ctx, 2, 1, two, 1, &d) == AKSCH_OK);
  CHECK(d == 10);

  aksch_result* r = nullptr;
  REQUIRE(aksch_dims(c.ctx, 3, 2, nullptr, 0, &r) == AKSCH_OK);
  const std::string plain = aksch_result_json(r);
  aksch_result_free(r);

  const fs::path dir = fs::temp_directory_path() / ("aksch-capi-" + std::to_string(::getpid()));
  fs::create_directories(dir);
  REQUIRE(aksch_context_set_cache_dir(c.ctx, dir.c_str()) == AKSCH_OK);
  for (int pass = 0; pass < 2; ++pass) {
    REQUIRE(aksch_dims(c.ctx, 3, 2, nullptr, 0, &r) == AKSCH_OK);
    CHECK(std::string(aksch_result_json(r)) == plain);
    aksch_result_free(r);
  }
  std::ofstream(dir / "aksch-enumeration-cache.json") << "garbage";
  REQUIRE(aksch_dims(c.ctx, 3, 2, nullptr, 0, &r) == AKSCH_OK);
  CHECK(std::string(aksch_result_json(r)) == plain);
  aksch_result_free(r);
  fs::remove_all(dir);

  const int m[2] = {2, 2}, levels[2] = {1, 1}, eps[2] = {1, 1};
  REQUIRE(aksch_grading(c.ctx, 2, m, 2, levels, 2, eps, &r) == AKSCH_OK);
  const json g = take(r);
  CHECK(g["pass"] == true);
  REQUIRE(aksch_grading(c.ctx, 2, m, 2, levels, 2, nullptr, &r) == AKSCH_OK);
  CHECK(take(r)["pass"] == true);
}

TEST_CASE("quiver and worked examples") {
  Ctx c;
  aksch_result* r = nullptr;
  REQUIRE(aksch_quiver(c.ctx, 3, &r) == AKSCH_OK);
  const json q = take(r);
  CHECK(q["dim"] == 9);
  CHECK(q["cartan"] == json::parse("[[2,1,0],[1,2,1],[0,1,1]]"));
  CHECK(aksch_quiver(c.ctx, 0, &r) == AKSCH_INVALID_ARGUMENT);

  REQUIRE(aksch_worked_examples(c.ctx, &r) == AKSCH_OK);
  const json w = take(r);
  CHECK(w["summary"]["fail"] == 0);
  CHECK(w["summary"]["flagged"] == 1);
}
