#include <doctest.h>

#include "inoue/search.hpp"

using namespace inoue;

namespace {

IntPoly P(std::initializer_list<long> coeffs_low_first) {
  std::vector<Int> c;
  for (long v : coeffs_low_first) c.emplace_back(v);
  return IntPoly(std::move(c));
}

} // namespace

TEST_CASE("search is deterministic for a fixed seed") {
  SearchConfig cfg;
  cfg.dim = 3;
  cfg.entry_bound = 3;
  cfg.count = 5;
  cfg.seed = 1;
  cfg.mode = SearchMode::companion;
  auto a = search_type_I(cfg);
  auto b = search_type_I(cfg);
  REQUIRE(a.hits.size() == 5);
  REQUIRE(b.hits.size() == 5);
  CHECK(a.attempts == b.attempts);
  for (std::size_t i = 0; i < a.hits.size(); ++i) CHECK(a.hits[i].matrix == b.hits[i].matrix);
}

TEST_CASE("parallel search matches the serial stream exactly") {
  SearchConfig cfg;
  cfg.dim = 5;
  cfg.count = 8;
  cfg.seed = 4096;
  cfg.mode = SearchMode::conjugated_companion;
  ::setenv("INOUE_THREADS", "1", 1);
  auto serial = search_type_I(cfg);
  ::setenv("INOUE_THREADS", "4", 1);
  auto parallel = search_type_I(cfg);
  ::unsetenv("INOUE_THREADS");
  CHECK(serial.attempts == parallel.attempts);
  REQUIRE(serial.hits.size() == parallel.hits.size());
  for (std::size_t i = 0; i < serial.hits.size(); ++i)
    CHECK(serial.hits[i].matrix == parallel.hits[i].matrix);
}

TEST_CASE("even dimension is a configuration error") {
  SearchConfig cfg;
  cfg.dim = 4;
  CHECK_THROWS_AS((void)search_type_I(cfg), Error);
}

TEST_CASE("every output re-validates") {
  for (SearchMode mode : {SearchMode::companion, SearchMode::conjugated_companion}) {
    SearchConfig cfg;
    cfg.dim = 5;
    cfg.count = 6;
    cfg.seed = 7;
    cfg.mode = mode;
    auto outcome = search_type_I(cfg);
    REQUIRE(static_cast<int>(outcome.hits.size()) == 6);
    for (const auto& hit : outcome.hits)
      CHECK(std::holds_alternative<TypeICertificate>(check_type_I(hit.matrix)));
  }
}

TEST_CASE("make_nondiagonalizable: the two stated constructions") {
  auto m1 = make_nondiagonalizable(P({-1, 0, -1, 1}), P({1, -1, 1}));
  REQUIRE(std::holds_alternative<IntMatrix>(m1));
  const IntMatrix& a = std::get<IntMatrix>(m1);
  CHECK(a.dim() == 7);
  CHECK(det(a) == 1);
  CHECK(std::holds_alternative<TypeICertificate>(check_type_I(a)));
  CHECK(!is_diagonalizable(a).diagonalizable);

  auto m2 = make_nondiagonalizable(P({-1, 0, -3, 1}), P({1, 0, 1}));
  REQUIRE(std::holds_alternative<IntMatrix>(m2));
  CHECK(det(std::get<IntMatrix>(m2)) == 1);
}

TEST_CASE("make_nondiagonalizable rejects a quadratic with real roots") {
  auto res = make_nondiagonalizable(P({-1, 0, -1, 1}), P({1, -3, 1})); // disc = 5 > 0
  REQUIRE(std::holds_alternative<BlockRejection>(res));
  CHECK(std::get<BlockRejection>(res).reason.find("real roots") != std::string::npos);
}

TEST_CASE("20 generated non-diagonalizable instances: accepted and non-diagonalizable") {
  SearchConfig cfg;
  cfg.dim = 7;
  cfg.count = 20;
  cfg.seed = 42;
  cfg.mode = SearchMode::block_nondiag;
  auto outcome = search_type_I(cfg);
  REQUIRE(static_cast<int>(outcome.hits.size()) == 20);
  for (const auto& hit : outcome.hits) {
    CHECK(std::holds_alternative<TypeICertificate>(check_type_I(hit.matrix)));
    CHECK(!is_diagonalizable(hit.matrix).diagonalizable);
  }
}
