#include <doctest.h>

#include "fcadr/context.hpp"
#include "fcadr/error.hpp"
#include "fixtures.hpp"

using namespace fcadr;
using fixtures::attrs;
using fixtures::objs;

TEST_CASE("constructor validates labels and shape") {
  CHECK_THROWS_AS(FormalContext({}, {"a"}, std::vector<std::vector<bool>>{}), InvalidArgument);
  CHECK_THROWS_AS(FormalContext({"1"}, {}, std::vector<std::vector<bool>>{{}}), InvalidArgument);
  CHECK_THROWS_AS(FormalContext({"1", "1"}, {"a"}, std::vector<std::vector<bool>>{{1}, {0}}), InvalidArgument);
  CHECK_THROWS_AS(FormalContext({"1"}, {"a", "a"}, std::vector<std::vector<bool>>{{1, 0}}), InvalidArgument);
  CHECK_THROWS_AS(FormalContext({"1", "2"}, {"a"}, std::vector<std::vector<bool>>{{1}}), InvalidArgument);
  CHECK_THROWS_AS(FormalContext({"1"}, {"a", "b"}, std::vector<std::vector<bool>>{{1}}), InvalidArgument);
}

TEST_CASE("rows and columns agree") {
  auto fdc = fixtures::table1();
  const auto& c = fdc.conditional();
  CHECK(c.row(2) == attrs(c, "ace"));
  CHECK(c.column(0) == objs(c, "135"));
  CHECK(c.incidence_count() == 12);
  CHECK(c.labels_of(c.row(3)) == std::vector<std::string>{"b", "d", "f"});
  CHECK_THROWS_AS(c.object_set({"9"}), InvalidArgument);
  CHECK_THROWS_AS(c.attribute_set({"z"}), InvalidArgument);
}

TEST_CASE("decision contexts need shared objects and disjoint labels") {
  FormalContext a({"1", "2"}, {"a"}, std::vector<std::vector<bool>>{{1}, {0}});
  FormalContext b({"2", "1"}, {"d"}, std::vector<std::vector<bool>>{{1}, {0}});
  FormalContext c({"1", "2"}, {"a"}, std::vector<std::vector<bool>>{{0}, {1}});
  CHECK_THROWS_AS(FormalDecisionContext(a, b), InvalidArgument);
  CHECK_THROWS_AS(FormalDecisionContext(a, c), InvalidArgument);
}

TEST_CASE("split_decision_context") {
  FormalContext table({"1", "2"}, {"a", "b", "d"}, std::vector<std::vector<bool>>{{1, 0, 1}, {0, 1, 0}});
  std::vector<std::string> dec{"d"};
  auto fdc = split_decision_context(table, dec);
  CHECK(fdc.conditional().attributes() == std::vector<std::string>{"a", "b"});
  CHECK(fdc.decision().attributes() == std::vector<std::string>{"d"});
  CHECK(fdc.decision().row(0).is_full());

  std::vector<std::string> everything{"a", "b", "d"}, none, unknown{"z"};
  CHECK_THROWS_AS(split_decision_context(table, everything), InvalidArgument);
  CHECK_THROWS_AS(split_decision_context(table, none), InvalidArgument);
  CHECK_THROWS_AS(split_decision_context(table, unknown), InvalidArgument);
}

TEST_CASE("complement_decision flips only the decision part") {
  auto fdc = fixtures::table1();
  auto comp = complement_decision(fdc);
  CHECK(comp.conditional() == fdc.conditional());
  const auto& d = comp.decision();
  CHECK(d.row(0) == attrs(d, "d2d3"));
  CHECK(d.row(3) == attrs(d, "d1"));
  CHECK(complement_decision(comp) == fdc);

  FormalContext all_true({"1", "2"}, {"d"}, std::vector<std::vector<bool>>{{1}, {1}});
  FormalDecisionContext small(FormalContext({"1", "2"}, {"a"}, std::vector<std::vector<bool>>{{1}, {0}}), all_true);
  CHECK(complement_decision(small).decision().incidence_count() == 0);
}

TEST_CASE("restrict_conditional") {
  auto fdc = fixtures::table1();
  const auto& c = fdc.conditional();
  auto sub = restrict_conditional(fdc, attrs(c, "abcf"));
  CHECK(sub.conditional().attributes() == std::vector<std::string>{"a", "b", "c", "f"});
  CHECK(sub.conditional().labels_of(sub.conditional().row(2)) == std::vector<std::string>{"a", "c"});
  CHECK(sub.decision() == fdc.decision());

  CHECK(restrict_conditional(fdc, c.all_attributes()) == fdc);

  auto only_e = restrict_conditional(fdc, attrs(c, "e")).conditional();
  CHECK(only_e.column(0) == objs(only_e, "3"));

  CHECK_THROWS_AS(restrict_conditional(fdc, c.no_attributes()), InvalidArgument);
  CHECK_THROWS_AS(restrict_conditional(fdc, AttributeSet(3)), InvalidArgument);
}

TEST_CASE("restricting twice equals restricting once") {
  auto fdc = fixtures::table1();
  const auto& c = fdc.conditional();
  auto once = restrict_conditional(fdc, attrs(c, "acf"));
  auto outer = restrict_conditional(fdc, attrs(c, "abcdf"));
  auto twice = restrict_conditional(outer, attrs(outer.conditional(), "acf"));
  CHECK(twice == once);
}

TEST_CASE("check_canonical") {
  auto fdc = fixtures::table1();
  CHECK(check_canonical(fdc.conditional()).canonical());

  FormalContext ctx({"1", "g"}, {"a", "b"}, std::vector<std::vector<bool>>{{1, 1}, {0, 1}});
  auto report = check_canonical(ctx);
  REQUIRE(report.violations.size() == 2);
  CHECK(report.violations[0] == std::pair{CanonicityViolation::full_row, std::string("1")});
  CHECK(report.violations[1] == std::pair{CanonicityViolation::full_column, std::string("b")});

  FormalContext empty_row({"1", "g"}, {"a", "b"}, std::vector<std::vector<bool>>{{1, 0}, {0, 0}});
  CHECK(check_canonical(empty_row).violations.front() ==
        std::pair{CanonicityViolation::empty_row, std::string("g")});
  CHECK(to_string(CanonicityViolation::empty_column) == "empty-column");

  CHECK(check_canonical(complement_decision(fdc).decision()).canonical());
}

TEST_CASE("random_fdc") {
  auto a = random_fdc(5, 6, 3, 0.4, 1);
  CHECK(a == random_fdc(5, 6, 3, 0.4, 1));
  CHECK(a.conditional().attributes().front() == "c1");
  CHECK(a.decision().attributes().back() == "d3");
  CHECK(a.universe().front() == "1");

  for (std::uint64_t seed : {3u, 11u}) {
    auto sparse = random_fdc(20, 10, 4, 0.1, seed);
    auto dense = random_fdc(20, 10, 4, 0.9, seed);
    CHECK(dense.conditional().incidence_count() > sparse.conditional().incidence_count());
  }

  auto tiny = random_fdc(1, 1, 1, 0.5, 7);
  CHECK(tiny.object_count() == 1);
  CHECK(tiny.conditional().attribute_count() == 1);
  CHECK(tiny.decision().attribute_count() == 1);

  CHECK_THROWS_AS(random_fdc(0, 1, 1, 0.5, 1), InvalidArgument);
  CHECK_THROWS_AS(random_fdc(1, 1, 1, 0.0, 1), InvalidArgument);
  CHECK_THROWS_AS(random_fdc(1, 1, 1, 1.0, 1), InvalidArgument);
}

TEST_CASE("random_fdc is pinned across platforms") {
  auto fdc = random_fdc(4, 3, 2, 0.5, 42);
  std::string bits;
  for (std::size_t x = 0; x < 4; ++x)
    for (std::size_t a = 0; a < 3; ++a) bits += fdc.conditional().incidence(x, a) ? '1' : '0';
  CHECK(bits == "011110101011");
}
