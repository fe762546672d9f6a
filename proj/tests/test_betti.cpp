#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <random>

#include "edgeideal/betti.hpp"
#include "edgeideal/errors.hpp"
#include "edgeideal/polarize.hpp"
#include "edgeideal/sweep.hpp"
#include "edgeideal/textio.hpp"

using namespace edgeideal;

namespace {

using Entry = std::pair<long long, long long>;

std::map<Entry, long long> entries_of(const std::string& text,
                                      long long characteristic = 0) {
  OracleOptions opts;
  opts.field_char = characteristic;
  return betti_table(parse_ideal(text), opts).entries;
}

long long binom(long long n, long long k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

TEST_CASE("a principal ideal is its own free resolution") {
  auto table = betti_table(parse_ideal("(x1*x2^3)"));
  CHECK(table.entries == std::map<Entry, long long>{{{0, 4}, 1}});
  CHECK(table.pd() == 0);
  CHECK(table.reg() == 4);
}

TEST_CASE("two generators with one syzygy") {
  CHECK(entries_of("(x1*x2^2, x2*x3^2)") ==
        std::map<Entry, long long>{{{0, 3}, 2}, {{1, 5}, 1}});
}

TEST_CASE("golden: the weighted triangle table") {
  auto vs = VarSet::make({"x1", "x2", "x3"});
  auto table = betti_table(parse_ideal("(x1*x2^2, x2*x3^2, x3*x1^2)", vs));
  CHECK(table.entries ==
        std::map<Entry, long long>{{{0, 3}, 3}, {{1, 5}, 3}, {{2, 6}, 1}});
  Invariants inv = invariants_from_table(table);
  CHECK(inv.pd == 2);
  CHECK(inv.reg == 4);
  CHECK(inv.depth == 1);
}

TEST_CASE("invariants read off the table, depth by complement") {
  SUBCASE("principal ideal in n variables has depth n") {
    auto vs = VarSet::make({"x1", "x2", "x3", "x4"});
    auto table = betti_table(parse_ideal("(x1*x2^2)", vs));
    CHECK(table.pd() == 0);
    CHECK(table.depth() == 4);
  }
  SUBCASE("a weighted tree reports depth 2") {
    // x1 -> x2, x1 -> x3, x2 -> x4 with weights (1,2,2,3).
    auto vs = VarSet::make({"x1", "x2", "x3", "x4"});
    auto table = betti_table(parse_ideal("(x1*x2^2, x1*x3^2, x2*x4^3)", vs));
    CHECK(table.depth() == 2);
    CHECK(table.pd() == 2);
    CHECK(table.reg() == 6);
  }
  SUBCASE("the empty table has no invariants") {
    BettiTable empty;
    CHECK_THROWS_AS(invariants_from_table(empty), ZeroIdealError);
  }
}

TEST_CASE("independent oracle: Koszul resolutions of variable powers") {
  SUBCASE("linear forms (x1..x4)") {
    auto table = betti_table(parse_ideal("(x1, x2, x3, x4)"));
    for (long long i = 0; i <= 3; ++i) {
      CHECK(table.entries.at({i, i + 1}) == binom(4, i + 1));
    }
    CHECK(table.entries.size() == 4);
    CHECK(table.pd() == 3);
    CHECK(table.reg() == 1);
  }
  SUBCASE("squares (x1^2, x2^2, x3^2)") {
    auto table = betti_table(parse_ideal("(x1^2, x2^2, x3^2)"));
    for (long long i = 0; i <= 2; ++i) {
      CHECK(table.entries.at({i, 2 * (i + 1)}) == binom(3, i + 1));
    }
    CHECK(table.entries.size() == 3);
    CHECK(table.pd() == 2);
    CHECK(table.reg() == 4);
  }
  SUBCASE("mixed powers (x1, x2^3)") {
    CHECK(entries_of("(x1, x2^3)") ==
          std::map<Entry, long long>{{{0, 1}, 1}, {{0, 3}, 1}, {{1, 4}, 1}});
  }
}

TEST_CASE("row zero equals the generator degree histogram") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 30; ++trial) {
    MonomialIdeal I = random_ideal(rng);
    auto table = betti_table(I);
    std::map<Entry, long long> histogram;
    for (const auto& g : I.generators()) histogram[{0, g.degree()}] += 1;
    for (const auto& [key, count] : table.entries) {
      if (key.first == 0) CHECK(count == histogram.at(key));
    }
    for (const auto& [key, count] : histogram) {
      CHECK(table.entries.at(key) == count);
    }
  }
}

TEST_CASE("reg bounds and projective-dimension bounds hold on random ideals") {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 30; ++trial) {
    MonomialIdeal I = random_ideal(rng);
    auto table = betti_table(I);
    long long max_deg = 0;
    for (const auto& g : I.generators()) {
      max_deg = std::max(max_deg, g.degree());
    }
    CHECK(table.reg() >= max_deg);
    CHECK(table.pd() >= 0);
    CHECK(table.pd() <
          static_cast<long long>(I.generators().size()));  // Taylor bound
    CHECK(table.pd() < I.nvars());  // syzygy-theorem bound for module depth
  }
}

TEST_CASE("polarization leaves the whole table unchanged") {
  std::mt19937_64 rng(20260825);
  for (int trial = 0; trial < 40; ++trial) {
    MonomialIdeal I = random_ideal(rng);
    CHECK(betti_table(I).entries == betti_table(polarize(I).ideal).entries);
  }
}

TEST_CASE("characteristic 0 and characteristic 2 agree on the star, forest, and cycle families") {
  for (const char* text :
       {"(x1*x2^2, x2*x3^2, x3*x1^2)",            // triangle cycle
        "(x1*x2^2, x1*x3^2, x2*x4^3)",            // tree
        "(x1*x2^2, x1*x3^2, x1*x4^2)",            // out-star
        "(x1*x2^3, x2*x3^2, x3*x4^2, x4*x1^2)"})  // 4-cycle
  {
    CHECK(entries_of(text, 0) == entries_of(text, 2));
  }
}

TEST_CASE("characteristic must be zero or a prime") {
  OracleOptions opts;
  opts.field_char = 4;
  CHECK_THROWS_AS(betti_table(parse_ideal("(x1)"), opts), ValidationError);
  opts.field_char = 6;
  CHECK_THROWS_AS(betti_table(parse_ideal("(x1)"), opts), ValidationError);
  opts.field_char = 5;
  CHECK(betti_table(parse_ideal("(x1*x2, x2*x3)"), opts).pd() == 1);
}

TEST_CASE("generator cap and zero ideal are refused with distinct errors") {
  OracleOptions opts;
  opts.generator_cap = 2;
  CHECK_THROWS_AS(betti_table(parse_ideal("(x1, x2, x3)"), opts), LimitError);
  // The zero ideal resolves to the empty table; asking it for invariants is
  // what fails.
  BettiTable empty = betti_table(MonomialIdeal::zero(VarSet::make({"x1"})));
  CHECK(empty.empty());
  CHECK_THROWS_AS(invariants_from_table(empty), ZeroIdealError);
}

TEST_CASE("linear resolutions are recognized") {
  CHECK(has_linear_resolution(parse_ideal("(x1*x2^2)")));
  CHECK(has_linear_resolution(parse_ideal("(x2, x3, x4)")));
  CHECK_FALSE(has_linear_resolution(parse_ideal("(x1*x2^2, x2*x3^2)")));
  // Same degrees but a non-linear first syzygy (coprime pair).
  CHECK_FALSE(has_linear_resolution(parse_ideal("(x1^2, x2^2)")));
}

TEST_CASE("the text grid lays rows along j - i") {
  auto vs = VarSet::make({"x1", "x2", "x3"});
  auto table = betti_table(parse_ideal("(x1*x2^2, x2*x3^2, x3*x1^2)", vs));
  std::string grid = render_betti_grid(table);
  CHECK(grid ==
        "      0  1  2\n"
        "  3:  3  .  .\n"
        "  4:  .  3  1\n");
}
