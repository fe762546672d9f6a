#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <optional>
#include <random>
#include <vector>

#include "edgeideal/errors.hpp"
#include "edgeideal/ideal.hpp"
#include "edgeideal/monomial.hpp"
#include "edgeideal/textio.hpp"
#include "edgeideal/varset.hpp"

using namespace edgeideal;

namespace {

VarSetPtr vars3() { return VarSet::make({"x1", "x2", "x3"}); }
VarSetPtr vars4() { return VarSet::make({"x1", "x2", "x3", "x4"}); }

Monomial mono(const VarSet& vs, const std::string& text) {
  return parse_monomial(text, vs);
}

// All monomials in `nvars` variables with every exponent <= max_exp.
std::vector<Monomial> exponent_box(int nvars, int max_exp) {
  std::vector<Monomial> out;
  std::vector<int> exps(nvars, 0);
  while (true) {
    out.push_back(Monomial{exps});
    int pos = nvars - 1;
    while (pos >= 0 && exps[pos] == max_exp) exps[pos--] = 0;
    if (pos < 0) break;
    ++exps[pos];
  }
  return out;
}

}  // namespace

TEST_CASE("variable sets validate names and preserve order") {
  auto vs = VarSet::make({"x1", "alpha_2", "_z"});
  CHECK(vs->size() == 3);
  CHECK(vs->name(1) == "alpha_2");
  CHECK(vs->find("_z") == std::optional<int>{2});
  CHECK_FALSE(vs->find("missing").has_value());
  CHECK_THROWS_AS(VarSet::make({}), ValidationError);
  CHECK_THROWS_AS(VarSet::make({"x", "x"}), ValidationError);
  CHECK_THROWS_AS(VarSet::make({"1x"}), ValidationError);
  CHECK_THROWS_AS(VarSet::make({"a b"}), ValidationError);
}

TEST_CASE("monomial degree is the exponent sum and negatives are rejected") {
  Monomial m{{2, 0, 3}};
  CHECK(m.degree() == 5);
  CHECK_FALSE(m.is_constant());
  CHECK(Monomial::one(3).is_constant());
  CHECK_THROWS_AS((Monomial{{1, -1}}), ValidationError);
  // An empty exponent vector is the zero-variable placeholder, same as the
  // default constructor; real ambients are never empty (VarSet forbids it).
  CHECK(Monomial{std::vector<int>{}}.nvars() == 0);
  CHECK(Monomial{std::vector<int>{}}.is_constant());
}

TEST_CASE("lcm matches the componentwise maximum on the stated examples") {
  auto vs = vars3();
  CHECK(lcm(mono(*vs, "x1^2*x2"), mono(*vs, "x2^3")) == mono(*vs, "x1^2*x2^3"));
  Monomial u = mono(*vs, "x1^3*x3");
  CHECK(lcm(u, u) == u);
  CHECK(lcm(mono(*vs, "x1*x2^2"), mono(*vs, "x2*x3^2")) ==
        mono(*vs, "x1*x2^2*x3^2"));
}

TEST_CASE("divisibility, lcm, and gcd agree with the exhaustive oracle up to (3,3,3)") {
  auto box = exponent_box(3, 3);
  for (const auto& a : box) {
    for (const auto& b : box) {
      bool divides_oracle = true;
      for (int v = 0; v < 3; ++v) {
        if (a.exponent(v) > b.exponent(v)) divides_oracle = false;
      }
      CHECK(a.divides(b) == divides_oracle);

      Monomial l = lcm(a, b);
      Monomial g = gcd(a, b);
      for (int v = 0; v < 3; ++v) {
        CHECK(l.exponent(v) == std::max(a.exponent(v), b.exponent(v)));
        CHECK(g.exponent(v) == std::min(a.exponent(v), b.exponent(v)));
      }
      // lcm is the least common multiple: both divide it, and it divides
      // every common multiple in the box.
      CHECK(a.divides(l));
      CHECK(b.divides(l));
      CHECK(((a * b) == Monomial{{a.exponent(0) + b.exponent(0),
                                  a.exponent(1) + b.exponent(1),
                                  a.exponent(2) + b.exponent(2)}}));
      if (a.divides(b)) {
        CHECK(b.divided_by(a) * a == b);
      }
    }
  }
}

TEST_CASE("exact division refuses non-multiples") {
  auto vs = vars3();
  CHECK_THROWS_AS(mono(*vs, "x1").divided_by(mono(*vs, "x2")), ValidationError);
}

TEST_CASE("canonical order sorts by degree first, then exponent vectors") {
  Monomial a{{0, 1, 0}};  // x2
  Monomial b{{1, 0, 0}};  // x1
  Monomial c{{0, 0, 2}};  // x3^2
  CHECK(degree_lex_less(a, c));        // degree 1 before degree 2
  CHECK(degree_lex_less(a, b));        // same degree: (0,1,0) before (1,0,0)
  CHECK_FALSE(degree_lex_less(b, a));
  CHECK_FALSE(degree_lex_less(a, a));  // strict
}

TEST_CASE("minimalize keeps exactly the divisibility-minimal generators") {
  auto vs = vars4();
  SUBCASE("absorbs multiples") {
    MonomialIdeal I(vs, {mono(*vs, "x1"), mono(*vs, "x1*x2")});
    REQUIRE(I.generators().size() == 1);
    CHECK(to_string(I) == "(x1)");
  }
  SUBCASE("keeps incomparable pairs") {
    MonomialIdeal I(vs, {mono(*vs, "x1*x2^2"), mono(*vs, "x2*x3^2")});
    CHECK(I.generators().size() == 2);
  }
  SUBCASE("an already minimal quadruple is unchanged") {
    auto vs5 = VarSet::make({"x1", "x2", "x3", "x4", "x5"});
    MonomialIdeal I = parse_ideal("(x1^2*x2^3, x2^4*x3, x3*x4^2, x4^2*x5)", vs5);
    CHECK(I.generators().size() == 4);
  }
}

TEST_CASE("minimalize is idempotent and order-independent") {
  auto vs = vars4();
  std::vector<Monomial> gens = {
      mono(*vs, "x1*x2^2"), mono(*vs, "x2*x3^2"), mono(*vs, "x1*x2^2*x3"),
      mono(*vs, "x4^3"),    mono(*vs, "x2*x3^2"),  // duplicate
  };
  MonomialIdeal ref(vs, gens);
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    std::shuffle(gens.begin(), gens.end(), rng);
    MonomialIdeal shuffled(vs, gens);
    CHECK(shuffled == ref);
    CHECK(to_string(shuffled) == to_string(ref));
  }
  MonomialIdeal twice(vs, ref.generators());
  CHECK(twice == ref);
}

TEST_CASE("ideal construction rejects constants and ambient mismatches") {
  auto vs = vars3();
  CHECK_THROWS_AS(MonomialIdeal(vs, {Monomial::one(3)}), ValidationError);
  CHECK_THROWS_AS(MonomialIdeal(vs, {Monomial{{1, 0}}}), ValidationError);
  CHECK_THROWS_AS(MonomialIdeal(nullptr, {}), ValidationError);
  CHECK(MonomialIdeal::zero(vs).is_zero());
}

TEST_CASE("ideal sum matches the stated examples") {
  auto vs = vars4();
  MonomialIdeal I = parse_ideal("(x1*x2^2)", vs);
  MonomialIdeal J = parse_ideal("(x2*x3^2, x2*x4^2)", vs);
  CHECK(sum_ideal(I, J) == parse_ideal("(x1*x2^2, x2*x3^2, x2*x4^2)", vs));
  CHECK(sum_ideal(I, MonomialIdeal::zero(vs)) == I);
  MonomialIdeal A = parse_ideal("(x1)", vs);
  MonomialIdeal B = parse_ideal("(x1*x2)", vs);
  CHECK(to_string(sum_ideal(A, B)) == "(x1)");
}

TEST_CASE("ideal product matches the stated examples") {
  auto vs = vars4();
  CHECK(product_ideal(parse_ideal("(x2)", vs), parse_ideal("(x3^2, x4^2)", vs)) ==
        parse_ideal("(x2*x3^2, x2*x4^2)", vs));
  CHECK(product_ideal(parse_ideal("(x1*x3)", vs), MonomialIdeal::zero(vs))
            .is_zero());
  CHECK(product_ideal(parse_ideal("(x1, x2)", vs), parse_ideal("(x1, x2)", vs)) ==
        parse_ideal("(x1^2, x1*x2, x2^2)", vs));
}

TEST_CASE("ideal intersection matches the stated examples") {
  auto vs = vars4();
  CHECK(to_string(intersect_ideal(parse_ideal("(x1)", vs),
                                  parse_ideal("(x2)", vs))) == "(x1*x2)");
  CHECK(intersect_ideal(parse_ideal("(x1*x2^2)", vs),
                        parse_ideal("(x2*x3^2, x2*x4^2)", vs)) ==
        parse_ideal("(x1*x2^2*x3^2, x1*x2^2*x4^2)", vs));
  MonomialIdeal I = parse_ideal("(x1*x2^2, x2*x3^2)", vs);
  CHECK(intersect_ideal(I, I) == I);
}

TEST_CASE("intersection membership agrees with divisibility up to degree 6") {
  auto vs = vars4();
  MonomialIdeal I = parse_ideal("(x1*x2^2)", vs);
  MonomialIdeal J = parse_ideal("(x2*x3^2, x2*x4^2)", vs);
  MonomialIdeal meet = intersect_ideal(I, J);
  for (const auto& m : exponent_box(4, 6)) {
    if (m.degree() > 6) continue;
    CHECK(meet.contains(m) == (I.contains(m) && J.contains(m)));
  }
}

TEST_CASE("sum, product, and intersection results are always minimal") {
  std::mt19937_64 rng(11);
  auto vs = vars4();
  auto random_gens = [&](int count) {
    std::vector<Monomial> gens;
    for (int i = 0; i < count; ++i) {
      std::vector<int> exps(4);
      bool all_zero = true;
      for (auto& e : exps) {
        e = static_cast<int>(rng() % 4);
        if (e) all_zero = false;
      }
      if (all_zero) exps[rng() % 4] = 1;
      gens.push_back(Monomial{exps});
    }
    return gens;
  };
  auto is_minimal = [](const MonomialIdeal& I) {
    const auto& g = I.generators();
    for (std::size_t a = 0; a < g.size(); ++a) {
      for (std::size_t b = 0; b < g.size(); ++b) {
        if (a != b && g[a].divides(g[b])) return false;
      }
    }
    return true;
  };
  for (int trial = 0; trial < 50; ++trial) {
    MonomialIdeal I(vs, random_gens(1 + rng() % 4));
    MonomialIdeal J(vs, random_gens(1 + rng() % 4));
    CHECK(is_minimal(sum_ideal(I, J)));
    CHECK(is_minimal(product_ideal(I, J)));
    CHECK(is_minimal(intersect_ideal(I, J)));
  }
}

TEST_CASE("ideal operations reject mismatched ambient sets") {
  MonomialIdeal a = parse_ideal("(x1)", vars3());
  MonomialIdeal b = parse_ideal("(x1)", vars4());
  CHECK_THROWS_AS(sum_ideal(a, b), ValidationError);
  CHECK_THROWS_AS(product_ideal(a, b), ValidationError);
  CHECK_THROWS_AS(intersect_ideal(a, b), ValidationError);
}

TEST_CASE("monomial text round-trips bit-exactly") {
  auto vs = vars4();
  for (const char* text : {"1", "x1", "x3^2", "x1^2*x2^3", "x1*x2*x3*x4",
                           "x2^5*x4"}) {
    CHECK(to_string(parse_monomial(text, *vs), *vs) == text);
  }
  // Unsorted and repeated factors normalize to the canonical form.
  CHECK(to_string(parse_monomial("x2*x1", *vs), *vs) == "x1*x2");
  CHECK(to_string(parse_monomial("x1*x1^2", *vs), *vs) == "x1^3");
}

TEST_CASE("ideal text round-trips bit-exactly, including the zero ideal") {
  auto vs = vars4();
  // Canonical order: ascending degree, then ascending exponent vectors.
  for (const char* text :
       {"(0)", "(x1)", "(x2*x3^2, x1*x2^2)", "(x2^2, x1*x2, x1^2)"}) {
    CHECK(to_string(parse_ideal(text, vs)) == text);
  }
}

TEST_CASE("random ideals survive a print-parse loop") {
  std::mt19937_64 rng(23);
  auto vs = vars4();
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Monomial> gens;
    int count = 1 + rng() % 5;
    for (int i = 0; i < count; ++i) {
      std::vector<int> exps(4);
      bool all_zero = true;
      for (auto& e : exps) {
        e = static_cast<int>(rng() % 4);
        if (e) all_zero = false;
      }
      if (all_zero) exps[0] = 1;
      gens.push_back(Monomial{exps});
    }
    MonomialIdeal I(vs, gens);
    CHECK(parse_ideal(to_string(I), vs) == I);
  }
}

TEST_CASE("parser reports positions for malformed input") {
  auto vs = vars3();
  CHECK_THROWS_AS(parse_monomial("x9", *vs), ParseError);
  CHECK_THROWS_AS(parse_monomial("x1^", *vs), ParseError);
  CHECK_THROWS_AS(parse_monomial("x1**x2", *vs), ParseError);
  CHECK_THROWS_AS(parse_ideal("x1, x2", vars3()), ParseError);   // no parens
  CHECK_THROWS_AS(parse_ideal("(x1, )", vars3()), ParseError);
  CHECK_THROWS_AS(parse_ideal("(x1) junk", vars3()), ParseError);
  CHECK_THROWS_AS(parse_ideal("()", vars3()), ParseError);
  try {
    parse_monomial("x1^^2", *vs);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("offset") != std::string::npos);
  }
}

TEST_CASE("ambient inference orders variables by first appearance") {
  MonomialIdeal I = parse_ideal("(b*a^2, c)");
  CHECK(I.ambient()->name(0) == "b");
  CHECK(I.ambient()->name(1) == "a");
  CHECK(I.ambient()->name(2) == "c");
  CHECK_THROWS_AS(parse_ideal("(0)"), ParseError);  // no variable to infer
}

TEST_CASE("scaling by a monomial multiplies every generator") {
  auto vs = vars4();
  MonomialIdeal I = parse_ideal("(x3^2, x4^2)", vs);
  // Canonical order ties at degree 3 by ascending exponent vectors, which
  // places x2*x4^2 = (0,1,0,2) before x2*x3^2 = (0,1,2,0).
  CHECK(to_string(scale_ideal(parse_monomial("x2", *vs), I)) ==
        "(x2*x4^2, x2*x3^2)");
}
