#include <doctest.h>

#include <memory>

#include "kideal/semiring.hpp"

using namespace kideal;

namespace {

SemiringData boolean_data() {
  SemiringData d;
  d.size = 2;
  d.add = {{0, 1}, {1, 1}};
  d.mul = {{0, 0}, {0, 1}};
  d.label = "bool";
  return d;
}

}  // namespace

TEST_CASE("truncated counting semirings satisfy the axioms") {
  for (int n = 2; n <= 8; ++n)
    for (int i = 0; i < n; ++i) {
      FiniteSemiring s = build_bni(n, i);
      CAPTURE(n);
      CAPTURE(i);
      CHECK(check_semiring_axioms(s.data()).passed);
    }
}

TEST_CASE("fold arithmetic lands in the truncation window") {
  FiniteSemiring s = build_bni(4, 2);
  // 3 + 3 = 6 overflows and folds to the unique value in [2, 4) congruent
  // to 6 mod 2.
  CHECK(s.add(3, 3) == 2);
  CHECK(s.add(2, 3) == 3);
  CHECK(s.mul(2, 3) == 2);
  CHECK(s.mul(3, 3) == 3);
}

TEST_CASE("zero truncation index gives the cyclic ring") {
  for (int n = 2; n <= 8; ++n) {
    FiniteSemiring s = build_bni(n, 0);
    CHECK(has_additive_inverses(s));
    CHECK(s.same_tables(build_named("zmod", n)));
  }
}

TEST_CASE("the two-element truncation is the boolean semiring") {
  CHECK(build_bni(2, 1).same_tables(build_named("boolean")));
  CHECK(is_additively_idempotent(build_named("boolean")));
  CHECK_FALSE(has_additive_inverses(build_named("boolean")));
}

TEST_CASE("chain lattices add by max and multiply by min") {
  FiniteSemiring s = build_named("chain-lattice", 4);
  // Canonical order puts the bottom at 0 and the top (the unit) at 1.
  CHECK(s.size() == 4);
  CHECK(check_semiring_axioms(s.data()).passed);
  CHECK(is_additively_idempotent(s));
}

TEST_CASE("validation canonicalizes the neutral element positions") {
  SemiringData d;
  d.size = 2;
  // Same boolean tables with the roles of the indices swapped.
  d.add = {{0, 0}, {0, 1}};
  d.mul = {{0, 1}, {1, 1}};
  d.zero = 1;
  d.one = 0;
  FiniteSemiring s = FiniteSemiring::validate(d);
  CHECK(s.zero() == 0);
  CHECK(s.one() == 1);
  CHECK(s.same_tables(FiniteSemiring::validate(boolean_data())));
}

TEST_CASE("axiom violations carry the first witness") {
  SemiringData d = boolean_data();
  d.add = {{0, 1}, {0, 1}};  // 1 + 0 = 0 breaks commutativity and the unit
  AxiomReport r = check_semiring_axioms(d);
  CHECK_FALSE(r.passed);
  REQUIRE_FALSE(r.violations.empty());
  for (const AxiomViolation& v : r.violations) {
    CHECK_FALSE(v.axiom.empty());
    CHECK(v.witness[0] >= 0);
  }
  CHECK_THROWS_AS(FiniteSemiring::validate(d), validation_error);
}

TEST_CASE("ill-formed tables are structural errors") {
  SemiringData ragged = boolean_data();
  ragged.add = {{0, 1}, {1}};
  CHECK_THROWS_AS(check_semiring_axioms(ragged), structural_error);

  SemiringData out_of_range = boolean_data();
  out_of_range.mul = {{0, 0}, {0, 5}};
  CHECK_THROWS_AS(check_semiring_axioms(out_of_range), structural_error);
}

TEST_CASE("complemented pairs in small semirings") {
  auto pairs_of = [](const FiniteSemiring& s) { return complemented_pairs(s); };
  using P = std::vector<std::pair<int, int>>;

  CHECK(pairs_of(build_named("boolean")) == P{{0, 1}, {1, 0}});
  CHECK(pairs_of(build_bni(3, 1)) == P{{0, 1}, {1, 0}});
  // In the integers mod 6, 3 and 4 add to 1 and multiply to 0.
  CHECK(pairs_of(build_named("zmod", 6)) == P{{0, 1}, {1, 0}, {3, 4}, {4, 3}});
}

TEST_CASE("product semirings multiply componentwise") {
  auto b = std::make_shared<FiniteSemiring>(build_named("boolean"));
  FiniteSemiring p = product_semiring({b, b});
  CHECK(p.size() == 4);
  CHECK(check_semiring_axioms(p.data()).passed);
  CHECK(is_additively_idempotent(p));

  Caps tight;
  tight.semiring_size = 3;
  CHECK_THROWS_AS(product_semiring({b, b}, tight), resource_error);
}

TEST_CASE("matrix semirings over the booleans") {
  auto b = std::make_shared<FiniteSemiring>(build_named("boolean"));
  FiniteSemiring m = matrix_semiring(b, 2);
  CHECK(m.size() == 16);
  CHECK(check_semiring_axioms(m.data()).passed);

  Caps tight;
  tight.semiring_size = 8;
  CHECK_THROWS_AS(matrix_semiring(b, 2, tight), resource_error);
}

TEST_CASE("builder parameter validation") {
  CHECK_THROWS_AS(build_bni(1, 0), parameter_error);
  CHECK_THROWS_AS(build_bni(4, 4), parameter_error);
  CHECK_THROWS_AS(build_named("no-such-family"), parameter_error);
}
