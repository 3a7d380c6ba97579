#include <doctest.h>

#include <string>
#include <vector>

#include "kideal/injectivity.hpp"
#include "support/sweep.hpp"

using namespace kideal;

namespace {

ModulePtr boolean_square() {
  SemiringPtr b = sweep::scalar("boolean");
  return product_module({regular_module(b), regular_module(b)});
}

}  // namespace

TEST_CASE("extension over a single subobject") {
  ModulePtr b = regular_module(sweep::scalar("boolean"));
  ModulePtr sq = boolean_square();
  InjectivityVerdict v = extension_test(b, subsemimodule(sq, {0, 1}));
  CHECK(v.kind == "injective");
  CHECK(v.relative_to == sq->label());
  CHECK(v.holds);
  CHECK_FALSE(v.failing_sub.has_value());
  CHECK_FALSE(v.failing_map.has_value());
}

TEST_CASE("join-semilattice targets extend along meets") {
  // Maps out of a down-closed subobject extend by first meeting the
  // argument down into the subobject, so both verdicts hold.
  ModulePtr b = regular_module(sweep::scalar("boolean"));
  ModulePtr sq = boolean_square();
  CHECK(is_injective_rel(b, sq).holds);
  CHECK(is_i_injective_rel(b, sq).holds);
  CHECK(is_i_injective_rel(b, b).holds);
}

TEST_CASE("single normal monomorphisms only") {
  ModulePtr b = regular_module(sweep::scalar("boolean"));
  ModulePtr sq = boolean_square();
  InjectivityVerdict v = is_i_injective_for(b, subsemimodule(sq, {0, 2}));
  CHECK(v.kind == "i-injective");
  CHECK(v.holds);
  // The diagonal is not subtractive, so it is not a normal mono image.
  CHECK_THROWS_AS(is_i_injective_for(b, subsemimodule(sq, {0, 3})),
                  precondition_error);
}

TEST_CASE("failed verdicts carry exhaustively checked counterexamples") {
  auto modules = sweep::small_bool_modules();
  for (const ModulePtr& target : modules)
    for (const ModulePtr& m : modules) {
      CAPTURE(target->label());
      CAPTURE(m->label());
      InjectivityVerdict inj = is_injective_rel(target, m);
      InjectivityVerdict i_inj = is_i_injective_rel(target, m);
      // Restricting the quantifier cannot create violations.
      if (inj.holds) CHECK(i_inj.holds);
      for (const InjectivityVerdict* v : {&inj, &i_inj}) {
        if (v->holds) continue;
        REQUIRE(v->failing_sub.has_value());
        REQUIRE(v->failing_map.has_value());
        CHECK_FALSE(sweep::oracle_has_extension(
            *v->failing_sub, v->failing_map->image, target));
      }
    }
}

TEST_CASE("quotient sequences induce exact hom sequences") {
  ModulePtr b = regular_module(sweep::scalar("boolean"));
  ModulePtr sq = boolean_square();
  InjectivityVerdict v = is_e_injective_for(b, subsemimodule(sq, {0, 1}));
  CHECK(v.kind == "e-injective");
  CHECK(v.holds);
  REQUIRE(v.induced.has_value());
  CHECK(v.induced->verdict.exact);
  CHECK(v.induced->hom_left->size() == 2);
  CHECK(v.induced->hom_middle->size() == 4);
  CHECK(v.induced->hom_right->size() == 2);

  CHECK_THROWS_AS(is_e_injective_for(b, subsemimodule(sq, {0, 3})),
                  precondition_error);
}

TEST_CASE("sequence form rejects pairs that are not short exact") {
  ModulePtr b = regular_module(sweep::scalar("boolean"));
  ModulePtr sq = boolean_square();
  // Two inclusions in a row: the junction is never exact.
  LinearMap f = linear_map(b, sq, {0, 1});
  LinearMap g = identity_map(sq);
  try {
    is_e_injective_rel(b, f, g);
    FAIL("expected a precondition error");
  } catch (const precondition_error& e) {
    CHECK(std::string(e.what()).find("short exact") != std::string::npos);
  }
}

TEST_CASE("e-injectivity across canonical sequences of the sweep") {
  ModulePtr b = regular_module(sweep::scalar("boolean"));
  for (const ModulePtr& m : sweep::small_bool_modules()) {
    CAPTURE(m->label());
    for (const Subsemimodule& L : enumerate_subsemimodules(m)) {
      if (!is_subtractive(L)) continue;
      InjectivityVerdict v = is_e_injective_for(b, L);
      CHECK(v.induced.has_value());
      // Restriction along a surjection of free-ish boolean modules stays
      // exact here; record and pin the uniform outcome.
      CHECK(v.holds);
    }
  }
}

TEST_CASE("direct sums of relatively injective modules stay injective") {
  ModulePtr b = regular_module(sweep::scalar("boolean"));
  ModulePtr sq = boolean_square();
  std::vector<ModulePtr> family = {b, sq};
  DirectSumProbe probe = direct_sum_probe({b, b}, family);
  CHECK(probe.sum->size() == 4);
  CHECK(probe.preserved);
  CHECK(probe.failing_family_index == -1);
  CHECK(probe.scalar_lattice_height == 1);

  DirectSumProbe wide = direct_sum_probe({b, sq}, {sq});
  CHECK(wide.sum->size() == 8);
  CHECK(wide.preserved);
}

TEST_CASE("the probe rejects summands that fail its hypothesis") {
  ModulePtr b = regular_module(sweep::scalar("boolean"));
  auto chains = sweep::small_bool_modules();
  ModulePtr three = chains[2];
  // The three-chain is not i-injective relative to the boolean square:
  // find that verdict first, then watch the probe refuse the pair.
  ModulePtr sq = boolean_square();
  InjectivityVerdict v = is_i_injective_rel(three, sq);
  if (!v.holds) {
    try {
      direct_sum_probe({three}, {sq});
      FAIL("expected a precondition error");
    } catch (const precondition_error& e) {
      std::string what = e.what();
      CHECK(what.find("summand 0") != std::string::npos);
      CHECK(what.find("member 0") != std::string::npos);
    }
  } else {
    // Hypothesis holds after all; the probe must then succeed quietly.
    CHECK(direct_sum_probe({three}, {sq}).preserved);
  }
  CHECK_THROWS_AS(direct_sum_probe({}, {b}), parameter_error);
}
