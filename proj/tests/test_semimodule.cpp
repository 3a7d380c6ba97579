#include <doctest.h>

#include <algorithm>
#include <set>

#include "kideal/semimodule.hpp"
#include "support/sweep.hpp"

using namespace kideal;

namespace {

ModulePtr boolean_square() {
  SemiringPtr b = sweep::scalar("boolean");
  return product_module({regular_module(b), regular_module(b)});
}

std::set<std::vector<int>> member_sets(const std::vector<Subsemimodule>& subs) {
  std::set<std::vector<int>> out;
  for (const Subsemimodule& s : subs) out.insert(s.members);
  return out;
}

}  // namespace

TEST_CASE("enumeration agrees with the subset-scan oracle on the sweep") {
  for (const ModulePtr& m : sweep::sweep_modules()) {
    CAPTURE(m->label());
    auto enumerated = member_sets(enumerate_subsemimodules(m));
    auto oracle = sweep::oracle_subsemimodules(m);
    CHECK(enumerated == std::set<std::vector<int>>(oracle.begin(), oracle.end()));
  }
}

TEST_CASE("subtractive enumeration matches the filtered full listing") {
  for (const ModulePtr& m : sweep::sweep_modules()) {
    CAPTURE(m->label());
    std::set<std::vector<int>> filtered;
    for (const Subsemimodule& sub : enumerate_subsemimodules(m))
      if (is_subtractive(sub)) filtered.insert(sub.members);
    auto direct = enumerate_k_subsemimodules(m);
    CHECK(member_sets(direct) == filtered);
    for (const Subsemimodule& sub : direct) CHECK(is_subtractive(sub));
    CHECK(std::is_sorted(direct.begin(), direct.end(),
                         [](const Subsemimodule& a, const Subsemimodule& b) {
                           if (a.members.size() != b.members.size())
                             return a.members.size() < b.members.size();
                           return a.members < b.members;
                         }));
  }

  // Boolean powers have few subtractive subobjects among a huge poset:
  // the direct walk must stay fast there.
  SemiringPtr b = sweep::scalar("boolean");
  std::vector<ModulePtr> fs(5, regular_module(b));
  ModulePtr big = product_module(fs);
  auto subs = enumerate_k_subsemimodules(big);
  CHECK(subs.size() == 32);
}

TEST_CASE("closure is extensive, monotone and idempotent across the sweep") {
  for (const ModulePtr& m : sweep::sweep_modules()) {
    CAPTURE(m->label());
    std::vector<Subsemimodule> subs = enumerate_subsemimodules(m);
    for (const Subsemimodule& L : subs) {
      Subsemimodule closed = subtractive_closure(L);
      CHECK(std::includes(closed.members.begin(), closed.members.end(),
                          L.members.begin(), L.members.end()));
      CHECK(subtractive_closure(closed).members == closed.members);
      CHECK(is_subtractive(closed));
      for (const Subsemimodule& bigger : subs) {
        if (!std::includes(bigger.members.begin(), bigger.members.end(),
                           L.members.begin(), L.members.end()))
          continue;
        Subsemimodule bigger_closed = subtractive_closure(bigger);
        CHECK(std::includes(bigger_closed.members.begin(),
                            bigger_closed.members.end(),
                            closed.members.begin(), closed.members.end()));
      }
    }
  }
}

TEST_CASE("the closure equals the kernel of the quotient projection") {
  for (const ModulePtr& m : sweep::sweep_modules()) {
    CAPTURE(m->label());
    for (const Subsemimodule& L : enumerate_subsemimodules(m)) {
      BourneQuotient q = bourne_quotient(L);
      std::vector<int> kernel;
      for (int x = 0; x < m->size(); ++x)
        if (q.projection[x] == 0) kernel.push_back(x);
      CHECK(kernel == subtractive_closure(L).members);
      CHECK(q.classes[0] == subtractive_closure(L).members);
    }
  }
}

TEST_CASE("subtractivity, witnesses and the closure fixed point agree") {
  for (const ModulePtr& m : sweep::sweep_modules()) {
    for (const Subsemimodule& L : enumerate_subsemimodules(m)) {
      bool fixed = subtractive_closure(L).members == L.members;
      CHECK(is_subtractive(L) == fixed);
      auto witness = subtractive_failure_witness(L);
      CHECK(witness.has_value() == !fixed);
      if (witness) {
        auto [x, l, sum] = *witness;
        CHECK_FALSE(L.contains(x));
        CHECK(L.contains(l));
        CHECK(L.contains(sum));
        CHECK(m->add(x, l) == sum);
      }
    }
  }
}

TEST_CASE("meet and join stay inside the subobject lattice") {
  for (const ModulePtr& m : sweep::sweep_modules(6)) {
    std::vector<Subsemimodule> subs = enumerate_subsemimodules(m);
    auto all = member_sets(subs);
    for (const Subsemimodule& a : subs)
      for (const Subsemimodule& b : subs) {
        Subsemimodule meet = intersect_subsemimodules(a, b);
        Subsemimodule join = join_subsemimodules(a, b);
        CHECK(all.count(meet.members));
        CHECK(all.count(join.members));
        CHECK(std::includes(join.members.begin(), join.members.end(),
                            a.members.begin(), a.members.end()));
        CHECK(std::includes(a.members.begin(), a.members.end(),
                            meet.members.begin(), meet.members.end()));
      }
  }
}

TEST_CASE("subobject count and subtractive lattice of the boolean square") {
  ModulePtr m = boolean_square();
  std::vector<Subsemimodule> subs = enumerate_subsemimodules(m);
  CHECK(subs.size() == 7);

  KIdealLattice lat = k_ideal_lattice(m);
  REQUIRE(lat.nodes.size() == 4);
  CHECK(lat.nodes[0].members == std::vector<int>{0});
  CHECK(lat.nodes[1].members == std::vector<int>{0, 1});
  CHECK(lat.nodes[2].members == std::vector<int>{0, 2});
  CHECK(lat.nodes[3].members == std::vector<int>{0, 1, 2, 3});
  CHECK(lat.height == 2);
  CHECK(lat.width == 2);
  // Diamond: bottom under both axes, both axes under the top.
  using E = std::vector<std::pair<int, int>>;
  E expect = {{0, 1}, {0, 2}, {1, 3}, {2, 3}};
  E edges = lat.edges;
  std::sort(edges.begin(), edges.end());
  CHECK(edges == expect);

  LatticeMetrics metrics = lattice_metrics(lat);
  CHECK(metrics.height == 2);
  CHECK(metrics.width == 2);
  CHECK(metrics.longest_chain.size() == 3);
}

TEST_CASE("the diagonal of the boolean square is not subtractive") {
  ModulePtr m = boolean_square();
  Subsemimodule diag = subsemimodule(m, {0, 3});
  CHECK_FALSE(is_subtractive(diag));
  CHECK(subtractive_closure(diag).members == std::vector<int>{0, 1, 2, 3});
  auto witness = subtractive_failure_witness(diag);
  REQUIRE(witness.has_value());
  CHECK((*witness)[0] == 1);
}

TEST_CASE("checked subobject construction rejects open sets") {
  ModulePtr m = boolean_square();
  CHECK_THROWS_AS(subsemimodule(m, {0, 1, 2}), precondition_error);  // 1+2=3
  CHECK_THROWS_AS(subsemimodule(m, {1}), precondition_error);        // no zero
  CHECK(generate_subsemimodule(m, {1, 2}).members ==
        std::vector<int>{0, 1, 2, 3});
  CHECK(generate_subsemimodule(m, {}).members == std::vector<int>{0});
}

TEST_CASE("quotient classes are ordered by least member") {
  ModulePtr chain = regular_module(sweep::scalar("chain-lattice", 3));
  // Canonical order is 0 < 2 < 1 (the unit is the top).  Collapsing the
  // lower prefix {0,2} leaves two classes.
  Subsemimodule prefix = subsemimodule(chain, {0, 2});
  BourneQuotient q = bourne_quotient(prefix);
  CHECK(q.quotient->size() == 2);
  CHECK(q.classes[0] == std::vector<int>{0, 2});
  CHECK(q.classes[1] == std::vector<int>{1});
  CHECK(q.projection == std::vector<int>{0, 1, 0});
  CHECK(q.parent->same_tables(*chain));
}

TEST_CASE("restriction turns a subobject into a standalone module") {
  ModulePtr m = boolean_square();
  Subsemimodule axis = subsemimodule(m, {0, 1});
  ModulePtr restricted = submodule_restrict(axis);
  CHECK(restricted->size() == 2);
  CHECK(restricted->same_tables(*regular_module(sweep::scalar("boolean"))));
}

TEST_CASE("cancellative elements of idempotent and folding semirings") {
  ModulePtr b = regular_module(sweep::scalar("boolean"));
  CancellativeSet kb = cancellative_elements(*b);
  CHECK(kb.elements == std::vector<int>{0});
  CHECK_FALSE(kb.whole_module);

  // In B(3,1), 2+0 = 2 = 2+2, so 2 is not cancellative either.
  ModulePtr t = regular_module(sweep::scalar("bni", 3, 1));
  CHECK(cancellative_elements(*t).elements == std::vector<int>{0});

  ModulePtr z3 = regular_module(sweep::scalar("zmod", 3));
  CancellativeSet kz = cancellative_elements(*z3);
  CHECK(kz.whole_module);
  CHECK(kz.elements.size() == 3);
}

TEST_CASE("generating sets are small, spanning and deterministic") {
  for (const ModulePtr& m : sweep::sweep_modules(6)) {
    std::vector<int> gens = minimal_generating_set(*m);
    CHECK(generate_subsemimodule(m, gens).members.size() ==
          static_cast<std::size_t>(m->size()));
    // Pruned: dropping any single generator loses the span.
    for (std::size_t i = 0; i < gens.size() && m->size() > 1; ++i) {
      std::vector<int> fewer = gens;
      fewer.erase(fewer.begin() + i);
      CHECK(generate_subsemimodule(m, fewer).members.size() <
            static_cast<std::size_t>(m->size()));
    }
    CHECK(minimal_generating_set(*m) == gens);
  }
}

TEST_CASE("extending generators completes a partial span") {
  ModulePtr m = boolean_square();
  std::vector<int> extension = generators_extending(*m, {1});
  std::vector<int> all = {1};
  all.insert(all.end(), extension.begin(), extension.end());
  CHECK(generate_subsemimodule(m, all).members.size() == 4);
}

TEST_CASE("any commutative monoid becomes a module over counting scalars") {
  std::vector<std::vector<int>> add = {{0, 1, 2}, {1, 1, 2}, {2, 2, 2}};
  SemiringPtr counting = counting_scalars({&add});
  ModulePtr m = monoid_module(counting, add, "three-chain");
  CHECK(m->size() == 3);
  CHECK(check_semimodule_axioms(m->data()).passed);
  // Scalar 1+1 acts as the doubling map.
  int two = counting->add(1, 1);
  CHECK(m->act(two, 1) == add[1][1]);
  CHECK(m->act(counting->zero(), 2) == 0);
  CHECK(m->act(counting->one(), 2) == 2);
}

TEST_CASE("enumeration respects the size cap") {
  Caps tight;
  tight.module_size = 2;
  CHECK_THROWS_AS(enumerate_subsemimodules(boolean_square(), tight),
                  resource_error);
}
