#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "symbreak/automorphism.hpp"
#include "symbreak/error.hpp"

using namespace symbreak;

namespace {

std::set<std::vector<Vertex>> as_set(const AutGroup& g) {
  std::set<std::vector<Vertex>> out;
  for (std::size_t i = 0; i < g.order(); ++i) {
    const auto im = g.image(i);
    out.insert(std::vector<Vertex>(im.begin(), im.end()));
  }
  return out;
}

}  // namespace

TEST_CASE("group orders of standard families") {
  CHECK(enumerate_automorphisms(path(5)).order() == 2);
  CHECK(enumerate_automorphisms(cycle(7)).order() == 14);
  CHECK(enumerate_automorphisms(complete(5)).order() == 120);
  CHECK(enumerate_automorphisms(complete_bipartite(3, 3)).order() == 72);
  CHECK(enumerate_automorphisms(kneser(5, 2)).order() == 120);
  CHECK(enumerate_automorphisms(Graph(1)).order() == 1);
  CHECK(enumerate_automorphisms(Graph(0)).order() == 1);
}

TEST_CASE("enumeration equals the n! oracle on every graph up to 6 vertices") {
  for (const Graph& g : oracle::load_g6(SYMBREAK_DATA_DIR "/all_le7.g6")) {
    if (g.order() > 6) continue;
    const AutGroup aut = enumerate_automorphisms(g);
    const auto naive = oracle::automorphisms(g);
    CHECK(as_set(aut) == std::set<std::vector<Vertex>>(naive.begin(), naive.end()));
    CHECK(automorphism_group_order(g) == aut.order());
  }
}

TEST_CASE("group order without enumeration") {
  CHECK(automorphism_group_order(complete(12)) == 479001600ULL);
  CHECK(automorphism_group_order(empty_graph(10)) == 3628800ULL);
  CHECK(automorphism_group_order(cycle(12)) == 24);
  CHECK(automorphism_group_order(complete_bipartite(4, 4)) == 1152);
}

TEST_CASE("budget is enforced") {
  Budget small;
  small.max_automorphisms = 100;
  CHECK_THROWS_AS(enumerate_automorphisms(complete(6), small), BudgetExceeded);
  CHECK(enumerate_automorphisms(complete(4), small).order() == 24);
}

TEST_CASE("group axioms and orbit-stabilizer on the corpus") {
  for (const Graph& g : oracle::load_g6(SYMBREAK_DATA_DIR "/connected_le6.g6")) {
    const AutGroup aut = enumerate_automorphisms(g);
    CHECK(aut.element(0).is_identity());
    for (std::size_t i = 0; i < aut.order(); ++i) {
      const Permutation p = aut.element(i);
      CHECK(aut.contains(p.inverse()));
      CHECK(aut.contains(p * aut.element(aut.order() - 1 - i)));
      CHECK(is_automorphism(g, p));
    }
    for (Vertex u = 0; u < g.order(); ++u) {
      CHECK(orbit(aut, u).size() * stabilizer(aut, u).order() == aut.order());
    }
  }
}

TEST_CASE("restricted stabilizer acts on the remaining points") {
  const AutGroup aut = enumerate_automorphisms(star(3));
  const AutGroup rest = restrict_stabilizer(aut, 0);
  CHECK(rest.degree() == 3);
  CHECK(rest.order() == 6);
  const AutGroup leaf = restrict_stabilizer(aut, 1);
  CHECK(leaf.order() == 2);
}

TEST_CASE("maximum cycle count") {
  CHECK_FALSE(max_nonidentity_cycle_count(AutGroup::trivial(4)).has_value());
  CHECK(*max_nonidentity_cycle_count(enumerate_automorphisms(complete(4))) == 3);
  CHECK(*max_nonidentity_cycle_count(enumerate_automorphisms(path(5))) == 3);
  CHECK_THROWS_AS(is_automorphism(path(3), Permutation::identity(4)), InvalidArgument);
}
