#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "preop/errors.hpp"
#include "preop/trees.hpp"

using namespace preop;

namespace {

const UnlabeledTree dot;
const UnlabeledTree chain2(std::vector<UnlabeledTree>{dot});
const UnlabeledTree chain3(std::vector<UnlabeledTree>{chain2});
const UnlabeledTree cherry(std::vector<UnlabeledTree>{dot, dot});

std::set<std::string> codes(const std::vector<UnlabeledTree>& ts) {
  std::set<std::string> out;
  for (const auto& t : ts) out.insert(t.code());
  return out;
}

template <typename T>
bool sorted_unique(const std::vector<T>& xs) {
  return std::adjacent_find(xs.begin(), xs.end(), [](const T& a, const T& b) { return !(a < b); }) == xs.end();
}

}  // namespace

TEST_CASE("canonicalize") {
  CHECK(canonicalize(PlainTree{}) == dot);
  CHECK(canonicalize(PlainTree{}).code() == "()");

  const PlainTree chain_then_leaf{{PlainTree{{PlainTree{}}}, PlainTree{}}};
  const PlainTree leaf_then_chain{{PlainTree{}, PlainTree{{PlainTree{}}}}};
  CHECK(canonicalize(chain_then_leaf) == canonicalize(leaf_then_chain));
  CHECK(canonicalize(chain_then_leaf).code() == canonicalize(leaf_then_chain).code());
  CHECK(canonicalize(chain_then_leaf).size() == 4);

  for (std::size_t n = 1; n <= 6; ++n)
    for (const auto& t : enumerate_unlabeled(n)) {
      CHECK(canonicalize(canonicalize(t)) == canonicalize(t));
      CHECK(canonicalize(t) == t);
    }
}

TEST_CASE("unlabeled equality is equality of canonical prints") {
  const UnlabeledTree a(std::vector<UnlabeledTree>{chain2, dot});
  const UnlabeledTree b(std::vector<UnlabeledTree>{dot, chain2});
  CHECK(a == b);
  CHECK(a.code() == b.code());
  CHECK(a != UnlabeledTree(std::vector<UnlabeledTree>{chain3}));
}

TEST_CASE("enumerate_unlabeled against the parent-function oracle") {
  const std::size_t expected[] = {1, 1, 2, 4, 9, 20};
  for (int n = 1; n <= 6; ++n) {
    const auto trees = enumerate_unlabeled(n);
    const auto oracle_shapes = oracle::unlabeled_shapes(n);
    CHECK(oracle_shapes.size() == expected[n - 1]);
    CHECK(trees.size() == oracle_shapes.size());
    CHECK(codes(trees) == oracle_shapes);
    CHECK(sorted_unique(trees));
    CHECK(count_unlabeled(n) == trees.size());
    for (const auto& t : trees) CHECK(t.size() == static_cast<std::size_t>(n));
  }
  CHECK(codes(enumerate_unlabeled(3)) == std::set<std::string>{chain3.code(), cherry.code()});
  CHECK(count_unlabeled(7) == oracle::unlabeled_shapes(7).size());
  CHECK_THROWS_AS(enumerate_unlabeled(0), DomainError);
}

TEST_CASE("enumerate_labeled against the parent-map oracle") {
  for (std::size_t n = 1; n <= 5; ++n) {
    const auto trees = enumerate_labeled(n);
    std::size_t power = 1;
    for (std::size_t k = 1; k < n; ++k) power *= n;
    CHECK(trees.size() == power);
    CHECK(trees.size() == oracle::labeled_count(static_cast<int>(n)));
    CHECK(sorted_unique(trees));
  }
  const auto two = enumerate_labeled(2);
  REQUIRE(two.size() == 2);
  CHECK(two[0].code() == "1(2)");
  CHECK(two[1].code() == "2(1)");
  CHECK(enumerate_labeled(1).front() == LabeledTree::single());
  CHECK_THROWS_AS(enumerate_labeled(0), DomainError);
}

TEST_CASE("enumerate_planar_binary against the Catalan recurrence") {
  const Generator g{"g", 2};
  for (std::size_t k = 1; k <= 6; ++k) {
    const auto terms = enumerate_planar_binary(k, g);
    CHECK(terms.size() == oracle::catalan(k - 1));
    CHECK(sorted_unique(terms));
    for (const auto& t : terms) CHECK(t.arity() == k);
  }
  CHECK(enumerate_planar_binary(1, g).front().code() == "1");
  const auto three = enumerate_planar_binary(3, g);
  CHECK(three.size() == 2);
  CHECK(three[0].code() == "g(1,g(2,3))");
  CHECK(three[1].code() == "g(g(1,2),3)");
  CHECK(enumerate_planar_binary(5, g).size() == 14);
  CHECK_THROWS_AS(enumerate_planar_binary(3, Generator{"h", 3}), DomainError);
}

TEST_CASE("enumerate_planar over a mixed signature") {
  const auto sig = Signature::parse("g:2,h:3");
  // t(n) split by the generator at the root.
  std::vector<std::size_t> t(6, 0);
  t[1] = 1;
  for (std::size_t n = 2; n <= 5; ++n) {
    for (std::size_t a = 1; a < n; ++a) t[n] += t[a] * t[n - a];
    for (std::size_t a = 1; a < n; ++a)
      for (std::size_t b = 1; a + b < n; ++b) t[n] += t[a] * t[b] * t[n - a - b];
  }
  for (std::size_t n = 1; n <= 5; ++n) {
    CHECK(enumerate_planar(n, sig).size() == t[n]);
    CHECK(count_planar(n, sig) == t[n]);
  }
}

TEST_CASE("graft_at_vertex") {
  CHECK(graft_at_vertex(dot, 0, dot) == chain2);
  CHECK(graft_at_vertex(chain2, 0, dot) == cherry);
  CHECK(graft_at_vertex(chain2, 1, dot) == chain3);
  CHECK(graft_at_vertex(chain2, 0, dot).code() == oracle::graft_all(chain2.code(), {"()"}, {0}));
  CHECK_THROWS_AS(graft_at_vertex(chain2, 2, dot), DomainError);

  const auto t = parse_unlabeled("((())())");
  for (std::size_t v = 0; v < t.size(); ++v) {
    // Pre-order over the canonical print is also the oracle's vertex order.
    CHECK(graft_at_vertex(t, v, cherry).code() == oracle::graft_all(t.code(), {cherry.code()}, {static_cast<int>(v)}));
  }
}

TEST_CASE("graft_many and corolla") {
  CHECK(graft_many(dot, {{dot, dot, dot}}) == corolla(3));
  CHECK(graft_many(chain2, {{dot}, {dot}}).code() == "((())())");
  CHECK_THROWS_AS(graft_many(chain2, {{dot}}), DomainError);
  CHECK(corolla(0) == dot);
  CHECK(corolla(1) == chain2);
  CHECK(corolla(3).code() == "(()()())");
}

TEST_CASE("permutations") {
  const Permutation swap({2, 1, 3});
  const Permutation cycle({2, 3, 1});
  CHECK((swap * cycle)(1) == swap(cycle(1)));
  CHECK((cycle * cycle.inverse()) == Permutation::identity(3));
  CHECK(all_permutations(3).size() == 6);
  CHECK(all_permutations(3).front() == Permutation::identity(3));
  CHECK_THROWS_AS(Permutation({1, 1, 2}), DomainError);
  CHECK_THROWS_AS(Permutation({1, 4, 2}), DomainError);
}

TEST_CASE("relabel") {
  const auto l = parse_labeled("1(2)");
  CHECK(relabel(l, Permutation::identity(2)) == l);
  CHECK(relabel(l, Permutation({2, 1})).code() == "2(1)");
  CHECK_THROWS_AS(relabel(l, Permutation::identity(3)), DomainError);

  for (std::size_t n = 1; n <= 4; ++n) {
    const auto perms = all_permutations(n);
    for (const auto& t : enumerate_labeled(n))
      for (const auto& sigma : perms) {
        CHECK(relabel(relabel(t, sigma), sigma.inverse()) == t);
        CHECK(forget_labels(relabel(t, sigma)) == forget_labels(t));
      }
  }
  // Left action: relabel(t, σ∘τ) = relabel(relabel(t, τ), σ).
  const auto perms = all_permutations(3);
  for (const auto& t : enumerate_labeled(3))
    for (const auto& sigma : perms)
      for (const auto& tau : perms) CHECK(relabel(t, sigma * tau) == relabel(relabel(t, tau), sigma));
}

TEST_CASE("labeled trees") {
  const auto t = LabeledTree::from_parents({0, 0, 1, 1});
  CHECK(t.code() == "1(2,3)");
  CHECK(t.root() == 1);
  CHECK(t.children(1) == std::vector<std::size_t>{2, 3});
  CHECK(t.parent(3) == 1);
  CHECK_THROWS_AS(LabeledTree::from_parents({0, 0, 0}), DomainError);
  CHECK_THROWS_AS(LabeledTree::from_parents({0, 2, 1, 0}), DomainError);

  for (std::size_t n = 1; n <= 4; ++n)
    for (const auto& x : enumerate_labeled(n)) {
      CHECK(x.code() == oracle::labeled_code(x.parents()));
      CHECK(forget_labels(lift(forget_labels(x))) == forget_labels(x));
    }
  for (std::size_t n = 1; n <= 5; ++n)
    for (const auto& u : enumerate_unlabeled(n)) CHECK(forget_labels(lift(u)) == u);
}

TEST_CASE("parsing and printing") {
  CHECK(parse_unlabeled("(()())") == cherry);
  CHECK(parse_unlabeled("(()())").code() == "(()())");
  CHECK(parse_unlabeled(" ( () (()) ) ").code() == "((())())");

  const auto l = parse_labeled("1(2,3)");
  CHECK(l.root() == 1);
  CHECK(l.children(1) == std::vector<std::size_t>{2, 3});
  CHECK(parse_labeled("1(3,2)") == l);
  CHECK(parse_labeled("2(1)").root() == 2);

  const auto sig = Signature::mag2();
  const auto comb = parse_planar("g(g(1,2),3)", sig);
  CHECK(comb.arity() == 3);
  CHECK(comb.generator() == "g");
  CHECK(comb.children()[0].code() == "g(1,2)");
  CHECK(parse_planar("1", sig) == PlanarTerm::leaf());

  for (std::size_t n = 1; n <= 5; ++n) {
    for (const auto& t : enumerate_unlabeled(n)) CHECK(parse_unlabeled(t.code()) == t);
    for (const auto& t : enumerate_planar_binary(n, sig.generators().front())) CHECK(parse_planar(t.code(), sig) == t);
  }
  for (std::size_t n = 1; n <= 4; ++n)
    for (const auto& t : enumerate_labeled(n)) CHECK(parse_labeled(t.code()) == t);
}

TEST_CASE("parse errors carry positions") {
  auto position_of = [](auto&& parse) -> std::size_t {
    try {
      parse();
    } catch (const ParseError& e) {
      return e.position();
    }
    return static_cast<std::size_t>(-1);
  };
  CHECK(position_of([] { parse_unlabeled("(()"); }) == 3);
  CHECK(position_of([] { parse_unlabeled("(x)"); }) == 1);
  CHECK(position_of([] { parse_unlabeled("()()"); }) == 2);
  CHECK_THROWS_AS(parse_labeled("1(2,2)"), ParseError);
  CHECK_THROWS_AS(parse_labeled("1(3)"), ParseError);
  CHECK_THROWS_AS(parse_labeled("1(2,"), ParseError);
  CHECK_THROWS_AS(parse_labeled(""), ParseError);
  const auto sig = Signature::mag2();
  CHECK_THROWS_AS(parse_planar("g(2,1)", sig), ParseError);
  CHECK_THROWS_AS(parse_planar("g(1,2,3)", sig), ParseError);
  CHECK_THROWS_AS(parse_planar("h(1,2)", sig), ParseError);
  CHECK(position_of([] { parse_planar("g(1,3)", Signature::mag2()); }) == 4);
}

TEST_CASE("signatures") {
  CHECK(Signature::parse("g2:2,h3:3").generators().size() == 2);
  CHECK(Signature::parse("g2:2,h3:3").to_string() == "g2:2,h3:3");
  CHECK(Signature::mag2().find("g")->arity == 2);
  CHECK(Signature::mag2().find("h") == nullptr);
  CHECK_THROWS_AS(Signature::parse("g:1"), DomainError);
  CHECK_THROWS_AS(Signature::parse("g:2,g:3"), DomainError);
  CHECK_THROWS_AS(Signature::parse("id:2"), DomainError);
  CHECK_THROWS_AS(Signature::parse("o_1:2"), DomainError);
  CHECK_THROWS_AS(Signature::parse("g"), Error);
}

TEST_CASE("plug renumbers leaves") {
  const auto sig = Signature::mag2();
  const auto g = PlanarTerm::corolla(sig.generators().front());
  CHECK(plug(g, 2, g).code() == "g(1,g(2,3))");
  CHECK(plug(g, 1, g).code() == "g(g(1,2),3)");
  CHECK(plug(PlanarTerm::leaf(), 1, g) == g);
  CHECK_THROWS_AS(plug(g, 3, g), DomainError);

  std::mt19937 rng(7);
  const auto four = enumerate_planar_binary(4, sig.generators().front());
  const auto three = enumerate_planar_binary(3, sig.generators().front());
  for (int trial = 0; trial < 50; ++trial) {
    const auto& t = four[rng() % four.size()];
    const auto& s = three[rng() % three.size()];
    const std::size_t slot = 1 + rng() % 4;
    CHECK(plug(t, slot, s).code() == oracle::substitute(t.code(), {{slot, s.code()}}));
  }
}
