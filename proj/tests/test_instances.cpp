#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "preop/errors.hpp"
#include "preop/instances.hpp"

using namespace preop;

namespace {

const FreeNsOperad mag2 = FreeNsOperad::mag2();
const PreLieOperad prelie;
const NapOperad nap;

using M = Element<FreeNsOperad>;
using L = Element<PreLieOperad>;

M planar(const char* text) { return M::term(mag2.parse(text)); }
L labeled(const char* text) { return L::term(prelie.parse(text)); }

std::vector<LabeledTree> labeled_upto(std::size_t n) {
  std::vector<LabeledTree> out;
  for (std::size_t k = 1; k <= n; ++k) {
    auto level = enumerate_labeled(k);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

M insert(const M& mu, std::vector<M> args) { return insertion_element(mag2, mu, std::span<const M>(args)); }

}  // namespace

TEST_CASE("free non-symmetric composition") {
  const auto g = mag2.parse("g");
  CHECK(free_ns_compose(PlanarTerm::leaf(), 1, g) == M::term(g));
  CHECK(free_ns_compose(g, 2, g) == planar("g(1,g(2,3))"));
  CHECK(free_ns_compose(g, 1, g) == planar("g(g(1,2),3)"));
  CHECK_THROWS_AS(free_ns_compose(g, 3, g), DomainError);

  for (std::size_t a = 1; a <= 3; ++a)
    for (std::size_t b = 1; b <= 3; ++b)
      for (const auto& t : mag2.basis(a))
        for (const auto& s : mag2.basis(b))
          for (std::size_t i = 1; i <= a; ++i)
            CHECK(oracle::counts(free_ns_compose(t, i, s)) ==
                  oracle::Counts{{oracle::substitute(t.code(), {{i, s.code()}}), 1}});
}

TEST_CASE("free operads over larger signatures") {
  const FreeNsOperad op(Signature::parse("g:2,h:3"));
  CHECK(op.name() == "free:g:2,h:3");
  const auto h = op.parse("h");
  CHECK(op.print(h) == "h");
  CHECK(op.print(op.identity()) == "id");
  CHECK(op.compose(h, 2, op.parse("g")) == M::term(op.parse("h(1,g(2,3),4)")));
  using E = Element<FreeNsOperad>;
  const std::vector<E> four(4, E::term(h));
  CHECK(insertion_element(op, E::term(h), std::span<const E>(four)).is_zero());
  for (std::size_t n = 1; n <= 4; ++n) CHECK(op.basis(n).size() == op.basis_count(n));
}

TEST_CASE("pre-Lie operad composition") {
  const auto l = binary_tree();
  CHECK(prelie_operad_compose(l, 2, l) == labeled("1(2(3))"));
  CHECK(prelie_operad_compose(l, 1, l) == labeled("1(2,3)") + labeled("1(2(3))"));
  CHECK(prelie_operad_compose(prelie.parse("1(2,3)"), 2, LabeledTree::single()) == labeled("1(2,3)"));
  CHECK_THROWS_AS(prelie_operad_compose(l, 3, l), DomainError);
  CHECK_THROWS_AS(prelie_operad_compose(l, 0, l), DomainError);

  // Relabeling: the root of ν lands on label i, ν shifted by i−1.
  CHECK(prelie_operad_compose(prelie.parse("2(1)"), 2, l) == labeled("2(1,3)") + labeled("2(3(1))"));

  const auto pool = labeled_upto(3);
  for (const auto& m : pool)
    for (const auto& n : pool)
      for (std::size_t i = 1; i <= m.size(); ++i) {
        CHECK(oracle::counts(prelie_operad_compose(m, i, n)) == oracle::tree_compose(m.parents(), i, n.parents(), false));
        CHECK(oracle::counts(nap_operad_compose(m, i, n)) == oracle::tree_compose(m.parents(), i, n.parents(), true));
      }
}

TEST_CASE("NAP operad composition") {
  const auto l = binary_tree();
  CHECK(nap_operad_compose(l, 2, l) == labeled("1(2(3))"));
  CHECK(nap_operad_compose(l, 1, l) == labeled("1(2,3)"));
  CHECK(nap_operad_compose(prelie.parse("1(2(3))"), 2, LabeledTree::single()) == labeled("1(2(3))"));
  CHECK_THROWS_AS(nap_operad_compose(l, 3, l), DomainError);
}

TEST_CASE("block permutations") {
  // σ = (1 2) on the binary tree, plugging a 2-vertex ν at slot 1.
  const Permutation swap({2, 1});
  CHECK(block_permutation_outer(swap, 1, 2).images() == std::vector<std::size_t>{2, 3, 1});
  CHECK(block_permutation_outer(Permutation::identity(3), 2, 3) == Permutation::identity(5));
  CHECK(block_permutation_inner(3, 2, swap).images() == std::vector<std::size_t>{1, 3, 2, 4});
}

TEST_CASE("equivariance of composition") {
  const auto l = binary_tree();
  CHECK(symmetric_action_check(prelie, l, Permutation::identity(2), 1, l).holds());

  const auto pool = labeled_upto(3);
  for (const auto& m : pool)
    for (const auto& n : pool)
      for (std::size_t i = 1; i <= m.size(); ++i) {
        for (const auto& sigma : all_permutations(m.size())) {
          CHECK(symmetric_action_check(prelie, m, sigma, i, n).holds());
          CHECK(symmetric_action_check(nap, m, sigma, i, n).holds());
        }
        for (const auto& rho : all_permutations(n.size())) {
          CHECK(symmetric_action_check_inner(prelie, m, i, n, rho).holds());
          CHECK(symmetric_action_check_inner(nap, m, i, n, rho).holds());
        }
      }
}

TEST_CASE("vanishing relations in the free binary operad") {
  const auto g = planar("g");
  CHECK(insert(g, {g, g, g}).is_zero());
  const auto id = planar("id");
  CHECK(insert(id, {id, id}).is_zero());
  CHECK(insert(id, {g, g}).is_zero());
}

TEST_CASE("the coefficient-6 relation holds on 8-leaf trees") {
  const auto g = planar("g");
  const auto gg = insert(g, {g, g});
  CHECK(gg == Rational(2) * planar("g(g(1,2),g(3,4))"));
  const auto lhs = Rational(6) * insert(g, {gg, gg});
  const auto rhs = insertion_element(mag2, gg, std::span<const M>(std::vector<M>(4, g)));
  CHECK(lhs == rhs);
  const auto balanced = planar("g(g(g(1,2),g(3,4)),g(g(5,6),g(7,8)))");
  CHECK(lhs == Rational(48) * balanced);
  for (const auto& [t, c] : lhs) CHECK(t.arity() == 8);
  // Closed forms on both sides.
  CHECK(insertion_closed_form(mag2, g, std::span<const M>(std::vector<M>{gg, gg})) == insert(g, {gg, gg}));
  CHECK(insertion_closed_form(mag2, gg, std::span<const M>(std::vector<M>(4, g))) == rhs);
}

TEST_CASE("non-symmetric associative operad") {
  const NsAssoc assoc;
  CHECK(assoc.parse("id").arity == 1);
  CHECK(assoc.parse("mu3").arity == 3);
  CHECK(assoc.print({4}) == "mu4");
  CHECK(assoc.print({1}) == "id");
  CHECK_THROWS_AS(assoc.parse("mu0"), Error);
  CHECK_THROWS_AS(assoc.parse("x"), Error);
  CHECK_THROWS_AS(assoc.compose({2}, 3, {2}), DomainError);
}

TEST_CASE("basis sizes") {
  for (std::size_t n = 1; n <= 4; ++n) {
    CHECK(prelie.basis(n).size() == prelie.basis_count(n));
    CHECK(nap.basis(n).size() == nap.basis_count(n));
    CHECK(mag2.basis(n).size() == mag2.basis_count(n));
  }
  CHECK(prelie.basis_count(30) == std::numeric_limits<std::size_t>::max());
}

TEST_CASE("lookup by name") {
  CHECK(std::holds_alternative<NsAssoc>(make_operad("nsassoc")));
  CHECK(std::holds_alternative<FreeNsOperad>(make_operad("mag2")));
  CHECK(std::holds_alternative<PreLieOperad>(make_operad("prelie")));
  CHECK(std::holds_alternative<NapOperad>(make_operad("nap")));
  CHECK(std::get<FreeNsOperad>(make_operad("free:a:2,b:3")).signature().generators().size() == 2);
  CHECK_THROWS_AS(make_operad("lie"), DomainError);
  CHECK_THROWS_AS(make_operad("free:a:1"), DomainError);
  CHECK(builtin_operad_names() == std::vector<std::string>{"nsassoc", "mag2", "prelie", "nap"});
}

TEST_CASE("printing and parsing operad elements") {
  CHECK(mag2.print(mag2.parse("g")) == "g");
  CHECK(mag2.print(mag2.parse("g(g(1,2),3)")) == "g(g(1,2),3)");
  CHECK(mag2.parse("id") == PlanarTerm::leaf());
  CHECK(prelie.print(prelie.parse("id")) == "id");
  CHECK(prelie.print(prelie.parse("2(1,3)")) == "2(1,3)");
  CHECK_THROWS_AS(prelie.parse("1(1)"), ParseError);
  CHECK_THROWS_AS(mag2.parse("h"), ParseError);
}
