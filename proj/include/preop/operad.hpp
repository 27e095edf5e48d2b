#pragma once

// Generic operad layer. An instance supplies, per arity, a finite basis and a
// partial composition ∘ᵢ on basis elements; everything here is its bilinear
// extension: the pre-Lie product μ ◁ ν = Σᵢ μ ∘ᵢ ν, simultaneous
// compositions, insertion elements, axiom checks and (for instances with a
// labeled-tree basis) the coinvariant quotient.

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <map>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "preop/errors.hpp"
#include "preop/formal_sum.hpp"
#include "preop/prelie.hpp"
#include "preop/trees.hpp"

namespace preop {

template <typename Op>
concept OperadInstance = requires(const Op& op, const typename Op::Basis& b, std::size_t n, std::string_view text) {
  typename Op::Basis;
  { Op::symmetric } -> std::convertible_to<bool>;
  { op.name() } -> std::convertible_to<std::string>;
  { op.arity(b) } -> std::same_as<std::size_t>;
  { op.identity() } -> std::same_as<typename Op::Basis>;
  // Basis of arity n in canonical order.
  { op.basis(n) } -> std::same_as<std::vector<typename Op::Basis>>;
  // |basis(n)| without enumerating.
  { op.basis_count(n) } -> std::same_as<std::size_t>;
  // b ∘ₙ b; throws DomainError when the slot is out of range.
  { op.compose(b, n, b) } -> std::same_as<FormalSum<typename Op::Basis>>;
  { op.print(b) } -> std::same_as<std::string>;
  { op.parse(text) } -> std::same_as<typename Op::Basis>;
};

template <OperadInstance Op>
using Element = FormalSum<typename Op::Basis>;

enum class PreLieFlavor { Full, Positive, Coinvariant, PositiveCoinvariant };

inline bool is_positive(PreLieFlavor f) {
  return f == PreLieFlavor::Positive || f == PreLieFlavor::PositiveCoinvariant;
}
inline bool is_coinvariant(PreLieFlavor f) {
  return f == PreLieFlavor::Coinvariant || f == PreLieFlavor::PositiveCoinvariant;
}

// ---------------------------------------------------------------------------
// Compositions

template <OperadInstance Op>
Element<Op> partial_compose(const Op& op, const Element<Op>& mu, std::size_t slot, const Element<Op>& nu) {
  Element<Op> out;
  for (const auto& [b, a] : mu) {
    if (slot == 0 || slot > op.arity(b))
      throw DomainError("composition slot " + std::to_string(slot) + " out of range for " + op.print(b) +
                        " of arity " + std::to_string(op.arity(b)));
    for (const auto& [c, bc] : nu) {
      auto image = op.compose(b, slot, c);
      image *= a * bc;
      out += image;
    }
  }
  return out;
}

// μ ◁ ν = Σ_{i=1}^{arity μ} μ ∘ᵢ ν, term by term.
template <OperadInstance Op>
Element<Op> prelie_product(const Op& op, const Element<Op>& mu, const Element<Op>& nu) {
  Element<Op> out;
  for (const auto& [b, a] : mu)
    for (const auto& [c, bc] : nu)
      for (std::size_t i = 1; i <= op.arity(b); ++i) {
        auto image = op.compose(b, i, c);
        image *= a * bc;
        out += image;
      }
  return out;
}

// μ ∘_{m₁,…,mₖ}(ν₁,…,νₖ): νⱼ plugged into slot mⱼ of μ simultaneously.
// Single compositions run in decreasing slot order so that no plug shifts a
// slot still to be filled.
template <OperadInstance Op>
Element<Op> multi_compose(const Op& op, const typename Op::Basis& mu, std::span<const std::size_t> slots,
                          std::span<const Element<Op>> nus) {
  if (slots.size() != nus.size())
    throw DomainError("multi_compose: " + std::to_string(slots.size()) + " slots for " +
                      std::to_string(nus.size()) + " operations");
  const auto n = op.arity(mu);
  std::vector<std::size_t> order(slots.size());
  for (std::size_t k = 0; k < order.size(); ++k) {
    if (slots[k] == 0 || slots[k] > n)
      throw DomainError("multi_compose: slot " + std::to_string(slots[k]) + " out of range for arity " +
                        std::to_string(n));
    order[k] = k;
  }
  std::sort(order.begin(), order.end(), [&](auto a, auto b) { return slots[a] > slots[b]; });
  for (std::size_t k = 1; k < order.size(); ++k)
    if (slots[order[k]] == slots[order[k - 1]])
      throw DomainError("multi_compose: slot " + std::to_string(slots[order[k]]) + " used twice");

  auto out = Element<Op>::term(mu);
  for (auto k : order) out = partial_compose(op, out, slots[k], nus[k]);
  return out;
}

// ---------------------------------------------------------------------------
// Insertion elements

template <OperadInstance Op>
void require_flavor(const Op& op, const Element<Op>& x, PreLieFlavor flavor) {
  if (!is_positive(flavor)) return;
  for (const auto& [b, c] : x)
    if (op.arity(b) < 2)
      throw DomainError("positive flavor excludes arity-1 element " + op.print(b));
}

// μ ◁ (ν₁,…,νₖ) by the pre-Lie recursion. Flavor must be Full or Positive;
// coinvariant flavors go through coinvariant_insertion.
template <OperadInstance Op>
Element<Op> insertion_element(const Op& op, const Element<Op>& mu, std::span<const Element<Op>> args,
                              PreLieFlavor flavor = PreLieFlavor::Full) {
  if (is_coinvariant(flavor))
    throw DomainError("insertion_element: coinvariant flavors act on coinvariant classes");
  if (args.empty()) throw DomainError("insertion element needs at least one argument");
  require_flavor(op, mu, flavor);
  for (const auto& a : args) require_flavor(op, a, flavor);
  return insertion_recursion([&op](const Element<Op>& x, const Element<Op>& y) { return prelie_product(op, x, y); },
                             mu, args);
}

// Σ over tuples of pairwise distinct slots (m₁,…,mₖ) of μ ∘_{m₁,…,mₖ}(ν₁,…,νₖ).
// Zero as soon as k exceeds the arity.
template <OperadInstance Op>
Element<Op> insertion_closed_form(const Op& op, const Element<Op>& mu, std::span<const Element<Op>> args) {
  if (args.empty()) throw DomainError("insertion element needs at least one argument");
  Element<Op> out;
  for (const auto& [b, a] : mu) {
    const auto n = op.arity(b);
    if (args.size() > n) continue;
    std::vector<std::size_t> slots(args.size());
    std::vector<bool> used(n + 1, false);
    auto place = [&](auto&& self, std::size_t k) -> void {
      if (k == slots.size()) {
        auto image = multi_compose(op, b, std::span<const std::size_t>(slots), args);
        image *= a;
        out += image;
        return;
      }
      for (std::size_t s = 1; s <= n; ++s) {
        if (used[s]) continue;
        used[s] = true;
        slots[k] = s;
        self(self, k + 1);
        used[s] = false;
      }
    };
    place(place, 0);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Axiom checks. Each returns both sides so a failure explains itself.

template <typename K>
struct LawOutcome {
  FormalSum<K> lhs;
  FormalSum<K> rhs;

  bool holds() const { return lhs == rhs; }
  explicit operator bool() const { return holds(); }
};

template <OperadInstance Op>
void require_slot(const Op& op, const typename Op::Basis& b, std::size_t slot) {
  if (slot == 0 || slot > op.arity(b))
    throw DomainError("slot " + std::to_string(slot) + " out of range for " + op.print(b) + " of arity " +
                      std::to_string(op.arity(b)));
}

// (λ ∘ᵢ μ) ∘_{i−1+j} ν = λ ∘ᵢ (μ ∘ⱼ ν)
template <OperadInstance Op>
LawOutcome<typename Op::Basis> check_sequential(const Op& op, const typename Op::Basis& lambda,
                                                const typename Op::Basis& mu, const typename Op::Basis& nu,
                                                std::size_t i, std::size_t j) {
  require_slot(op, lambda, i);
  require_slot(op, mu, j);
  using E = Element<Op>;
  return {partial_compose(op, partial_compose(op, E::term(lambda), i, E::term(mu)), i - 1 + j, E::term(nu)),
          partial_compose(op, E::term(lambda), i, partial_compose(op, E::term(mu), j, E::term(nu)))};
}

// (λ ∘ᵢ μ) ∘_{k−1+m} ν = (λ ∘ₖ ν) ∘ᵢ μ for i < k, m = arity μ.
template <OperadInstance Op>
LawOutcome<typename Op::Basis> check_parallel(const Op& op, const typename Op::Basis& lambda,
                                              const typename Op::Basis& mu, const typename Op::Basis& nu,
                                              std::size_t i, std::size_t k) {
  require_slot(op, lambda, i);
  require_slot(op, lambda, k);
  if (i >= k) throw DomainError("parallel axiom needs distinct slots i < k");
  using E = Element<Op>;
  const auto m = op.arity(mu);
  return {partial_compose(op, partial_compose(op, E::term(lambda), i, E::term(mu)), k - 1 + m, E::term(nu)),
          partial_compose(op, partial_compose(op, E::term(lambda), k, E::term(nu)), i, E::term(mu))};
}

// id ∘₁ μ = μ
template <OperadInstance Op>
LawOutcome<typename Op::Basis> check_left_unit(const Op& op, const typename Op::Basis& mu) {
  using E = Element<Op>;
  return {partial_compose(op, E::term(op.identity()), 1, E::term(mu)), E::term(mu)};
}

// μ ∘ᵢ id = μ
template <OperadInstance Op>
LawOutcome<typename Op::Basis> check_right_unit(const Op& op, const typename Op::Basis& mu, std::size_t i) {
  require_slot(op, mu, i);
  using E = Element<Op>;
  return {partial_compose(op, E::term(mu), i, E::term(op.identity())), E::term(mu)};
}

// (x◁y)◁z − x◁(y◁z) = (x◁z)◁y − x◁(z◁y)
template <typename K, typename Product>
LawOutcome<K> check_prelie_identity(const Product& product, const FormalSum<K>& x, const FormalSum<K>& y,
                                    const FormalSum<K>& z) {
  return {product(product(x, y), z) - product(x, product(y, z)),
          product(product(x, z), y) - product(x, product(z, y))};
}

template <OperadInstance Op>
LawOutcome<typename Op::Basis> check_prelie_law(const Op& op, const Element<Op>& x, const Element<Op>& y,
                                                const Element<Op>& z) {
  return check_prelie_identity(
      [&op](const Element<Op>& a, const Element<Op>& b) { return prelie_product(op, a, b); }, x, y, z);
}

// Components of x by degree = arity − 1.
template <OperadInstance Op>
std::map<std::size_t, Element<Op>> graded_components(const Op& op, const Element<Op>& x) {
  std::map<std::size_t, Element<Op>> out;
  for (const auto& [b, c] : x) out[op.arity(b) - 1].add(b, c);
  return out;
}

// ---------------------------------------------------------------------------
// Coinvariants P(n)_{Sₙ}, for instances whose basis is labeled trees.

template <typename Op>
concept SymmetricTreeOperad = OperadInstance<Op> && Op::symmetric && std::same_as<typename Op::Basis, LabeledTree>;

template <OperadInstance Op>
PreLieElement coinvariant_reduce(const Op& op, const Element<Op>& x) {
  if constexpr (SymmetricTreeOperad<Op>) {
    PreLieElement out;
    for (const auto& [t, c] : x) out.add(forget_labels(t), c);
    return out;
  } else {
    throw DomainError("coinvariants are not available for instance " + op.name());
  }
}

template <OperadInstance Op>
Element<Op> coinvariant_lift(const Op& op, const PreLieElement& a) {
  if constexpr (SymmetricTreeOperad<Op>) {
    Element<Op> out;
    for (const auto& [t, c] : a) out.add(lift(t), c);
    return out;
  } else {
    throw DomainError("coinvariants are not available for instance " + op.name());
  }
}

// Lift both classes, multiply with ◁, reduce.
template <OperadInstance Op>
PreLieElement coinvariant_product(const Op& op, const PreLieElement& a, const PreLieElement& b) {
  return coinvariant_reduce(op, prelie_product(op, coinvariant_lift(op, a), coinvariant_lift(op, b)));
}

template <OperadInstance Op>
PreLieElement coinvariant_insertion(const Op& op, const PreLieElement& a, std::span<const PreLieElement> args,
                                    PreLieFlavor flavor = PreLieFlavor::Coinvariant) {
  if (!is_coinvariant(flavor)) throw DomainError("coinvariant_insertion: flavor must be a coinvariant flavor");
  if (is_positive(flavor)) {
    auto check = [](const PreLieElement& x) {
      for (const auto& [t, c] : x)
        if (t.size() < 2) throw DomainError("positive flavor excludes arity-1 element " + t.code());
    };
    check(a);
    for (const auto& x : args) check(x);
  }
  return insertion_recursion(
      [&op](const PreLieElement& x, const PreLieElement& y) { return coinvariant_product(op, x, y); }, a, args);
}

// μ(t₁,…,tₖ) on classes: reduce(μ ∘_{1,…,k}(lift t₁,…,lift tₖ)). For the
// binary tree 1(2) this is the free pre-Lie product (pre-Lie operad) or the
// NAP product (NAP operad) on one-generator coinvariants.
template <OperadInstance Op>
PreLieElement act_on_coinvariants(const Op& op, const typename Op::Basis& mu, std::span<const PreLieElement> args) {
  if (args.size() != op.arity(mu))
    throw DomainError("act_on_coinvariants: " + op.print(mu) + " takes " + std::to_string(op.arity(mu)) +
                      " arguments");
  std::vector<std::size_t> slots(args.size());
  std::vector<Element<Op>> lifted;
  for (std::size_t k = 0; k < args.size(); ++k) {
    slots[k] = k + 1;
    lifted.push_back(coinvariant_lift(op, args[k]));
  }
  return coinvariant_reduce(op, multi_compose(op, mu, std::span<const std::size_t>(slots),
                                              std::span<const Element<Op>>(lifted)));
}

}  // namespace preop
