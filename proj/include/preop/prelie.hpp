#pragma once

// The free pre-Lie algebra on one generator: formal sums of unlabeled rooted
// trees under grafting, plus the insertion elements t ◁ (s₁,…,sₙ).

#include <span>
#include <vector>

#include "preop/errors.hpp"
#include "preop/formal_sum.hpp"
#include "preop/trees.hpp"

namespace preop {

using PreLieElement = FormalSum<UnlabeledTree>;

// Insertion elements from any pre-Lie product:
//   t◁(s₁)         = t ◁ s₁
//   t◁(s₁,…,sₙ)    = (t◁(s₁,…,sₙ₋₁)) ◁ sₙ − Σᵢ t◁(s₁,…,sᵢ◁sₙ,…,sₙ₋₁)
template <typename Element, typename Product>
Element insertion_recursion(const Product& product, const Element& t, std::span<const Element> args) {
  if (args.empty()) throw DomainError("insertion element needs at least one argument");
  if (args.size() == 1) return product(t, args.front());

  const Element& last = args.back();
  const auto head = args.first(args.size() - 1);
  Element out = product(insertion_recursion(product, t, head), last);
  std::vector<Element> shifted(head.begin(), head.end());
  for (std::size_t i = 0; i < shifted.size(); ++i) {
    const Element saved = shifted[i];
    shifted[i] = product(saved, last);
    out -= insertion_recursion(product, t, std::span<const Element>(shifted));
    shifted[i] = saved;
  }
  return out;
}

// t ◁ s = Σ over vertices v of t of s grafted at v.
PreLieElement graft_product(const UnlabeledTree& t, const UnlabeledTree& s);
PreLieElement graft_product(const PreLieElement& x, const PreLieElement& y);

// t ⊳ s = s grafted at the root of t.
PreLieElement nap_graft(const UnlabeledTree& t, const UnlabeledTree& s);
PreLieElement nap_graft(const PreLieElement& x, const PreLieElement& y);

// Insertion element by the recursion, on arbitrary sums.
PreLieElement insertion_recursive(const PreLieElement& t, std::span<const PreLieElement> args);

// Insertion element as the sum over all ways of hanging every sᵢ on a vertex
// of t (never on another sⱼ).
PreLieElement insertion_closed(const UnlabeledTree& t, std::span<const UnlabeledTree> args);

}  // namespace preop
