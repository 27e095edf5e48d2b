#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "preop/formal_sum.hpp"
#include "preop/operad.hpp"
#include "preop/trees.hpp"

namespace preop {

// ---------------------------------------------------------------------------
// Non-symmetric associative operad: one operation μₙ per arity, μ₁ = id,
// μₙ ∘ᵢ μₘ = μₙ₊ₘ₋₁.

struct AssocOp {
  std::size_t arity;
  friend auto operator<=>(const AssocOp&, const AssocOp&) = default;
};

std::string to_string(AssocOp op);

class NsAssoc {
 public:
  using Basis = AssocOp;
  static constexpr bool symmetric = false;

  std::string name() const { return "nsassoc"; }
  std::size_t arity(const AssocOp& b) const { return b.arity; }
  AssocOp identity() const { return {1}; }
  std::vector<AssocOp> basis(std::size_t n) const;
  std::size_t basis_count(std::size_t n) const { return n == 0 ? 0 : 1; }
  FormalSum<AssocOp> compose(const AssocOp& mu, std::size_t slot, const AssocOp& nu) const;
  std::string print(const AssocOp& b) const { return to_string(b); }
  // "id" or "mu<n>".
  AssocOp parse(std::string_view text) const;
};

// ---------------------------------------------------------------------------
// Free non-symmetric operad over a signature; basis = planar terms, ∘ᵢ plugs
// into the i-th leaf. Mag₂ is the signature {g:2}.

FormalSum<PlanarTerm> free_ns_compose(const PlanarTerm& t, std::size_t slot, const PlanarTerm& s);

class FreeNsOperad {
 public:
  using Basis = PlanarTerm;
  static constexpr bool symmetric = false;

  explicit FreeNsOperad(Signature signature, std::string name = {});
  static FreeNsOperad mag2();

  const Signature& signature() const noexcept { return signature_; }
  std::string name() const { return name_; }
  std::size_t arity(const PlanarTerm& b) const { return b.arity(); }
  PlanarTerm identity() const { return PlanarTerm::leaf(); }
  std::vector<PlanarTerm> basis(std::size_t n) const;
  std::size_t basis_count(std::size_t n) const { return count_planar(n, signature_); }
  FormalSum<PlanarTerm> compose(const PlanarTerm& t, std::size_t slot, const PlanarTerm& s) const {
    return free_ns_compose(t, slot, s);
  }
  // "id" for the leaf, the generator name for a bare generator, else the tree.
  std::string print(const PlanarTerm& b) const;
  // Accepts "id", a generator name (its corolla), or the planar tree grammar.
  PlanarTerm parse(std::string_view text) const;

 private:
  Signature signature_;
  std::string name_;
};

// ---------------------------------------------------------------------------
// Pre-Lie and NAP operads on labeled rooted trees.
//
// μ ∘ᵢ ν replaces vertex i of μ by ν: the parent of i adopts the root of ν,
// and each former child of i is re-hung on a vertex of ν; every choice is
// summed (pre-Lie) or all go to the root of ν (NAP). Renumbering: labels of
// μ below i keep their value, labels of ν shift by i−1, labels of μ above i
// shift by arity(ν)−1.

FormalSum<LabeledTree> prelie_operad_compose(const LabeledTree& mu, std::size_t slot, const LabeledTree& nu);
FormalSum<LabeledTree> nap_operad_compose(const LabeledTree& mu, std::size_t slot, const LabeledTree& nu);

class PreLieOperad {
 public:
  using Basis = LabeledTree;
  static constexpr bool symmetric = true;

  std::string name() const { return "prelie"; }
  std::size_t arity(const LabeledTree& b) const { return b.size(); }
  LabeledTree identity() const { return LabeledTree::single(); }
  std::vector<LabeledTree> basis(std::size_t n) const { return enumerate_labeled(n); }
  std::size_t basis_count(std::size_t n) const;
  FormalSum<LabeledTree> compose(const LabeledTree& mu, std::size_t slot, const LabeledTree& nu) const {
    return prelie_operad_compose(mu, slot, nu);
  }
  std::string print(const LabeledTree& b) const { return b.size() == 1 ? "id" : b.code(); }
  LabeledTree parse(std::string_view text) const;
};

class NapOperad {
 public:
  using Basis = LabeledTree;
  static constexpr bool symmetric = true;

  std::string name() const { return "nap"; }
  std::size_t arity(const LabeledTree& b) const { return b.size(); }
  LabeledTree identity() const { return LabeledTree::single(); }
  std::vector<LabeledTree> basis(std::size_t n) const { return enumerate_labeled(n); }
  std::size_t basis_count(std::size_t n) const { return PreLieOperad().basis_count(n); }
  FormalSum<LabeledTree> compose(const LabeledTree& mu, std::size_t slot, const LabeledTree& nu) const {
    return nap_operad_compose(mu, slot, nu);
  }
  std::string print(const LabeledTree& b) const { return b.size() == 1 ? "id" : b.code(); }
  LabeledTree parse(std::string_view text) const { return PreLieOperad().parse(text); }
};

// The 2-vertex tree 1(2): root 1, child 2.
LabeledTree binary_tree();

// ---------------------------------------------------------------------------
// Symmetric-group compatibility.
//
// For σ ∈ Sₙ, slot i and m = arity(ν), σ ∘ᵢ id_m is the permutation of
// {1..n+m−1} moving each μ-label a ≠ i to where σ(a) lands after plugging at
// σ(i), and shifting the ν block from i to σ(i). Likewise id_n ∘ᵢ ρ permutes
// the ν block by ρ and fixes the rest. The checked identities are
//   relabel(μ,σ) ∘_{σ(i)} ν   = relabel(μ ∘ᵢ ν, σ ∘ᵢ id_m)
//   μ ∘ᵢ relabel(ν,ρ)         = relabel(μ ∘ᵢ ν, id_n ∘ᵢ ρ)

Permutation block_permutation_outer(const Permutation& sigma, std::size_t slot, std::size_t inner_arity);
Permutation block_permutation_inner(std::size_t outer_arity, std::size_t slot, const Permutation& rho);

FormalSum<LabeledTree> relabel(const FormalSum<LabeledTree>& x, const Permutation& sigma);

template <SymmetricTreeOperad Op>
LawOutcome<LabeledTree> symmetric_action_check(const Op& op, const LabeledTree& mu, const Permutation& sigma,
                                               std::size_t slot, const LabeledTree& nu) {
  require_slot(op, mu, slot);
  return {op.compose(relabel(mu, sigma), sigma(slot), nu),
          relabel(op.compose(mu, slot, nu), block_permutation_outer(sigma, slot, nu.size()))};
}

template <SymmetricTreeOperad Op>
LawOutcome<LabeledTree> symmetric_action_check_inner(const Op& op, const LabeledTree& mu, std::size_t slot,
                                                     const LabeledTree& nu, const Permutation& rho) {
  require_slot(op, mu, slot);
  return {op.compose(mu, slot, relabel(nu, rho)),
          relabel(op.compose(mu, slot, nu), block_permutation_inner(mu.size(), slot, rho))};
}

// ---------------------------------------------------------------------------
// Lookup by name: "nsassoc", "mag2", "free:<signature>", "prelie", "nap".

using AnyOperad = std::variant<NsAssoc, FreeNsOperad, PreLieOperad, NapOperad>;

AnyOperad make_operad(std::string_view name);

// Names of the built-in instances, in report order.
const std::vector<std::string>& builtin_operad_names();

}  // namespace preop
