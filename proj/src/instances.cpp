#include "preop/instances.hpp"

#include <algorithm>
#include <cctype>
#include <limits>

namespace preop {

std::string to_string(AssocOp op) { return op.arity == 1 ? "id" : "mu" + std::to_string(op.arity); }

std::vector<AssocOp> NsAssoc::basis(std::size_t n) const {
  if (n == 0) return {};
  return {AssocOp{n}};
}

FormalSum<AssocOp> NsAssoc::compose(const AssocOp& mu, std::size_t slot, const AssocOp& nu) const {
  if (slot == 0 || slot > mu.arity)
    throw DomainError("composition slot " + std::to_string(slot) + " out of range for " + to_string(mu) +
                      " of arity " + std::to_string(mu.arity));
  return FormalSum<AssocOp>::term(AssocOp{mu.arity + nu.arity - 1});
}

AssocOp NsAssoc::parse(std::string_view text) const {
  if (text == "id") return {1};
  if (text.size() > 2 && text.substr(0, 2) == "mu") {
    const auto digits = text.substr(2);
    bool ok = digits.size() <= 6;
    for (char c : digits) ok = ok && std::isdigit(static_cast<unsigned char>(c));
    if (ok) {
      const auto n = std::stoul(std::string(digits));
      if (n >= 1) return {n};
    }
  }
  throw ParseError("nsassoc: expected 'id' or 'mu<n>', got '" + std::string(text) + "'", 0);
}

// ---------------------------------------------------------------------------

FormalSum<PlanarTerm> free_ns_compose(const PlanarTerm& t, std::size_t slot, const PlanarTerm& s) {
  return FormalSum<PlanarTerm>::term(plug(t, slot, s));
}

FreeNsOperad::FreeNsOperad(Signature signature, std::string name)
    : signature_(std::move(signature)), name_(std::move(name)) {
  if (name_.empty()) name_ = "free:" + signature_.to_string();
}

FreeNsOperad FreeNsOperad::mag2() { return FreeNsOperad(Signature::mag2(), "mag2"); }

std::vector<PlanarTerm> FreeNsOperad::basis(std::size_t n) const {
  if (n == 0) return {};
  return enumerate_planar(n, signature_);
}

std::string FreeNsOperad::print(const PlanarTerm& b) const {
  if (b.is_leaf()) return "id";
  const bool bare = std::all_of(b.children().begin(), b.children().end(), [](const auto& c) { return c.is_leaf(); });
  return bare ? b.generator() : b.code();
}

PlanarTerm FreeNsOperad::parse(std::string_view text) const {
  if (text == "id") return PlanarTerm::leaf();
  if (const auto* g = signature_.find(text)) return PlanarTerm::corolla(*g);
  return parse_planar(text, signature_);
}

// ---------------------------------------------------------------------------

namespace {

enum class Reattach { Anywhere, Root };

FormalSum<LabeledTree> tree_compose(const LabeledTree& mu, std::size_t slot, const LabeledTree& nu, Reattach mode) {
  const std::size_t n = mu.size();
  const std::size_t m = nu.size();
  if (slot == 0 || slot > n)
    throw DomainError("composition slot " + std::to_string(slot) + " out of range for " + mu.code() +
                      " of arity " + std::to_string(n));

  auto outer = [&](std::size_t a) { return a < slot ? a : a + m - 1; };
  auto inner = [&](std::size_t b) { return b + slot - 1; };

  std::vector<std::size_t> base(n + m, 0);
  for (std::size_t a = 1; a <= n; ++a) {
    if (a == slot) continue;
    const auto p = mu.parent(a);
    base[outer(a)] = p == 0 ? 0 : (p == slot ? 0 : outer(p));
  }
  for (std::size_t b = 1; b <= m; ++b) {
    const auto p = nu.parent(b);
    base[inner(b)] = p == 0 ? (mu.parent(slot) == 0 ? 0 : outer(mu.parent(slot))) : inner(p);
  }

  const auto orphans = mu.children(slot);
  FormalSum<LabeledTree> out;
  if (mode == Reattach::Root) {
    for (auto c : orphans) base[outer(c)] = inner(nu.root());
    out.add(LabeledTree::from_parents(std::move(base)), 1);
    return out;
  }

  // target[k] is the ν-vertex adopting orphans[k]; odometer over m^|orphans|.
  std::vector<std::size_t> target(orphans.size(), 1);
  for (;;) {
    auto parents = base;
    for (std::size_t k = 0; k < orphans.size(); ++k) parents[outer(orphans[k])] = inner(target[k]);
    out.add(LabeledTree::from_parents(std::move(parents)), 1);

    std::size_t pos = 0;
    while (pos < target.size() && target[pos] == m) target[pos++] = 1;
    if (pos == target.size()) break;
    ++target[pos];
  }
  return out;
}

}  // namespace

FormalSum<LabeledTree> prelie_operad_compose(const LabeledTree& mu, std::size_t slot, const LabeledTree& nu) {
  return tree_compose(mu, slot, nu, Reattach::Anywhere);
}

FormalSum<LabeledTree> nap_operad_compose(const LabeledTree& mu, std::size_t slot, const LabeledTree& nu) {
  return tree_compose(mu, slot, nu, Reattach::Root);
}

std::size_t PreLieOperad::basis_count(std::size_t n) const {
  if (n == 0) return 0;
  std::size_t count = 1;
  for (std::size_t k = 1; k < n; ++k) {
    if (count > std::numeric_limits<std::size_t>::max() / n) return std::numeric_limits<std::size_t>::max();
    count *= n;
  }
  return count;
}

LabeledTree PreLieOperad::parse(std::string_view text) const {
  if (text == "id") return LabeledTree::single();
  return parse_labeled(text);
}

LabeledTree binary_tree() { return LabeledTree::from_parents({0, 0, 1}); }

// ---------------------------------------------------------------------------

Permutation block_permutation_outer(const Permutation& sigma, std::size_t slot, std::size_t inner_arity) {
  const std::size_t n = sigma.size();
  const std::size_t m = inner_arity;
  if (slot == 0 || slot > n || m == 0) throw DomainError("block_permutation_outer: bad slot or arity");
  auto place = [m](std::size_t a, std::size_t at) { return a < at ? a : a + m - 1; };
  std::vector<std::size_t> images(n + m - 1);
  for (std::size_t a = 1; a <= n; ++a)
    if (a != slot) images[place(a, slot) - 1] = place(sigma(a), sigma(slot));
  for (std::size_t b = 1; b <= m; ++b) images[b + slot - 2] = b + sigma(slot) - 1;
  return Permutation(std::move(images));
}

Permutation block_permutation_inner(std::size_t outer_arity, std::size_t slot, const Permutation& rho) {
  const std::size_t n = outer_arity;
  const std::size_t m = rho.size();
  if (slot == 0 || slot > n || m == 0) throw DomainError("block_permutation_inner: bad slot or arity");
  auto images = Permutation::identity(n + m - 1).images();
  for (std::size_t b = 1; b <= m; ++b) images[b + slot - 2] = rho(b) + slot - 1;
  return Permutation(std::move(images));
}

FormalSum<LabeledTree> relabel(const FormalSum<LabeledTree>& x, const Permutation& sigma) {
  FormalSum<LabeledTree> out;
  for (const auto& [t, c] : x) out.add(relabel(t, sigma), c);
  return out;
}

// ---------------------------------------------------------------------------

AnyOperad make_operad(std::string_view name) {
  if (name == "nsassoc") return NsAssoc{};
  if (name == "mag2") return FreeNsOperad::mag2();
  if (name == "prelie") return PreLieOperad{};
  if (name == "nap") return NapOperad{};
  if (name.substr(0, 5) == "free:") return FreeNsOperad(Signature::parse(name.substr(5)));
  throw DomainError("unknown operad '" + std::string(name) + "' (expected nsassoc, mag2, free:<signature>, prelie, nap)");
}

const std::vector<std::string>& builtin_operad_names() {
  static const std::vector<std::string> names{"nsassoc", "mag2", "prelie", "nap"};
  return names;
}

}  // namespace preop
