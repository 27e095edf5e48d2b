#pragma once

// Rooted-tree families used as operad and pre-Lie bases.
//
//   UnlabeledTree  children unordered, canonical form; basis of the free
//                  pre-Lie algebra on one generator and of coinvariants.
//   LabeledTree    vertices labeled bijectively by 1..n; basis of the
//                  pre-Lie and NAP operads in arity n.
//   PlanarTerm     planar tree whose internal nodes carry generators;
//                  basis of free non-symmetric operads.
//
// All three are immutable values ordered by their canonical printed form,
// so std::map / std::sort iteration is deterministic.

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace preop {

// ---------------------------------------------------------------------------
// Unlabeled trees

// A rooted tree with ordered children, as read from input. Only used as the
// argument of canonicalize().
struct PlainTree {
  std::vector<PlainTree> children;
};

class UnlabeledTree {
 public:
  // The single vertex.
  UnlabeledTree();
  // Children may arrive in any order; they are sorted into canonical order.
  explicit UnlabeledTree(std::vector<UnlabeledTree> children);

  const std::vector<UnlabeledTree>& children() const noexcept { return children_; }
  std::size_t size() const noexcept { return size_; }
  // Canonical print, e.g. "(()())" for the cherry.
  const std::string& code() const noexcept { return code_; }

  friend bool operator==(const UnlabeledTree& a, const UnlabeledTree& b) {
    return a.code_ == b.code_;
  }
  friend std::strong_ordering operator<=>(const UnlabeledTree& a, const UnlabeledTree& b) {
    return a.code_ <=> b.code_;
  }

 private:
  std::vector<UnlabeledTree> children_;
  std::string code_;
  std::size_t size_;
};

UnlabeledTree canonicalize(const PlainTree& t);
UnlabeledTree canonicalize(const UnlabeledTree& t);

// All rooted trees with n vertices, sorted by canonical print. n = 0 throws.
std::vector<UnlabeledTree> enumerate_unlabeled(std::size_t n);

// Number of rooted trees with n vertices (A000081) by the Euler transform
// recurrence; used to price an enumeration before running it.
std::size_t count_unlabeled(std::size_t n);

// Vertices are designated by their depth-first pre-order index over the
// canonical form, root = 0.
UnlabeledTree graft_at_vertex(const UnlabeledTree& t, std::size_t vertex, const UnlabeledTree& s);

// Simultaneous grafting: grafts[v] lists the trees to hang below vertex v.
// grafts.size() must equal t.size().
UnlabeledTree graft_many(const UnlabeledTree& t, const std::vector<std::vector<UnlabeledTree>>& grafts);

// Root with n leaf children; corolla(0) is the single vertex.
UnlabeledTree corolla(std::size_t n);

// ---------------------------------------------------------------------------
// Permutations of {1..n}

class Permutation {
 public:
  static Permutation identity(std::size_t n);
  // images[k] is the image of k+1. Throws DomainError unless a bijection of {1..n}.
  explicit Permutation(std::vector<std::size_t> images);

  std::size_t size() const noexcept { return images_.size(); }
  std::size_t operator()(std::size_t i) const { return images_.at(i - 1); }
  const std::vector<std::size_t>& images() const noexcept { return images_; }
  Permutation inverse() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::size_t> images_;
};

// (sigma * tau)(i) = sigma(tau(i)).
Permutation operator*(const Permutation& sigma, const Permutation& tau);

// All n! permutations in lexicographic order of their image lists.
std::vector<Permutation> all_permutations(std::size_t n);

// ---------------------------------------------------------------------------
// Labeled trees

class LabeledTree {
 public:
  // parents[label] for label in 1..n, 0 marking the root; parents[0] is
  // ignored. Throws DomainError unless there is exactly one root and the
  // parent relation is acyclic.
  static LabeledTree from_parents(std::vector<std::size_t> parents);
  // The one-vertex tree labeled 1.
  static LabeledTree single();

  std::size_t size() const noexcept { return parents_.size() - 1; }
  std::size_t root() const noexcept { return root_; }
  // 0 for the root.
  std::size_t parent(std::size_t label) const { return parents_.at(label); }
  // Labels whose parent is `label`, ascending.
  std::vector<std::size_t> children(std::size_t label) const;
  const std::vector<std::size_t>& parents() const noexcept { return parents_; }
  // e.g. "1(2,3)", children in ascending label order.
  const std::string& code() const noexcept { return code_; }

  friend bool operator==(const LabeledTree& a, const LabeledTree& b) {
    return a.parents_ == b.parents_;
  }
  friend std::strong_ordering operator<=>(const LabeledTree& a, const LabeledTree& b) {
    return a.code_ <=> b.code_;
  }

 private:
  LabeledTree(std::vector<std::size_t> parents, std::size_t root);

  std::vector<std::size_t> parents_;
  std::size_t root_;
  std::string code_;
};

// All rooted trees on {1..n} (n^(n-1) of them), sorted by canonical print.
std::vector<LabeledTree> enumerate_labeled(std::size_t n);

// Vertex labeled i becomes labeled sigma(i).
LabeledTree relabel(const LabeledTree& t, const Permutation& sigma);

UnlabeledTree forget_labels(const LabeledTree& t);

// Labels the canonical form in depth-first pre-order, root = 1.
LabeledTree lift(const UnlabeledTree& t);

// ---------------------------------------------------------------------------
// Planar terms over a signature

struct Generator {
  std::string name;
  std::size_t arity;

  friend bool operator==(const Generator&, const Generator&) = default;
};

class Signature {
 public:
  Signature() = default;
  // Throws DomainError on a duplicate name, an arity below 2, or a name that
  // is not an identifier other than "id".
  explicit Signature(std::vector<Generator> generators);
  // "g2:2,h3:3".
  static Signature parse(std::string_view text);
  // The free operad on one binary generator "g".
  static Signature mag2();

  const std::vector<Generator>& generators() const noexcept { return generators_; }
  const Generator* find(std::string_view name) const;
  std::string to_string() const;

 private:
  std::vector<Generator> generators_;
};

class PlanarTerm {
 public:
  // The bare input, i.e. the operadic identity.
  static PlanarTerm leaf();
  static PlanarTerm node(std::string generator, std::vector<PlanarTerm> children);
  // generator applied to leaves 1..arity.
  static PlanarTerm corolla(const Generator& generator);

  bool is_leaf() const noexcept { return generator_.empty(); }
  const std::string& generator() const noexcept { return generator_; }
  const std::vector<PlanarTerm>& children() const noexcept { return children_; }
  std::size_t arity() const noexcept { return arity_; }
  // Leaves numbered 1..arity left to right, e.g. "g(g(1,2),3)".
  const std::string& code() const noexcept { return code_; }

  friend bool operator==(const PlanarTerm& a, const PlanarTerm& b) { return a.code_ == b.code_; }
  friend std::strong_ordering operator<=>(const PlanarTerm& a, const PlanarTerm& b) {
    return a.code_ <=> b.code_;
  }

 private:
  PlanarTerm() = default;
  void render(std::string& out, std::size_t& next_leaf) const;

  std::string generator_;
  std::vector<PlanarTerm> children_;
  std::size_t arity_ = 1;
  std::string code_;
};

// Every planar term with n leaves whose nodes use generators of `signature`,
// sorted by canonical print.
std::vector<PlanarTerm> enumerate_planar(std::size_t leaves, const Signature& signature);

// Planar binary trees on one binary generator: Catalan(leaves - 1) terms.
// Throws DomainError if the generator is not binary.
std::vector<PlanarTerm> enumerate_planar_binary(std::size_t leaves, const Generator& generator);

// Number of planar terms with n leaves over `signature`.
std::size_t count_planar(std::size_t leaves, const Signature& signature);

// Leaf `slot` of t replaced by s, leaves renumbered left to right.
PlanarTerm plug(const PlanarTerm& t, std::size_t slot, const PlanarTerm& s);

// ---------------------------------------------------------------------------
// Text forms
//
//   unlabeled  T ::= "(" T* ")"
//   labeled    T ::= INT | INT "(" T ("," T)* ")"
//   planar     T ::= INT | NAME "(" T ("," T)* ")"
//
// Whitespace between tokens is ignored. Errors throw ParseError carrying the
// byte offset.

UnlabeledTree parse_unlabeled(std::string_view text);
LabeledTree parse_labeled(std::string_view text);
PlanarTerm parse_planar(std::string_view text, const Signature& signature);

inline const std::string& to_string(const UnlabeledTree& t) { return t.code(); }
inline const std::string& to_string(const LabeledTree& t) { return t.code(); }
inline const std::string& to_string(const PlanarTerm& t) { return t.code(); }

}  // namespace preop
