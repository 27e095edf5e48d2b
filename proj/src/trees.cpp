#include "preop/trees.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <numeric>
#include <queue>

#include "preop/errors.hpp"

namespace preop {

// ---------------------------------------------------------------------------
// Unlabeled trees

UnlabeledTree::UnlabeledTree() : code_("()"), size_(1) {}

UnlabeledTree::UnlabeledTree(std::vector<UnlabeledTree> children)
    : children_(std::move(children)), size_(1) {
  std::sort(children_.begin(), children_.end());
  code_ = "(";
  for (const auto& c : children_) {
    code_ += c.code_;
    size_ += c.size_;
  }
  code_ += ")";
}

UnlabeledTree canonicalize(const PlainTree& t) {
  std::vector<UnlabeledTree> kids;
  kids.reserve(t.children.size());
  for (const auto& c : t.children) kids.push_back(canonicalize(c));
  return UnlabeledTree(std::move(kids));
}

UnlabeledTree canonicalize(const UnlabeledTree& t) { return t; }

std::vector<UnlabeledTree> enumerate_unlabeled(std::size_t n) {
  if (n == 0) throw DomainError("enumerate_unlabeled: size must be at least 1");

  // by_size[k] holds every tree with k vertices.
  std::vector<std::vector<UnlabeledTree>> by_size(n + 1);
  by_size[1] = {UnlabeledTree()};
  for (std::size_t k = 2; k <= n; ++k) {
    // Children are drawn as a multiset from `pool`, non-decreasing in pool
    // index, so every forest of total size k-1 appears once.
    std::vector<const UnlabeledTree*> pool;
    for (std::size_t s = 1; s < k; ++s)
      for (const auto& t : by_size[s]) pool.push_back(&t);

    std::vector<UnlabeledTree> forest;
    std::function<void(std::size_t, std::size_t)> extend = [&](std::size_t remaining, std::size_t from) {
      if (remaining == 0) {
        by_size[k].emplace_back(forest);
        return;
      }
      for (std::size_t j = from; j < pool.size(); ++j) {
        if (pool[j]->size() > remaining) continue;
        forest.push_back(*pool[j]);
        extend(remaining - pool[j]->size(), j);
        forest.pop_back();
      }
    };
    extend(k - 1, 0);
  }
  auto out = std::move(by_size[n]);
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t count_unlabeled(std::size_t n) {
  if (n == 0) return 0;
  std::vector<std::size_t> a(n + 1, 0);
  a[1] = 1;
  for (std::size_t m = 1; m < n; ++m) {
    std::size_t total = 0;
    for (std::size_t k = 1; k <= m; ++k) {
      std::size_t divisor_sum = 0;
      for (std::size_t d = 1; d <= k; ++d)
        if (k % d == 0) divisor_sum += d * a[d];
      total += divisor_sum * a[m - k + 1];
    }
    a[m + 1] = total / m;
  }
  return a[n];
}

namespace {

UnlabeledTree attach(const UnlabeledTree& t, const std::vector<std::vector<UnlabeledTree>>& grafts,
                     std::size_t& index) {
  const std::size_t here = index++;
  std::vector<UnlabeledTree> kids;
  kids.reserve(t.children().size() + grafts[here].size());
  for (const auto& c : t.children()) kids.push_back(attach(c, grafts, index));
  kids.insert(kids.end(), grafts[here].begin(), grafts[here].end());
  return UnlabeledTree(std::move(kids));
}

}  // namespace

UnlabeledTree graft_many(const UnlabeledTree& t, const std::vector<std::vector<UnlabeledTree>>& grafts) {
  if (grafts.size() != t.size())
    throw DomainError("graft_many: expected one graft list per vertex (" + std::to_string(t.size()) + "), got " +
                      std::to_string(grafts.size()));
  std::size_t index = 0;
  return attach(t, grafts, index);
}

UnlabeledTree graft_at_vertex(const UnlabeledTree& t, std::size_t vertex, const UnlabeledTree& s) {
  if (vertex >= t.size())
    throw DomainError("graft_at_vertex: vertex " + std::to_string(vertex) + " out of range for a tree with " +
                      std::to_string(t.size()) + " vertices");
  std::vector<std::vector<UnlabeledTree>> grafts(t.size());
  grafts[vertex].push_back(s);
  return graft_many(t, grafts);
}

UnlabeledTree corolla(std::size_t n) { return UnlabeledTree(std::vector<UnlabeledTree>(n)); }

// ---------------------------------------------------------------------------
// Permutations

Permutation Permutation::identity(std::size_t n) {
  std::vector<std::size_t> images(n);
  std::iota(images.begin(), images.end(), std::size_t{1});
  return Permutation(std::move(images));
}

Permutation::Permutation(std::vector<std::size_t> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size() + 1, false);
  for (auto v : images_) {
    if (v == 0 || v > images_.size() || seen[v])
      throw DomainError("permutation: images must be a rearrangement of 1.." + std::to_string(images_.size()));
    seen[v] = true;
  }
}

Permutation Permutation::inverse() const {
  std::vector<std::size_t> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i] - 1] = i + 1;
  return Permutation(std::move(inv));
}

Permutation operator*(const Permutation& sigma, const Permutation& tau) {
  if (sigma.size() != tau.size()) throw DomainError("permutation product: size mismatch");
  std::vector<std::size_t> images(tau.size());
  for (std::size_t i = 1; i <= tau.size(); ++i) images[i - 1] = sigma(tau(i));
  return Permutation(std::move(images));
}

std::vector<Permutation> all_permutations(std::size_t n) {
  std::vector<Permutation> out;
  auto images = Permutation::identity(n).images();
  do {
    out.emplace_back(images);
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

// ---------------------------------------------------------------------------
// Labeled trees

namespace {

void render_labeled(const std::vector<std::vector<std::size_t>>& kids, std::size_t v, std::string& out) {
  out += std::to_string(v);
  if (kids[v].empty()) return;
  out += '(';
  for (std::size_t k = 0; k < kids[v].size(); ++k) {
    if (k) out += ',';
    render_labeled(kids, kids[v][k], out);
  }
  out += ')';
}

}  // namespace

LabeledTree::LabeledTree(std::vector<std::size_t> parents, std::size_t root)
    : parents_(std::move(parents)), root_(root) {
  std::vector<std::vector<std::size_t>> kids(parents_.size());
  for (std::size_t v = 1; v < parents_.size(); ++v)
    if (parents_[v] != 0) kids[parents_[v]].push_back(v);
  render_labeled(kids, root_, code_);
}

LabeledTree LabeledTree::from_parents(std::vector<std::size_t> parents) {
  if (parents.size() < 2) throw DomainError("labeled tree: at least one vertex required");
  const std::size_t n = parents.size() - 1;
  parents[0] = 0;
  std::size_t root = 0;
  for (std::size_t v = 1; v <= n; ++v) {
    if (parents[v] > n || parents[v] == v)
      throw DomainError("labeled tree: bad parent " + std::to_string(parents[v]) + " for vertex " + std::to_string(v));
    if (parents[v] == 0) {
      if (root != 0) throw DomainError("labeled tree: more than one root");
      root = v;
    }
  }
  if (root == 0) throw DomainError("labeled tree: no root");
  for (std::size_t v = 1; v <= n; ++v) {
    std::size_t u = v;
    for (std::size_t steps = 0; u != root; ++steps) {
      if (steps > n) throw DomainError("labeled tree: parent relation has a cycle");
      u = parents[u];
    }
  }
  return LabeledTree(std::move(parents), root);
}

LabeledTree LabeledTree::single() { return LabeledTree({0, 0}, 1); }

std::vector<std::size_t> LabeledTree::children(std::size_t label) const {
  std::vector<std::size_t> out;
  for (std::size_t v = 1; v < parents_.size(); ++v)
    if (parents_[v] == label && v != root_) out.push_back(v);
  return out;
}

std::vector<LabeledTree> enumerate_labeled(std::size_t n) {
  if (n == 0) throw DomainError("enumerate_labeled: size must be at least 1");
  if (n == 1) return {LabeledTree::single()};

  // Unrooted trees from Pruefer sequences, then every choice of root.
  std::vector<LabeledTree> out;
  std::vector<std::size_t> code(n - 2, 1);
  for (;;) {
    std::vector<std::size_t> degree(n + 1, 1);
    for (auto c : code) ++degree[c];
    std::vector<std::vector<std::size_t>> adj(n + 1);
    for (auto c : code) {
      std::size_t leaf = 1;
      while (degree[leaf] != 1) ++leaf;
      adj[leaf].push_back(c);
      adj[c].push_back(leaf);
      --degree[leaf];
      --degree[c];
    }
    std::size_t u = 0;
    for (std::size_t v = 1; v <= n; ++v)
      if (degree[v] == 1) {
        if (u == 0) {
          u = v;
        } else {
          adj[u].push_back(v);
          adj[v].push_back(u);
        }
      }

    for (std::size_t root = 1; root <= n; ++root) {
      std::vector<std::size_t> parents(n + 1, 0);
      std::vector<bool> seen(n + 1, false);
      std::queue<std::size_t> frontier;
      frontier.push(root);
      seen[root] = true;
      while (!frontier.empty()) {
        auto v = frontier.front();
        frontier.pop();
        for (auto w : adj[v])
          if (!seen[w]) {
            seen[w] = true;
            parents[w] = v;
            frontier.push(w);
          }
      }
      out.push_back(LabeledTree::from_parents(std::move(parents)));
    }

    std::size_t pos = 0;
    while (pos < code.size() && code[pos] == n) code[pos++] = 1;
    if (pos == code.size()) break;
    ++code[pos];
  }
  std::sort(out.begin(), out.end());
  return out;
}

LabeledTree relabel(const LabeledTree& t, const Permutation& sigma) {
  if (sigma.size() != t.size())
    throw DomainError("relabel: permutation of " + std::to_string(sigma.size()) + " points applied to a tree with " +
                      std::to_string(t.size()) + " vertices");
  std::vector<std::size_t> parents(t.size() + 1, 0);
  for (std::size_t v = 1; v <= t.size(); ++v) parents[sigma(v)] = t.parent(v) == 0 ? 0 : sigma(t.parent(v));
  return LabeledTree::from_parents(std::move(parents));
}

namespace {

UnlabeledTree shape_below(const std::vector<std::vector<std::size_t>>& kids, std::size_t v) {
  std::vector<UnlabeledTree> sub;
  for (auto w : kids[v]) sub.push_back(shape_below(kids, w));
  return UnlabeledTree(std::move(sub));
}

void label_preorder(const UnlabeledTree& t, std::size_t parent, std::vector<std::size_t>& parents) {
  parents.push_back(parent);
  const std::size_t me = parents.size() - 1;
  for (const auto& c : t.children()) label_preorder(c, me, parents);
}

}  // namespace

UnlabeledTree forget_labels(const LabeledTree& t) {
  std::vector<std::vector<std::size_t>> kids(t.size() + 1);
  for (std::size_t v = 1; v <= t.size(); ++v)
    if (t.parent(v) != 0) kids[t.parent(v)].push_back(v);
  return shape_below(kids, t.root());
}

LabeledTree lift(const UnlabeledTree& t) {
  std::vector<std::size_t> parents{0};
  label_preorder(t, 0, parents);
  return LabeledTree::from_parents(std::move(parents));
}

// ---------------------------------------------------------------------------
// Signatures and planar terms

namespace {

bool is_identifier(std::string_view s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

// "o_<digits>" is the partial-composition operator in expressions.
bool is_operator_spelling(std::string_view s) {
  return s.size() > 2 && s.substr(0, 2) == "o_" &&
         std::all_of(s.begin() + 2, s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

}  // namespace

Signature::Signature(std::vector<Generator> generators) : generators_(std::move(generators)) {
  for (std::size_t k = 0; k < generators_.size(); ++k) {
    const auto& g = generators_[k];
    if (!is_identifier(g.name) || g.name == "id" || is_operator_spelling(g.name))
      throw DomainError("signature: invalid generator name '" + g.name + "'");
    if (g.arity < 2) throw DomainError("signature: generator '" + g.name + "' must have arity at least 2");
    for (std::size_t j = 0; j < k; ++j)
      if (generators_[j].name == g.name) throw DomainError("signature: duplicate generator '" + g.name + "'");
  }
}

Signature Signature::parse(std::string_view text) {
  std::vector<Generator> gens;
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  for (;;) {
    skip();
    const auto start = pos;
    while (pos < text.size() && (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_')) ++pos;
    if (pos == start) throw ParseError("signature: expected generator name", pos);
    std::string name(text.substr(start, pos - start));
    skip();
    if (pos >= text.size() || text[pos] != ':') throw ParseError("signature: expected ':'", pos);
    ++pos;
    skip();
    const auto digits = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == digits) throw ParseError("signature: expected arity", pos);
    gens.push_back({std::move(name), std::stoul(std::string(text.substr(digits, pos - digits)))});
    skip();
    if (pos == text.size()) break;
    if (text[pos] != ',') throw ParseError("signature: expected ','", pos);
    ++pos;
  }
  return Signature(std::move(gens));
}

Signature Signature::mag2() { return Signature({{"g", 2}}); }

const Generator* Signature::find(std::string_view name) const {
  for (const auto& g : generators_)
    if (g.name == name) return &g;
  return nullptr;
}

std::string Signature::to_string() const {
  std::string out;
  for (const auto& g : generators_) {
    if (!out.empty()) out += ',';
    out += g.name + ":" + std::to_string(g.arity);
  }
  return out;
}

PlanarTerm PlanarTerm::leaf() {
  PlanarTerm t;
  t.code_ = "1";
  return t;
}

PlanarTerm PlanarTerm::node(std::string generator, std::vector<PlanarTerm> children) {
  if (generator.empty()) throw DomainError("planar term: empty generator name");
  if (children.empty()) throw DomainError("planar term: node '" + generator + "' needs children");
  PlanarTerm t;
  t.generator_ = std::move(generator);
  t.children_ = std::move(children);
  t.arity_ = 0;
  for (const auto& c : t.children_) t.arity_ += c.arity_;
  std::size_t next = 1;
  t.render(t.code_, next);
  return t;
}

PlanarTerm PlanarTerm::corolla(const Generator& generator) {
  return node(generator.name, std::vector<PlanarTerm>(generator.arity, leaf()));
}

void PlanarTerm::render(std::string& out, std::size_t& next_leaf) const {
  if (is_leaf()) {
    out += std::to_string(next_leaf++);
    return;
  }
  out += generator_;
  out += '(';
  for (std::size_t k = 0; k < children_.size(); ++k) {
    if (k) out += ',';
    children_[k].render(out, next_leaf);
  }
  out += ')';
}

namespace {

// Ordered splits of `total` into `parts` positive summands.
void compositions(std::size_t total, std::size_t parts, std::vector<std::size_t>& prefix,
                  std::vector<std::vector<std::size_t>>& out) {
  if (parts == 1) {
    prefix.push_back(total);
    out.push_back(prefix);
    prefix.pop_back();
    return;
  }
  for (std::size_t first = 1; first + (parts - 1) <= total; ++first) {
    prefix.push_back(first);
    compositions(total - first, parts - 1, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<PlanarTerm> enumerate_planar(std::size_t leaves, const Signature& signature) {
  if (leaves == 0) throw DomainError("enumerate_planar: at least one leaf required");
  std::vector<std::vector<PlanarTerm>> by_arity(leaves + 1);
  by_arity[1] = {PlanarTerm::leaf()};
  for (std::size_t n = 2; n <= leaves; ++n) {
    for (const auto& g : signature.generators()) {
      if (g.arity > n) continue;
      std::vector<std::vector<std::size_t>> splits;
      std::vector<std::size_t> prefix;
      compositions(n, g.arity, prefix, splits);
      for (const auto& split : splits) {
        std::vector<PlanarTerm> kids;
        std::function<void(std::size_t)> choose = [&](std::size_t k) {
          if (k == split.size()) {
            by_arity[n].push_back(PlanarTerm::node(g.name, kids));
            return;
          }
          for (const auto& c : by_arity[split[k]]) {
            kids.push_back(c);
            choose(k + 1);
            kids.pop_back();
          }
        };
        choose(0);
      }
    }
  }
  auto out = std::move(by_arity[leaves]);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<PlanarTerm> enumerate_planar_binary(std::size_t leaves, const Generator& generator) {
  if (generator.arity != 2)
    throw DomainError("enumerate_planar_binary: generator '" + generator.name + "' has arity " +
                      std::to_string(generator.arity) + ", expected 2");
  return enumerate_planar(leaves, Signature({generator}));
}

std::size_t count_planar(std::size_t leaves, const Signature& signature) {
  if (leaves == 0) return 0;
  std::vector<std::size_t> count(leaves + 1, 0);
  count[1] = 1;
  for (std::size_t n = 2; n <= leaves; ++n)
    for (const auto& g : signature.generators()) {
      if (g.arity > n) continue;
      std::vector<std::vector<std::size_t>> splits;
      std::vector<std::size_t> prefix;
      compositions(n, g.arity, prefix, splits);
      for (const auto& split : splits) {
        std::size_t ways = 1;
        for (auto part : split) ways *= count[part];
        count[n] += ways;
      }
    }
  return count[leaves];
}

namespace {

PlanarTerm plug_at(const PlanarTerm& t, std::size_t slot, const PlanarTerm& s, std::size_t& seen) {
  if (t.is_leaf()) return ++seen == slot ? s : t;
  std::vector<PlanarTerm> kids;
  kids.reserve(t.children().size());
  for (const auto& c : t.children()) {
    if (seen >= slot) {
      kids.push_back(c);
      continue;
    }
    kids.push_back(plug_at(c, slot, s, seen));
  }
  return PlanarTerm::node(t.generator(), std::move(kids));
}

}  // namespace

PlanarTerm plug(const PlanarTerm& t, std::size_t slot, const PlanarTerm& s) {
  if (slot == 0 || slot > t.arity())
    throw DomainError("composition slot " + std::to_string(slot) + " out of range for arity " +
                      std::to_string(t.arity()));
  std::size_t seen = 0;
  return plug_at(t, slot, s, seen);
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  std::size_t integer() {
    skip_space();
    const auto start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    if (pos_ - start > 9) fail("integer too large", start);
    return std::stoul(std::string(text_.substr(start, pos_ - start)));
  }
  std::string identifier() {
    skip_space();
    const auto start = pos_;
    while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) ++pos_;
    if (start == pos_) fail("expected name");
    return std::string(text_.substr(start, pos_ - start));
  }
  void finish() {
    if (peek() != '\0') fail("unexpected trailing input");
  }
  std::size_t position() {
    skip_space();
    return pos_;
  }
  [[noreturn]] void fail(const std::string& message) { throw ParseError(message, position()); }
  [[noreturn]] void fail(const std::string& message, std::size_t at) { throw ParseError(message, at); }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

PlainTree read_plain(Cursor& in) {
  in.expect('(');
  PlainTree t;
  while (in.peek() == '(') t.children.push_back(read_plain(in));
  in.expect(')');
  return t;
}

void read_labeled(Cursor& in, std::size_t parent, std::map<std::size_t, std::size_t>& parents) {
  const auto at = in.position();
  const auto label = in.integer();
  if (label == 0) in.fail("labels start at 1", at);
  if (!parents.emplace(label, parent).second) in.fail("duplicate label " + std::to_string(label), at);
  if (!in.accept('(')) return;
  do {
    read_labeled(in, label, parents);
  } while (in.accept(','));
  in.expect(')');
}

PlanarTerm read_planar(Cursor& in, const Signature& signature, std::size_t& next_leaf) {
  const auto at = in.position();
  if (std::isdigit(static_cast<unsigned char>(in.peek()))) {
    const auto label = in.integer();
    if (label != next_leaf)
      in.fail("leaf " + std::to_string(label) + " out of order, expected " + std::to_string(next_leaf), at);
    ++next_leaf;
    return PlanarTerm::leaf();
  }
  const auto name = in.identifier();
  const auto* gen = signature.find(name);
  if (gen == nullptr) in.fail("unknown generator '" + name + "'", at);
  in.expect('(');
  std::vector<PlanarTerm> kids;
  do {
    kids.push_back(read_planar(in, signature, next_leaf));
  } while (in.accept(','));
  if (kids.size() != gen->arity)
    in.fail("generator '" + name + "' takes " + std::to_string(gen->arity) + " inputs, got " +
            std::to_string(kids.size()));
  in.expect(')');
  return PlanarTerm::node(name, std::move(kids));
}

}  // namespace

UnlabeledTree parse_unlabeled(std::string_view text) {
  Cursor in(text);
  auto t = read_plain(in);
  in.finish();
  return canonicalize(t);
}

LabeledTree parse_labeled(std::string_view text) {
  Cursor in(text);
  std::map<std::size_t, std::size_t> parents;
  read_labeled(in, 0, parents);
  in.finish();
  const std::size_t n = parents.size();
  if (parents.rbegin()->first != n)
    in.fail("labels must be exactly 1.." + std::to_string(n) + ", found " + std::to_string(parents.rbegin()->first));
  std::vector<std::size_t> flat(n + 1, 0);
  for (auto [label, parent] : parents) flat[label] = parent;
  return LabeledTree::from_parents(std::move(flat));
}

PlanarTerm parse_planar(std::string_view text, const Signature& signature) {
  Cursor in(text);
  std::size_t next_leaf = 1;
  auto t = read_planar(in, signature, next_leaf);
  in.finish();
  return t;
}

}  // namespace preop
