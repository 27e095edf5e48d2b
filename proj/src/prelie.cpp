#include "preop/prelie.hpp"

namespace preop {

PreLieElement graft_product(const UnlabeledTree& t, const UnlabeledTree& s) {
  PreLieElement out;
  for (std::size_t v = 0; v < t.size(); ++v) out.add(graft_at_vertex(t, v, s), 1);
  return out;
}

PreLieElement graft_product(const PreLieElement& x, const PreLieElement& y) {
  static const auto extended = bilinear_extend<UnlabeledTree>(
      [](const UnlabeledTree& t, const UnlabeledTree& s) { return graft_product(t, s); });
  return extended(x, y);
}

PreLieElement nap_graft(const UnlabeledTree& t, const UnlabeledTree& s) {
  return PreLieElement::term(graft_at_vertex(t, 0, s));
}

PreLieElement nap_graft(const PreLieElement& x, const PreLieElement& y) {
  static const auto extended = bilinear_extend<UnlabeledTree>(
      [](const UnlabeledTree& t, const UnlabeledTree& s) { return nap_graft(t, s); });
  return extended(x, y);
}

PreLieElement insertion_recursive(const PreLieElement& t, std::span<const PreLieElement> args) {
  return insertion_recursion(
      [](const PreLieElement& a, const PreLieElement& b) { return graft_product(a, b); }, t, args);
}

PreLieElement insertion_closed(const UnlabeledTree& t, std::span<const UnlabeledTree> args) {
  if (args.empty()) throw DomainError("insertion element needs at least one argument");
  PreLieElement out;
  // target[k] is the vertex receiving args[k]; odometer over all t.size()^k maps.
  std::vector<std::size_t> target(args.size(), 0);
  for (;;) {
    std::vector<std::vector<UnlabeledTree>> grafts(t.size());
    for (std::size_t k = 0; k < args.size(); ++k) grafts[target[k]].push_back(args[k]);
    out.add(graft_many(t, grafts), 1);

    std::size_t pos = 0;
    while (pos < target.size() && target[pos] + 1 == t.size()) target[pos++] = 0;
    if (pos == target.size()) break;
    ++target[pos];
  }
  return out;
}

}  // namespace preop
