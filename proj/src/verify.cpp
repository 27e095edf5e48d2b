#include "preop/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <set>
#include <variant>

#include "preop/errors.hpp"
#include "preop/instances.hpp"
#include "preop/operad.hpp"
#include "preop/prelie.hpp"

namespace preop {

void VerificationReport::record(Failure f) {
  ++failure_count;
  if (failures.size() < kMaxRecordedFailures) failures.push_back(std::move(f));
}

nlohmann::json VerificationReport::to_json(bool with_time) const {
  nlohmann::json fails = nlohmann::json::array();
  for (const auto& f : failures) fails.push_back({{"inputs", f.inputs}, {"lhs", f.lhs}, {"rhs", f.rhs}});
  nlohmann::json out{{"instance", instance},
                     {"law", law},
                     {"bounds",
                      {{"maxArity", bounds.max_arity},
                       {"maxVertices", bounds.max_vertices},
                       {"maxBasis", bounds.max_basis}}},
                     {"casesChecked", cases},
                     {"failureCount", failure_count},
                     {"passed", passed()},
                     {"failures", fails}};
  if (with_time) out["wallTimeMs"] = wall_ms;
  return out;
}

bool TheoremReport::passed() const {
  return !witnesses.empty() && std::all_of(witnesses.begin(), witnesses.end(), [](const auto& w) { return w.holds(); });
}

nlohmann::json TheoremReport::to_json() const {
  nlohmann::json ws = nlohmann::json::array();
  for (const auto& w : witnesses)
    ws.push_back({{"relation", w.relation},
                  {"flavor", w.flavor},
                  {"operadValue", w.operad_value},
                  {"closedFormValue", w.closed_form_value},
                  {"freeRelation", w.free_relation},
                  {"freeValue", w.free_value},
                  {"vanishes", w.vanishes},
                  {"freeNonzero", w.free_nonzero},
                  {"holds", w.holds()}});
  return {{"instance", instance}, {"law", "theorem"}, {"casesChecked", witnesses.size()},
          {"passed", passed()},   {"witnesses", ws}};
}

namespace {

const std::vector<std::string> kOperadLaws{"sequential",
                                           "parallel",
                                           "unit",
                                           "prelie",
                                           "grading",
                                           "insertion-vanish",
                                           "insertion-closed-vs-recursive",
                                           "insertion-symmetry"};
const std::vector<std::string> kSymmetricLaws{"coinvariant-welldef", "equivariance"};
const std::vector<std::string> kFreePreLieLaws{"prelie",
                                               "nap",
                                               "corolla",
                                               "insertion-nonzero",
                                               "insertion-closed-vs-recursive",
                                               "insertion-symmetry"};

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (const auto& p : parts) {
    if (!out.empty()) out += ", ";
    out += p;
  }
  return out;
}

// Calls fn on every tuple of the given length over `pool` (odometer order).
template <typename T, typename F>
void for_each_tuple(const std::vector<T>& pool, std::size_t length, F&& fn) {
  if (pool.empty() && length > 0) return;
  std::vector<std::size_t> index(length, 0);
  for (;;) {
    std::vector<T> tuple;
    tuple.reserve(length);
    for (auto k : index) tuple.push_back(pool[k]);
    fn(std::as_const(tuple));
    std::size_t pos = length;
    while (pos > 0 && index[pos - 1] + 1 == pool.size()) index[--pos] = 0;
    if (pos == 0) return;
    ++index[pos - 1];
  }
}

// Operad sweeps ---------------------------------------------------------------

template <OperadInstance Op>
class OperadSweep {
 public:
  using Basis = typename Op::Basis;
  using E = Element<Op>;

  OperadSweep(const Op& op, const Bounds& bounds, VerificationReport& report)
      : op_(op), bounds_(bounds), report_(report) {}

  void run(std::string_view law) {
    if (law == "sequential") return sequential();
    if (law == "parallel") return parallel();
    if (law == "unit") return unit();
    if (law == "prelie") return prelie();
    if (law == "grading") return grading();
    if (law == "insertion-vanish") return insertion_vanish();
    if (law == "insertion-closed-vs-recursive") return insertion_closed_vs_recursive();
    if (law == "insertion-symmetry") return insertion_symmetry();
    if constexpr (SymmetricTreeOperad<Op>) {
      if (law == "coinvariant-welldef") return coinvariant_welldef();
      if (law == "equivariance") return equivariance();
    }
    throw DomainError("law '" + std::string(law) + "' is not available for instance " + op_.name());
  }

 private:
  std::vector<Basis> basis_upto(std::size_t max_arity) const {
    std::vector<Basis> out;
    for (std::size_t n = 1; n <= max_arity; ++n) {
      const auto count = op_.basis_count(n);
      if (count > bounds_.max_basis)
        throw BudgetError("basis of " + op_.name() + " in arity " + std::to_string(n) + " has " +
                          std::to_string(count) + " elements, above the cap of " + std::to_string(bounds_.max_basis));
      auto level = op_.basis(n);
      out.insert(out.end(), level.begin(), level.end());
    }
    return out;
  }

  std::string show(const Basis& b) const { return op_.print(b); }
  std::string show(const E& x) const {
    return to_text(x, [this](const Basis& b) { return op_.print(b); });
  }
  std::vector<std::string> show_all(const std::vector<E>& xs) const {
    std::vector<std::string> out;
    for (const auto& x : xs) out.push_back(show(x));
    return out;
  }

  void tally(bool ok, std::vector<std::string> inputs, const E& lhs, const E& rhs) {
    ++report_.cases;
    if (!ok) report_.record({std::move(inputs), show(lhs), show(rhs)});
  }

  void sequential() {
    const auto all = basis_upto(bounds_.max_arity);
    for (const auto& l : all)
      for (const auto& m : all)
        for (const auto& n : all)
          for (std::size_t i = 1; i <= op_.arity(l); ++i)
            for (std::size_t j = 1; j <= op_.arity(m); ++j) {
              auto o = check_sequential(op_, l, m, n, i, j);
              tally(o.holds(), {show(l), show(m), show(n), "i=" + std::to_string(i), "j=" + std::to_string(j)}, o.lhs,
                    o.rhs);
            }
  }

  void parallel() {
    const auto all = basis_upto(bounds_.max_arity);
    for (const auto& l : all)
      for (const auto& m : all)
        for (const auto& n : all)
          for (std::size_t i = 1; i <= op_.arity(l); ++i)
            for (std::size_t k = i + 1; k <= op_.arity(l); ++k) {
              auto o = check_parallel(op_, l, m, n, i, k);
              tally(o.holds(), {show(l), show(m), show(n), "i=" + std::to_string(i), "k=" + std::to_string(k)}, o.lhs,
                    o.rhs);
            }
  }

  // id ∘₁ μ = μ, μ ∘ᵢ id = μ, id ◁ μ = μ, μ ◁ id = n·μ.
  void unit() {
    const auto id = E::term(op_.identity());
    for (const auto& m : basis_upto(bounds_.max_arity)) {
      const auto mu = E::term(m);
      auto left = check_left_unit(op_, m);
      tally(left.holds(), {"id o_1 " + show(m)}, left.lhs, left.rhs);
      for (std::size_t i = 1; i <= op_.arity(m); ++i) {
        auto right = check_right_unit(op_, m, i);
        tally(right.holds(), {show(m) + " o_" + std::to_string(i) + " id"}, right.lhs, right.rhs);
      }
      const auto id_mu = prelie_product(op_, id, mu);
      tally(id_mu == mu, {"id <| " + show(m)}, id_mu, mu);
      const auto mu_id = prelie_product(op_, mu, id);
      const auto expected = Rational(static_cast<unsigned long>(op_.arity(m))) * mu;
      tally(mu_id == expected, {show(m) + " <| id"}, mu_id, expected);
    }
  }

  void prelie() {
    const auto all = basis_upto(bounds_.max_arity);
    for (const auto& x : all)
      for (const auto& y : all)
        for (const auto& z : all) {
          auto o = check_prelie_law(op_, E::term(x), E::term(y), E::term(z));
          tally(o.holds(), {show(x), show(y), show(z)}, o.lhs, o.rhs);
        }
  }

  // Every term of μ ◁ ν has degree deg μ + deg ν (degree = arity − 1).
  void grading() {
    const auto all = basis_upto(bounds_.max_arity);
    for (const auto& m : all)
      for (const auto& n : all) {
        const auto product = prelie_product(op_, E::term(m), E::term(n));
        const auto degree = (op_.arity(m) - 1) + (op_.arity(n) - 1);
        E off_degree;
        for (const auto& [d, part] : graded_components(op_, product))
          if (d != degree) off_degree += part;
        tally(off_degree.is_zero(), {show(m), show(n), "expected degree " + std::to_string(degree)}, off_degree, E{});
      }
  }

  std::vector<E> terms(const std::vector<Basis>& bs) const {
    std::vector<E> out;
    for (const auto& b : bs) out.push_back(E::term(b));
    return out;
  }

  // μ of arity n, any n+1 arguments: the insertion element is 0.
  void insertion_vanish() {
    const auto all = basis_upto(bounds_.max_arity);
    const auto pool = terms(all);
    for (const auto& m : all)
      for_each_tuple(pool, op_.arity(m) + 1, [&](const std::vector<E>& args) {
        const auto value = insertion_element(op_, E::term(m), std::span<const E>(args));
        auto inputs = show_all(args);
        inputs.insert(inputs.begin(), show(m));
        tally(value.is_zero(), std::move(inputs), value, E{});
      });
  }

  // Recursion = distinct-slot closed form, for 1..arity+1 arguments.
  void insertion_closed_vs_recursive() {
    const auto all = basis_upto(bounds_.max_arity);
    const auto pool = terms(all);
    for (const auto& m : all)
      for (std::size_t k = 1; k <= op_.arity(m) + 1; ++k)
        for_each_tuple(pool, k, [&](const std::vector<E>& args) {
          const auto recursive = insertion_element(op_, E::term(m), std::span<const E>(args));
          const auto closed = insertion_closed_form(op_, E::term(m), std::span<const E>(args));
          auto inputs = show_all(args);
          inputs.insert(inputs.begin(), show(m));
          tally(recursive == closed, std::move(inputs), recursive, closed);
        });
  }

  // Invariance under every permutation of 2 or 3 arguments.
  void insertion_symmetry() {
    const auto all = basis_upto(bounds_.max_arity);
    const auto pool = terms(all);
    for (const auto& m : all)
      for (std::size_t k = 2; k <= 3; ++k)
        for_each_tuple(pool, k, [&](const std::vector<E>& args) {
          const auto reference = insertion_element(op_, E::term(m), std::span<const E>(args));
          for (const auto& sigma : all_permutations(k)) {
            std::vector<E> permuted(k);
            for (std::size_t p = 0; p < k; ++p) permuted[p] = args[sigma(p + 1) - 1];
            const auto value = insertion_element(op_, E::term(m), std::span<const E>(permuted));
            auto inputs = show_all(permuted);
            inputs.insert(inputs.begin(), show(m));
            tally(value == reference, std::move(inputs), value, reference);
          }
        });
  }

  void tally_classes(bool ok, std::vector<std::string> inputs, const PreLieElement& lhs, const PreLieElement& rhs) {
    ++report_.cases;
    if (!ok) report_.record({std::move(inputs), to_text(lhs), to_text(rhs)});
  }

  // Representative independence of the coinvariant product, the pre-Lie
  // identity on classes, and the binary tree 1(2) acting on classes as the
  // corresponding free product.
  void coinvariant_welldef() {
    std::vector<UnlabeledTree> classes;
    for (std::size_t n = 1; n <= bounds_.max_arity; ++n) {
      if (op_.basis_count(n) > bounds_.max_basis)
        throw BudgetError("basis of " + op_.name() + " in arity " + std::to_string(n) + " exceeds the cap");
      auto level = enumerate_unlabeled(n);
      classes.insert(classes.end(), level.begin(), level.end());
    }
    for (const auto& a : classes)
      for (const auto& b : classes) {
        const auto pa = PreLieElement::term(a);
        const auto pb = PreLieElement::term(b);
        const auto reference = coinvariant_product(op_, pa, pb);
        const auto la = lift(a);
        const auto lb = lift(b);
        for (const auto& sigma : all_permutations(a.size()))
          for (const auto& tau : all_permutations(b.size())) {
            const auto value = coinvariant_reduce(
                op_, prelie_product(op_, E::term(relabel(la, sigma)), E::term(relabel(lb, tau))));
            tally_classes(value == reference, {relabel(la, sigma).code(), relabel(lb, tau).code()}, value, reference);
          }

        const std::vector<PreLieElement> args{pa, pb};
        const auto acted = act_on_coinvariants(op_, binary_tree(), std::span<const PreLieElement>(args));
        const auto free = std::is_same_v<Op, NapOperad> ? nap_graft(pa, pb) : graft_product(pa, pb);
        tally_classes(acted == free, {"1(2) acting on", a.code(), b.code()}, acted, free);
      }

    auto product = [this](const PreLieElement& x, const PreLieElement& y) { return coinvariant_product(op_, x, y); };
    for (const auto& a : classes)
      for (const auto& b : classes)
        for (const auto& c : classes) {
          auto o = check_prelie_identity(product, PreLieElement::term(a), PreLieElement::term(b),
                                         PreLieElement::term(c));
          tally_classes(o.holds(), {"pre-Lie on classes", a.code(), b.code(), c.code()}, o.lhs, o.rhs);
        }
  }

  void equivariance() {
    const auto all = basis_upto(bounds_.max_arity);
    for (const auto& m : all)
      for (const auto& n : all)
        for (std::size_t i = 1; i <= m.size(); ++i) {
          for (const auto& sigma : all_permutations(m.size())) {
            auto o = symmetric_action_check(op_, m, sigma, i, n);
            tally(o.holds(), {show(m), "sigma=" + images(sigma), "i=" + std::to_string(i), show(n)}, o.lhs, o.rhs);
          }
          for (const auto& rho : all_permutations(n.size())) {
            auto o = symmetric_action_check_inner(op_, m, i, n, rho);
            tally(o.holds(), {show(m), "i=" + std::to_string(i), show(n), "rho=" + images(rho)}, o.lhs, o.rhs);
          }
        }
  }

  static std::string images(const Permutation& p) {
    std::string out = "[";
    for (std::size_t k = 0; k < p.size(); ++k) out += (k ? "," : "") + std::to_string(p.images()[k]);
    return out + "]";
  }

  const Op& op_;
  const Bounds& bounds_;
  VerificationReport& report_;
};

// Free pre-Lie sweeps ----------------------------------------------------------

class FreePreLieSweep {
 public:
  FreePreLieSweep(const Bounds& bounds, VerificationReport& report) : bounds_(bounds), report_(report) {
    if (count_unlabeled(bounds_.max_vertices) > bounds_.max_basis)
      throw BudgetError("free-prelie: " + std::to_string(bounds_.max_vertices) + " vertices exceeds the basis cap");
    for (std::size_t n = 1; n <= bounds_.max_vertices; ++n) {
      auto level = enumerate_unlabeled(n);
      trees_.insert(trees_.end(), level.begin(), level.end());
    }
  }

  void run(std::string_view law) {
    if (law == "prelie") return identity_law(false);
    if (law == "nap") return identity_law(true);
    if (law == "corolla") return corollas();
    if (law == "insertion-nonzero") return insertion_sweep(Check::Nonzero);
    if (law == "insertion-closed-vs-recursive") return insertion_sweep(Check::ClosedForm);
    if (law == "insertion-symmetry") return insertion_sweep(Check::Symmetry);
    throw DomainError("law '" + std::string(law) + "' is not available for instance free-prelie");
  }

 private:
  enum class Check { Nonzero, ClosedForm, Symmetry };

  void tally(bool ok, std::vector<std::string> inputs, const PreLieElement& lhs, const PreLieElement& rhs) {
    ++report_.cases;
    if (!ok) report_.record({std::move(inputs), to_text(lhs), to_text(rhs)});
  }

  // Ordered tuples (t, s₁..sₖ), k ≥ 1, of total size ≤ max_vertices.
  template <typename F>
  void for_each_input(std::size_t max_args, F&& fn) {
    std::vector<UnlabeledTree> args;
    std::function<void(const UnlabeledTree&, std::size_t)> grow = [&](const UnlabeledTree& t, std::size_t left) {
      if (!args.empty()) fn(t, std::as_const(args));
      if (args.size() == max_args) return;
      for (const auto& s : trees_) {
        if (s.size() > left) continue;
        args.push_back(s);
        grow(t, left - s.size());
        args.pop_back();
      }
    };
    for (const auto& t : trees_)
      if (t.size() < bounds_.max_vertices) grow(t, bounds_.max_vertices - t.size());
  }

  static std::vector<PreLieElement> as_sums(const std::vector<UnlabeledTree>& ts) {
    std::vector<PreLieElement> out;
    for (const auto& t : ts) out.push_back(PreLieElement::term(t));
    return out;
  }

  static std::vector<std::string> names(const UnlabeledTree& t, const std::vector<UnlabeledTree>& args) {
    std::vector<std::string> out{t.code()};
    for (const auto& a : args) out.push_back(a.code());
    return out;
  }

  void insertion_sweep(Check check) {
    const std::size_t max_args = check == Check::Symmetry ? 3 : bounds_.max_vertices;
    for_each_input(max_args, [&](const UnlabeledTree& t, const std::vector<UnlabeledTree>& args) {
      const auto sums = as_sums(args);
      const auto recursive = insertion_recursive(PreLieElement::term(t), std::span<const PreLieElement>(sums));
      switch (check) {
        case Check::Nonzero:
          tally(!recursive.is_zero(), names(t, args), recursive, PreLieElement{});
          break;
        case Check::ClosedForm: {
          const auto closed = insertion_closed(t, std::span<const UnlabeledTree>(args));
          tally(recursive == closed, names(t, args), recursive, closed);
          break;
        }
        case Check::Symmetry:
          if (args.size() < 2) break;
          for (const auto& sigma : all_permutations(args.size())) {
            std::vector<PreLieElement> permuted(args.size());
            for (std::size_t p = 0; p < args.size(); ++p) permuted[p] = sums[sigma(p + 1) - 1];
            const auto value = insertion_recursive(PreLieElement::term(t), std::span<const PreLieElement>(permuted));
            tally(value == recursive, names(t, args), value, recursive);
          }
          break;
      }
    });
  }

  // Triples of total size ≤ max_vertices.
  void identity_law(bool nap) {
    for (const auto& x : trees_)
      for (const auto& y : trees_)
        for (const auto& z : trees_) {
          if (x.size() + y.size() + z.size() > bounds_.max_vertices) continue;
          const auto px = PreLieElement::term(x), py = PreLieElement::term(y), pz = PreLieElement::term(z);
          if (nap) {
            const auto lhs = nap_graft(nap_graft(px, py), pz);
            const auto rhs = nap_graft(nap_graft(px, pz), py);
            tally(lhs == rhs, {x.code(), y.code(), z.code()}, lhs, rhs);
          } else {
            auto o = check_prelie_identity(
                [](const PreLieElement& a, const PreLieElement& b) { return graft_product(a, b); }, px, py, pz);
            tally(o.holds(), {x.code(), y.code(), z.code()}, o.lhs, o.rhs);
          }
        }
  }

  // root ◁ (root, …, root) with k copies is the k-leaved corolla.
  void corollas() {
    const auto root = PreLieElement::term(UnlabeledTree());
    for (std::size_t k = 1; k < bounds_.max_vertices; ++k) {
      const std::vector<PreLieElement> args(k, root);
      const auto value = insertion_recursive(root, std::span<const PreLieElement>(args));
      const auto expected = PreLieElement::term(corolla(k));
      tally(value == expected, {"root", std::to_string(k) + " roots"}, value, expected);
    }
  }

  const Bounds& bounds_;
  VerificationReport& report_;
  std::vector<UnlabeledTree> trees_;
};

// Theorem witnesses ------------------------------------------------------------

template <OperadInstance Op>
std::vector<typename Op::Basis> theorem_generators(const Op& op) {
  if constexpr (std::is_same_v<Op, FreeNsOperad>) {
    std::vector<PlanarTerm> out;
    for (const auto& g : op.signature().generators()) out.push_back(PlanarTerm::corolla(g));
    return out;
  } else {
    return op.basis(2);
  }
}

template <OperadInstance Op>
TheoremWitness make_witness(const Op& op, const typename Op::Basis& mu, std::size_t copies, PreLieFlavor flavor) {
  using E = Element<Op>;
  const std::vector<E> args(copies, E::term(mu));
  const auto value = insertion_element(op, E::term(mu), std::span<const E>(args), flavor);
  const auto closed = insertion_closed_form(op, E::term(mu), std::span<const E>(args));

  const auto root = PreLieElement::term(UnlabeledTree());
  const std::vector<PreLieElement> roots(copies, root);
  const auto free = insertion_recursive(root, std::span<const PreLieElement>(roots));

  auto print = [&op](const E& x) { return to_text(x, [&op](const auto& b) { return op.print(b); }); };
  TheoremWitness w;
  w.relation = op.print(mu) + " <|(" + join(std::vector<std::string>(copies, op.print(mu))) + ")";
  w.flavor = flavor == PreLieFlavor::Positive ? "P+" : "P";
  w.operad_value = print(value);
  w.closed_form_value = print(closed);
  w.free_relation = "root <|(" + join(std::vector<std::string>(copies, "root")) + ")";
  w.free_value = to_text(free);
  w.vanishes = value.is_zero();
  w.free_nonzero = !free.is_zero();
  return w;
}

template <OperadInstance Op>
TheoremReport theorem_for(const Op& op) {
  TheoremReport report{op.name(), {}};
  report.witnesses.push_back(make_witness(op, op.identity(), 2, PreLieFlavor::Full));
  for (const auto& g : theorem_generators(op))
    report.witnesses.push_back(make_witness(op, g, op.arity(g) + 1, PreLieFlavor::Positive));
  return report;
}

}  // namespace

std::vector<std::string> laws_for(std::string_view instance) {
  if (instance == "free-prelie") return kFreePreLieLaws;
  const auto op = make_operad(instance);
  auto laws = kOperadLaws;
  if (std::holds_alternative<PreLieOperad>(op) || std::holds_alternative<NapOperad>(op))
    laws.insert(laws.end(), kSymmetricLaws.begin(), kSymmetricLaws.end());
  return laws;
}

VerificationReport run_check(std::string_view instance, std::string_view law, const Bounds& bounds) {
  VerificationReport report;
  report.instance = std::string(instance);
  report.law = std::string(law);
  report.bounds = bounds;
  const auto start = std::chrono::steady_clock::now();
  if (instance == "free-prelie") {
    FreePreLieSweep(bounds, report).run(law);
  } else {
    const auto operad = make_operad(instance);
    std::visit([&](const auto& op) { OperadSweep(op, bounds, report).run(law); }, operad);
  }
  report.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

TheoremReport run_theorem(std::string_view instance) {
  if (instance == "free-prelie") throw DomainError("theorem: free-prelie is the free side, not an operad");
  const auto operad = make_operad(instance);
  return std::visit([](const auto& op) { return theorem_for(op); }, operad);
}

}  // namespace preop
