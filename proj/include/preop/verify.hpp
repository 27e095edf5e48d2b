#pragma once

// Exhaustive law sweeps over small bases and the non-freeness witnesses.
//
// Every sweep enumerates its inputs in canonical basis order, so a report is
// byte-identical across runs apart from wallTimeMs.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace preop {

struct Bounds {
  // Largest arity drawn from an operad basis (= leaves for free ns operads).
  std::size_t max_arity = 3;
  // Total vertices across all inputs, free pre-Lie sweeps.
  std::size_t max_vertices = 6;
  // Hard cap on the size of any single basis a sweep may enumerate.
  std::size_t max_basis = 100000;
};

struct Failure {
  std::vector<std::string> inputs;
  std::string lhs;
  std::string rhs;
};

struct VerificationReport {
  std::string instance;
  std::string law;
  Bounds bounds;
  std::size_t cases = 0;
  std::size_t failure_count = 0;
  // At most kMaxRecordedFailures counterexamples are kept.
  std::vector<Failure> failures;
  double wall_ms = 0;

  static constexpr std::size_t kMaxRecordedFailures = 25;

  bool passed() const { return failure_count == 0; }
  void record(Failure f);
  nlohmann::json to_json(bool with_time = true) const;
};

// Laws accepted by run_check for the instance ("free-prelie" or any
// make_operad name). Coinvariant and equivariance laws only exist for the
// labeled-tree operads.
std::vector<std::string> laws_for(std::string_view instance);

// Throws DomainError for an unknown instance/law, BudgetError when a basis
// exceeds bounds.max_basis.
VerificationReport run_check(std::string_view instance, std::string_view law, const Bounds& bounds);

// One vanishing operadic insertion element next to the free pre-Lie
// insertion element on matching inputs.
struct TheoremWitness {
  std::string relation;        // e.g. "g <|(g, g, g)"
  std::string flavor;          // "P" or "P+"
  std::string operad_value;    // recursive evaluation
  std::string closed_form_value;
  std::string free_relation;   // e.g. "root <|(root, root, root)"
  std::string free_value;
  bool vanishes = false;
  bool free_nonzero = false;

  bool holds() const { return vanishes && free_nonzero && closed_form_value == operad_value; }
};

struct TheoremReport {
  std::string instance;
  std::vector<TheoremWitness> witnesses;

  bool passed() const;
  nlohmann::json to_json() const;
};

TheoremReport run_theorem(std::string_view instance);

}  // namespace preop
