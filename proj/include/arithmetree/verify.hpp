#pragma once

#include <string>
#include <vector>

namespace atree {

struct CheckResult {
  std::string name;
  bool ok = true;
  std::string detail;  // first counterexample, or a short summary
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> checks;
  bool ok() const;
};

namespace check {

// counting
CheckResult enumeration_counts(int max_n);
CheckResult involution_is_involution(int max_n);
CheckResult recurrence(int max_n);
CheckResult invariant_counts(int max_n);
CheckResult graft_on_leaf_mirror(int max_n);

// names
CheckResult name_tables();
CheckResult name_round_trip(int max_n);
CheckResult mirror_coherence(int max_n);
CheckResult graft_formulas(int max_total);
CheckResult anti_automorphism(int max_n);
CheckResult over_under_duality(int max_total);
CheckResult projection(int max_n);

// lattice
CheckResult join_meet(int max_n);
CheckResult moves_complete(int max_n);
CheckResult moebius_closed_form(int max_n);
CheckResult atoms_independent(int max_n);
CheckResult cover_duality(int max_n);
CheckResult moebius_projection(int max_n);
CheckResult left_modular_lemmas(int max_n);
CheckResult ll_structure(int min_n, int max_n);

// trialgebra
CheckResult trialgebra_axioms(int max_total);
CheckResult star_partition(int max_total);
CheckResult star_associativity(int max_total);
CheckResult trialgebra_involution(int max_total);
CheckResult universal_expressions(int max_n);
CheckResult free_generation(int max_n);

// arithmetree
CheckResult grove_example();
CheckResult grove_closure(int max_total);
CheckResult total_grove_identity(int max_total);
CheckResult grove_axioms(int max_total);
CheckResult sandwich_unique(int max_total);
CheckResult corolla_laws(int max_sum, int max_product);
CheckResult mul_associative(int max_product);
CheckResult mul_left_distributive(int max_result);
CheckResult grove_involution(int max_total);

// hopf
CheckResult coassociativity(int max_n);
CheckResult counit_laws(int max_n);
CheckResult connected(int max_n);
CheckResult hopf_morphism(int max_total);
CheckResult primitives(int max_corolla);
CheckResult primitive_closure(int max_n);
CheckResult primitive_combinations(int max_p);
CheckResult integer_hopf(int max_nm, int max_r);
CheckResult involutive_hopf();

}  // namespace check

SuiteReport run_suite(const std::string& suite, int max_degree);
std::vector<std::string> suite_names();

}  // namespace atree
