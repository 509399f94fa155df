#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "greedylab/core.hpp"
#include "greedylab/gaps.hpp"
#include "greedylab/spaces.hpp"

namespace greedylab {

/// Finite search class description. Estimators enumerate the class exactly,
/// so every estimate is the exact "restricted constant" for the class and a
/// lower bound for the true constant.
struct SearchBudget {
  int dimension = 12;       // indices range over 1..N
  int cardinality_cap = 6;  // set sizes up to s, intersected with the gap sequence
  std::vector<double> grid = {-1.0, -0.5, 0.0, 0.5, 1.0};
  int random_samples = 50;       // seeded refinement candidates (0 disables)
  std::uint64_t seed = 12345;
  std::uint64_t enumeration_limit = 2000000;  // exhaustive-vs-structured switch
  int x_support_cap = 2;         // support cap for auxiliary coefficient vectors
  bool allow_structured = true;  // if false, an infeasible enumeration is an error

  void validate() const;
  json to_json() const;
  static SearchBudget from_json(const json& j);
};

struct ConstantEstimate {
  std::string name;
  double value = 0.0;
  // witness carries "num" and "den" vectors; re-evaluation is norm(num)/norm(den)
  json witness;
  std::string search_class;
  bool exact_within_class = true;

  json to_json() const;
};

// norm(witness.num) / norm(witness.den); 0 for an empty witness.
double reevaluate(const Space& space, const ConstantEstimate& est);

// Budget of the inner configurations paired with a fresh tail block by the
// symmetry estimator; exposed so checks can search exactly the same class.
SearchBudget slc_companion_budget(const SearchBudget& budget);

// Delta_d: max ||1_A|| / ||1_B|| over |A| <= |B|, both cardinalities in n.
ConstantEstimate democracy_constant(const Space& space, const GapSequence& n,
                                    const SearchBudget& budget);
// Delta_s: signed version.
ConstantEstimate superdemocracy_constant(const Space& space, const GapSequence& n,
                                         const SearchBudget& budget);
// Delta_c / Delta_sc: as above restricted to A < B.
ConstantEstimate conservative_constant(const Space& space, const GapSequence& n,
                                       const SearchBudget& budget);
ConstantEstimate superconservative_constant(const Space& space, const GapSequence& n,
                                            const SearchBudget& budget);
// K_u: max ||1_{eps A}|| / ||1_{eps' A}|| over |A| in n.
ConstantEstimate ucc_constant(const Space& space, const GapSequence& n,
                              const SearchBudget& budget);
// K_suc: A subset of B, |A| in n, numerator pattern = restriction of eps' to A
// (default reading); free_numerator_signs maximizes over eps independently.
ConstantEstimate succ_constant(const Space& space, const GapSequence& n,
                               const SearchBudget& budget, bool free_numerator_signs = false);
// (C_1, C_2) of the n-UL property.
std::pair<ConstantEstimate, ConstantEstimate> ul_constants(const Space& space,
                                                           const GapSequence& n,
                                                           const SearchBudget& budget);
// C_ql: max ||1_{eps A}|| / ||1_{eps A} + x||, supp(x) disjoint, |coeffs| <= 1.
ConstantEstimate qglc_constant(const Space& space, const GapSequence& n,
                               const SearchBudget& budget);
// Delta: max ||x + 1_{eps A}|| / ||x + 1_{eps' B}||, A, B disjoint, |A| = |B| in n
// (with the |A| <= |B| pairs of the original definition also searched).
ConstantEstimate slc_constant(const Space& space, const GapSequence& n,
                              const SearchBudget& budget);
// C_{q,t}: max ||P_A x|| / ||x|| over t-greedy sets A with |A| in n.
ConstantEstimate quasi_greedy_constant(const Space& space, const GapSequence& n,
                                       const SearchBudget& budget, double t);

}  // namespace greedylab
