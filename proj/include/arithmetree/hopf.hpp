#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "arithmetree/trialgebra.hpp"

namespace atree {

const TensorComb& coproduct(const Name& v);  // memoized
TensorComb coproduct(const LinComb& x);
Rational counit(const LinComb& x);

// the tensor-square trialgebra: star on left factors, op on right factors
TensorComb tensor_op(Op op, const TensorComb& x, const TensorComb& y);

using TripleComb = Combination<std::vector<Name>>;
TripleComb coassoc_left(const Name& v);   // (Delta (x) id) Delta
TripleComb coassoc_right(const Name& v);  // (id (x) Delta) Delta

bool is_primitive(const LinComb& x);
LinComb primitive_combination(const Name& v, int p, const std::vector<Rational>& lambda);

// Candidate compatibilities between the coproduct and the involution.
enum class InvolutivityLaw { Plain, Swapped };
bool involutivity_holds(InvolutivityLaw law, const Name& v);
struct InvolutivityReport {
  bool plain_small = false, swapped_small = false;  // degrees <= 3
  bool chosen_large = false;                        // the chosen law on degree 4
  std::string chosen;                               // "plain", "swapped", "both" or "none"
};
InvolutivityReport determine_involutivity(int small_degree = 3, int check_degree = 4);

// K N with the integer addition written as perp
using IntElem = Combination<unsigned>;
using IntTensor = Combination<std::pair<unsigned, unsigned>>;

IntElem int_add(const IntElem& a, const IntElem& b);
IntTensor int_coproduct(const IntElem& a);
IntElem int_times(const IntElem& a, unsigned r);
IntTensor int_tensor_times(const IntTensor& a, unsigned r);
IntTensor int_tensor_add(const IntTensor& a, const IntTensor& b);
LinComb ext_map(const IntElem& a);

std::string to_text(const IntElem& a);
std::string to_text(const IntTensor& a);

}  // namespace atree
