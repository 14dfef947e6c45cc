#pragma once

#include <doctest.h>

#include "arithmetree/errors.hpp"
#include "arithmetree/grove.hpp"
#include "arithmetree/hopf.hpp"
#include "arithmetree/lattice.hpp"
#include "arithmetree/verify.hpp"

namespace th {

inline atree::Name N(const char* tree) { return atree::encode_name(atree::Tree::parse(tree)); }
inline atree::Tree T(const char* tree) { return atree::Tree::parse(tree); }
inline atree::LinComb S(const char* sum) { return atree::parse_lincomb(sum); }
inline atree::Grove G(const char* g) { return atree::Grove::parse(g); }

// shorthand used throughout
inline const char* const A = "(oo)";
inline const char* const AB = "((oo)o)";
inline const char* const M = "(ooo)";
inline const char* const BA = "(o(oo))";
inline const char* const ABC = "(((oo)o)o)";
inline const char* const AM = "((oo)oo)";
inline const char* const MB = "((ooo)o)";
inline const char* const BAC = "((o(oo))o)";
inline const char* const ACA = "((oo)(oo))";
inline const char* const COR = "(oooo)";
inline const char* const MA = "(oo(oo))";

}  // namespace th
