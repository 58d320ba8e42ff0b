#ifndef COROVM_TRANSLATE_HPP
#define COROVM_TRANSLATE_HPP

#include "corovm/safety.hpp"
#include "corovm/syntax.hpp"

namespace corovm {

// Compiles local indices to global ones. At depth n with visible vector i, the
// local variable l becomes the global index n - i(l). get becomes catch and
// set becomes throw with the same μ-index.
//
// Throws TranslationError(unsafe_local_index) when l is outside i (or i(l)
// exceeds n) and TranslationError(open_mu_term) when a set index exceeds
// i_mu.
TermCTPtr down(const TermGSPtr& t, Depth n = 0, const Vector& i = {}, const Table& i_mu = {});

// Left inverse of down: recovers the local index of each variable by finding
// the position of n - g in i. Succeeds exactly when safe_db(t, n, i, i_mu)
// holds; otherwise throws TranslationError(not_safe) with the path to the
// first offending variable.
TermGSPtr lift(const TermCTPtr& t, Depth n = 0, const Vector& i = {}, const Table& i_mu = {});

}  // namespace corovm

#endif
