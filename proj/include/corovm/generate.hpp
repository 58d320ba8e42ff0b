#ifndef COROVM_GENERATE_HPP
#define COROVM_GENERATE_HPP

#include <cstddef>
#include <cstdint>
#include <random>

#include "corovm/syntax.hpp"

namespace corovm {

// Random closed terms with globally distinct binder names (x0, x1, ... for
// λ-variables, k0, k1, ... for μ-variables). size bounds the number of term
// constructors; the one exception is size 1, which yields \x. x. The stream
// is identical on every platform for a given seed.
class TermGenerator {
 public:
  explicit TermGenerator(std::uint64_t seed) : rng_(seed) {}

  // Any closed ct term; variables are drawn from the lexical scope, so the
  // result may be unsafe.
  NamedTermCTPtr closed_ct(std::size_t size);

  // A gs term whose variables are always visible in the coroutine they occur
  // in: a λ extends the visible list, getctx records it, setctx switches to
  // the recorded list.
  NamedTermGSPtr well_scoped_gs(std::size_t size);

  // A well_scoped_gs head applied to arity closed well_scoped_gs arguments,
  // size split randomly between the parts. Unlike bare generated terms, which
  // are often abstractions and halt at once, these usually run for a while.
  NamedTermGSPtr applied_gs(std::size_t size, std::size_t arity);

  // Uniform in [0, bound).
  std::size_t below(std::size_t bound);

 private:
  std::mt19937_64 rng_;
};

}  // namespace corovm

#endif
