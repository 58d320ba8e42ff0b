#include "corovm/generate.hpp"

#include <string>
#include <utility>
#include <vector>

#include "corovm/plist.hpp"

namespace corovm {

std::size_t TermGenerator::below(std::size_t bound) {
  // Rejection sampling keeps the stream portable; the standard distributions
  // are implementation-defined.
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t r;
  do {
    r = rng_();
  } while (r >= limit);
  return static_cast<std::size_t>(r % bound);
}

namespace {

enum class Shape { lam, app, capture, resume };

template <Calculus C>
class Builder {
 public:
  // visible_only: variables come from the current coroutine's visible list
  // and setctx switches that list; otherwise from the lexical scope.
  Builder(TermGenerator& gen, bool visible_only) : gen_(gen), visible_only_(visible_only) {}

  NamedTermPtr<C> build(std::size_t size) { return node(size, {}, {}); }

 private:
  using Names = PList<std::string>;
  // μ-variable name paired with the visible list it captured.
  using MuScope = PList<std::pair<std::string, Names>>;

  // Smallest budget a subterm needs: a variable, or \x. x when nothing is
  // in scope.
  static std::size_t floor_for(const Names& vars) { return vars.empty() ? 2 : 1; }

  NamedTermPtr<C> node(std::size_t budget, const Names& vars, const MuScope& mus) {
    const std::size_t m = floor_for(vars);
    if (budget <= m) return leaf(vars);

    std::vector<std::pair<Shape, std::size_t>> choices{{Shape::lam, 3}};
    if (budget >= 1 + m) choices.push_back({Shape::capture, 1});
    if (budget >= 1 + 2 * m) choices.push_back({Shape::app, 4});
    // the resumed coroutine may see no variables at all
    if (!mus.empty() && budget >= 3) choices.push_back({Shape::resume, 2});
    std::size_t total = 0;
    for (auto& c : choices) total += c.second;
    std::size_t pick = gen_.below(total);
    Shape shape = choices.back().first;
    for (auto& c : choices) {
      if (pick < c.second) {
        shape = c.first;
        break;
      }
      pick -= c.second;
    }

    switch (shape) {
      case Shape::lam: {
        std::string x = fresh_var();
        return named::lam<C>(x, node(budget - 1, vars.cons(x), mus));
      }
      case Shape::app: {
        std::size_t left = m + gen_.below(budget - 2 * m);
        auto fn = node(left, vars, mus);
        return named::app<C>(std::move(fn), node(budget - 1 - left, vars, mus));
      }
      case Shape::capture: {
        std::string k = fresh_mu();
        return named::catch_<C>(k, node(budget - 1, vars, mus.cons({k, vars})));
      }
      case Shape::resume: {
        const auto& target = *mus.at(gen_.below(mus.size()));
        const Names& next = visible_only_ ? target.second : vars;
        return named::throw_<C>(target.first, node(budget - 1, next, mus));
      }
    }
    return leaf(vars);
  }

  NamedTermPtr<C> leaf(const Names& vars) {
    if (!vars.empty()) return named::var<C>(*vars.at(gen_.below(vars.size())));
    std::string x = fresh_var();
    return named::lam<C>(x, named::var<C>(x));
  }

  std::string fresh_var() { return "x" + std::to_string(next_var_++); }
  std::string fresh_mu() { return "k" + std::to_string(next_mu_++); }

  TermGenerator& gen_;
  bool visible_only_;
  std::size_t next_var_ = 0;
  std::size_t next_mu_ = 0;
};

}  // namespace

NamedTermCTPtr TermGenerator::closed_ct(std::size_t size) { return Builder<Calculus::ct>(*this, false).build(size); }

NamedTermGSPtr TermGenerator::well_scoped_gs(std::size_t size) {
  return Builder<Calculus::gs>(*this, true).build(size);
}

NamedTermGSPtr TermGenerator::applied_gs(std::size_t size, std::size_t arity) {
  // every part needs at least two constructors, each application one more
  const std::size_t parts = arity + 1;
  if (size < 3 * parts - 1) return well_scoped_gs(size);
  std::vector<std::size_t> budgets(parts, 2);
  for (std::size_t spare = size - (3 * parts - 1); spare > 0; --spare) ++budgets[below(parts)];
  Builder<Calculus::gs> builder(*this, true);
  auto t = builder.build(budgets[0]);
  for (std::size_t k = 1; k < parts; ++k) t = named::app<Calculus::gs>(t, builder.build(budgets[k]));
  return t;
}

}  // namespace corovm
