#include "corovm/error.hpp"

namespace corovm {

std::string to_string(SourcePos pos) {
  return std::to_string(pos.line) + ":" + std::to_string(pos.column);
}

namespace {

std::string scope_message(ScopeError::Kind kind, const std::string& name, SourcePos pos) {
  switch (kind) {
    case ScopeError::Kind::unbound:
      return to_string(pos) + ": unbound identifier '" + name + "'";
    case ScopeError::Kind::not_visible:
      return to_string(pos) + ": " + name + " not visible in the current coroutine";
  }
  return {};
}

const char* kind_label(TranslationError::Kind kind) {
  switch (kind) {
    case TranslationError::Kind::unsafe_local_index: return "unsafe local index";
    case TranslationError::Kind::open_mu_term: return "open mu-term";
    case TranslationError::Kind::not_safe: return "not safe";
  }
  return "";
}

}  // namespace

ScopeError::ScopeError(Kind kind, std::string name, SourcePos pos)
    : std::runtime_error(scope_message(kind, name, pos)), kind_(kind), name_(std::move(name)), pos_(pos) {}

std::string to_string(const TermPath& path) {
  if (path.empty()) return "<root>";
  std::string out;
  for (auto step : path) {
    if (!out.empty()) out += '.';
    switch (step) {
      case PathStep::fn: out += "fn"; break;
      case PathStep::arg: out += "arg"; break;
      case PathStep::body: out += "body"; break;
    }
  }
  return out;
}

TranslationError::TranslationError(Kind kind, TermPath path, const std::string& detail)
    : std::runtime_error(std::string(kind_label(kind)) + " at " + to_string(path) +
                         (detail.empty() ? "" : ": " + detail)),
      kind_(kind),
      path_(std::move(path)) {}

}  // namespace corovm
