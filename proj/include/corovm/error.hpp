#ifndef COROVM_ERROR_HPP
#define COROVM_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace corovm {

struct SourcePos {
  std::size_t line = 1;
  std::size_t column = 1;

  friend bool operator==(const SourcePos&, const SourcePos&) = default;
};

std::string to_string(SourcePos pos);

class SyntaxError : public std::runtime_error {
 public:
  SyntaxError(const std::string& what, SourcePos pos)
      : std::runtime_error(to_string(pos) + ": " + what), pos_(pos) {}
  SourcePos pos() const noexcept { return pos_; }

 private:
  SourcePos pos_;
};

// Raised by the named -> de Bruijn conversions.
class ScopeError : public std::runtime_error {
 public:
  enum class Kind { unbound, not_visible };

  ScopeError(Kind kind, std::string name, SourcePos pos);

  Kind kind() const noexcept { return kind_; }
  const std::string& name() const noexcept { return name_; }
  SourcePos pos() const noexcept { return pos_; }

 private:
  Kind kind_;
  std::string name_;
  SourcePos pos_;
};

// Child selector in a term tree; a path locates a subterm from the root.
enum class PathStep : char { fn, arg, body };
using TermPath = std::vector<PathStep>;

std::string to_string(const TermPath& path);

// Raised by the indexed safety judgment and the translations.
class TranslationError : public std::runtime_error {
 public:
  enum class Kind { unsafe_local_index, open_mu_term, not_safe };

  TranslationError(Kind kind, TermPath path, const std::string& detail);

  Kind kind() const noexcept { return kind_; }
  const TermPath& path() const noexcept { return path_; }

 private:
  Kind kind_;
  TermPath path_;
};

}  // namespace corovm

#endif
