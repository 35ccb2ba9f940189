#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pi3 {

/// Category of a library failure.  `syntax_error`, `unknown_identifier` and
/// `arity_error` are raised while reading expression text; everything else is
/// a domain or precondition violation raised while evaluating geometry.
enum class Errc {
  syntax_error,
  unknown_identifier,
  arity_error,
  domain_error,
  non_finite,
  invalid_params,
  not_timelike,
  different_cones,
  unsupported_class,
  irregular,
  mixed_causality,
  not_arc_length,
  not_admissible,
  zero_curvature,
  not_lightlike,
  no_such_plane,
  degenerate_metric,
  singular_graph,
  empty_domain,
};

/// Single exception type used across the library.  Parse-time errors carry the
/// byte offset of the offending token in the source text; other errors leave
/// `offset()` negative.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message, std::ptrdiff_t offset = -1)
      : std::runtime_error(message), code_(code), offset_(offset) {}

  Errc code() const noexcept { return code_; }
  std::ptrdiff_t offset() const noexcept { return offset_; }

 private:
  Errc code_;
  std::ptrdiff_t offset_;
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::syntax_error: return "syntax_error";
    case Errc::unknown_identifier: return "unknown_identifier";
    case Errc::arity_error: return "arity_error";
    case Errc::domain_error: return "domain_error";
    case Errc::non_finite: return "non_finite";
    case Errc::invalid_params: return "invalid_params";
    case Errc::not_timelike: return "not_timelike";
    case Errc::different_cones: return "different_cones";
    case Errc::unsupported_class: return "unsupported_class";
    case Errc::irregular: return "irregular";
    case Errc::mixed_causality: return "mixed_causality";
    case Errc::not_arc_length: return "not_arc_length";
    case Errc::not_admissible: return "not_admissible";
    case Errc::zero_curvature: return "zero_curvature";
    case Errc::not_lightlike: return "not_lightlike";
    case Errc::no_such_plane: return "no_such_plane";
    case Errc::degenerate_metric: return "degenerate_metric";
    case Errc::singular_graph: return "singular_graph";
    case Errc::empty_domain: return "empty_domain";
  }
  return "unknown";
}

}  // namespace pi3
