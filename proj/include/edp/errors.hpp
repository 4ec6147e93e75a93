#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace edp {

// Structured failure codes.  The CLI prints the code name verbatim, so the
// spelling here is part of the report format.
enum class errc {
  not_a_group,
  not_a_p_group,
  bad_element,
  group_too_large,
  action_not_stable,
  not_a_homomorphism,
  prime_mismatch,
  group_mismatch,
  image_not_fixed,
  dimension_mismatch,
  not_a_p_presentation,
  kernel_not_trivial_module,
  torsion_present,
  instance_too_large,
  infeasible,
  bad_argument,
  parse,
  internal,
};

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::not_a_group: return "NotAGroup";
    case errc::not_a_p_group: return "NotAPGroup";
    case errc::bad_element: return "BadElement";
    case errc::group_too_large: return "GroupTooLarge";
    case errc::action_not_stable: return "ActionNotStable";
    case errc::not_a_homomorphism: return "NotAHomomorphism";
    case errc::prime_mismatch: return "PrimeMismatch";
    case errc::group_mismatch: return "GroupMismatch";
    case errc::image_not_fixed: return "ImageNotFixed";
    case errc::dimension_mismatch: return "DimensionMismatch";
    case errc::not_a_p_presentation: return "NotAPPresentation";
    case errc::kernel_not_trivial_module: return "KernelNotTrivialModule";
    case errc::torsion_present: return "TorsionPresent";
    case errc::instance_too_large: return "InstanceTooLarge";
    case errc::infeasible: return "Infeasible";
    case errc::bad_argument: return "BadArgument";
    case errc::parse: return "ParseError";
    case errc::internal: return "InternalError";
  }
  return "UnknownError";
}

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  errc code() const { return code_; }

 private:
  errc code_;
};

// Semantic problems in otherwise well-formed input (CLI exit code 1).
class validation_error : public error {
 public:
  using error::error;
};

// Tractability ceilings and infeasible instances (CLI exit code 3).
class limit_error : public error {
 public:
  using error::error;
};

// Malformed model or presentation text (CLI exit code 2).
class parse_error : public error {
 public:
  parse_error(const std::string& what, std::size_t line, std::size_t column)
      : error(errc::parse, what), line_(line), column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace edp
