#ifndef TOPOREG_ERRORS_HPP
#define TOPOREG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace toporeg {

enum class errc {
  // usage: bad arguments or configuration
  invalid_argument,
  non_positive_bandwidth,
  non_positive_epsilon,
  invalid_scenario,
  empty_grid,
  length_mismatch,
  non_monotone_grid,
  // parse: malformed input files
  parse_error,
  // pipeline: computation or I/O failures
  io_error,
  undefined_at_point,
  all_points_undefined,
  invalid_complex,
  not_nested,
  degree_mismatch,
  degenerate_regressor,
  too_few_points,
  level_not_attained,
  no_zero_crossing,
  region_outside_data,
  empty_diagram,
  zero_denominator,
};

enum class error_kind { usage, parse, pipeline };

constexpr error_kind kind_of(errc c) {
  switch (c) {
    case errc::invalid_argument:
    case errc::non_positive_bandwidth:
    case errc::non_positive_epsilon:
    case errc::invalid_scenario:
    case errc::empty_grid:
    case errc::length_mismatch:
    case errc::non_monotone_grid:
      return error_kind::usage;
    case errc::parse_error:
      return error_kind::parse;
    default:
      return error_kind::pipeline;
  }
}

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  errc code() const { return code_; }
  error_kind kind() const { return kind_of(code_); }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) {
  throw error(code, what);
}

}  // namespace toporeg

#endif
