#pragma once

#include <stdexcept>
#include <string>

namespace ocqst {

// Base of every ocqst exception.
struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Invalid inputs, parameters, or configuration.  CLI exit code 1.
struct validation_error : error {
  using error::error;
};

struct not_hermitian_error : validation_error {
  using validation_error::validation_error;
};

struct trace_not_one_error : validation_error {
  using validation_error::validation_error;
};

struct not_positive_error : validation_error {
  using validation_error::validation_error;
};

struct dimension_mismatch_error : validation_error {
  using validation_error::validation_error;
};

struct wrong_dimension_error : validation_error {
  using validation_error::validation_error;
};

struct unknown_label_error : validation_error {
  using validation_error::validation_error;
};

struct parameter_out_of_range_error : validation_error {
  using validation_error::validation_error;
};

struct out_of_range_error : validation_error {
  using validation_error::validation_error;
};

struct degenerate_params_error : validation_error {
  using validation_error::validation_error;
};

struct config_error : validation_error {
  using validation_error::validation_error;
};

// File system and serialization failures.  CLI exit code 2.
struct io_error : error {
  using error::error;
};

// Internal numerical corruption (impossible values, non-convergence).
// CLI exit code 3.
struct consistency_error : error {
  using error::error;
};

}  // namespace ocqst
