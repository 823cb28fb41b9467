#ifndef FORAGE_ERRORS_HPP
#define FORAGE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace forage {

struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Bad user-supplied configuration (step sizes, schedules, config files).
struct config_error : error {
  using error::error;
};

// Non-finite or otherwise unusable state handed to a model operation.
struct invalid_state_error : error {
  using error::error;
};

// Argument outside the domain on which an operation is defined.
struct domain_error : error {
  using error::error;
};

// The season is too short for the requested synthesis (t_hat <= 0 or the
// singular arc has no room).
struct season_too_short_error : domain_error {
  using domain_error::domain_error;
};

// Integration produced non-finite values; message names the time.
struct divergence_error : error {
  using error::error;
};

// A tributary anchor that violates its defining relation.
struct invalid_anchor_error : error {
  using error::error;
};

// A residual grid that overlaps the boundary band everywhere.
struct insufficient_interior_error : error {
  using error::error;
};

}  // namespace forage

#endif
