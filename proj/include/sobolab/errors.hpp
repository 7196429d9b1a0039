#pragma once

#include <stdexcept>
#include <string>

namespace sobolab {

// Base class for everything thrown by this library.
struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Invalid grid/experiment configuration (bad resolution, unknown keys, ...).
struct config_error : error {
  using error::error;
};

// Out-of-range Sobolev/derivative indices (drop > k, |alpha| too large, ...).
struct index_error : error {
  using error::error;
};

// Argument outside an operation's admissible domain (|a| >= eps, grid
// mismatch, vector field where a scalar one is required, ...).
struct domain_error : error {
  using error::error;
};

// Odd p passed to a norm-power operation; those require even integer p.
struct unsupported_exponent_error : error {
  using error::error;
};

// A runtime invariant was found violated (nonpositive Jacobian, ...).
struct invariant_violation : error {
  using error::error;
};

// Newton solve for the slice projection did not converge, or the input is
// outside the projection basin.
struct projection_error : error {
  using error::error;
};

// Degenerate marked-point triple (coincident points).
struct degenerate_triple_error : error {
  using error::error;
};

// A constructed Mobius element landed outside the near-identity ball.
struct out_of_neighborhood_error : error {
  using error::error;
};

// Interpolation failed (chart blow-up, point outside the usable region).
struct interpolation_error : error {
  using error::error;
};

// A probe was asked to fit an order from fewer than three steps.
struct insufficient_data_error : error {
  using error::error;
};

// The regularity witness for a section's extension data failed.
struct c2_witness_error : error {
  using error::error;
};

// The cut-off is undefined because the slice projection failed; callers
// that want the globally-defined cut-off treat this as beta = 0.
struct beta_undefined_error : error {
  using error::error;
};

}  // namespace sobolab
