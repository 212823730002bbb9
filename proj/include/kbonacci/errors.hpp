#pragma once

#include <stdexcept>
#include <string>

namespace kbonacci {

struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// k < 2. The recurrences are only defined for order two and up.
struct invalid_order : error {
  using error::error;
};

// branch index outside 1..k
struct invalid_branch : error {
  using error::error;
};

// sequence index outside the domain of the requested operation
struct index_out_of_domain : error {
  using error::error;
};

// backward extension needs the trailing coefficient to be nonzero and to
// divide every backward step exactly
struct non_invertible_recurrence : error {
  using error::error;
};

struct dimension_mismatch : error {
  using error::error;
};

// a weighted partition sum produced a non-integral coefficient; indicates a
// broken enumerator, not bad input
struct non_integral_coefficient : error {
  using error::error;
};

struct non_integral_sum : error {
  using error::error;
};

// root finder failed to reach the residual target within the iteration cap
struct no_convergence : error {
  using error::error;
};

// pairwise root separation test failed; Binet evaluation is refused
struct repeated_roots : error {
  using error::error;
};

struct ill_conditioned : error {
  using error::error;
};

// floating-point backends cap the index to keep |root|^n in range
struct range_exceeded : error {
  using error::error;
};

struct unknown_identity : error {
  using error::error;
};

// requested grid lies outside the declared domain of an identity
struct domain_violation : error {
  using error::error;
};

}  // namespace kbonacci
