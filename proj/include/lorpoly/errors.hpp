#pragma once

#include <stdexcept>
#include <string>

namespace lorpoly {

// Base class for all domain errors thrown by this library. Callers that do
// not care about the specific failure can catch this one type.
struct error : std::runtime_error {
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

// A spinor pair (or its (u,t) form) with u = 0 or t = 0; the geometric
// parametrization is undefined there.
struct degenerate_pair : error {
    using error::error;
};

// A geometric datum with vanishing (or time-like) 3-vector cannot be mapped
// back to a spinor pair.
struct zero_vector : error {
    using error::error;
};

struct unknown_generator : error {
    using error::error;
};

struct non_positive_step : error {
    using error::error;
};

struct dimension_mismatch : error {
    using error::error;
};

struct bad_size : error {
    using error::error;
};

struct zero_area : error {
    using error::error;
};

struct not_closed : error {
    using error::error;
};

struct zero_total_area : error {
    using error::error;
};

// The z- or w-sector null vectors sum to a null (or zero) total vector, so no
// boost can bring the configuration to closure.
struct degenerate_null_sum : error {
    using error::error;
};

struct cutoff_too_small : error {
    using error::error;
};

struct negative_m : error {
    using error::error;
};

struct budget_exceeded : error {
    using error::error;
};

}  // namespace lorpoly
