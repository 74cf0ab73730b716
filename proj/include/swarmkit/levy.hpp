#pragma once

#include <cstddef>

#include "swarmkit/core.hpp"
#include "swarmkit/rng.hpp"

namespace swarmkit::levy {

/// Heavy-tailed step law with density ~ 1/s^(1+lambda) for large s.
/// Invariants: 1 < lambda < 3, scale >= 0.
struct LevyConfig {
    double lambda = 1.5;
    double scale = 1.0;

    void validate() const;
};

/// Scale of the numerator normal in Mantegna's quotient.
///
/// For lambda < 2 this is Mantegna's sigma_u, which makes u / |v|^(1/lambda)
/// approximate a unit-scale symmetric stable law of index lambda. No stable law
/// exists for lambda >= 2; there the quotient keeps its power-law tail and
/// sigma_u is fixed at 1.
double mantegna_sigma(double lambda);

/// One signed step: scale * sigma_u * u / |v|^(1/lambda), u and v standard
/// normal drawn in that order (4 uniform draws total).
///
/// The Mantegna exponent equals lambda, so P(|step| > s) ~ s^-lambda and the
/// density of |step| decays as s^-(1+lambda).
double sample_step(const LevyConfig& config, RngStream& rng);

/// `dimension` independent steps, coordinate 0 first.
Vector sample_vector(const LevyConfig& config, std::size_t dimension, RngStream& rng);

}  // namespace swarmkit::levy
