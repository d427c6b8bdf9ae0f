#pragma once

// Ring-network banking model: parameter validation, closed-form break-even
// levels and probability thresholds, hedging combinatorics, failure cascades,
// and a seeded Monte Carlo driver.

#include "banknet/combinatorics.hpp"
#include "banknet/contagion.hpp"
#include "banknet/errors.hpp"
#include "banknet/io.hpp"
#include "banknet/params.hpp"
#include "banknet/rational.hpp"
#include "banknet/rng.hpp"
#include "banknet/sampling.hpp"
#include "banknet/thresholds.hpp"
#include "banknet/validation.hpp"
#include "banknet/verification.hpp"
#include "banknet/version.hpp"
