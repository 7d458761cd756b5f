#pragma once

// Umbrella header: point sequences on the unit torus, pair-correlation
// statistics, discrepancy measures, exponential sums, analytic kernels, and
// the Monte Carlo experiment harnesses.

#include "ppclab/alpha.hpp"
#include "ppclab/continued_fraction.hpp"
#include "ppclab/discrepancy.hpp"
#include "ppclab/experiments.hpp"
#include "ppclab/expsum.hpp"
#include "ppclab/io.hpp"
#include "ppclab/kernels.hpp"
#include "ppclab/pair_correlation.hpp"
#include "ppclab/parallel.hpp"
#include "ppclab/random.hpp"
#include "ppclab/sequences.hpp"
#include "ppclab/torus.hpp"
