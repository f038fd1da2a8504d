#pragma once

// Umbrella header: exact arithmetic, Picard-lattice and fixed-point-type
// calculus, branched-cover checks, invariant-monomial machinery, the case
// engine and report serialization.

#include "k3ns/cover.hpp"
#include "k3ns/engine.hpp"
#include "k3ns/equivariant.hpp"
#include "k3ns/lattice.hpp"
#include "k3ns/modular.hpp"
#include "k3ns/plane.hpp"
#include "k3ns/rational.hpp"
#include "k3ns/report.hpp"
