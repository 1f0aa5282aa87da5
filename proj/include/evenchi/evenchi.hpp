#pragma once

// Umbrella header.

#include "evenchi/rational.hpp"
#include "evenchi/polynomial.hpp"
#include "evenchi/series.hpp"
#include "evenchi/combinatorics.hpp"
#include "evenchi/coefficients.hpp"
#include "evenchi/simplicial.hpp"
#include "evenchi/facet_io.hpp"
#include "evenchi/relations.hpp"
#include "evenchi/euler.hpp"
#include "evenchi/generators.hpp"
