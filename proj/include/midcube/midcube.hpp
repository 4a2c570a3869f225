#pragma once

// Umbrella header.

#include "midcube/analysis.hpp"
#include "midcube/boundary.hpp"
#include "midcube/doubles.hpp"
#include "midcube/drg.hpp"
#include "midcube/families.hpp"
#include "midcube/graph.hpp"
#include "midcube/hamilton.hpp"
#include "midcube/matrix.hpp"
#include "midcube/metric.hpp"
#include "midcube/polynomial.hpp"
#include "midcube/rational.hpp"
#include "midcube/serialize.hpp"
#include "midcube/spectral.hpp"
