#pragma once

#include "nuphase/cayley.hpp"
#include "nuphase/coxeter.hpp"
#include "nuphase/cycles.hpp"
#include "nuphase/errors.hpp"
#include "nuphase/graph.hpp"
#include "nuphase/growth.hpp"
#include "nuphase/interval.hpp"
#include "nuphase/percolation.hpp"
#include "nuphase/polynomial.hpp"
#include "nuphase/presets.hpp"
#include "nuphase/rational.hpp"
#include "nuphase/rational_function.hpp"
#include "nuphase/rng.hpp"
#include "nuphase/slab.hpp"
#include "nuphase/spectral.hpp"
#include "nuphase/version.hpp"
