#pragma once

// Umbrella header: the whole library in one include.

#include "iswp/errors.hpp"
#include "iswp/numbers.hpp"
#include "iswp/rng.hpp"

#include "iswp/graph.hpp"
#include "iswp/labelled.hpp"
#include "iswp/iso.hpp"
#include "iswp/minor_map.hpp"
#include "iswp/generators.hpp"
#include "iswp/tree_decomposition.hpp"
#include "iswp/counting.hpp"

#include "iswp/property.hpp"
#include "iswp/minimal.hpp"

#include "iswp/exact.hpp"
#include "iswp/dp.hpp"
#include "iswp/sampling.hpp"
#include "iswp/witness.hpp"
#include "iswp/hash_family.hpp"
#include "iswp/color_coding.hpp"
#include "iswp/ramsey.hpp"

#include "iswp/gadget.hpp"

#include "iswp/cli.hpp"
