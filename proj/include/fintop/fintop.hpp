#pragma once

#include "bing_hanner.hpp"
#include "canonical.hpp"
#include "catalog.hpp"
#include "dimension.hpp"
#include "error.hpp"
#include "harness.hpp"
#include "lattice.hpp"
#include "point_set.hpp"
#include "separation.hpp"
#include "space.hpp"
#include "space_io.hpp"
#include "structural.hpp"
