#pragma once
// The library's seeded generators, under the name the tests use.

#include "affgeo/sampling.hpp"

namespace affgeo::testsupport {
using affgeo::random_jet;
using affgeo::random_map;
using affgeo::random_regular_jet;
using affgeo::standard_jet;
}  // namespace affgeo::testsupport
