#pragma once

#include "polysurf/constructions.hpp"
#include "polysurf/error.hpp"

namespace polysurf::detail {

// Validates the surface, checks the witness map edge-exactly against the
// target, and fills the stats record. Every construction funnels through
// here; failure is a construction bug, reported loudly.
ConstructionResult finish(Surface surface, Graph target,
                          std::vector<std::size_t> vertex_to_polygon, const char* what);

}  // namespace polysurf::detail
