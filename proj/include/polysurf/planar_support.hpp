#pragma once

#include "polysurf/graph.hpp"

#include <optional>
#include <vector>

namespace polysurf {

// Rotation system of a planar embedding: for each vertex, its neighbors in
// cyclic order. Empty optional for nonplanar input.
using RotationSystem = std::vector<std::vector<int>>;

std::optional<RotationSystem> planar_embedding(const Graph& g);

// Adds edges until the graph is connected and biconnected while staying
// planar (make_connected + make_biconnected_planar).
Graph biconnected_planar_augmentation(const Graph& g);

// Faces of an embedded graph as vertex cycles (each face boundary walk,
// without the repeated first vertex).
std::vector<std::vector<int>> embedding_faces(const Graph& g, const RotationSystem& rot);

}  // namespace polysurf
