#pragma once

#include "rigi/graph.hpp"
#include "rigi/packing.hpp"

namespace rigi {

/// The three non-complete cases of rigidity on an irreducible surface of
/// revolution: sphere (spanning Laman subgraph), cylinder (two edge-disjoint
/// spanning trees), and every other surface of revolution (tree plus a
/// spanning subgraph whose components each contain exactly one cycle).
enum class SurfaceKind { Sphere, Cylinder, GeneralRevolution };

bool rigid_on_surface(const SimpleGraph& g, SurfaceKind surface);
bool redundantly_rigid_on_cylinder(const SimpleGraph& g);
bool globally_rigid_on_cylinder(const SimpleGraph& g);

}  // namespace rigi
