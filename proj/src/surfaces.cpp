#include "rigi/surfaces.hpp"

#include "rigi/connectivity.hpp"
#include "rigi/rigidity2d.hpp"

namespace rigi {

namespace {

bool is_complete(const SimpleGraph& g) {
    int n = g.vertex_count();
    return g.edge_count() == n * (n - 1) / 2;
}

}  // namespace

bool rigid_on_surface(const SimpleGraph& g, SurfaceKind surface) {
    if (!is_connected(g)) return false;
    if (is_complete(g)) return true;
    int n = g.vertex_count();
    Multigraph m = Multigraph::from_simple(g);
    switch (surface) {
        case SurfaceKind::Sphere:
            return is_rigid_2d(g);
        case SurfaceKind::Cylinder:
            return packs_spanning_trees(m, 2);
        case SurfaceKind::GeneralRevolution:
            // tree + spanning subgraph with exactly one cycle per component:
            // a basis of graphic + a basis of bicircular, i.e. union rank 2n-1
            return matroid_union_rank(m, MatroidKind::Graphic, MatroidKind::Bicircular) ==
                   2 * n - 1;
    }
    return false;
}

bool redundantly_rigid_on_cylinder(const SimpleGraph& g) {
    if (!is_connected(g)) return false;
    for (auto [u, v] : g.edges())
        if (!rigid_on_surface(g.without_edge(u, v), SurfaceKind::Cylinder)) return false;
    return true;
}

bool globally_rigid_on_cylinder(const SimpleGraph& g) {
    if (!is_connected(g)) return false;
    if (is_complete(g)) return true;
    return vertex_connectivity(g).first >= 2 && redundantly_rigid_on_cylinder(g);
}

}  // namespace rigi
