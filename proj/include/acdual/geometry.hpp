#pragma once

// Oriented piecewise-linear paths, winding numbers, and refinement.
//
// Paths are the carriers of phase accumulation: a closed loop's winding
// number about a source is the topological invariant the phase depends on.
// Curved geometry enters only through refinement density, which keeps the
// quadrature uniform over one representation.

#include <cstdint>
#include <vector>

#include "acdual/errors.hpp"
#include "acdual/rng.hpp"
#include "acdual/vec.hpp"

namespace acdual {

struct Path {
    /// Ordered vertices; for 2D paths every z component is zero.
    std::vector<Vec3> vertices;
    /// Closed paths connect the final vertex back to the first implicitly
    /// (no duplicated endpoint stored).
    bool closed{true};
    /// 2 or 3.
    int dimension{2};
};

/// Validating constructor: at least 2 vertices, consecutive vertices
/// distinct (including the closing segment), finite coordinates,
/// dimension consistent with the coordinates. Throws ConfigError.
Path make_path(std::vector<Vec3> vertices, bool closed, int dimension);

void validate(const Path& path);

/// Number of line segments (includes the implicit closing segment).
std::int64_t segment_count(const Path& path);

/// Endpoints of segment i, in traversal order.
std::pair<Vec3, Vec3> segment(const Path& path, std::int64_t i);

double arc_length(const Path& path);

/// Diagonal of the axis-aligned bounding box; the scale-free stand-in for
/// "path diameter" used by the default on-path tolerance.
double bounding_diameter(const Path& path);

/// Minimum distance from a point to any segment of the path.
double distance_to_path(const Path& path, const Vec3& point);

/// Path traversed in the opposite direction.
Path reversed(const Path& path);

/// Subdivides every segment evenly so none exceeds max_segment_length.
/// The input vertex set is a subset of the output and the geometry is
/// identical as a point set.
Path refine(const Path& path, double max_segment_length);

/// Closed regular polygonal approximation of a circle in a z = center.z
/// plane, traversed |turns| times; the sign of turns sets the orientation
/// (positive = counterclockwise). segments is the vertex count per turn.
Path circle_path(const Vec3& center, double radius, int segments, int turns);

/// Signed number of times a closed planar path encircles `about`
/// (counterclockwise positive). Computed by summing signed subtended-angle
/// increments per segment, which stays robust for multi-turn loops.
///
/// eps_on_path < 0 selects the default tolerance 1e-9 * bounding_diameter.
/// Throws PointOnPath when `about` is within tolerance of any segment.
int winding_number(const Path& path, const Vec2& about, double eps_on_path = -1.0);

/// Winding of the path's projection onto the plane through axis_point
/// perpendicular to axis_dir, about the axis. Positive sense follows the
/// right-hand rule around +axis_dir. axis_dir must be unit length.
int winding_about_axis(const Path& path, const Vec3& axis_point, const Vec3& axis_dir,
                       double eps_on_path = -1.0);

/// Random star-shaped closed loop around `center`: vertices at jittered
/// angles in counterclockwise order with radii in [radius_min, radius_max].
/// Star-shapedness makes the winding about `center` exactly +1.
Path random_star_loop(Rng& rng, const Vec3& center, int vertex_count, double radius_min,
                      double radius_max);

}  // namespace acdual
