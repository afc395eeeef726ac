#pragma once

// Polygon text format: one "x y" pair per line, '#' starts a comment, blank
// lines ignored, vertices in any order (the convex hull is taken on load).

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "chirality/geometry.hpp"

namespace chirality {

/// Throws Error(ParseError) on malformed lines.
std::vector<Point2> parse_points(std::istream& in);

/// Parses and takes the hull. Throws Error(ParseError) or
/// Error(DegenerateInput).
ConvexPolygon read_polygon(std::istream& in);

/// Throws Error(IOError) if the file cannot be opened.
ConvexPolygon read_polygon_file(const std::filesystem::path& path);

/// Writes vertices with 17 significant digits so that reading back is exact.
void write_polygon(std::ostream& out, const ConvexPolygon& k, const std::string& comment = {});

}  // namespace chirality
