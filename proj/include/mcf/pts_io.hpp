#pragma once

#include <string>
#include <vector>

#include "mcf/geometry.hpp"

namespace mcf {

// Text point-set file: "PG N q" then one "x0,x1,...,xN" per point.
struct PtsFile {
  int N = 0;
  int q = 0;
  std::vector<std::vector<Elem>> points;
};

PtsFile parse_pts(const std::string& text);
PtsFile read_pts_file(const std::string& path);
// rejects points given twice (after normalization)
PointSet to_point_set(const Space& space, const PtsFile& file);

// points in index order, so equal sets serialize identically
std::string format_pts(const Space& space, const PointSet& S);
void write_pts_file(const std::string& path, const Space& space, const PointSet& S);

}  // namespace mcf
