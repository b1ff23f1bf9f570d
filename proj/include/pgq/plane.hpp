#pragma once

#include <cstdint>
#include <vector>

#include "pgq/bitmat.hpp"
#include "pgq/gf.hpp"

// The projective plane PG(2, 2^s): canonical point/line enumeration,
// incidence, the standard conic y^2 = xz with its nucleus, and the
// secant/skew classification of lines against the regular hyperoval.

namespace pgq {

// Homogeneous coordinates, normalized so the first nonzero entry is 1.
struct ProjectivePoint {
    std::uint32_t x = 0, y = 0, z = 0;
    friend bool operator==(const ProjectivePoint&, const ProjectivePoint&) = default;
};

// Line (a,b,c): incident with [x,y,z] iff ax + by + cz = 0.
struct ProjectiveLine {
    std::uint32_t a = 0, b = 0, c = 0;
    friend bool operator==(const ProjectiveLine&, const ProjectiveLine&) = default;
};

bool incident(const GaloisField& gf, const ProjectivePoint& p, const ProjectiveLine& l);

class PlaneModel {
public:
    static PlaneModel build(int s);

    int s() const { return field_.s(); }
    std::uint32_t q() const { return field_.q(); }
    const GaloisField& field() const { return field_; }

    std::size_t size() const { return points_.size(); }  // q^2+q+1 points and lines

    const std::vector<ProjectivePoint>& points() const { return points_; }
    const std::vector<ProjectiveLine>& lines() const { return lines_; }

    // Sorted incidence lists.
    const std::vector<std::uint32_t>& line_points(std::size_t l) const { return line_points_[l]; }
    const std::vector<std::uint32_t>& point_lines(std::size_t p) const { return point_lines_[p]; }

    bool incident(std::size_t point, std::size_t line) const;

    // Index of a normalized triple in the canonical (lexicographic) order.
    std::uint32_t point_index(const ProjectivePoint& p) const;
    std::uint32_t line_index(const ProjectiveLine& l) const;

private:
    explicit PlaneModel(int s) : field_(s) {}

    GaloisField field_;
    std::vector<ProjectivePoint> points_;
    std::vector<ProjectiveLine> lines_;
    std::vector<std::vector<std::uint32_t>> line_points_;
    std::vector<std::vector<std::uint32_t>> point_lines_;
};

// Incidence matrix: rows = lines, columns = points, canonical order both ways.
BitMatrix incidence_matrix(const PlaneModel& plane);

// The q+1 points of y^2 = xz, sorted by point index. No three are collinear.
std::vector<std::uint32_t> standard_conic(const PlaneModel& plane);

// The common point of the q+1 tangents. Computed from tangent concurrency;
// throws std::logic_error if the tangents are not concurrent.
std::uint32_t conic_nucleus(const PlaneModel& plane, const std::vector<std::uint32_t>& conic);

struct HyperovalPartition {
    std::vector<std::uint32_t> conic_points;  // sorted
    std::uint32_t nucleus = 0;
    std::vector<std::uint32_t> hyperoval;      // conic + nucleus, sorted
    std::vector<std::uint32_t> secant_lines;   // meet the hyperoval in exactly 2 points
    std::vector<std::uint32_t> skew_lines;     // meet it in 0 points
    std::vector<char> in_hyperoval;            // indexed by point
};

// Classify every line against a hyperoval (point-index set, size q+2).
// Throws std::logic_error if some line meets it in 1 or >2 points.
HyperovalPartition classify_lines(const PlaneModel& plane,
                                  const std::vector<std::uint32_t>& hyperoval);

// conic -> nucleus -> classification in one step.
HyperovalPartition build_hyperoval_partition(const PlaneModel& plane);

}  // namespace pgq
