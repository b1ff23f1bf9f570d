#include "pgq/plane.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace pgq {

namespace {

std::array<std::uint32_t, 3> normalize(const GaloisField& gf, std::uint32_t x, std::uint32_t y,
                                       std::uint32_t z) {
    if (x) {
        std::uint32_t iv = gf.inv(x);
        return {1, gf.mul(iv, y), gf.mul(iv, z)};
    }
    if (y) {
        std::uint32_t iv = gf.inv(y);
        return {0, 1, gf.mul(iv, z)};
    }
    if (z) return {0, 0, 1};
    throw std::logic_error("normalize: zero triple");
}

// Canonical index of a normalized triple under lexicographic (x,y,z) order:
// (0,0,1) first, then (0,1,z), then (1,y,z).
std::uint32_t triple_index(std::uint32_t q, const std::array<std::uint32_t, 3>& t) {
    if (t[0] == 1) return 1 + q + t[1] * q + t[2];
    if (t[1] == 1) return 1 + t[2];
    return 0;
}

}  // namespace

bool incident(const GaloisField& gf, const ProjectivePoint& p, const ProjectiveLine& l) {
    return (gf.mul(l.a, p.x) ^ gf.mul(l.b, p.y) ^ gf.mul(l.c, p.z)) == 0;
}

PlaneModel PlaneModel::build(int s) {
    PlaneModel plane(s);
    const GaloisField& gf = plane.field_;
    const std::uint32_t q = gf.q();
    const std::size_t n = static_cast<std::size_t>(q) * q + q + 1;

    plane.points_.reserve(n);
    plane.points_.push_back({0, 0, 1});
    for (std::uint32_t z = 0; z < q; ++z) plane.points_.push_back({0, 1, z});
    for (std::uint32_t y = 0; y < q; ++y)
        for (std::uint32_t z = 0; z < q; ++z) plane.points_.push_back({1, y, z});

    plane.lines_.reserve(n);
    for (const ProjectivePoint& p : plane.points_) plane.lines_.push_back({p.x, p.y, p.z});

    // For each line, walk its q+1 incident points directly: the solution set
    // of ax+by+cz=0 is a 2-dim subspace; its projective classes are
    // normalize(v1) and normalize(t*v1 + v2) over all t.
    plane.line_points_.resize(n);
    plane.point_lines_.resize(n);
    for (std::size_t li = 0; li < n; ++li) {
        const ProjectiveLine& l = plane.lines_[li];
        std::array<std::uint32_t, 3> v1{}, v2{};
        if (l.a) {
            std::uint32_t iv = gf.inv(l.a);
            v1 = {gf.mul(iv, l.b), 1, 0};
            v2 = {gf.mul(iv, l.c), 0, 1};
        } else if (l.b) {
            std::uint32_t iv = gf.inv(l.b);
            v1 = {1, gf.mul(iv, l.a), 0};  // l.a == 0 here; kept for symmetry
            v2 = {0, gf.mul(iv, l.c), 1};
        } else {
            v1 = {1, 0, 0};
            v2 = {0, 1, 0};
        }
        auto& lp = plane.line_points_[li];
        lp.reserve(q + 1);
        lp.push_back(triple_index(q, normalize(gf, v1[0], v1[1], v1[2])));
        for (std::uint32_t t = 0; t < q; ++t) {
            std::uint32_t x = gf.mul(t, v1[0]) ^ v2[0];
            std::uint32_t y = gf.mul(t, v1[1]) ^ v2[1];
            std::uint32_t z = gf.mul(t, v1[2]) ^ v2[2];
            lp.push_back(triple_index(q, normalize(gf, x, y, z)));
        }
        std::sort(lp.begin(), lp.end());
        for (std::uint32_t pi : lp) plane.point_lines_[pi].push_back(static_cast<std::uint32_t>(li));
    }
    return plane;
}

bool PlaneModel::incident(std::size_t point, std::size_t line) const {
    const auto& lp = line_points_[line];
    return std::binary_search(lp.begin(), lp.end(), static_cast<std::uint32_t>(point));
}

std::uint32_t PlaneModel::point_index(const ProjectivePoint& p) const {
    return triple_index(field_.q(), {p.x, p.y, p.z});
}

std::uint32_t PlaneModel::line_index(const ProjectiveLine& l) const {
    return triple_index(field_.q(), {l.a, l.b, l.c});
}

BitMatrix incidence_matrix(const PlaneModel& plane) {
    const std::size_t n = plane.size();
    BitMatrix m(n, n);
    for (std::size_t li = 0; li < n; ++li)
        for (std::uint32_t pi : plane.line_points(li)) m.set(li, pi, true);
    return m;
}

std::vector<std::uint32_t> standard_conic(const PlaneModel& plane) {
    const GaloisField& gf = plane.field();
    std::vector<std::uint32_t> conic;
    conic.reserve(gf.q() + 1);
    for (std::uint32_t t = 0; t < gf.q(); ++t)
        conic.push_back(plane.point_index({1, t, gf.mul(t, t)}));
    conic.push_back(plane.point_index({0, 0, 1}));
    std::sort(conic.begin(), conic.end());
    return conic;
}

std::uint32_t conic_nucleus(const PlaneModel& plane, const std::vector<std::uint32_t>& conic) {
    // Tangents = lines meeting the conic exactly once. All q+1 of them must
    // pass through a single point off the conic.
    std::vector<std::uint32_t> tangents;
    for (std::size_t li = 0; li < plane.size(); ++li) {
        const auto& lp = plane.line_points(li);
        std::size_t hits = 0;
        for (std::uint32_t p : lp)
            if (std::binary_search(conic.begin(), conic.end(), p)) ++hits;
        if (hits == 1) tangents.push_back(static_cast<std::uint32_t>(li));
    }
    if (tangents.size() != plane.q() + 1)
        throw std::logic_error("conic_nucleus: expected q+1 tangent lines");

    std::vector<std::uint32_t> common = plane.line_points(tangents[0]);
    for (std::size_t i = 1; i < tangents.size() && common.size() > 1; ++i) {
        const auto& lp = plane.line_points(tangents[i]);
        std::vector<std::uint32_t> next;
        std::set_intersection(common.begin(), common.end(), lp.begin(), lp.end(),
                              std::back_inserter(next));
        common = std::move(next);
    }
    if (common.size() != 1) throw std::logic_error("conic_nucleus: tangents are not concurrent");
    if (std::binary_search(conic.begin(), conic.end(), common[0]))
        throw std::logic_error("conic_nucleus: nucleus lies on the conic");
    return common[0];
}

HyperovalPartition classify_lines(const PlaneModel& plane,
                                  const std::vector<std::uint32_t>& hyperoval) {
    if (hyperoval.size() != plane.q() + 2)
        throw std::invalid_argument("classify_lines: hyperoval must have q+2 points");

    HyperovalPartition part;
    part.hyperoval = hyperoval;
    std::sort(part.hyperoval.begin(), part.hyperoval.end());
    part.in_hyperoval.assign(plane.size(), 0);
    for (std::uint32_t p : part.hyperoval) part.in_hyperoval[p] = 1;

    for (std::size_t li = 0; li < plane.size(); ++li) {
        std::size_t hits = 0;
        for (std::uint32_t p : plane.line_points(li)) hits += part.in_hyperoval[p];
        if (hits == 2)
            part.secant_lines.push_back(static_cast<std::uint32_t>(li));
        else if (hits == 0)
            part.skew_lines.push_back(static_cast<std::uint32_t>(li));
        else
            throw std::logic_error("classify_lines: line meets hyperoval in 1 or >2 points");
    }
    return part;
}

HyperovalPartition build_hyperoval_partition(const PlaneModel& plane) {
    std::vector<std::uint32_t> conic = standard_conic(plane);
    std::uint32_t nuc = conic_nucleus(plane, conic);
    std::vector<std::uint32_t> hyper = conic;
    hyper.push_back(nuc);
    HyperovalPartition part = classify_lines(plane, hyper);
    part.conic_points = std::move(conic);
    part.nucleus = nuc;
    return part;
}

}  // namespace pgq
