#pragma once

#include "sadic/directive.hpp"
#include "sadic/geometry.hpp"
#include "sadic/util.hpp"

#include <cstdint>
#include <map>
#include <unordered_map>
#include <vector>

namespace sadic {

// Finite point-cloud approximation of a Rauzy fractal: the projections of the
// abelianized proper prefixes of a limit-word prefix, labelled by the letter
// following each prefix.
struct LabeledCloud {
    std::vector<RealVec> points;
    std::vector<Letter> labels;
    RealVec u;               // projection direction
    RealVec w;               // plane normal
    std::size_t depth = 0;   // directive depth used
    Word word;               // generating prefix (labels are its letters)

    std::size_t size() const { return points.size(); }
};

LabeledCloud rauzy_cloud(const DirectiveSequence& seq, std::size_t depth, std::size_t min_len,
                         const RealVec& u, const RealVec& w);

// Points with the given label only.
LabeledCloud subtile(const LabeledCloud& cloud, Letter i);

// Symmetric Hausdorff distance in the max norm (labels ignored).
double hausdorff(const LabeledCloud& a, const LabeledCloud& b);
double hausdorff_points(const std::vector<RealVec>& a, const std::vector<RealVec>& b);

// max over points of |p|_inf (extent of the cloud around the origin)
double cloud_extent(const LabeledCloud& cloud);

struct CoverHistogram {
    std::map<int, long> counts;  // multiplicity -> number of samples
    double epsilon = 0;
    long samples = 0;
    std::uint64_t seed = 0;

    int mode() const;
    long count(int multiplicity) const;
};

// Multiplicity histogram of the collection { x + R(i) : [x,i] in translates }
// sampled at random points of the plane orthogonal to 1, drawn from a disc
// well inside the translate footprint (the footprint radius shrunk by the
// cloud extent). Membership is epsilon-closeness to the discretized subtile.
// Throws if the translate patch is too small relative to the cloud.
CoverHistogram covering_histogram(const LabeledCloud& cloud, const Patch& translates, double epsilon,
                                  long samples, std::uint64_t seed);

// Convenience wrapper generating the cloud first.
CoverHistogram covering_histogram(const DirectiveSequence& seq, std::size_t depth,
                                  std::size_t min_len, const RealVec& u, const Patch& translates,
                                  double epsilon, long samples, std::uint64_t seed);

// Suspension of the cloud: for each point y with label i and each
// t in {0, 1/slices, ..., (slices-1)/slices} emits t (e_i - pi e_i) - y.
LabeledCloud rauzy_box_cloud(const LabeledCloud& cloud, int slices);

// Multiplicity histogram of the lattice translates z + box(i), z in Z^d with
// |z|_inf <= lattice_radius, sampled from a cube well inside the covered
// region.
CoverHistogram box_covering_histogram(const LabeledCloud& box_cloud, long lattice_radius,
                                      double epsilon, long samples, std::uint64_t seed);

// Spatial grid over labelled points with cell size epsilon; lookups test
// epsilon-closeness in the max norm.
class PointGrid {
public:
    PointGrid(const std::vector<RealVec>& points, const std::vector<Letter>& labels, double epsilon);
    explicit PointGrid(const LabeledCloud& cloud, double epsilon);
    // any point with the given label within epsilon of q (max norm)?
    bool near(const RealVec& q, Letter label) const;
    // distinct labels having a point within epsilon of q
    std::vector<Letter> labels_near(const RealVec& q) const;

private:
    std::uint64_t cell_hash(const RealVec& q, const std::vector<int>& shift) const;
    template <typename Visit>
    void visit_neighbors(const RealVec& q, Visit visit) const;

    const std::vector<RealVec>& points_;
    const std::vector<Letter>& labels_;
    double eps_;
    int dim_;
    std::unordered_map<std::uint64_t, std::vector<std::uint32_t>> cells_;
};

}  // namespace sadic
