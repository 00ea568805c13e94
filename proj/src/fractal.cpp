#include "sadic/fractal.hpp"

#include <cmath>
#include <stdexcept>

namespace sadic {

LabeledCloud rauzy_cloud(const DirectiveSequence& seq, std::size_t depth, std::size_t min_len,
                         const RealVec& u, const RealVec& w) {
    LabeledCloud c;
    c.u = u;
    c.w = w;
    c.depth = depth;
    c.word = limit_word_prefix(seq, depth, min_len);
    const int d = seq.alphabet_size();
    const std::size_t L = c.word.size();
    c.points.reserve(L);
    c.labels.reserve(L);
    // running abelianization of the proper prefixes; counts are exact in
    // doubles for any realistic prefix length
    RealVec counts(static_cast<std::size_t>(d), 0.0);
    for (std::size_t k = 0; k < L; ++k) {
        c.points.push_back(project(u, w, counts));
        c.labels.push_back(c.word[k]);
        counts[static_cast<std::size_t>(c.word[k] - 1)] += 1.0;
    }
    return c;
}

LabeledCloud subtile(const LabeledCloud& cloud, Letter i) {
    LabeledCloud r;
    r.u = cloud.u;
    r.w = cloud.w;
    r.depth = cloud.depth;
    r.word = cloud.word;
    for (std::size_t k = 0; k < cloud.size(); ++k) {
        if (cloud.labels[k] == i) {
            r.points.push_back(cloud.points[k]);
            r.labels.push_back(i);
        }
    }
    return r;
}

double hausdorff_points(const std::vector<RealVec>& a, const std::vector<RealVec>& b) {
    if (a.empty() || b.empty()) throw std::invalid_argument("hausdorff: empty point set");
    auto one_sided = [](const std::vector<RealVec>& from, const std::vector<RealVec>& to) {
        double worst = 0;
        for (const RealVec& p : from) {
            double best = std::numeric_limits<double>::infinity();
            for (const RealVec& q : to) {
                double dmax = 0;
                for (std::size_t i = 0; i < p.size(); ++i)
                    dmax = std::max(dmax, std::fabs(p[i] - q[i]));
                if (dmax < best) best = dmax;
                if (best == 0) break;
            }
            worst = std::max(worst, best);
        }
        return worst;
    };
    return std::max(one_sided(a, b), one_sided(b, a));
}

double hausdorff(const LabeledCloud& a, const LabeledCloud& b) {
    return hausdorff_points(a.points, b.points);
}

double cloud_extent(const LabeledCloud& cloud) {
    double r = 0;
    for (const RealVec& p : cloud.points) r = std::max(r, norm_inf(p));
    return r;
}

int CoverHistogram::mode() const {
    int best_m = 0;
    long best_c = -1;
    for (auto& [m, c] : counts)
        if (c > best_c) { best_c = c; best_m = m; }
    return best_m;
}

long CoverHistogram::count(int multiplicity) const {
    auto it = counts.find(multiplicity);
    return it == counts.end() ? 0 : it->second;
}

PointGrid::PointGrid(const std::vector<RealVec>& points, const std::vector<Letter>& labels,
                     double epsilon)
    : points_(points), labels_(labels), eps_(epsilon),
      dim_(points.empty() ? 0 : static_cast<int>(points.front().size())) {
    if (epsilon <= 0) throw std::invalid_argument("PointGrid: epsilon must be positive");
    cells_.reserve(points.size());
    std::vector<int> zero(static_cast<std::size_t>(dim_), 0);
    for (std::uint32_t k = 0; k < points.size(); ++k)
        cells_[cell_hash(points[k], zero)].push_back(k);
}

PointGrid::PointGrid(const LabeledCloud& cloud, double epsilon)
    : PointGrid(cloud.points, cloud.labels, epsilon) {}

std::uint64_t PointGrid::cell_hash(const RealVec& q, const std::vector<int>& shift) const {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (int i = 0; i < dim_; ++i) {
        auto cell = static_cast<std::int64_t>(
            std::floor(q[static_cast<std::size_t>(i)] / eps_)) + shift[static_cast<std::size_t>(i)];
        h ^= static_cast<std::uint64_t>(cell) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        h *= 0x100000001b3ULL;
    }
    return h;
}

template <typename Visit>
void PointGrid::visit_neighbors(const RealVec& q, Visit visit) const {
    std::vector<int> shift(static_cast<std::size_t>(dim_), -1);
    while (true) {
        auto it = cells_.find(cell_hash(q, shift));
        if (it != cells_.end()) {
            for (std::uint32_t k : it->second)
                if (visit(k)) return;
        }
        int i = 0;
        while (i < dim_ && ++shift[static_cast<std::size_t>(i)] > 1) {
            shift[static_cast<std::size_t>(i)] = -1;
            ++i;
        }
        if (i == dim_) break;
    }
}

bool PointGrid::near(const RealVec& q, Letter label) const {
    bool found = false;
    visit_neighbors(q, [&](std::uint32_t k) {
        if (labels_[k] != label) return false;
        const RealVec& p = points_[k];
        for (std::size_t i = 0; i < q.size(); ++i)
            if (std::fabs(p[i] - q[i]) > eps_) return false;
        found = true;
        return true;
    });
    return found;
}

std::vector<Letter> PointGrid::labels_near(const RealVec& q) const {
    std::vector<Letter> out;
    visit_neighbors(q, [&](std::uint32_t k) {
        const RealVec& p = points_[k];
        for (std::size_t i = 0; i < q.size(); ++i)
            if (std::fabs(p[i] - q[i]) > eps_) return false;
        Letter l = labels_[k];
        for (Letter seen : out)
            if (seen == l) return false;
        out.push_back(l);
        return false;
    });
    return out;
}

namespace {

// orthonormal basis of the plane orthogonal to 1 in R^3
std::pair<RealVec, RealVec> plane_basis_3() {
    const double s2 = std::sqrt(0.5), s6 = std::sqrt(1.0 / 6.0);
    return {RealVec{s2, -s2, 0.0}, RealVec{s6, s6, -2 * s6}};
}

}  // namespace

CoverHistogram covering_histogram(const LabeledCloud& cloud, const Patch& translates, double epsilon,
                                  long samples, std::uint64_t seed) {
    if (cloud.points.empty()) throw std::invalid_argument("covering_histogram: empty cloud");
    if (cloud.points.front().size() != 3)
        throw std::invalid_argument("covering_histogram: implemented for d = 3");
    if (translates.empty()) throw std::invalid_argument("covering_histogram: empty translate patch");
    if (epsilon <= 0 || samples <= 0)
        throw std::invalid_argument("covering_histogram: epsilon and samples must be positive");

    const double extent = cloud_extent(cloud);
    // translate anchor points pi_{u,1} x (equal to x itself on the lattice
    // 1-perp, but computed generally)
    const RealVec one = ones(3);
    std::vector<std::pair<RealVec, Letter>> anchors;
    anchors.reserve(translates.size());
    double footprint = 0;
    for (const Face& f : translates) {
        RealVec t = project(cloud.u, one, to_real(f.x));
        footprint = std::max(footprint, norm_inf(t));
        anchors.emplace_back(std::move(t), f.i);
    }
    const double sample_radius = footprint - extent;
    if (sample_radius < 4 * epsilon)
        throw std::runtime_error(
            "covering_histogram: translate patch too small relative to the cloud (sampling radius " +
            std::to_string(sample_radius) + ")");

    PointGrid grid(cloud, epsilon);
    auto [b1, b2] = plane_basis_3();
    Rng rng(seed);

    CoverHistogram hist;
    hist.epsilon = epsilon;
    hist.samples = samples;
    hist.seed = seed;
    for (long s = 0; s < samples; ++s) {
        // uniform in the disc of radius sample_radius (in plane coordinates)
        double a, b;
        do {
            a = rng.uniform(-1.0, 1.0);
            b = rng.uniform(-1.0, 1.0);
        } while (a * a + b * b > 1.0);
        RealVec z = (sample_radius * a) * b1 + (sample_radius * b) * b2;
        int multiplicity = 0;
        for (const auto& [t, letter] : anchors) {
            RealVec q = z - t;
            if (norm_inf(q) > extent + epsilon) continue;
            if (grid.near(q, letter)) ++multiplicity;
        }
        ++hist.counts[multiplicity];
    }
    return hist;
}

CoverHistogram covering_histogram(const DirectiveSequence& seq, std::size_t depth,
                                  std::size_t min_len, const RealVec& u, const Patch& translates,
                                  double epsilon, long samples, std::uint64_t seed) {
    LabeledCloud cloud = rauzy_cloud(seq, depth, min_len, u, ones(seq.alphabet_size()));
    return covering_histogram(cloud, translates, epsilon, samples, seed);
}

LabeledCloud rauzy_box_cloud(const LabeledCloud& cloud, int slices) {
    if (slices <= 0) throw std::invalid_argument("rauzy_box_cloud: slices must be positive");
    const int d = static_cast<int>(cloud.u.size());
    LabeledCloud box;
    box.u = cloud.u;
    box.w = cloud.w;
    box.depth = cloud.depth;
    box.word = cloud.word;
    box.points.reserve(cloud.size() * static_cast<std::size_t>(slices));
    box.labels.reserve(cloud.size() * static_cast<std::size_t>(slices));
    std::vector<RealVec> edge(static_cast<std::size_t>(d));
    for (Letter i = 1; i <= d; ++i) {
        RealVec ei = unit_vec(d, i);
        edge[static_cast<std::size_t>(i - 1)] = ei - project(cloud.u, cloud.w, ei);
    }
    for (int s = 0; s < slices; ++s) {
        double t = static_cast<double>(s) / slices;
        for (std::size_t k = 0; k < cloud.size(); ++k) {
            Letter i = cloud.labels[k];
            box.points.push_back(t * edge[static_cast<std::size_t>(i - 1)] - cloud.points[k]);
            box.labels.push_back(i);
        }
    }
    return box;
}

CoverHistogram box_covering_histogram(const LabeledCloud& box_cloud, long lattice_radius,
                                      double epsilon, long samples, std::uint64_t seed) {
    if (box_cloud.points.empty() || box_cloud.points.front().size() != 3)
        throw std::invalid_argument("box_covering_histogram: need a non-empty cloud in R^3");
    const double extent = cloud_extent(box_cloud);
    const double sample_half = static_cast<double>(lattice_radius) - extent;
    if (sample_half < 4 * epsilon)
        throw std::runtime_error("box_covering_histogram: lattice radius too small relative to the cloud");

    PointGrid grid(box_cloud, epsilon);
    Rng rng(seed);
    CoverHistogram hist;
    hist.epsilon = epsilon;
    hist.samples = samples;
    hist.seed = seed;
    for (long s = 0; s < samples; ++s) {
        RealVec z{rng.uniform(-sample_half, sample_half), rng.uniform(-sample_half, sample_half),
                  rng.uniform(-sample_half, sample_half)};
        int multiplicity = 0;
        IntVec zi(3);
        for (long a = -lattice_radius; a <= lattice_radius; ++a)
            for (long b = -lattice_radius; b <= lattice_radius; ++b)
                for (long c = -lattice_radius; c <= lattice_radius; ++c) {
                    RealVec q{z[0] - a, z[1] - b, z[2] - c};
                    if (norm_inf(q) > extent + epsilon) continue;
                    for (Letter l = 1; l <= 3; ++l)
                        if (grid.near(q, l)) ++multiplicity;
                }
        ++hist.counts[multiplicity];
    }
    return hist;
}

}  // namespace sadic
