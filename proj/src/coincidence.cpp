#include "sadic/coincidence.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace sadic {

namespace {

// images sigma_{[0,l)}(j) for all letters j
std::vector<Word> window_images(const DirectiveSequence& seq, std::size_t l) {
    const int d = seq.alphabet_size();
    std::vector<Word> imgs;
    imgs.reserve(static_cast<std::size_t>(d));
    for (Letter j = 1; j <= d; ++j) {
        Word w({j});
        for (std::size_t n = l; n-- > 0;) w = apply(seq.term(n), w);
        imgs.push_back(std::move(w));
    }
    return imgs;
}

// prefix abelianization before each position (strong) or suffix
// abelianization after each position (negative)
std::vector<IntVec> prefix_abelianizations(const Word& w, int d) {
    std::vector<IntVec> out;
    out.reserve(w.size());
    IntVec acc(d);
    for (std::size_t k = 0; k < w.size(); ++k) {
        out.push_back(acc);
        ++acc[w[k] - 1];
    }
    return out;
}

std::vector<IntVec> suffix_abelianizations(const Word& w, int d) {
    std::vector<IntVec> out(w.size(), IntVec(d));
    IntVec acc(d);
    for (std::size_t k = w.size(); k-- > 0;) {
        out[k] = acc;
        ++acc[w[k] - 1];
    }
    return out;
}

std::optional<CoincidenceWitness> coincidence_search(const DirectiveSequence& seq, std::size_t l_max,
                                                     CoincidenceWitness::Kind kind) {
    const int d = seq.alphabet_size();
    for (std::size_t l = 1; l <= l_max; ++l) {
        std::vector<Word> imgs = window_images(seq, l);
        std::vector<std::vector<IntVec>> abel;
        abel.reserve(imgs.size());
        for (const Word& w : imgs)
            abel.push_back(kind == CoincidenceWitness::Kind::strong ? prefix_abelianizations(w, d)
                                                                    : suffix_abelianizations(w, d));
        CoincidenceWitness wit;
        wit.kind = kind;
        wit.l = l;
        bool all = true;
        for (Letter j1 = 1; j1 <= d && all; ++j1) {
            for (Letter j2 = j1 + 1; j2 <= d && all; ++j2) {
                const Word& w1 = imgs[static_cast<std::size_t>(j1 - 1)];
                const Word& w2 = imgs[static_cast<std::size_t>(j2 - 1)];
                // positions of (letter, abelianization) in w1, matched against w2
                std::map<std::pair<Letter, IntVec>, std::size_t> seen;
                for (std::size_t p = 0; p < w1.size(); ++p)
                    seen.emplace(std::make_pair(w1[p], abel[static_cast<std::size_t>(j1 - 1)][p]), p);
                bool found = false;
                for (std::size_t p = 0; p < w2.size() && !found; ++p) {
                    auto it = seen.find({w2[p], abel[static_cast<std::size_t>(j2 - 1)][p]});
                    if (it != seen.end()) {
                        wit.pairs.push_back(CoincidenceWitness::PairCert{
                            j1, j2, w2[p], it->second, p, abel[static_cast<std::size_t>(j2 - 1)][p]});
                        found = true;
                    }
                }
                if (!found) all = false;
            }
        }
        if (all) return wit;
    }
    return std::nullopt;
}

}  // namespace

std::optional<CoincidenceWitness> strong_coincidence(const DirectiveSequence& seq, std::size_t l_max) {
    return coincidence_search(seq, l_max, CoincidenceWitness::Kind::strong);
}

std::optional<CoincidenceWitness> negative_strong_coincidence(const DirectiveSequence& seq,
                                                              std::size_t l_max) {
    return coincidence_search(seq, l_max, CoincidenceWitness::Kind::negative_strong);
}

bool verify_coincidence(const DirectiveSequence& seq, const CoincidenceWitness& w) {
    const int d = seq.alphabet_size();
    std::vector<Word> imgs = window_images(seq, w.l);
    // every unordered pair must be certified
    std::size_t expected = static_cast<std::size_t>(d) * (d - 1) / 2;
    if (w.pairs.size() != expected) return false;
    for (const auto& cert : w.pairs) {
        if (cert.j1 < 1 || cert.j1 > d || cert.j2 < 1 || cert.j2 > d || cert.j1 == cert.j2) return false;
        const Word& w1 = imgs[static_cast<std::size_t>(cert.j1 - 1)];
        const Word& w2 = imgs[static_cast<std::size_t>(cert.j2 - 1)];
        if (cert.pos1 >= w1.size() || cert.pos2 >= w2.size()) return false;
        if (w1[cert.pos1] != cert.i || w2[cert.pos2] != cert.i) return false;
        auto side = [&](const Word& ww, std::size_t pos) {
            Word part;
            if (w.kind == CoincidenceWitness::Kind::strong) {
                for (std::size_t k = 0; k < pos; ++k) part.push_back(ww[k]);
            } else {
                for (std::size_t k = pos + 1; k < ww.size(); ++k) part.push_back(ww[k]);
            }
            return abelianize(part, d);
        };
        if (!(side(w1, cert.pos1) == side(w2, cert.pos2))) return false;
        if (!(side(w1, cert.pos1) == cert.abel)) return false;
    }
    return true;
}

namespace {

// faces [y,j] of Gamma(w_int) with |pi_{ut,1}(y - z)|_inf <= C + tol,
// enumerated exactly inside a box derived from the projection geometry
std::vector<Face> gamma_ball(const IntVec& w_int, const RealVec& ut, const RealVec& z, double C,
                             std::size_t face_budget) {
    const int d = w_int.dim();
    const RealVec one = ones(d);
    const double one_ut = dot(one, ut);
    if (std::fabs(one_ut) < 1e-300) throw std::runtime_error("gamma_ball: degenerate direction");

    // bound |s| in y - z = pi(y-z) + s*ut from <w, y> in [0, max_i w_i)
    double w_norm1 = 0, w_max = 0, wz = 0;
    RealVec w_real(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) {
        double wi = w_int[i].convert_to<double>();
        w_real[static_cast<std::size_t>(i)] = wi;
        w_norm1 += std::fabs(wi);
        w_max = std::max(w_max, wi);
        wz += wi * z[static_cast<std::size_t>(i)];
    }
    double w_ut = dot(w_real, ut);
    if (std::fabs(w_ut) < 1e-300) throw std::runtime_error("gamma_ball: normal orthogonal to direction");
    double s_bound = (w_max + std::fabs(wz) + w_norm1 * C) / std::fabs(w_ut);
    double half = norm_inf(z) + C + s_bound * norm_inf(ut) + 1.0;
    long B = static_cast<long>(std::ceil(half));
    double volume = std::pow(2.0 * B + 1.0, d) * d;
    if (volume > static_cast<double>(face_budget))
        throw std::runtime_error("gamma_ball: enumeration box of " + std::to_string(volume) +
                                 " faces exceeds the budget; raise n or the budget");

    std::vector<Face> out;
    IntVec y(d);
    std::vector<long> idx(static_cast<std::size_t>(d), -B);
    while (true) {
        for (int k = 0; k < d; ++k) y[k] = idx[static_cast<std::size_t>(k)];
        // cheap projection test first, exact membership second
        RealVec diff(static_cast<std::size_t>(d));
        for (int k = 0; k < d; ++k)
            diff[static_cast<std::size_t>(k)] = static_cast<double>(idx[static_cast<std::size_t>(k)]) -
                                                 z[static_cast<std::size_t>(k)];
        double t = dot(one, diff) / one_ut;
        double proj_norm = 0;
        for (int k = 0; k < d; ++k)
            proj_norm = std::max(proj_norm, std::fabs(diff[static_cast<std::size_t>(k)] -
                                                      t * ut[static_cast<std::size_t>(k)]));
        if (proj_norm <= C + 1e-9) {
            for (Letter i = 1; i <= d; ++i)
                if (in_hyperplane(w_int, y, i)) out.push_back(Face{y, i});
        }
        int k = 0;
        while (k < d && ++idx[static_cast<std::size_t>(k)] > B) {
            idx[static_cast<std::size_t>(k)] = -B;
            ++k;
        }
        if (k == d) break;
    }
    return out;
}

IntVec transpose_product_one(const DirectiveSequence& seq, std::size_t n) {
    const int d = seq.alphabet_size();
    IntMat mt = product_matrix(seq, 0, n).transpose();
    IntVec one(d);
    for (int i = 0; i < d; ++i) one[i] = 1;
    return mt * one;
}

}  // namespace

std::optional<GeometricWitness> geometric_coincidence_check(const DirectiveSequence& seq,
                                                            std::size_t n, long balance,
                                                            const RealVec& u,
                                                            std::size_t face_budget) {
    if (balance < 0) throw std::invalid_argument("geometric_coincidence_check: balance must be >= 0");
    const int d = seq.alphabet_size();
    IntVec w_int = transpose_product_one(seq, n);
    RealVec ut = pulled_back_direction(seq, n, normalize_sum(u));

    for (Letter i = 1; i <= d; ++i) {
        Patch dual = dual_image_window(seq, 0, n, Patch{Face{IntVec(d), i}});
        // candidate centers: dual-patch faces in deterministic order, then
        // their centroid
        std::vector<RealVec> candidates;
        RealVec centroid(static_cast<std::size_t>(d), 0.0);
        for (const Face& f : dual) {
            RealVec y = to_real(f.x);
            for (int k = 0; k < d; ++k) centroid[static_cast<std::size_t>(k)] += y[static_cast<std::size_t>(k)];
            candidates.push_back(std::move(y));
        }
        if (!dual.empty())
            candidates.push_back((1.0 / static_cast<double>(dual.size())) * centroid);

        for (const RealVec& z : candidates) {
            std::vector<Face> ball = gamma_ball(w_int, ut, z, static_cast<double>(balance), face_budget);
            if (ball.empty()) continue;
            bool contained = true;
            for (const Face& f : ball)
                if (dual.find(f) == dual.end()) { contained = false; break; }
            if (contained) {
                GeometricWitness wit;
                wit.n = n;
                wit.balance = balance;
                wit.i = i;
                wit.z = z;
                wit.ball_faces = ball.size();
                return wit;
            }
        }
    }
    return std::nullopt;
}

bool verify_geometric(const DirectiveSequence& seq, const GeometricWitness& w, const RealVec& u,
                      std::size_t face_budget) {
    const int d = seq.alphabet_size();
    IntVec w_int = transpose_product_one(seq, w.n);
    RealVec ut = pulled_back_direction(seq, w.n, normalize_sum(u));
    std::vector<Face> ball = gamma_ball(w_int, ut, w.z, static_cast<double>(w.balance), face_budget);
    if (ball.size() != w.ball_faces || ball.empty()) return false;
    Patch dual = dual_image_window(seq, 0, w.n, Patch{Face{IntVec(d), w.i}});
    for (const Face& f : ball)
        if (dual.find(f) == dual.end()) return false;
    return true;
}

bool geometric_finiteness_check(const DirectiveSequence& seq, std::size_t n, long radius) {
    if (radius < 0) throw std::invalid_argument("geometric_finiteness_check: radius must be >= 0");
    const int d = seq.alphabet_size();
    IntVec w_int = transpose_product_one(seq, n);
    Patch ball = hyperplane_patch(w_int, radius);
    Patch covered;
    for (Letter i = 1; i <= d; ++i) {
        Patch dual = dual_image_window(seq, 0, n, Patch{Face{IntVec(d), i}});
        covered.insert(dual.begin(), dual.end());
    }
    return std::all_of(ball.begin(), ball.end(),
                       [&](const Face& f) { return covered.find(f) != covered.end(); });
}

}  // namespace sadic
