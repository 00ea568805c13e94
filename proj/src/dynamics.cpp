#include "sadic/dynamics.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace sadic {

namespace {

double mod1(double x) {
    double r = x - std::floor(x);
    if (r >= 1.0) r = 0.0;  // guard against rounding at the seam
    return r;
}

}  // namespace

TorusPoint torus_reduce(const RealVec& x, Letter j) {
    const int d = static_cast<int>(x.size());
    if (j == 0) j = d;
    double sum = 0;
    for (double v : x) sum += v;
    if (std::fabs(sum) > 1e-9 * std::max(1.0, norm_inf(x)))
        throw std::invalid_argument("torus_reduce: point not in the plane orthogonal to 1");
    // x = sum_{i != j} a_i (e_i - e_j) with a_i = x_i
    TorusPoint p;
    p.rep.assign(x.size(), 0.0);
    double aj = 0;
    for (int i = 0; i < d; ++i) {
        if (i == j - 1) continue;
        double a = mod1(x[static_cast<std::size_t>(i)]);
        p.rep[static_cast<std::size_t>(i)] = a;
        aj += a;
    }
    p.rep[static_cast<std::size_t>(j - 1)] = -aj;
    return p;
}

TorusPoint torus_translate(const RealVec& t, const TorusPoint& x, Letter j) {
    double sum = 0;
    for (double v : t) sum += v;
    if (std::fabs(sum) > 1e-9 * std::max(1.0, norm_inf(t)))
        throw std::invalid_argument("torus_translate: translation not in the plane orthogonal to 1");
    return torus_reduce(x.rep + t, j);
}

std::optional<std::pair<Letter, RealVec>> domain_exchange_step(const PointGrid& grid,
                                                               const LabeledCloud& cloud,
                                                               const RealVec& x) {
    std::vector<Letter> hits = grid.labels_near(x);
    if (hits.size() != 1) return std::nullopt;
    Letter i = hits.front();
    const int d = static_cast<int>(cloud.u.size());
    RealVec step = project(cloud.u, ones(d), unit_vec(d, i));
    return std::make_pair(i, x + step);
}

CodingReport natural_coding_check(const DirectiveSequence& seq, std::size_t depth,
                                  std::size_t min_len, const RealVec& u, const RealVec& t,
                                  long horizon, double epsilon) {
    const int d = seq.alphabet_size();
    CodingReport rep;
    rep.horizon = horizon;
    if (horizon == 0) return rep;

    LabeledCloud cloud = rauzy_cloud(seq, depth, min_len, u, ones(d));
    if (static_cast<long>(cloud.word.size()) < horizon)
        throw std::invalid_argument("natural_coding_check: prefix shorter than the horizon");

    // reduce the subtile clouds onto the torus once; membership queries then
    // wrap around the seam via the 9 lattice shifts of the reduced cell
    LabeledCloud torus_cloud;
    torus_cloud.u = cloud.u;
    torus_cloud.w = cloud.w;
    torus_cloud.points.reserve(cloud.size());
    torus_cloud.labels = cloud.labels;
    for (const RealVec& p : cloud.points) torus_cloud.points.push_back(torus_reduce(p).rep);
    PointGrid grid(torus_cloud, epsilon);

    std::vector<RealVec> shifts;
    if (d == 3) {
        for (int a = -1; a <= 1; ++a)
            for (int b = -1; b <= 1; ++b)
                shifts.push_back(RealVec{static_cast<double>(a), static_cast<double>(b),
                                         static_cast<double>(-a - b)});
    } else {
        shifts.push_back(RealVec(static_cast<std::size_t>(d), 0.0));
    }

    TorusPoint z = torus_reduce(RealVec(static_cast<std::size_t>(d), 0.0));
    for (long n = 0; n < horizon; ++n) {
        std::vector<Letter> hits;
        for (const RealVec& s : shifts) {
            for (Letter l : grid.labels_near(z.rep + s)) {
                bool seen = false;
                for (Letter e : hits) seen |= (e == l);
                if (!seen) hits.push_back(l);
            }
        }
        Letter truth = cloud.word[static_cast<std::size_t>(n)];
        if (hits.size() == 1) {
            if (hits.front() == truth)
                ++rep.matched;
            else
                ++rep.mismatched;
        } else {
            ++rep.ambiguous;
        }
        z = torus_translate(t, z);
    }
    return rep;
}

RealVec bounded_remainder_stats(const Word& word, const RealVec& freq, std::size_t horizon) {
    const int d = static_cast<int>(freq.size());
    if (word.size() < horizon)
        throw std::invalid_argument("bounded_remainder_stats: word shorter than horizon");
    double fsum = 0;
    for (double f : freq) fsum += f;
    if (std::fabs(fsum - 1.0) > 1e-9)
        throw std::invalid_argument("bounded_remainder_stats: frequencies must sum to 1");
    RealVec worst(static_cast<std::size_t>(d), 0.0);
    std::vector<long> counts(static_cast<std::size_t>(d), 0);
    for (std::size_t n = 1; n <= horizon; ++n) {
        ++counts[static_cast<std::size_t>(word[n - 1] - 1)];
        for (int i = 0; i < d; ++i) {
            double dev = std::fabs(static_cast<double>(counts[static_cast<std::size_t>(i)]) -
                                   static_cast<double>(n) * freq[static_cast<std::size_t>(i)]);
            worst[static_cast<std::size_t>(i)] = std::max(worst[static_cast<std::size_t>(i)], dev);
        }
    }
    return worst;
}

std::vector<RecurrencePoint> recurrence_estimate(const Word& word, int n_max) {
    std::vector<RecurrencePoint> out;
    const long L = static_cast<long>(word.size());
    std::string buf = word.str();
    for (int n = 1; n <= n_max; ++n) {
        RecurrencePoint pt;
        pt.n = n;
        if (L < n) {
            out.push_back(pt);
            continue;
        }
        // last occurrence and max start-to-start gap per length-n factor
        std::unordered_map<std::string, std::pair<long, long>> occ;  // factor -> (last, maxgap)
        for (long p = 0; p + n <= L; ++p) {
            std::string f = buf.substr(static_cast<std::size_t>(p), static_cast<std::size_t>(n));
            auto it = occ.find(f);
            if (it == occ.end())
                occ.emplace(std::move(f), std::make_pair(p, 0L));
            else {
                it->second.second = std::max(it->second.second, p - it->second.first);
                it->second.first = p;
            }
        }
        long maxgap = 0;
        bool ok = true;
        for (auto& [f, v] : occ) {
            (void)f;
            if (v.second == 0) ok = false;  // factor seen once: gap unknown
            maxgap = std::max(maxgap, v.second);
        }
        pt.R = n - 1 + maxgap;
        pt.ok = ok && maxgap > 0;
        out.push_back(pt);
    }
    return out;
}

double max_recurrence_ratio(const std::vector<RecurrencePoint>& pts) {
    double r = 0;
    for (const auto& p : pts)
        if (p.ok) r = std::max(r, static_cast<double>(p.R) / p.n);
    return r;
}

}  // namespace sadic
