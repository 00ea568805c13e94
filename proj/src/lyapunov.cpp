#include "sadic/lyapunov.hpp"

#include "sadic/cf.hpp"
#include "sadic/geometry.hpp"

#include <cmath>
#include <map>
#include <stdexcept>

namespace sadic {

IntMat wedge2(const IntMat& m) {
    if (m.n != 3) throw std::invalid_argument("wedge2: only d = 3 is supported");
    static const int pairs[3][2] = {{0, 1}, {0, 2}, {1, 2}};
    IntMat r(3);
    for (int I = 0; I < 3; ++I)
        for (int J = 0; J < 3; ++J) {
            int i1 = pairs[I][0], i2 = pairs[I][1];
            int j1 = pairs[J][0], j2 = pairs[J][1];
            r.at(I, J) = m.at(i1, j1) * m.at(i2, j2) - m.at(i1, j2) * m.at(i2, j1);
        }
    return r;
}

namespace {

struct StepMats {
    RealMat mt;         // transpose(M)
    RealMat wedge_t;    // wedge2(transpose(M))
    RealMat inv_t;      // inverse(transpose(M))
    StepMats() : mt(3), wedge_t(3), inv_t(3) {}
};

StepMats precompute(const IntMat& m) {
    StepMats s;
    IntMat t = m.transpose();
    s.mt = to_real(t);
    s.wedge_t = to_real(wedge2(t));
    s.inv_t = to_real(t.inverse_unimodular());
    return s;
}

double renorm(RealVec& v) {
    double n = norm_inf(v);
    if (n <= 0 || !std::isfinite(n)) throw std::runtime_error("lyapunov: carried vector degenerated");
    for (double& x : v) x /= n;
    return std::log(n);
}

}  // namespace

LyapunovReport lyapunov_estimate(const StreamFactory& factory, long n_steps, int trials,
                                 std::uint64_t seed) {
    if (n_steps <= 0 || trials <= 0)
        throw std::invalid_argument("lyapunov_estimate: n_steps and trials must be positive");
    Rng root(seed);

    std::vector<double> t1s, t2s, sums;
    // matrices repeat heavily (three per family); memoize the per-step work
    std::map<std::vector<BigInt>, StepMats> memo;

    for (int trial = 0; trial < trials; ++trial) {
        MatrixStream stream = factory(root.derive(static_cast<std::uint64_t>(trial)));
        RealVec v{1.0, 1.0, 1.0};
        RealVec w{1.0, 1.0, 1.0};
        RealVec vi{1.0, 1.0, 1.0};
        double log_v = 0, log_w = 0, log_vi = 0;
        for (long step = 0; step < n_steps; ++step) {
            IntMat m = stream();
            auto it = memo.find(m.a);
            if (it == memo.end()) it = memo.emplace(m.a, precompute(m)).first;
            const StepMats& s = it->second;
            v = s.mt * v;
            w = s.wedge_t * w;
            vi = s.inv_t * vi;
            log_v += renorm(v);
            log_w += renorm(w);
            log_vi += renorm(vi);
        }
        double t1 = log_v / static_cast<double>(n_steps);
        double t12 = log_w / static_cast<double>(n_steps);
        double t3 = -log_vi / static_cast<double>(n_steps);
        t1s.push_back(t1);
        t2s.push_back(t12 - t1);
        sums.push_back(t12 + t3);
    }

    auto mean_se = [&](const std::vector<double>& xs) {
        double mean = 0;
        for (double x : xs) mean += x;
        mean /= static_cast<double>(xs.size());
        double var = 0;
        for (double x : xs) var += (x - mean) * (x - mean);
        var = xs.size() > 1 ? var / static_cast<double>(xs.size() - 1) : 0.0;
        return std::make_pair(mean, std::sqrt(var / static_cast<double>(xs.size())));
    };

    LyapunovReport rep;
    std::tie(rep.theta1, rep.theta1_se) = mean_se(t1s);
    std::tie(rep.theta2, rep.theta2_se) = mean_se(t2s);
    std::tie(rep.theta_sum, rep.theta_sum_se) = mean_se(sums);
    rep.n_steps = n_steps;
    rep.trials = trials;
    rep.seed = seed;
    return rep;
}

PisotCheck pisot_condition(const LyapunovReport& report) {
    PisotCheck c;
    c.satisfied = report.theta1_lo() > 0 && report.theta2_hi() < 0;
    c.volume_ok = std::fabs(report.theta_sum) < 3 * report.theta_sum_se + 1e-12;
    return c;
}

StreamFactory periodic_stream(std::vector<IntMat> block) {
    if (block.empty()) throw std::invalid_argument("periodic_stream: empty block");
    return [block](Rng) -> MatrixStream {
        auto pos = std::make_shared<std::size_t>(0);
        return [block, pos]() {
            const IntMat& m = block[*pos];
            *pos = (*pos + 1) % block.size();
            return m;
        };
    };
}

StreamFactory iid_stream(std::vector<IntMat> mats) {
    if (mats.empty()) throw std::invalid_argument("iid_stream: empty matrix set");
    return [mats](Rng rng) -> MatrixStream {
        auto state = std::make_shared<Rng>(rng);
        return [mats, state]() { return mats[state->below(mats.size())]; };
    };
}

StreamFactory brun_invariant_stream() {
    return [](Rng rng) -> MatrixStream {
        struct State {
            Rng rng;
            SimplexPoint p;
        };
        auto state = std::make_shared<State>(State{rng, SimplexPoint{}});
        state->p = sample_invariant(1, state->rng.next_u64()).front();
        return [state]() {
            // orbits hitting the x2 = 0 boundary (measure zero) resume from a
            // fresh invariant-density draw
            while (state->p.x2 <= 1e-300)
                state->p = sample_invariant(1, state->rng.next_u64()).front();
            BrunStep s = brun_step(state->p);
            state->p = s.next;
            return incidence(brun_substitutions()[static_cast<std::size_t>(s.branch - 1)]);
        };
    };
}

StreamFactory transposed(StreamFactory factory) {
    return [factory](Rng rng) -> MatrixStream {
        MatrixStream inner = factory(rng);
        return [inner]() { return inner().transpose(); };
    };
}

}  // namespace sadic
