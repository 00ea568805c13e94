#pragma once

#include "sadic/symbolic.hpp"
#include "sadic/util.hpp"

#include <cstdint>
#include <functional>
#include <vector>

namespace sadic {

// Second exterior power of a 3x3 matrix in the ordered basis
// e1^e2, e1^e3, e2^e3; multiplicative: wedge2(AB) = wedge2(A) wedge2(B).
IntMat wedge2(const IntMat& m);

// A stream of cocycle matrices; calling it yields M_0, M_1, ... in order.
using MatrixStream = std::function<IntMat()>;
// Per-trial stream factory (the Rng decouples trials deterministically).
using StreamFactory = std::function<MatrixStream(Rng)>;

struct LyapunovReport {
    double theta1 = 0, theta1_se = 0;
    double theta2 = 0, theta2_se = 0;
    double theta_sum = 0, theta_sum_se = 0;  // theta1 + theta2 + theta3
    long n_steps = 0;
    int trials = 0;
    std::uint64_t seed = 0;

    double theta1_lo() const { return theta1 - 1.96 * theta1_se; }
    double theta1_hi() const { return theta1 + 1.96 * theta1_se; }
    double theta2_lo() const { return theta2 - 1.96 * theta2_se; }
    double theta2_hi() const { return theta2 + 1.96 * theta2_se; }
};

// Monte-Carlo estimate of the top two Lyapunov exponents of the transposed
// incidence cocycle: carried-vector renormalization in the max norm for
// theta1, the same scheme on the second exterior power for theta1+theta2,
// and an inverse-cocycle run for the bottom exponent entering theta_sum.
// Standard errors are across trials.
LyapunovReport lyapunov_estimate(const StreamFactory& factory, long n_steps, int trials,
                                 std::uint64_t seed);

struct PisotCheck {
    bool satisfied = false;   // CI(theta1) in (0,inf) and CI(theta2) in (-inf,0)
    bool volume_ok = false;   // |theta_sum| < 3 SE (unimodular volume conservation)
    double confidence = 0.95;
};

PisotCheck pisot_condition(const LyapunovReport& report);

// Stream factories.
StreamFactory periodic_stream(std::vector<IntMat> block);
StreamFactory iid_stream(std::vector<IntMat> mats);
// Brun matrices along the orbit of a point drawn from the invariant density.
StreamFactory brun_invariant_stream();
// Transposed variant of any factory (for the transpose-invariance check).
StreamFactory transposed(StreamFactory factory);

}  // namespace sadic
