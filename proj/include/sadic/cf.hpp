#pragma once

#include "sadic/directive.hpp"
#include "sadic/geometry.hpp"
#include "sadic/symbolic.hpp"
#include "sadic/util.hpp"

#include <array>
#include <optional>
#include <utility>
#include <vector>

namespace sadic {

// Point of the simplex Delta_2 = { 0 <= x1 <= x2 <= 1 }.
struct SimplexPoint {
    double x1 = 0;
    double x2 = 0;
};

bool in_simplex(const SimplexPoint& p, double tol = 1e-12);

struct BrunStep {
    int branch = 0;  // 1, 2 or 3
    SimplexPoint next;
};

// One step of the additive Brun map on Delta_2. Branches:
//   1: x2 <= 1/2        -> (x1/(1-x2), x2/(1-x2))
//   2: 1/2 <= x2 <= 1-x1 -> (x1/x2, (1-x2)/x2)
//   3: 1-x1 <= x2        -> ((1-x2)/x2, x1/x2)
// Boundary points take the smallest applicable branch index. Throws when
// x2 = 0 or when the image leaves Delta_2 beyond tolerance.
BrunStep brun_step(const SimplexPoint& p);

struct BrunExpansion {
    std::vector<int> digits;
    bool complete = false;  // false if a division guard stopped the orbit early
};

// First n branch indices of the Brun expansion of p; regenerating from the
// same p is bit-identical.
BrunExpansion brun_expand(const SimplexPoint& p, std::size_t n);

// Exact-rational variant for rational inputs.
BrunExpansion brun_expand_exact(const Rational& x1, const Rational& x2, std::size_t n);

// Substitution families (3-letter alphabet).
const std::array<Substitution, 3>& brun_substitutions();        // beta_1, beta_2, beta_3
const std::array<Substitution, 3>& ar_substitutions();          // alpha_1, alpha_2, alpha_3
const std::array<Substitution, 3>& brun_sigma_substitutions();  // sigma_1^Br, sigma_2^Br, sigma_3^Br

// Letter-exchange substitution swapping i and j.
Substitution transposition_substitution(int d, Letter i, Letter j);

// Verifies, as an equality of substitutions, the product relation between the
// beta and sigma^Br families:
//   beta_{i0} ... beta_{in} = sigma_2^Br sigma_{i0}^Br ... sigma_{i_{n-1}}^Br pi
// with pi = (23), id, (12) according to i_n = 1, 2, 3.
bool relate_brun(const std::vector<int>& indices);

// The directive sequence (beta_{i1}, beta_{i2}, ...) driven by the Brun orbit
// of p; evaluation past a division guard throws.
DirectiveSequence brun_directive(const SimplexPoint& p);

// Generalized right eigenvector of the Brun expansion of p: (x1, x2, 1)
// normalized to sum 1.
RealVec brun_frequency_vector(const SimplexPoint& p);

// Fully subtractive Arnoux-Rauzy step: if some coordinate exceeds the sum of
// the others, subtract them from it. Returns the letter and the new vector;
// absent when no coordinate dominates. Recomposition is exact:
// incidence(alpha_i) * v' = v.
std::optional<std::pair<Letter, RealVec>> ar_step(const RealVec& v);
std::optional<std::pair<Letter, IntVec>> ar_step_exact(const IntVec& v);

// Density of the invariant probability measure of the Brun map on Delta_2:
// h(x1,x2) = 12 / (pi^2 x2 (1+x1)). Throws at x2 = 0.
double invariant_density(const SimplexPoint& p);

// Deterministic sampler for the invariant density (rejection for the x2
// marginal against a uniform envelope with bound 12/pi^2, exact inverse-CDF
// for x1 given x2).
std::vector<SimplexPoint> sample_invariant(std::size_t n, std::uint64_t seed);

}  // namespace sadic
