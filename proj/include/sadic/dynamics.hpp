#pragma once

#include "sadic/directive.hpp"
#include "sadic/fractal.hpp"
#include "sadic/geometry.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace sadic {

// Point of the torus (1-perp)/Lambda with Lambda = 1-perp intersected with
// Z^d, reduced canonically w.r.t. the basis { e_i - e_j : i != j } for a
// distinguished letter j (default j = d): the representative is
// sum_i a_i (e_i - e_j) with all a_i in [0,1).
struct TorusPoint {
    RealVec rep;  // 3d (general d) representative in 1-perp
};

TorusPoint torus_reduce(const RealVec& x, Letter j = 0);  // j = 0 means j = d
TorusPoint torus_translate(const RealVec& t, const TorusPoint& x, Letter j = 0);

// One step of the domain exchange on the cloud: the unique label whose
// subtile epsilon-contains x (the grid carries epsilon), and x shifted by the
// projection of that letter's basis vector. Absent when zero or two or more
// labels match.
std::optional<std::pair<Letter, RealVec>> domain_exchange_step(const PointGrid& grid,
                                                               const LabeledCloud& cloud,
                                                               const RealVec& x);

struct CodingReport {
    long matched = 0;
    long ambiguous = 0;
    long mismatched = 0;
    long horizon = 0;
};

// Codes the torus orbit of 0 under translation by t by epsilon-membership in
// the subtile clouds (reduced mod the lattice) and compares against the
// limit word.
CodingReport natural_coding_check(const DirectiveSequence& seq, std::size_t depth,
                                  std::size_t min_len, const RealVec& u, const RealVec& t,
                                  long horizon, double epsilon);

// Per-letter max over n <= horizon of |count of i in word[0..n) - n freq_i|.
RealVec bounded_remainder_stats(const Word& word, const RealVec& freq, std::size_t horizon);

struct RecurrencePoint {
    int n = 0;
    long R = 0;
    bool ok = false;  // false when the finite word cannot settle R(n)
};

// Empirical recurrence function R(n) for n <= n_max: R(n) = n - 1 + max gap
// between consecutive occurrences of any length-n factor. ok is false when a
// factor occurs only once (no gap observable).
std::vector<RecurrencePoint> recurrence_estimate(const Word& word, int n_max);

// max over settled entries of R(n)/n (linear-recurrence diagnostic)
double max_recurrence_ratio(const std::vector<RecurrencePoint>& pts);

}  // namespace sadic
