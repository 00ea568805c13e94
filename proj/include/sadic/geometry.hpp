#pragma once

#include "sadic/directive.hpp"
#include "sadic/symbolic.hpp"

#include <set>
#include <vector>

namespace sadic {

using RealVec = std::vector<double>;

double dot(const RealVec& a, const RealVec& b);
double norm_inf(const RealVec& a);
RealVec operator+(const RealVec& a, const RealVec& b);
RealVec operator-(const RealVec& a, const RealVec& b);
RealVec operator*(double c, const RealVec& a);
RealVec unit_vec(int d, Letter i);
RealVec ones(int d);
RealVec to_real(const IntVec& v);
// normalize so the entries sum to 1
RealVec normalize_sum(const RealVec& v);

// dense real matrix helpers for mapping exact matrices onto clouds
struct RealMat {
    int n = 0;
    std::vector<double> a;
    explicit RealMat(int dim) : n(dim), a(static_cast<std::size_t>(dim) * dim) {}
    double& at(int i, int j) { return a[static_cast<std::size_t>(i) * n + j]; }
    double at(int i, int j) const { return a[static_cast<std::size_t>(i) * n + j]; }
    RealVec operator*(const RealVec& v) const;
};
RealMat to_real(const IntMat& m);

// A face [x, i] of a discrete hyperplane: integer translate plus letter type.
struct Face {
    IntVec x;
    Letter i = 1;

    friend bool operator==(const Face&, const Face&) = default;
    friend bool operator<(const Face& a, const Face& b) {
        if (a.x < b.x) return true;
        if (b.x < a.x) return false;
        return a.i < b.i;
    }
};

using Patch = std::set<Face>;

// Projection of x along the direction u onto the hyperplane orthogonal to w:
// x - (<w,x>/<w,u>) u. Throws when <w,u> is numerically degenerate.
RealVec project(const RealVec& u, const RealVec& w, const RealVec& x);

// Membership [x,i] in Gamma(w) = { 0 <= <w,x> < <w,e_i> }.
bool in_hyperplane(const IntVec& w, const IntVec& x, Letter i);          // exact
bool in_hyperplane(const RealVec& w, const IntVec& x, Letter i);         // tolerance 1e-12

// All faces of Gamma(w) with |x|_inf <= radius.
Patch hyperplane_patch(const IntVec& w, long radius);
Patch hyperplane_patch(const RealVec& w, long radius);

// Dual substitution E1*(sigma) on faces and patches. Requires sigma
// unimodular; all face coordinates stay exact integers.
Patch dual_image(const Substitution& s, const Face& f);
Patch dual_image(const Substitution& s, const Patch& p);
// E1*(sigma_{[k,l)}) applied to a patch: by contravariance this is the dual of
// sigma_k, then sigma_{k+1}, ..., then sigma_{l-1}.
Patch dual_image_window(const DirectiveSequence& seq, std::size_t k, std::size_t l, const Patch& p);

// Generalized right eigenvector approximation at depth n: sum-normalized
// average of the column directions of M_{[0,n)}.
RealVec right_eigenvector_approx(const DirectiveSequence& seq, std::size_t n);

// Sum-normalized transpose(M_{[0,n)}) * 1 (recurrent-left-eigenvector proxy).
RealVec recurrent_left_vector_approx(const DirectiveSequence& seq, std::size_t n);

// Residual |M u - lambda u|_inf with lambda the Rayleigh-style quotient
// <1, M u>/<1, u>; diagnostic for eigenvector quality.
double eigen_residual(const IntMat& m, const RealVec& u);

// One piece of the set equation: the tile [y,j] of the depth-l decomposition
// together with the offset M_{[k,l)} pi^{(l)} y it contributes at depth k.
struct SetEqPiece {
    RealVec offset;
    Face face;
};

// Decomposition of pi^{(k)} x + R^{(k)}(i) into depth-l pieces; pi^{(n)}
// projects along (M_{[0,n)})^{-1} u onto the hyperplane orthogonal to
// transpose(M_{[0,n)}) w.
std::vector<SetEqPiece> set_equation_decompose(const DirectiveSequence& seq, std::size_t k,
                                               std::size_t l, const Face& f, const RealVec& u,
                                               const RealVec& w);

// The projection direction (M_{[0,n)})^{-1} u and plane normal
// transpose(M_{[0,n)}) w used at depth n.
RealVec pulled_back_direction(const DirectiveSequence& seq, std::size_t n, const RealVec& u);
RealVec pushed_forward_normal(const DirectiveSequence& seq, std::size_t n, const RealVec& w);

}  // namespace sadic
