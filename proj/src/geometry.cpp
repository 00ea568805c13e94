#include "sadic/geometry.hpp"

#include <cmath>
#include <stdexcept>

namespace sadic {

double dot(const RealVec& a, const RealVec& b) {
    double s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

double norm_inf(const RealVec& a) {
    double s = 0;
    for (double x : a) s = std::max(s, std::fabs(x));
    return s;
}

RealVec operator+(const RealVec& a, const RealVec& b) {
    RealVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

RealVec operator-(const RealVec& a, const RealVec& b) {
    RealVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

RealVec operator*(double c, const RealVec& a) {
    RealVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
    return r;
}

RealVec unit_vec(int d, Letter i) {
    RealVec r(static_cast<std::size_t>(d), 0.0);
    r[static_cast<std::size_t>(i - 1)] = 1.0;
    return r;
}

RealVec ones(int d) { return RealVec(static_cast<std::size_t>(d), 1.0); }

RealVec to_real(const IntVec& v) {
    RealVec r(static_cast<std::size_t>(v.dim()));
    for (int i = 0; i < v.dim(); ++i) r[static_cast<std::size_t>(i)] = v[i].convert_to<double>();
    return r;
}

RealVec normalize_sum(const RealVec& v) {
    double s = 0;
    for (double x : v) s += x;
    if (std::fabs(s) < 1e-300) throw std::invalid_argument("normalize_sum: zero-sum vector");
    RealVec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i] / s;
    return r;
}

RealVec RealMat::operator*(const RealVec& v) const {
    RealVec r(static_cast<std::size_t>(n), 0.0);
    for (int i = 0; i < n; ++i) {
        double s = 0;
        for (int j = 0; j < n; ++j) s += at(i, j) * v[static_cast<std::size_t>(j)];
        r[static_cast<std::size_t>(i)] = s;
    }
    return r;
}

RealMat to_real(const IntMat& m) {
    RealMat r(m.n);
    for (int i = 0; i < m.n; ++i)
        for (int j = 0; j < m.n; ++j) r.at(i, j) = m.at(i, j).convert_to<double>();
    return r;
}

RealVec project(const RealVec& u, const RealVec& w, const RealVec& x) {
    double wu = dot(w, u);
    double scale = norm_inf(w) * norm_inf(u);
    if (std::fabs(wu) <= 1e-12 * std::max(scale, 1e-300))
        throw std::invalid_argument("project: <w,u> is numerically zero, projection undefined");
    double t = dot(w, x) / wu;
    RealVec r(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) r[i] = x[i] - t * u[i];
    return r;
}

bool in_hyperplane(const IntVec& w, const IntVec& x, Letter i) {
    BigInt s = w.dot(x);
    return s >= 0 && s < w[i - 1];
}

bool in_hyperplane(const RealVec& w, const IntVec& x, Letter i) {
    double s = 0, xs = 0;
    for (int k = 0; k < x.dim(); ++k) {
        double xv = x[k].convert_to<double>();
        s += w[static_cast<std::size_t>(k)] * xv;
        xs += std::fabs(xv);
    }
    double tol = 1e-12 * norm_inf(w) * std::max(1.0, xs);
    return s >= -tol && s < w[static_cast<std::size_t>(i - 1)] - tol;
}

namespace {

template <typename WVec, typename Member>
Patch enumerate_patch(const WVec& w, int d, long radius, Member member) {
    Patch out;
    IntVec x(d);
    std::vector<long> idx(static_cast<std::size_t>(d), -radius);
    while (true) {
        for (int k = 0; k < d; ++k) x[k] = idx[static_cast<std::size_t>(k)];
        for (Letter i = 1; i <= d; ++i)
            if (member(w, x, i)) out.insert(Face{x, i});
        int k = 0;
        while (k < d && ++idx[static_cast<std::size_t>(k)] > radius) {
            idx[static_cast<std::size_t>(k)] = -radius;
            ++k;
        }
        if (k == d) break;
    }
    return out;
}

}  // namespace

Patch hyperplane_patch(const IntVec& w, long radius) {
    return enumerate_patch(w, w.dim(), radius,
                           [](const IntVec& wv, const IntVec& x, Letter i) { return in_hyperplane(wv, x, i); });
}

Patch hyperplane_patch(const RealVec& w, long radius) {
    return enumerate_patch(w, static_cast<int>(w.size()), radius,
                           [](const RealVec& wv, const IntVec& x, Letter i) { return in_hyperplane(wv, x, i); });
}

Patch dual_image(const Substitution& s, const Face& f) {
    const int d = s.alphabet_size();
    IntMat minv = incidence(s).inverse_unimodular();
    Patch out;
    for (Letter j = 1; j <= d; ++j) {
        const Word& img = s.image(j);
        IntVec prefix(d);
        for (std::size_t pos = 0; pos < img.size(); ++pos) {
            if (img[pos] == f.i) out.insert(Face{minv * (f.x + prefix), j});
            ++prefix[img[pos] - 1];
        }
    }
    return out;
}

Patch dual_image(const Substitution& s, const Patch& p) {
    // share the inverse across faces
    const int d = s.alphabet_size();
    IntMat minv = incidence(s).inverse_unimodular();
    Patch out;
    for (const Face& f : p) {
        for (Letter j = 1; j <= d; ++j) {
            const Word& img = s.image(j);
            IntVec prefix(d);
            for (std::size_t pos = 0; pos < img.size(); ++pos) {
                if (img[pos] == f.i) out.insert(Face{minv * (f.x + prefix), j});
                ++prefix[img[pos] - 1];
            }
        }
    }
    return out;
}

Patch dual_image_window(const DirectiveSequence& seq, std::size_t k, std::size_t l, const Patch& p) {
    Patch cur = p;
    for (std::size_t n = k; n < l; ++n) cur = dual_image(seq.term(n), cur);
    return cur;
}

RealVec right_eigenvector_approx(const DirectiveSequence& seq, std::size_t n) {
    const int d = seq.alphabet_size();
    IntMat m = product_matrix(seq, 0, n);
    RealVec acc(static_cast<std::size_t>(d), 0.0);
    for (int j = 0; j < d; ++j) {
        RealVec col(static_cast<std::size_t>(d));
        double s = 0;
        for (int i = 0; i < d; ++i) {
            col[static_cast<std::size_t>(i)] = m.at(i, j).convert_to<double>();
            s += col[static_cast<std::size_t>(i)];
        }
        if (s <= 0) throw std::runtime_error("right_eigenvector_approx: zero column in product");
        for (int i = 0; i < d; ++i) acc[static_cast<std::size_t>(i)] += col[static_cast<std::size_t>(i)] / s;
    }
    return normalize_sum(acc);
}

RealVec recurrent_left_vector_approx(const DirectiveSequence& seq, std::size_t n) {
    const int d = seq.alphabet_size();
    IntMat mt = product_matrix(seq, 0, n).transpose();
    RealVec v(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) {
        double s = 0;
        for (int j = 0; j < d; ++j) s += mt.at(i, j).convert_to<double>();
        v[static_cast<std::size_t>(i)] = s;
    }
    return normalize_sum(v);
}

double eigen_residual(const IntMat& m, const RealVec& u) {
    RealMat rm = to_real(m);
    RealVec mu = rm * u;
    double num = 0, den = 0;
    for (double x : mu) num += x;
    for (double x : u) den += x;
    if (std::fabs(den) < 1e-300) throw std::invalid_argument("eigen_residual: zero-sum vector");
    double lambda = num / den;
    return norm_inf(mu - lambda * u);
}

RealVec pulled_back_direction(const DirectiveSequence& seq, std::size_t n, const RealVec& u) {
    IntMat inv = product_matrix(seq, 0, n).inverse_unimodular();
    return to_real(inv) * u;
}

RealVec pushed_forward_normal(const DirectiveSequence& seq, std::size_t n, const RealVec& w) {
    IntMat mt = product_matrix(seq, 0, n).transpose();
    return to_real(mt) * w;
}

std::vector<SetEqPiece> set_equation_decompose(const DirectiveSequence& seq, std::size_t k,
                                               std::size_t l, const Face& f, const RealVec& u,
                                               const RealVec& w) {
    if (k >= l) throw std::invalid_argument("set_equation_decompose: need k < l");
    Patch pieces = dual_image_window(seq, k, l, Patch{f});
    RealVec ul = pulled_back_direction(seq, l, u);
    RealVec wl = pushed_forward_normal(seq, l, w);
    RealMat mkl = to_real(product_matrix(seq, k, l));
    std::vector<SetEqPiece> out;
    out.reserve(pieces.size());
    for (const Face& piece : pieces) {
        RealVec y = to_real(piece.x);
        out.push_back(SetEqPiece{mkl * project(ul, wl, y), piece});
    }
    return out;
}

}  // namespace sadic
