#include "sadic/cf.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace sadic {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

bool in_simplex(const SimplexPoint& p, double tol) {
    return p.x1 >= -tol && p.x1 <= p.x2 + tol && p.x2 <= 1 + tol;
}

BrunStep brun_step(const SimplexPoint& p) {
    if (!in_simplex(p)) throw std::invalid_argument("brun_step: point outside Delta_2");
    if (p.x2 <= 0) throw std::domain_error("brun_step: x2 = 0, map undefined");
    BrunStep r;
    if (p.x2 <= 0.5) {
        r.branch = 1;
        r.next = {p.x1 / (1 - p.x2), p.x2 / (1 - p.x2)};
    } else if (p.x2 <= 1 - p.x1) {
        r.branch = 2;
        r.next = {p.x1 / p.x2, (1 - p.x2) / p.x2};
    } else {
        r.branch = 3;
        r.next = {(1 - p.x2) / p.x2, p.x1 / p.x2};
    }
    if (!in_simplex(r.next))
        throw std::runtime_error("brun_step: image left Delta_2 beyond tolerance (numeric drift)");
    // clamp away harmless negative rounding noise
    r.next.x1 = std::max(r.next.x1, 0.0);
    r.next.x2 = std::min(std::max(r.next.x2, r.next.x1), 1.0);
    return r;
}

BrunExpansion brun_expand(const SimplexPoint& p, std::size_t n) {
    BrunExpansion e;
    e.digits.reserve(n);
    SimplexPoint cur = p;
    for (std::size_t k = 0; k < n; ++k) {
        if (cur.x2 <= 0) return e;  // guard: orbit reached the boundary
        BrunStep s = brun_step(cur);
        e.digits.push_back(s.branch);
        cur = s.next;
    }
    e.complete = true;
    return e;
}

BrunExpansion brun_expand_exact(const Rational& x1, const Rational& x2, std::size_t n) {
    if (x1 < 0 || x1 > x2 || x2 > 1) throw std::invalid_argument("brun_expand_exact: point outside Delta_2");
    BrunExpansion e;
    e.digits.reserve(n);
    Rational a = x1, b = x2;
    const Rational half(1, 2);
    for (std::size_t k = 0; k < n; ++k) {
        if (b == 0) return e;
        if (b <= half) {
            e.digits.push_back(1);
            Rational d = 1 - b;
            a = a / d;
            b = b / d;
        } else if (b <= 1 - a) {
            e.digits.push_back(2);
            Rational na = a / b, nb = (1 - b) / b;
            a = na;
            b = nb;
        } else {
            e.digits.push_back(3);
            Rational na = (1 - b) / b, nb = a / b;
            a = na;
            b = nb;
        }
    }
    e.complete = true;
    return e;
}

const std::array<Substitution, 3>& brun_substitutions() {
    static const std::array<Substitution, 3> betas = {
        Substitution({Word::parse("1"), Word::parse("23"), Word::parse("3")}),
        Substitution({Word::parse("1"), Word::parse("3"), Word::parse("23")}),
        Substitution({Word::parse("3"), Word::parse("1"), Word::parse("23")}),
    };
    return betas;
}

const std::array<Substitution, 3>& ar_substitutions() {
    // alpha_i: i -> i, j -> j i for j != i
    static const std::array<Substitution, 3> alphas = {
        Substitution({Word::parse("1"), Word::parse("21"), Word::parse("31")}),
        Substitution({Word::parse("12"), Word::parse("2"), Word::parse("32")}),
        Substitution({Word::parse("13"), Word::parse("23"), Word::parse("3")}),
    };
    return alphas;
}

const std::array<Substitution, 3>& brun_sigma_substitutions() {
    static const std::array<Substitution, 3> sigmas = {
        Substitution({Word::parse("1"), Word::parse("2"), Word::parse("32")}),
        Substitution({Word::parse("1"), Word::parse("3"), Word::parse("23")}),
        Substitution({Word::parse("2"), Word::parse("3"), Word::parse("13")}),
    };
    return sigmas;
}

Substitution transposition_substitution(int d, Letter i, Letter j) {
    std::vector<Word> imgs;
    imgs.reserve(static_cast<std::size_t>(d));
    for (Letter a = 1; a <= d; ++a) {
        Letter b = a == i ? j : a == j ? i : a;
        imgs.push_back(Word({b}));
    }
    return Substitution(std::move(imgs));
}

bool relate_brun(const std::vector<int>& indices) {
    if (indices.empty()) throw std::invalid_argument("relate_brun: empty index list");
    const auto& beta = brun_substitutions();
    const auto& sig = brun_sigma_substitutions();
    Substitution lhs = beta[static_cast<std::size_t>(indices[0] - 1)];
    for (std::size_t k = 1; k < indices.size(); ++k)
        lhs = compose(lhs, beta[static_cast<std::size_t>(indices[k] - 1)]);

    Substitution rhs = sig[1];  // sigma_2^Br
    for (std::size_t k = 0; k + 1 < indices.size(); ++k)
        rhs = compose(rhs, sig[static_cast<std::size_t>(indices[k] - 1)]);
    const int last = indices.back();
    if (last == 1)
        rhs = compose(rhs, transposition_substitution(3, 2, 3));
    else if (last == 3)
        rhs = compose(rhs, transposition_substitution(3, 1, 2));
    return lhs == rhs;
}

DirectiveSequence brun_directive(const SimplexPoint& p) {
    if (!in_simplex(p)) throw std::invalid_argument("brun_directive: point outside Delta_2");
    std::ostringstream os;
    os.precision(17);
    os << "brun: " << p.x1 << " " << p.x2;
    auto state = std::make_shared<SimplexPoint>(p);
    const auto& beta = brun_substitutions();
    auto next = [state, &beta]() {
        if (state->x2 <= 0)
            throw std::runtime_error("brun_directive: orbit hit the x2 = 0 boundary, expansion ends");
        BrunStep s = brun_step(*state);
        *state = s.next;
        return beta[static_cast<std::size_t>(s.branch - 1)];
    };
    return DirectiveSequence::generated(3, next, os.str());
}

RealVec brun_frequency_vector(const SimplexPoint& p) {
    return normalize_sum(RealVec{p.x1, p.x2, 1.0});
}

std::optional<std::pair<Letter, RealVec>> ar_step(const RealVec& v) {
    const int d = static_cast<int>(v.size());
    double total = 0;
    for (double x : v) {
        if (x <= 0) throw std::invalid_argument("ar_step: vector must be positive");
        total += x;
    }
    for (int i = 0; i < d; ++i) {
        double rest = total - v[static_cast<std::size_t>(i)];
        if (v[static_cast<std::size_t>(i)] > rest) {
            RealVec r = v;
            r[static_cast<std::size_t>(i)] -= rest;
            return std::make_pair(static_cast<Letter>(i + 1), r);
        }
    }
    return std::nullopt;
}

std::optional<std::pair<Letter, IntVec>> ar_step_exact(const IntVec& v) {
    const int d = v.dim();
    BigInt total = 0;
    for (int i = 0; i < d; ++i) {
        if (v[i] <= 0) throw std::invalid_argument("ar_step_exact: vector must be positive");
        total += v[i];
    }
    for (int i = 0; i < d; ++i) {
        BigInt rest = total - v[i];
        if (v[i] > rest) {
            IntVec r = v;
            r[i] -= rest;
            return std::make_pair(static_cast<Letter>(i + 1), r);
        }
    }
    return std::nullopt;
}

double invariant_density(const SimplexPoint& p) {
    if (p.x2 <= 0) throw std::domain_error("invariant_density: undefined at x2 = 0");
    return 12.0 / (kPi * kPi * p.x2 * (1.0 + p.x1));
}

std::vector<SimplexPoint> sample_invariant(std::size_t n, std::uint64_t seed) {
    // x2 marginal: g(x2) = 12 log(1+x2) / (pi^2 x2), bounded by 12/pi^2;
    // x1 | x2 has density prop. to 1/(1+x1) on [0,x2], inverse CDF
    // x1 = (1+x2)^t - 1.
    const double bound = 12.0 / (kPi * kPi) * (1.0 + 1e-12);
    Rng rng(seed);
    std::vector<SimplexPoint> out;
    out.reserve(n);
    while (out.size() < n) {
        double x2 = rng.uniform01();
        double g = x2 < 1e-9 ? 12.0 / (kPi * kPi) : 12.0 * std::log1p(x2) / (kPi * kPi * x2);
        if (rng.uniform01() * bound > g) continue;
        double t = rng.uniform01();
        double x1 = std::pow(1.0 + x2, t) - 1.0;
        if (x1 > x2) x1 = x2;  // guard against rounding at t ~= 1
        out.push_back(SimplexPoint{x1, x2});
    }
    return out;
}

}  // namespace sadic
