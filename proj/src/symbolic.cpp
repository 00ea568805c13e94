#include "sadic/symbolic.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace sadic {

Word Word::parse(const std::string& digits) {
    Word w;
    w.letters.reserve(digits.size());
    for (char c : digits) {
        if (c < '1' || c > '9') throw std::invalid_argument("Word::parse: expected digits 1-9, got '" + std::string(1, c) + "'");
        w.letters.push_back(c - '0');
    }
    return w;
}

std::string Word::str() const {
    std::string s;
    s.reserve(letters.size());
    for (Letter a : letters) {
        if (a < 1 || a > 9) throw std::logic_error("Word::str: letter out of printable range");
        s.push_back(static_cast<char>('0' + a));
    }
    return s;
}

IntVec IntVec::operator+(const IntVec& o) const {
    IntVec r(dim());
    for (int i = 0; i < dim(); ++i) r[i] = e[i] + o.e[i];
    return r;
}

IntVec IntVec::operator-(const IntVec& o) const {
    IntVec r(dim());
    for (int i = 0; i < dim(); ++i) r[i] = e[i] - o.e[i];
    return r;
}

BigInt IntVec::dot(const IntVec& o) const {
    BigInt s = 0;
    for (int i = 0; i < dim(); ++i) s += e[i] * o.e[i];
    return s;
}

std::string IntVec::str() const {
    std::ostringstream os;
    os << "(";
    for (int i = 0; i < dim(); ++i) os << (i ? "," : "") << e[i];
    os << ")";
    return os.str();
}

IntMat IntMat::identity(int dim) {
    IntMat m(dim);
    for (int i = 0; i < dim; ++i) m.at(i, i) = 1;
    return m;
}

IntMat IntMat::operator*(const IntMat& o) const {
    if (n != o.n) throw std::invalid_argument("IntMat: dimension mismatch in product");
    IntMat r(n);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            const BigInt& aik = at(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < n; ++j) r.at(i, j) += aik * o.at(k, j);
        }
    return r;
}

IntVec IntMat::operator*(const IntVec& v) const {
    if (n != v.dim()) throw std::invalid_argument("IntMat: dimension mismatch in mat-vec");
    IntVec r(n);
    for (int i = 0; i < n; ++i) {
        BigInt s = 0;
        for (int j = 0; j < n; ++j) s += at(i, j) * v[j];
        r[i] = s;
    }
    return r;
}

IntMat IntMat::transpose() const {
    IntMat r(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) r.at(j, i) = at(i, j);
    return r;
}

bool IntMat::is_positive() const {
    return std::all_of(a.begin(), a.end(), [](const BigInt& x) { return x > 0; });
}

bool IntMat::is_nonnegative() const {
    return std::all_of(a.begin(), a.end(), [](const BigInt& x) { return x >= 0; });
}

BigInt IntMat::det() const {
    // Bareiss fraction-free elimination; exact for integer matrices.
    IntMat m = *this;
    BigInt prev = 1;
    int sign = 1;
    for (int k = 0; k + 1 < n; ++k) {
        if (m.at(k, k) == 0) {
            int pivot = -1;
            for (int i = k + 1; i < n; ++i)
                if (m.at(i, k) != 0) { pivot = i; break; }
            if (pivot < 0) return 0;
            for (int j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(pivot, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                BigInt num = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
                m.at(i, j) = num / prev;  // divides exactly
            }
            m.at(i, k) = 0;
        }
        prev = m.at(k, k);
    }
    return n == 0 ? BigInt(1) : BigInt(sign) * m.at(n - 1, n - 1);
}

IntMat IntMat::inverse_unimodular() const {
    BigInt d = det();
    if (d != 1 && d != -1)
        throw std::invalid_argument("IntMat::inverse_unimodular: matrix is not unimodular (det = " + d.str() + ")");
    // Gauss-Jordan over exact rationals, then read off the integer result.
    const int dim = n;
    std::vector<Rational> w(static_cast<std::size_t>(dim) * 2 * dim);
    auto at2 = [&](int i, int j) -> Rational& { return w[static_cast<std::size_t>(i) * 2 * dim + j]; };
    for (int i = 0; i < dim; ++i) {
        for (int j = 0; j < dim; ++j) at2(i, j) = Rational(at(i, j));
        at2(i, dim + i) = 1;
    }
    for (int c = 0; c < dim; ++c) {
        int pivot = -1;
        for (int i = c; i < dim; ++i)
            if (at2(i, c) != 0) { pivot = i; break; }
        if (pivot < 0) throw std::logic_error("IntMat::inverse_unimodular: singular matrix");
        if (pivot != c)
            for (int j = 0; j < 2 * dim; ++j) std::swap(at2(pivot, j), at2(c, j));
        Rational p = at2(c, c);
        for (int j = 0; j < 2 * dim; ++j) at2(c, j) /= p;
        for (int i = 0; i < dim; ++i) {
            if (i == c || at2(i, c) == 0) continue;
            Rational f = at2(i, c);
            for (int j = 0; j < 2 * dim; ++j) at2(i, j) -= f * at2(c, j);
        }
    }
    IntMat r(dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) {
            const Rational& q = at2(i, dim + j);
            if (boost::multiprecision::denominator(q) != 1)
                throw std::logic_error("IntMat::inverse_unimodular: non-integral inverse entry");
            r.at(i, j) = boost::multiprecision::numerator(q);
        }
    return r;
}

std::string IntMat::str() const {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < n; ++i) {
        os << (i ? ";" : "") << "[";
        for (int j = 0; j < n; ++j) os << (j ? "," : "") << at(i, j);
        os << "]";
    }
    os << "]";
    return os.str();
}

Substitution::Substitution(std::vector<Word> images) : images_(std::move(images)) {
    const int d = alphabet_size();
    if (d == 0) throw std::invalid_argument("Substitution: empty alphabet");
    for (const Word& w : images_) {
        if (w.empty()) throw std::invalid_argument("Substitution: images must be non-empty (non-erasing)");
        for (Letter a : w)
            if (a < 1 || a > d)
                throw std::invalid_argument("Substitution: image letter out of alphabet range");
    }
}

Substitution Substitution::identity(int d) {
    std::vector<Word> imgs;
    imgs.reserve(static_cast<std::size_t>(d));
    for (Letter i = 1; i <= d; ++i) imgs.push_back(Word({i}));
    return Substitution(std::move(imgs));
}

const Word& Substitution::image(Letter i) const {
    if (i < 1 || i > alphabet_size()) throw std::out_of_range("Substitution::image: letter out of range");
    return images_[static_cast<std::size_t>(i - 1)];
}

Word apply(const Substitution& s, const Word& w) {
    Word r;
    std::size_t total = 0;
    for (Letter a : w) total += s.image(a).size();
    r.letters.reserve(total);
    for (Letter a : w) r.append(s.image(a));
    return r;
}

IntVec abelianize(const Word& w, int d) {
    IntVec v(d);
    for (Letter a : w) {
        if (a < 1 || a > d) throw std::invalid_argument("abelianize: letter out of range");
        ++v[a - 1];
    }
    return v;
}

IntMat incidence(const Substitution& s) {
    const int d = s.alphabet_size();
    IntMat m(d);
    for (Letter j = 1; j <= d; ++j)
        for (Letter a : s.image(j)) m.at(a - 1, j - 1) += 1;
    return m;
}

Substitution compose(const Substitution& s, const Substitution& t) {
    if (s.alphabet_size() != t.alphabet_size())
        throw std::invalid_argument("compose: alphabet size mismatch");
    std::vector<Word> imgs;
    imgs.reserve(static_cast<std::size_t>(s.alphabet_size()));
    for (Letter i = 1; i <= s.alphabet_size(); ++i) imgs.push_back(apply(s, t.image(i)));
    return Substitution(std::move(imgs));
}

std::array<BigInt, 3> charpoly3(const IntMat& m) {
    if (m.n != 3) throw std::invalid_argument("charpoly3: only 3x3 supported");
    BigInt tr = m.at(0, 0) + m.at(1, 1) + m.at(2, 2);
    BigInt s2 = (m.at(0, 0) * m.at(1, 1) - m.at(0, 1) * m.at(1, 0)) +
                (m.at(0, 0) * m.at(2, 2) - m.at(0, 2) * m.at(2, 0)) +
                (m.at(1, 1) * m.at(2, 2) - m.at(1, 2) * m.at(2, 1));
    BigInt d = m.det();
    // char(x) = x^3 - tr x^2 + s2 x - det
    return {-d, s2, -tr};
}

bool is_irreducible_charpoly(const IntMat& m) {
    if (m.n != 3) throw std::invalid_argument("is_irreducible_charpoly: only d = 3 is supported");
    auto c = charpoly3(m);
    const BigInt& c0 = c[0];
    // rational roots of a monic integer cubic are integer divisors of c0
    auto is_root = [&](const BigInt& x) { return ((x + c[2]) * x + c[1]) * x + c0 == 0; };
    if (c0 == 0) return false;  // x = 0 is a root
    BigInt a = boost::multiprecision::abs(c0);
    for (BigInt p = 1; p * p <= a; ++p) {
        if (a % p != 0) continue;
        BigInt q = a / p;
        if (is_root(p) || is_root(-p) || is_root(q) || is_root(-q)) return false;
    }
    return true;
}

long balance_constant(const std::set<Word>& factors, int d) {
    // group by length, track per-letter min/max counts
    std::map<std::size_t, std::vector<std::pair<long, long>>> range;  // len -> per-letter (min,max)
    for (const Word& w : factors) {
        IntVec v = abelianize(w, d);
        auto it = range.find(w.size());
        if (it == range.end()) {
            std::vector<std::pair<long, long>> r(static_cast<std::size_t>(d));
            for (int i = 0; i < d; ++i) {
                long c = v[i].convert_to<long>();
                r[static_cast<std::size_t>(i)] = {c, c};
            }
            range.emplace(w.size(), std::move(r));
        } else {
            for (int i = 0; i < d; ++i) {
                long c = v[i].convert_to<long>();
                auto& mm = it->second[static_cast<std::size_t>(i)];
                mm.first = std::min(mm.first, c);
                mm.second = std::max(mm.second, c);
            }
        }
    }
    long best = 0;
    for (auto& [len, r] : range) {
        (void)len;
        for (auto& mm : r) best = std::max(best, mm.second - mm.first);
    }
    return best;
}

long word_balance_constant(const Word& w, int d, int max_len) {
    const long L = static_cast<long>(w.size());
    long best = 0;
    std::vector<long> cnt(static_cast<std::size_t>(d));
    for (long n = 1; n <= std::min<long>(max_len, L); ++n) {
        std::fill(cnt.begin(), cnt.end(), 0L);
        std::vector<long> lo(static_cast<std::size_t>(d), 0), hi(static_cast<std::size_t>(d), 0);
        for (long k = 0; k < n; ++k) ++cnt[static_cast<std::size_t>(w[static_cast<std::size_t>(k)] - 1)];
        for (int i = 0; i < d; ++i) lo[static_cast<std::size_t>(i)] = hi[static_cast<std::size_t>(i)] = cnt[static_cast<std::size_t>(i)];
        for (long k = n; k < L; ++k) {
            ++cnt[static_cast<std::size_t>(w[static_cast<std::size_t>(k)] - 1)];
            --cnt[static_cast<std::size_t>(w[static_cast<std::size_t>(k - n)] - 1)];
            for (int i = 0; i < d; ++i) {
                lo[static_cast<std::size_t>(i)] = std::min(lo[static_cast<std::size_t>(i)], cnt[static_cast<std::size_t>(i)]);
                hi[static_cast<std::size_t>(i)] = std::max(hi[static_cast<std::size_t>(i)], cnt[static_cast<std::size_t>(i)]);
            }
        }
        for (int i = 0; i < d; ++i)
            best = std::max(best, hi[static_cast<std::size_t>(i)] - lo[static_cast<std::size_t>(i)]);
    }
    return best;
}

}  // namespace sadic
