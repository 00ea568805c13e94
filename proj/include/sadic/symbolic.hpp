#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace sadic {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Letters are 1-based: the alphabet of size d is {1, ..., d}.
using Letter = int;

// A finite word over {1..d}. The empty word is allowed.
struct Word {
    std::vector<Letter> letters;

    Word() = default;
    explicit Word(std::vector<Letter> ls) : letters(std::move(ls)) {}

    // "1213" -> word 1 2 1 3 (digits only; alphabets up to d = 9)
    static Word parse(const std::string& digits);
    std::string str() const;

    std::size_t size() const { return letters.size(); }
    bool empty() const { return letters.empty(); }
    Letter operator[](std::size_t k) const { return letters[k]; }

    auto begin() const { return letters.begin(); }
    auto end() const { return letters.end(); }

    void push_back(Letter a) { letters.push_back(a); }
    void append(const Word& w) { letters.insert(letters.end(), w.letters.begin(), w.letters.end()); }

    friend bool operator==(const Word&, const Word&) = default;
    friend auto operator<=>(const Word& a, const Word& b) { return a.letters <=> b.letters; }
};

// Exact integer vector of dimension d.
struct IntVec {
    std::vector<BigInt> e;

    IntVec() = default;
    explicit IntVec(int d) : e(static_cast<std::size_t>(d)) {}
    IntVec(std::initializer_list<BigInt> xs) : e(xs) {}

    int dim() const { return static_cast<int>(e.size()); }
    BigInt& operator[](int i) { return e[static_cast<std::size_t>(i)]; }
    const BigInt& operator[](int i) const { return e[static_cast<std::size_t>(i)]; }

    friend bool operator==(const IntVec&, const IntVec&) = default;
    friend bool operator<(const IntVec& a, const IntVec& b) {
        if (a.e.size() != b.e.size()) return a.e.size() < b.e.size();
        for (std::size_t i = 0; i < a.e.size(); ++i) {
            if (a.e[i] < b.e[i]) return true;
            if (b.e[i] < a.e[i]) return false;
        }
        return false;
    }

    IntVec operator+(const IntVec& o) const;
    IntVec operator-(const IntVec& o) const;
    BigInt dot(const IntVec& o) const;
    std::string str() const;
};

// Exact square integer matrix (column j of an incidence matrix counts the
// letters of sigma(j)).
struct IntMat {
    int n = 0;
    std::vector<BigInt> a;  // row-major

    IntMat() = default;
    explicit IntMat(int dim) : n(dim), a(static_cast<std::size_t>(dim) * dim) {}

    static IntMat identity(int dim);

    BigInt& at(int i, int j) { return a[static_cast<std::size_t>(i) * n + j]; }
    const BigInt& at(int i, int j) const { return a[static_cast<std::size_t>(i) * n + j]; }

    IntMat operator*(const IntMat& o) const;
    IntVec operator*(const IntVec& v) const;
    IntMat transpose() const;

    bool is_positive() const;     // all entries > 0
    bool is_nonnegative() const;

    // exact determinant (Bareiss fraction-free elimination)
    BigInt det() const;

    // exact inverse of a unimodular matrix; throws if |det| != 1
    IntMat inverse_unimodular() const;

    friend bool operator==(const IntMat&, const IntMat&) = default;
    std::string str() const;
};

// A substitution: images of the letters 1..d, all non-empty.
class Substitution {
public:
    explicit Substitution(std::vector<Word> images);
    static Substitution identity(int d);

    int alphabet_size() const { return static_cast<int>(images_.size()); }
    const Word& image(Letter i) const;

    friend bool operator==(const Substitution&, const Substitution&) = default;

private:
    std::vector<Word> images_;
};

Word apply(const Substitution& s, const Word& w);
IntVec abelianize(const Word& w, int d);
IntMat incidence(const Substitution& s);
Substitution compose(const Substitution& s, const Substitution& t);  // (s t)(i) = s(t(i))

// True iff the degree-3 characteristic polynomial of M has no rational root
// (rational-root test; only supported for 3x3 matrices).
bool is_irreducible_charpoly(const IntMat& m);

// Characteristic polynomial coefficients of a 3x3 matrix:
// x^3 + c[2] x^2 + c[1] x + c[0].
std::array<BigInt, 3> charpoly3(const IntMat& m);

// Balance constant of an explicit factor set: max over equal-length pairs and
// letters of the letter-count difference. Lower bound for the true constant
// of any language containing the set.
long balance_constant(const std::set<Word>& factors, int d);

// Balance constant of the length-<=max_len factors of a single word, computed
// by sliding windows (no explicit factor set).
long word_balance_constant(const Word& w, int d, int max_len);

}  // namespace sadic
