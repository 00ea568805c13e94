#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sadic/cf.hpp"
#include "sadic/symbolic.hpp"
#include "sadic/util.hpp"

using namespace sadic;

namespace {

Word random_word(Rng& rng, int d, std::size_t max_len) {
    Word w;
    std::size_t len = rng.below(max_len + 1);
    for (std::size_t k = 0; k < len; ++k) w.push_back(static_cast<Letter>(1 + rng.below(static_cast<std::uint64_t>(d))));
    return w;
}

const Substitution& random_family_member(Rng& rng) {
    switch (rng.below(9)) {
        case 0: case 1: case 2: return ar_substitutions()[rng.below(3)];
        case 3: case 4: case 5: return brun_substitutions()[rng.below(3)];
        default: return brun_sigma_substitutions()[rng.below(3)];
    }
}

IntMat mat3(std::initializer_list<int> vals) {
    IntMat m(3);
    auto it = vals.begin();
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m.at(i, j) = *it++;
    return m;
}

}  // namespace

TEST_CASE("apply on the standard families") {
    const auto& alpha = ar_substitutions();
    const auto& beta = brun_substitutions();
    CHECK(apply(alpha[1], Word::parse("13")).str() == "1232");
    CHECK(apply(alpha[0], Word()).empty());
    CHECK(apply(beta[0], Word::parse("2")).str() == "23");
    // length is additive over letter images
    CHECK(apply(beta[2], Word::parse("123")).size() ==
          beta[2].image(1).size() + beta[2].image(2).size() + beta[2].image(3).size());
}

TEST_CASE("abelianize counts letters") {
    CHECK(abelianize(Word::parse("1213"), 3) == IntVec({2, 1, 1}));
    CHECK(abelianize(Word(), 3) == IntVec({0, 0, 0}));
}

TEST_CASE("abelianization intertwines substitution and incidence matrix") {
    Rng rng(7);
    for (int t = 0; t < 500; ++t) {
        const Substitution& s = random_family_member(rng);
        Word w = random_word(rng, 3, 40);
        CHECK(abelianize(apply(s, w), 3) == incidence(s) * abelianize(w, 3));
    }
}

TEST_CASE("incidence matrices of the families") {
    const auto& beta = brun_substitutions();
    CHECK(incidence(beta[2]) == mat3({0, 1, 0, 0, 0, 1, 1, 0, 1}));
    CHECK(incidence(Substitution::identity(3)) == IntMat::identity(3));
    CHECK(incidence(ar_substitutions()[0]) == mat3({1, 1, 1, 0, 1, 0, 0, 0, 1}));
}

TEST_CASE("compose concatenates images and multiplies incidences") {
    const auto& alpha = ar_substitutions();
    Substitution a12 = compose(alpha[0], alpha[1]);
    CHECK(a12.image(1).str() == "121");
    CHECK(a12.image(2).str() == "21");
    CHECK(a12.image(3).str() == "3121");
    CHECK(incidence(a12) == mat3({2, 1, 2, 1, 1, 1, 0, 0, 1}));
    CHECK(compose(alpha[2], Substitution::identity(3)) == alpha[2]);

    Rng rng(11);
    for (int t = 0; t < 200; ++t) {
        const Substitution& s = random_family_member(rng);
        const Substitution& u = random_family_member(rng);
        CHECK(incidence(compose(s, u)) == incidence(s) * incidence(u));
    }
}

TEST_CASE("determinants of family products are unimodular") {
    Rng rng(13);
    for (int t = 0; t < 100; ++t) {
        IntMat m = IntMat::identity(3);
        std::size_t len = 1 + rng.below(8);
        for (std::size_t k = 0; k < len; ++k) m = m * incidence(random_family_member(rng));
        BigInt d = m.det();
        CHECK((d == 1 || d == -1));
    }
}

TEST_CASE("exact inverse of unimodular matrices") {
    Rng rng(17);
    for (int t = 0; t < 50; ++t) {
        IntMat m = IntMat::identity(3);
        std::size_t len = 1 + rng.below(10);
        for (std::size_t k = 0; k < len; ++k) m = m * incidence(random_family_member(rng));
        CHECK(m * m.inverse_unimodular() == IntMat::identity(3));
    }
    IntMat not_unimodular = mat3({2, 0, 0, 0, 1, 0, 0, 0, 1});
    CHECK_THROWS(not_unimodular.inverse_unimodular());
}

TEST_CASE("charpoly irreducibility via rational roots") {
    CHECK_FALSE(is_irreducible_charpoly(IntMat::identity(3)));
    const auto& alpha = ar_substitutions();
    IntMat m = incidence(compose(alpha[0], compose(alpha[1], alpha[2])));
    CHECK(is_irreducible_charpoly(m));
    CHECK_FALSE(is_irreducible_charpoly(mat3({1, 1, 0, 1, 0, 0, 0, 0, 1})));
    IntMat big(4);
    CHECK_THROWS(is_irreducible_charpoly(big));
}

TEST_CASE("balance constants") {
    // factors of (123)^inf up to length 9
    Word periodic;
    for (int k = 0; k < 40; ++k) periodic.push_back(1 + k % 3);
    std::set<Word> factors;
    for (std::size_t start = 0; start < periodic.size(); ++start) {
        Word f;
        for (std::size_t len = 1; len <= 9 && start + len <= periodic.size(); ++len) {
            f.push_back(periodic[start + len - 1]);
            factors.insert(f);
        }
    }
    CHECK(balance_constant(factors, 3) == 1);
    CHECK(word_balance_constant(periodic, 3, 9) == 1);

    std::set<Word> pair_set{Word::parse("112"), Word::parse("211")};
    CHECK(balance_constant(pair_set, 3) == 0);
}

TEST_CASE("balance constant agrees with the sliding-window version") {
    Rng rng(23);
    for (int t = 0; t < 20; ++t) {
        Word w = random_word(rng, 3, 60);
        if (w.size() < 2) continue;
        std::set<Word> factors;
        for (std::size_t start = 0; start < w.size(); ++start) {
            Word f;
            for (std::size_t len = 1; len <= 12 && start + len <= w.size(); ++len) {
                f.push_back(w[start + len - 1]);
                factors.insert(f);
            }
        }
        CHECK(balance_constant(factors, 3) == word_balance_constant(w, 3, 12));
    }
}

TEST_CASE("balance constant is monotone in the factor set") {
    Rng rng(29);
    for (int t = 0; t < 30; ++t) {
        std::set<Word> small, large;
        for (int k = 0; k < 12; ++k) {
            Word w = random_word(rng, 3, 8);
            if (w.empty()) continue;
            large.insert(w);
            if (k % 2 == 0) small.insert(w);
        }
        CHECK(balance_constant(small, 3) <= balance_constant(large, 3));
    }
}

TEST_CASE("word parsing and substitution validation") {
    CHECK_THROWS(Word::parse("10"));
    CHECK_THROWS(Substitution({Word::parse("1"), Word(), Word::parse("3")}));
    CHECK_THROWS(Substitution({Word::parse("14"), Word::parse("2"), Word::parse("3")}));
}
