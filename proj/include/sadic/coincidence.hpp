#pragma once

#include "sadic/directive.hpp"
#include "sadic/geometry.hpp"

#include <optional>
#include <vector>

namespace sadic {

// Certificate that sigma_{[0,l)} identifies a common letter with equal
// abelianized prefixes (strong) or suffixes (negative strong) for every pair
// of letters. Positions index into the images so the certificate re-verifies
// by recomputation.
struct CoincidenceWitness {
    enum class Kind { strong, negative_strong };

    struct PairCert {
        Letter j1 = 0, j2 = 0;  // the pair of letters
        Letter i = 0;           // the coinciding letter
        std::size_t pos1 = 0;   // position of i in sigma_{[0,l)}(j1)
        std::size_t pos2 = 0;   // position of i in sigma_{[0,l)}(j2)
        IntVec abel;            // shared prefix/suffix abelianization
    };

    Kind kind = Kind::strong;
    std::size_t l = 0;
    std::vector<PairCert> pairs;
};

std::optional<CoincidenceWitness> strong_coincidence(const DirectiveSequence& seq, std::size_t l_max);
std::optional<CoincidenceWitness> negative_strong_coincidence(const DirectiveSequence& seq,
                                                              std::size_t l_max);
bool verify_coincidence(const DirectiveSequence& seq, const CoincidenceWitness& w);

// Certificate for the effective geometric coincidence check: every face of
// Gamma(transpose(M_{[0,n)}) 1) whose projection along (M_{[0,n)})^{-1} u lies
// within C of z belongs to the dual image of [0,i].
struct GeometricWitness {
    std::size_t n = 0;
    long balance = 0;  // the C used
    Letter i = 0;
    RealVec z;
    std::size_t ball_faces = 0;  // size of the checked ball
};

// Searches candidate centers z (projections of dual-patch faces, then their
// centroid) for each letter i; returns the first witness in deterministic
// (i, candidate) order. face_budget bounds the exact ball enumeration.
std::optional<GeometricWitness> geometric_coincidence_check(const DirectiveSequence& seq,
                                                            std::size_t n, long balance,
                                                            const RealVec& u,
                                                            std::size_t face_budget = 1000000);
bool verify_geometric(const DirectiveSequence& seq, const GeometricWitness& w, const RealVec& u,
                      std::size_t face_budget = 1000000);

// True iff the radius-R ball of Gamma(transpose(M_{[0,n)}) 1) is contained in
// the union over letters of the dual images of [0,i] (exact set containment).
bool geometric_finiteness_check(const DirectiveSequence& seq, std::size_t n, long radius);

}  // namespace sadic
