#pragma once

#include "sadic/symbolic.hpp"

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace sadic {

// An infinite (or finite) sequence of substitutions, evaluated lazily.
// Evaluation is deterministic and memoized; the cache is append-only and
// guarded so that concurrent readers are safe.
class DirectiveSequence {
public:
    static DirectiveSequence periodic(std::vector<Substitution> block);
    static DirectiveSequence eventually_periodic(std::vector<Substitution> prefix,
                                                 std::vector<Substitution> block);
    // finite sequence; evaluating past the end throws
    static DirectiveSequence finite(std::vector<Substitution> terms);
    // driven by a stepper producing sigma_0, sigma_1, ... in order
    static DirectiveSequence generated(int alphabet_size, std::function<Substitution()> next,
                                       std::string spec);

    const Substitution& term(std::size_t n) const;
    int alphabet_size() const;

    // number of terms, if the sequence is finite
    std::optional<std::size_t> length() const;

    // view of (sigma_{n+k})_{n>=0}; shares the underlying cache
    DirectiveSequence shifted(std::size_t k) const;

    // serialization token string ("periodic: a1 a2 a3", "brun: 0.2 0.3", ...)
    const std::string& spec_string() const;

private:
    struct Impl;
    DirectiveSequence(std::shared_ptr<Impl> impl, std::size_t offset);
    std::shared_ptr<Impl> impl_;
    std::size_t offset_ = 0;
};

// M_{[k,l)} = M_k M_{k+1} ... M_{l-1}; the empty product is the identity.
IntMat product_matrix(const DirectiveSequence& seq, std::size_t k, std::size_t l);

// Smallest l <= l_max with M_{[k,l)} strictly positive, if any.
std::optional<std::size_t> primitive_window(const DirectiveSequence& seq, std::size_t k,
                                            std::size_t l_max);

// Prefix of a limit word: sigma_{[0,N)}(j) for the smallest N <= depth whose
// length reaches min_len, with j chosen along a first-letter chain so that
// outputs for increasing depth are nested prefixes. Throws if min_len is not
// reachable within depth.
Word limit_word_prefix(const DirectiveSequence& seq, std::size_t depth, std::size_t min_len);

// Smallest n in [1, search_max] with (sigma_n,...,sigma_{n+len-1}) equal to
// (sigma_0,...,sigma_{len-1}), if any.
std::optional<std::size_t> find_recurrence_window(const DirectiveSequence& seq, std::size_t len,
                                                  std::size_t search_max);

// Finite-scale witnesses for primitivity (P), recurrence (R), algebraic
// irreducibility (I) and balance (C) of a directive sequence. Witnesses only;
// no claim about the infinite-scale properties is made.
struct PriceReport {
    struct RecurrenceWitness {
        std::size_t len = 0;  // window length
        std::size_t n = 0;    // recurrence position
        // smallest h <= len with M_{[len-h,len)} positive, if any (positivity
        // at the end of the recurring block)
        std::optional<std::size_t> block_end_positive_h;
    };
    struct IrreducibilityCheck {
        std::size_t k = 0;
        std::size_t l = 0;
        bool irreducible = false;
    };
    struct BalanceBound {
        std::size_t level = 0;  // language level n+len
        long constant = 0;      // finite-window lower bound
    };

    std::optional<std::size_t> primitivity_window;
    std::vector<RecurrenceWitness> recurrence;
    std::vector<IrreducibilityCheck> irreducibility;
    std::vector<BalanceBound> balance;
};

PriceReport price_report(const DirectiveSequence& seq, std::size_t depth,
                         const std::vector<std::size_t>& len_list, int factor_len);

// All factors of length <= max_len of sigma_{[m,depth)}(i) over all letters i:
// a finite under-approximation of the level-m language.
std::set<Word> language_factors(const DirectiveSequence& seq, std::size_t m, int max_len,
                                std::size_t depth);

}  // namespace sadic
