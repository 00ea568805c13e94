#include "sadic/directive.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

namespace sadic {

struct DirectiveSequence::Impl {
    int d = 0;
    std::function<Substitution()> next;  // stepper; null for finite sequences
    std::string spec;
    mutable std::vector<Substitution> cache;
    mutable std::mutex mutex;
    bool finite = false;

    const Substitution& term(std::size_t n) const {
        std::lock_guard<std::mutex> lock(mutex);
        while (cache.size() <= n) {
            if (finite || !next)
                throw std::out_of_range("DirectiveSequence: index " + std::to_string(n) +
                                        " past the end of a finite sequence");
            cache.push_back(next());
        }
        return cache[n];
    }
};

DirectiveSequence::DirectiveSequence(std::shared_ptr<Impl> impl, std::size_t offset)
    : impl_(std::move(impl)), offset_(offset) {}

DirectiveSequence DirectiveSequence::periodic(std::vector<Substitution> block) {
    if (block.empty()) throw std::invalid_argument("DirectiveSequence::periodic: empty block");
    return eventually_periodic({}, std::move(block));
}

DirectiveSequence DirectiveSequence::eventually_periodic(std::vector<Substitution> prefix,
                                                         std::vector<Substitution> block) {
    if (block.empty()) throw std::invalid_argument("DirectiveSequence: empty periodic block");
    auto impl = std::make_shared<Impl>();
    impl->d = block.front().alphabet_size();
    for (const auto& s : prefix)
        if (s.alphabet_size() != impl->d) throw std::invalid_argument("DirectiveSequence: mixed alphabets");
    for (const auto& s : block)
        if (s.alphabet_size() != impl->d) throw std::invalid_argument("DirectiveSequence: mixed alphabets");
    impl->cache = prefix;
    auto state = std::make_shared<std::pair<std::vector<Substitution>, std::size_t>>(std::move(block), 0);
    impl->next = [state]() {
        const Substitution& s = state->first[state->second];
        state->second = (state->second + 1) % state->first.size();
        return s;
    };
    impl->spec = "";
    return DirectiveSequence(std::move(impl), 0);
}

DirectiveSequence DirectiveSequence::finite(std::vector<Substitution> terms) {
    if (terms.empty()) throw std::invalid_argument("DirectiveSequence::finite: empty sequence");
    auto impl = std::make_shared<Impl>();
    impl->d = terms.front().alphabet_size();
    for (const auto& s : terms)
        if (s.alphabet_size() != impl->d) throw std::invalid_argument("DirectiveSequence: mixed alphabets");
    impl->cache = std::move(terms);
    impl->finite = true;
    return DirectiveSequence(std::move(impl), 0);
}

DirectiveSequence DirectiveSequence::generated(int alphabet_size, std::function<Substitution()> next,
                                               std::string spec) {
    auto impl = std::make_shared<Impl>();
    impl->d = alphabet_size;
    impl->next = std::move(next);
    impl->spec = std::move(spec);
    return DirectiveSequence(std::move(impl), 0);
}

const Substitution& DirectiveSequence::term(std::size_t n) const { return impl_->term(offset_ + n); }

int DirectiveSequence::alphabet_size() const { return impl_->d; }

std::optional<std::size_t> DirectiveSequence::length() const {
    if (!impl_->finite) return std::nullopt;
    std::size_t total = impl_->cache.size();
    return total >= offset_ ? total - offset_ : 0;
}

DirectiveSequence DirectiveSequence::shifted(std::size_t k) const {
    return DirectiveSequence(impl_, offset_ + k);
}

const std::string& DirectiveSequence::spec_string() const { return impl_->spec; }

IntMat product_matrix(const DirectiveSequence& seq, std::size_t k, std::size_t l) {
    if (k > l) throw std::invalid_argument("product_matrix: k > l");
    IntMat m = IntMat::identity(seq.alphabet_size());
    for (std::size_t n = k; n < l; ++n) m = m * incidence(seq.term(n));
    return m;
}

std::optional<std::size_t> primitive_window(const DirectiveSequence& seq, std::size_t k,
                                            std::size_t l_max) {
    IntMat m = IntMat::identity(seq.alphabet_size());
    for (std::size_t l = k; l < l_max; ++l) {
        m = m * incidence(seq.term(l));
        if (m.is_positive()) return l + 1;
    }
    return std::nullopt;
}

namespace {

// First-letter maps f_n(i) = first letter of sigma_n(i), and the canonical
// chain of letters i_0 <- i_1 <- ... with i_n = f_n(i_{n+1}). The chain is
// chosen so that i_n lies in the set of first letters reachable from the
// deepest evaluated level; these reachable sets are nested in the horizon, so
// the chain is stable once they have settled (immediately so when the
// first-letter maps are permutations, as for the Arnoux-Rauzy and Brun
// families).
std::vector<Letter> first_letter_chain(const DirectiveSequence& seq, std::size_t depth) {
    const int d = seq.alphabet_size();
    std::size_t horizon = depth + static_cast<std::size_t>(d);
    if (auto len = seq.length()) horizon = std::min(horizon, *len);
    if (horizon < depth)
        throw std::out_of_range("limit_word_prefix: depth exceeds finite sequence length");

    std::vector<std::vector<Letter>> f(horizon);  // f[n][i-1]
    for (std::size_t n = 0; n < horizon; ++n) {
        f[n].resize(static_cast<std::size_t>(d));
        for (Letter i = 1; i <= d; ++i) f[n][static_cast<std::size_t>(i - 1)] = seq.term(n).image(i)[0];
    }
    // reachable[n] = set of letters F_{[n,horizon)}(A), computed backwards
    std::vector<std::vector<bool>> reachable(horizon + 1, std::vector<bool>(static_cast<std::size_t>(d), false));
    std::fill(reachable[horizon].begin(), reachable[horizon].end(), true);
    for (std::size_t n = horizon; n-- > 0;) {
        for (Letter j = 1; j <= d; ++j)
            if (reachable[n + 1][static_cast<std::size_t>(j - 1)])
                reachable[n][static_cast<std::size_t>(f[n][static_cast<std::size_t>(j - 1)] - 1)] = true;
    }
    std::vector<Letter> chain(depth + 1);
    Letter cur = 0;
    for (Letter i = 1; i <= d; ++i)
        if (reachable[0][static_cast<std::size_t>(i - 1)]) { cur = i; break; }
    chain[0] = cur;
    for (std::size_t n = 0; n < depth; ++n) {
        Letter nxt = 0;
        for (Letter j = 1; j <= d; ++j) {
            if (f[n][static_cast<std::size_t>(j - 1)] == cur && reachable[n + 1][static_cast<std::size_t>(j - 1)]) {
                nxt = j;
                break;
            }
        }
        if (nxt == 0) throw std::logic_error("limit_word_prefix: first-letter chain broke");
        chain[n + 1] = nxt;
        cur = nxt;
    }
    return chain;
}

}  // namespace

Word limit_word_prefix(const DirectiveSequence& seq, std::size_t depth, std::size_t min_len) {
    if (min_len == 0) throw std::invalid_argument("limit_word_prefix: min_len must be positive");
    const int d = seq.alphabet_size();
    std::vector<Letter> chain = first_letter_chain(seq, depth);

    // |sigma_{[0,N)}(j)| via exact column sums; pick the smallest adequate N
    std::size_t target = depth + 1;
    IntMat m = IntMat::identity(d);
    for (std::size_t n = 0; n <= depth; ++n) {
        if (n > 0) m = m * incidence(seq.term(n - 1));
        BigInt len = 0;
        for (int i = 0; i < d; ++i) len += m.at(i, chain[n] - 1);
        if (len >= static_cast<long long>(min_len)) { target = n; break; }
    }
    if (target > depth)
        throw std::runtime_error("limit_word_prefix: min_len " + std::to_string(min_len) +
                                 " not reachable within depth " + std::to_string(depth));

    Word w({chain[target]});
    for (std::size_t n = target; n-- > 0;) w = apply(seq.term(n), w);
    return w;
}

std::optional<std::size_t> find_recurrence_window(const DirectiveSequence& seq, std::size_t len,
                                                  std::size_t search_max) {
    if (len == 0) throw std::invalid_argument("find_recurrence_window: len must be >= 1");
    for (std::size_t n = 1; n <= search_max; ++n) {
        bool match = true;
        for (std::size_t k = 0; k < len; ++k)
            if (!(seq.term(n + k) == seq.term(k))) { match = false; break; }
        if (match) return n;
    }
    return std::nullopt;
}

std::set<Word> language_factors(const DirectiveSequence& seq, std::size_t m, int max_len,
                                std::size_t depth) {
    if (depth < m) throw std::invalid_argument("language_factors: depth < m");
    const int d = seq.alphabet_size();
    std::set<Word> out;
    for (Letter i = 1; i <= d; ++i) {
        Word w({i});
        for (std::size_t n = depth; n-- > m;) w = apply(seq.term(n), w);
        const std::size_t L = w.size();
        for (std::size_t start = 0; start < L; ++start) {
            Word f;
            for (std::size_t len = 1; len <= static_cast<std::size_t>(max_len) && start + len <= L; ++len) {
                f.push_back(w[start + len - 1]);
                out.insert(f);
            }
        }
    }
    return out;
}

PriceReport price_report(const DirectiveSequence& seq, std::size_t depth,
                         const std::vector<std::size_t>& len_list, int factor_len) {
    PriceReport rep;
    rep.primitivity_window = primitive_window(seq, 0, depth);
    for (std::size_t len : len_list) {
        if (len == 0 || len > depth) continue;
        std::size_t search_max = depth > len ? depth - len : 0;
        auto n = find_recurrence_window(seq, len, search_max);
        if (!n) continue;
        PriceReport::RecurrenceWitness w;
        w.len = len;
        w.n = *n;
        for (std::size_t h = 1; h <= len; ++h) {
            if (product_matrix(seq, len - h, len).is_positive()) {
                w.block_end_positive_h = h;
                break;
            }
        }
        rep.recurrence.push_back(w);
        if (seq.alphabet_size() == 3) {
            rep.irreducibility.push_back({0, len, is_irreducible_charpoly(product_matrix(seq, 0, len))});
            rep.irreducibility.push_back(
                {*n, *n + len, is_irreducible_charpoly(product_matrix(seq, *n, *n + len))});
        }
        std::size_t level = *n + len;
        if (level <= depth) {
            auto factors = language_factors(seq, level, factor_len, depth);
            rep.balance.push_back({level, balance_constant(factors, seq.alphabet_size())});
        }
    }
    return rep;
}

}  // namespace sadic
