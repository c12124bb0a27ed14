#include "duadic/mindist.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <random>
#include <tuple>

#include "duadic/parallel.hpp"
#include "duadic/simd.hpp"

namespace duadic {

std::uint64_t WeightDistribution::total() const { return std::accumulate(counts.begin(), counts.end(), std::uint64_t{0}); }

bool WeightDistribution::all_even() const {
    for (std::size_t w = 1; w < counts.size(); w += 2)
        if (counts[w]) return false;
    return true;
}

bool WeightDistribution::doubly_even() const {
    for (std::size_t w = 0; w < counts.size(); ++w)
        if (w % 4 != 0 && counts[w]) return false;
    return true;
}

std::optional<std::size_t> WeightDistribution::min_nonzero_weight() const {
    for (std::size_t w = 1; w < counts.size(); ++w)
        if (counts[w]) return w;
    return std::nullopt;
}

namespace {

constexpr unsigned kMaxPrefixBits = 8;

void check_budget(const GeneratorMatrix& g) {
    if (g.row_count() > kEnumerationBudget)
        throw BudgetExceeded("dimension " + std::to_string(g.row_count()) +
                             " exceeds the enumeration budget of 2^24 codewords; use bounded_min_distance");
}

// Visits every codeword whose message has the given top bits, in Gray order.
// visit(weight, message, words) sees message 0 of the prefix first.
template <class Visit>
void walk_prefix(const GeneratorMatrix& g, unsigned low_bits, std::uint64_t prefix, std::vector<std::uint64_t>& cur,
                 Visit&& visit) {
    const auto& rows = g.rows();
    const std::size_t words = cur.size();
    std::fill(cur.begin(), cur.end(), 0);
    for (unsigned j = 0; low_bits + j < rows.size(); ++j)
        if ((prefix >> j) & 1u) simd::xor_into(cur, rows[low_bits + j].words());
    const std::uint64_t base = prefix << low_bits;
    std::uint64_t weight = simd::popcount(cur);
    visit(weight, base, cur);
    const std::uint64_t steps = std::uint64_t{1} << low_bits;
    if (words == 1) {
        std::uint64_t word = cur[0];
        for (std::uint64_t i = 1; i < steps; ++i) {
            word ^= rows[static_cast<std::size_t>(std::countr_zero(i))].words()[0];
            cur[0] = word;
            visit(static_cast<std::uint64_t>(std::popcount(word)), base | (i ^ (i >> 1)), cur);
        }
        return;
    }
    const auto& kernels = simd::active();
    for (std::uint64_t i = 1; i < steps; ++i) {
        const auto& row = rows[static_cast<std::size_t>(std::countr_zero(i))];
        weight = kernels.xor_into_popcount(cur.data(), row.words().data(), words);
        visit(weight, base | (i ^ (i >> 1)), cur);
    }
}

// Runs `make_acc` per prefix chunk and returns the accumulators in chunk order.
template <class Acc, class MakeAcc, class Visit>
std::vector<Acc> enumerate(const GeneratorMatrix& g, MakeAcc&& make_acc, Visit&& visit) {
    check_budget(g);
    const unsigned k = static_cast<unsigned>(g.row_count());
    const unsigned prefix_bits = std::min(k, kMaxPrefixBits);
    const unsigned low_bits = k - prefix_bits;
    const std::size_t prefixes = std::size_t{1} << prefix_bits;
    const std::size_t words = BitVec::word_count_for(g.length());

    // fixed chunk count keeps the reduction order independent of the worker cap
    const std::size_t chunk_count = std::min<std::size_t>(prefixes, 64);
    std::vector<Acc> accs;
    accs.reserve(chunk_count);
    for (std::size_t c = 0; c < chunk_count; ++c) accs.push_back(make_acc());
    const std::size_t per_chunk = prefixes / chunk_count;

    parallel_chunks(chunk_count, [&](std::size_t cb, std::size_t ce) {
        std::vector<std::uint64_t> cur(words);
        for (std::size_t c = cb; c < ce; ++c)
            for (std::size_t p = c * per_chunk; p < (c + 1) * per_chunk; ++p)
                walk_prefix(g, low_bits, p, cur, [&](std::uint64_t w, std::uint64_t msg, const std::vector<std::uint64_t>& cw) {
                    visit(accs[c], w, msg, cw);
                });
    });
    return accs;
}

struct MinAcc {
    std::uint64_t weight = ~std::uint64_t{0};
    std::uint64_t message = 0;
    std::uint64_t odd_weight = ~std::uint64_t{0};
    std::uint64_t odd_message = 0;
};

bool better(std::uint64_t w, std::uint64_t msg, std::uint64_t best_w, std::uint64_t best_msg) {
    return std::tie(w, msg) < std::tie(best_w, best_msg);
}

BitVec message_vector(std::size_t k, std::uint64_t message) {
    BitVec m(k);
    for (std::size_t i = 0; i < k; ++i)
        if ((message >> i) & 1u) m.set(i);
    return m;
}

std::uint64_t round_up(std::uint64_t x, std::uint64_t multiple) { return (x + multiple - 1) / multiple * multiple; }

}  // namespace

WeightDistribution weight_distribution(const GeneratorMatrix& g) {
    const std::size_t len = g.length();
    auto accs = enumerate<std::vector<std::uint64_t>>(
        g, [len] { return std::vector<std::uint64_t>(len + 1, 0); },
        [](std::vector<std::uint64_t>& acc, std::uint64_t w, std::uint64_t, const std::vector<std::uint64_t>&) {
            ++acc[w];
        });
    WeightDistribution dist;
    dist.counts.assign(len + 1, 0);
    for (const auto& acc : accs)
        for (std::size_t w = 0; w <= len; ++w) dist.counts[w] += acc[w];
    return dist;
}

WeightDistribution weight_distribution(const CyclicCode& c) { return weight_distribution(c.generator_matrix()); }
WeightDistribution weight_distribution(const ExtendedCode& e) { return weight_distribution(e.generator_matrix()); }

CertifiedBound exact_min_distance(const GeneratorMatrix& g) {
    if (g.row_count() == 0) throw std::domain_error("the zero code has no minimum distance");
    auto accs = enumerate<MinAcc>(
        g, [] { return MinAcc{}; },
        [](MinAcc& acc, std::uint64_t w, std::uint64_t msg, const std::vector<std::uint64_t>&) {
            if (msg == 0) return;
            if (better(w, msg, acc.weight, acc.message)) {
                acc.weight = w;
                acc.message = msg;
            }
            if ((w & 1u) && better(w, msg, acc.odd_weight, acc.odd_message)) {
                acc.odd_weight = w;
                acc.odd_message = msg;
            }
        });
    MinAcc best;
    for (const auto& acc : accs) {
        if (better(acc.weight, acc.message, best.weight, best.message)) {
            best.weight = acc.weight;
            best.message = acc.message;
        }
        if (better(acc.odd_weight, acc.odd_message, best.odd_weight, best.odd_message)) {
            best.odd_weight = acc.odd_weight;
            best.odd_message = acc.odd_message;
        }
    }
    if (best.weight == 0) throw std::logic_error("generator matrix rows are linearly dependent");
    CertifiedBound bound;
    bound.lower = bound.upper = best.weight;
    bound.exact = true;
    bound.method = "exhaustive-gray";
    bound.witness = g.encode(message_vector(g.row_count(), best.message));
    if (best.odd_weight != ~std::uint64_t{0}) bound.min_odd_weight = best.odd_weight;
    return bound;
}

CertifiedBound exact_min_distance(const CyclicCode& c) {
    CertifiedBound b = exact_min_distance(c.generator_matrix());
    if (!c.contains(b.witness)) throw std::logic_error("minimum-weight witness is not a codeword");
    return b;
}

CertifiedBound exact_min_distance(const ExtendedCode& e) {
    CertifiedBound b = exact_min_distance(e.generator_matrix());
    if (!e.contains(b.witness)) throw std::logic_error("minimum-weight witness is not a codeword");
    return b;
}

std::pair<std::uint64_t, BitVec> information_set_search(const GeneratorMatrix& g, std::uint64_t effort,
                                                         std::uint64_t seed) {
    if (g.row_count() == 0) throw std::domain_error("the zero code has no minimum distance");
    std::uint64_t best_weight = g.row(0).count();
    BitVec best = g.row(0);
    const std::size_t n = g.length();
    const std::size_t words = BitVec::word_count_for(n);
    std::mt19937_64 rng(seed);
    std::vector<std::size_t> order(n);

    for (std::uint64_t it = 0; it < effort; ++it) {
        std::iota(order.begin(), order.end(), std::size_t{0});
        for (std::size_t i = n; i-- > 1;) std::swap(order[i], order[rng() % (i + 1)]);
        const auto reduced = g.reduced_by_columns(order).first;
        const auto& rows = reduced.rows();
        const std::size_t k = rows.size();

        struct Best {
            std::uint64_t weight = ~std::uint64_t{0};
            std::size_t i = 0, j = 0, l = 0;  // j, l == k means unused
        };
        std::vector<Best> chunk_best(k);
        parallel_chunks(k, [&](std::size_t begin, std::size_t end) {
            std::vector<std::uint64_t> pair(words);
            const auto& kernels = simd::active();
            for (std::size_t i = begin; i < end; ++i) {
                Best b{rows[i].count(), i, k, k};
                for (std::size_t j = i + 1; j < k; ++j) {
                    std::copy(rows[i].words().begin(), rows[i].words().end(), pair.begin());
                    const std::uint64_t pw = kernels.xor_into_popcount(pair.data(), rows[j].words().data(), words);
                    if (pw < b.weight) b = {pw, i, j, k};
                    for (std::size_t l = j + 1; l < k; ++l) {
                        const std::uint64_t tw = kernels.xor_popcount(pair.data(), rows[l].words().data(), words);
                        if (tw < b.weight) b = {tw, i, j, l};
                    }
                }
                chunk_best[i] = b;
            }
        });
        for (const Best& b : chunk_best) {
            if (b.weight >= best_weight) continue;
            best_weight = b.weight;
            best = rows[b.i];
            if (b.j < k) best ^= rows[b.j];
            if (b.l < k) best ^= rows[b.l];
        }
    }
    return {best_weight, best};
}

CertifiedBound bounded_min_distance(const CyclicCode& c, const SearchOptions& options) {
    if (c.dimension() == 0) throw std::domain_error("the zero code has no minimum distance");
    std::vector<std::uint64_t> candidates = options.v_candidates;
    if (candidates.empty()) {
        candidates = default_v_candidates(c.field().degree());
        if (std::find(candidates.begin(), candidates.end(), 1) == candidates.end()) candidates.push_back(1);
    }
    CertifiedBound bound;
    bound.certificate = best_certificate(c.defining_set(), candidates);
    bound.lower = std::min<std::uint64_t>(bound.certificate->d_lower, c.length());
    // 0 in T means g(1) = 0: every codeword has even weight
    if (c.defining_set().contains(0)) bound.lower = round_up(bound.lower, 2);

    // effort 0 needs only g itself; skip materializing the k x n matrix
    auto [weight, witness] = options.effort == 0
                                 ? std::pair{c.generator().weight(), c.generator().to_bits(c.length())}
                                 : information_set_search(c.generator_matrix(), options.effort, options.seed);
    if (!c.contains(witness)) throw std::logic_error("search witness is not a codeword");
    bound.upper = weight;
    bound.witness = std::move(witness);
    bound.exact = bound.lower == bound.upper;
    bound.method = "bch+information-set";
    bound.seed = options.seed;
    bound.effort = options.effort;
    if (bound.lower > bound.upper) throw std::logic_error("BCH lower bound exceeds a found codeword weight");
    return bound;
}

CertifiedBound bounded_min_distance(const ExtendedCode& e, const SearchOptions& options) {
    if (e.dimension() == 0) throw std::domain_error("the zero code has no minimum distance");
    SearchOptions base_options = options;
    base_options.effort = 0;
    const CertifiedBound base = bounded_min_distance(e.base(), base_options);

    CertifiedBound bound;
    bound.certificate = base.certificate;
    bound.lower = round_up(base.lower, is_doubly_even(e) ? 4 : 2);
    auto [weight, witness] = options.effort == 0
                                 ? std::pair{e.extended_generator().count(), e.extended_generator()}
                                 : information_set_search(e.generator_matrix(), options.effort, options.seed);
    if (!e.contains(witness)) throw std::logic_error("search witness is not a codeword");
    bound.upper = weight;
    bound.witness = std::move(witness);
    bound.exact = bound.lower == bound.upper;
    bound.method = "bch+information-set";
    bound.seed = options.seed;
    bound.effort = options.effort;
    if (bound.lower > bound.upper) throw std::logic_error("derived lower bound exceeds a found codeword weight");
    return bound;
}

}  // namespace duadic
