#include "duadic/code.hpp"

#include <algorithm>
#include <stdexcept>

#include "duadic/parallel.hpp"
#include "duadic/simd.hpp"

namespace duadic {

GeneratorMatrix::GeneratorMatrix(std::size_t length, std::vector<BitVec> rows, bool systematic)
    : length_(length), rows_(std::move(rows)), systematic_(systematic) {
    for (const auto& r : rows_)
        if (r.size() != length_) throw std::invalid_argument("generator row length mismatch");
}

std::size_t GeneratorMatrix::rank() const {
    std::vector<BitVec> work = rows_;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < length_ && rank < work.size(); ++col) {
        std::size_t pivot = rank;
        while (pivot < work.size() && !work[pivot].test(col)) ++pivot;
        if (pivot == work.size()) continue;
        std::swap(work[rank], work[pivot]);
        for (std::size_t i = rank + 1; i < work.size(); ++i)
            if (work[i].test(col)) work[i] ^= work[rank];
        ++rank;
    }
    return rank;
}

std::pair<GeneratorMatrix, std::vector<std::size_t>> GeneratorMatrix::reduced_by_columns(
    std::span<const std::size_t> column_order) const {
    std::vector<BitVec> work = rows_;
    std::vector<std::size_t> pivots;
    std::size_t rank = 0;
    for (std::size_t col : column_order) {
        if (rank == work.size()) break;
        std::size_t pivot = rank;
        while (pivot < work.size() && !work[pivot].test(col)) ++pivot;
        if (pivot == work.size()) continue;
        std::swap(work[rank], work[pivot]);
        for (std::size_t i = 0; i < work.size(); ++i)
            if (i != rank && work[i].test(col)) work[i] ^= work[rank];
        pivots.push_back(col);
        ++rank;
    }
    work.resize(rank);
    return {GeneratorMatrix(length_, std::move(work), true), std::move(pivots)};
}

GeneratorMatrix GeneratorMatrix::systematic_form() const {
    std::vector<std::size_t> order(length_);
    for (std::size_t i = 0; i < length_; ++i) order[i] = i;
    return reduced_by_columns(order).first;
}

bool GeneratorMatrix::gram_is_zero() const { return orthogonal_to(*this); }

bool GeneratorMatrix::orthogonal_to(const GeneratorMatrix& other) const {
    if (other.length_ != length_) throw std::invalid_argument("matrices have different lengths");
    std::vector<std::uint8_t> ok(rows_.size(), 1);
    parallel_chunks(rows_.size(), [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i)
            for (const auto& h : other.rows_)
                if (and_count(rows_[i], h) & 1u) {
                    ok[i] = 0;
                    break;
                }
    });
    return std::all_of(ok.begin(), ok.end(), [](std::uint8_t v) { return v != 0; });
}

BitVec GeneratorMatrix::encode(const BitVec& message) const {
    if (message.size() != rows_.size()) throw std::invalid_argument("message length differs from row count");
    BitVec out(length_);
    message.for_each_set([&](std::size_t i) { out ^= rows_[i]; });
    return out;
}

CyclicCode::CyclicCode(std::shared_ptr<const FieldGF2m> field, DefiningSet T, BinaryPoly g)
    : field_(std::move(field)), T_(std::move(T)), g_(std::move(g)) {
    if (g_.degree().value_or(0) != T_.size()) throw std::logic_error("deg g differs from |T|");
}

CyclicCode CyclicCode::from_defining_set(std::shared_ptr<const FieldGF2m> field, DefiningSet T) {
    if (!field) throw std::invalid_argument("null field");
    BinaryPoly g = generator_poly(*field, T);
    return CyclicCode(std::move(field), std::move(T), std::move(g));
}

BinaryPoly CyclicCode::check_polynomial() const { return check_poly(g_, length()); }

GeneratorMatrix CyclicCode::generator_matrix() const {
    const std::size_t n = length();
    const std::size_t k = dimension();
    std::vector<BitVec> rows(k, BitVec(n));
    const auto exps = g_.exponents();
    parallel_chunks(k, [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i)
            for (std::size_t e : exps) rows[i].set(i + e);
    });
    return GeneratorMatrix(n, std::move(rows));
}

bool CyclicCode::contains(const BitVec& word) const {
    if (word.size() != length()) throw std::invalid_argument("word length differs from code length");
    return poly_mod(BinaryPoly::from_bits(word), g_).is_zero();
}

bool CyclicCode::contains_by_roots(const BitVec& word) const {
    if (word.size() != length()) throw std::invalid_argument("word length differs from code length");
    const BinaryPoly w = BinaryPoly::from_bits(word);
    // w has binary coefficients, so w(alpha^{2i}) = w(alpha^i)^2: leaders suffice
    for (std::uint32_t i : T_.leaders())
        if (!evaluate(*field_, w, field_->pow_alpha(i)).is_zero()) return false;
    return true;
}

bool CyclicCode::is_self_orthogonal() const { return shift_form_gram_is_zero(g_, dimension(), false); }

CyclicCode dual(const CyclicCode& c) {
    BinaryPoly g_dual = reciprocal(c.check_polynomial());
    DefiningSet T_dual = c.T_.negated().complement();
    return CyclicCode(c.field_, std::move(T_dual), std::move(g_dual));
}

BitVec ExtendedCode::extend_word(const BitVec& word) const {
    if (word.size() != base_.length()) throw std::invalid_argument("word length differs from code length");
    BitVec out = word;
    out.resize(length());
    if (word.count() & 1u) out.set(base_.length());
    return out;
}

BitVec ExtendedCode::extended_generator() const { return extend_word(base_.generator().to_bits(base_.length())); }

GeneratorMatrix ExtendedCode::generator_matrix() const {
    const GeneratorMatrix g = base_.generator_matrix();
    std::vector<BitVec> rows;
    rows.reserve(g.row_count());
    for (const auto& r : g.rows()) rows.push_back(extend_word(r));
    return GeneratorMatrix(length(), std::move(rows));
}

bool ExtendedCode::contains(const BitVec& word) const {
    if (word.size() != length()) throw std::invalid_argument("word length differs from extended length");
    if (word.count() & 1u) return false;
    BitVec head = word;
    head.resize(base_.length());
    return base_.contains(head);
}

bool ExtendedCode::is_self_orthogonal() const {
    const bool parity = base_.generator().weight() & 1u;
    return shift_form_gram_is_zero(base_.generator(), dimension(), parity);
}

ExtendedCode extend(const CyclicCode& c) { return ExtendedCode(c); }

bool is_self_dual(const ExtendedCode& e) { return 2 * e.dimension() == e.length() && e.is_self_orthogonal(); }

bool is_doubly_even(const ExtendedCode& e) {
    // all shift-form rows share the weight of the extended generator
    return e.dimension() > 0 && e.extended_generator().count() % 4 == 0 && e.is_self_orthogonal();
}

bool is_even_weight_subcode(const CyclicCode& sub, const CyclicCode& sup) {
    if (sub.length() != sup.length()) return false;
    if (sub.dimension() + 1 != sup.dimension()) return false;
    if (!(sup.generator().weight() & 1u)) return false;
    if (sub.generator().weight() & 1u) return false;
    return poly_mod(sub.generator(), sup.generator()).is_zero();
}

bool shift_form_gram_is_zero(const BinaryPoly& g, std::size_t rows, bool parity_product) {
    if (rows == 0) return true;
    const std::size_t deg = g.degree().value_or(0);
    // shifts beyond deg g have zero overlap; only the parity term remains
    if (rows > deg + 1 && parity_product) return false;
    const std::size_t shifts = std::min(rows, deg + 1);

    const std::vector<std::uint64_t> base(g.words().begin(), g.words().end());
    const std::size_t words = base.size();
    std::vector<std::uint8_t> bad(shifts, 0);
    parallel_chunks(shifts, [&](std::size_t begin, std::size_t end) {
        // moving = g >> s for s in [begin, end), advanced one bit at a time
        std::vector<std::uint64_t> moving(words, 0);
        const std::size_t ws = begin >> 6;
        const unsigned bs = begin & 63;
        for (std::size_t i = ws; i < words; ++i) {
            std::uint64_t v = base[i] >> bs;
            if (bs && i + 1 < words) v |= base[i + 1] << (64 - bs);
            moving[i - ws] = v;
        }
        for (std::size_t s = begin; s < end; ++s) {
            const std::size_t live = words - (s >> 6);
            const bool odd = (simd::and_popcount(std::span<const std::uint64_t>(base).first(live),
                                                 std::span<const std::uint64_t>(moving).first(live)) &
                              1u) != 0;
            if (odd != parity_product) bad[s] = 1;
            for (std::size_t i = 0; i < live; ++i) {
                moving[i] >>= 1;
                if (i + 1 < words) moving[i] |= moving[i + 1] << 63;
            }
        }
    });
    return std::none_of(bad.begin(), bad.end(), [](std::uint8_t b) { return b != 0; });
}

}  // namespace duadic
