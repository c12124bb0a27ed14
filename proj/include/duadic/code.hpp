#pragma once

#include <memory>
#include <vector>

#include "duadic/bitvec.hpp"
#include "duadic/cyclotomic.hpp"
#include "duadic/gf2m.hpp"
#include "duadic/gf2poly.hpp"

namespace duadic {

// Binary generator matrix; each row is a codeword of length `length`.
class GeneratorMatrix {
public:
    GeneratorMatrix(std::size_t length, std::vector<BitVec> rows, bool systematic = false);

    std::size_t length() const noexcept { return length_; }
    std::size_t row_count() const noexcept { return rows_.size(); }
    const std::vector<BitVec>& rows() const noexcept { return rows_; }
    const BitVec& row(std::size_t i) const { return rows_[i]; }
    bool systematic() const noexcept { return systematic_; }

    std::size_t rank() const;

    // Reduced row-echelon form with pivots taken leftmost-first. Rank-deficient
    // rows are dropped.
    GeneratorMatrix systematic_form() const;

    // Reduced row-echelon form where pivot columns are searched in the given
    // order. Returns the matrix and the chosen pivot columns (one per row).
    std::pair<GeneratorMatrix, std::vector<std::size_t>> reduced_by_columns(
        std::span<const std::size_t> column_order) const;

    // G * G^T == 0 over GF(2).
    bool gram_is_zero() const;
    // G * H^T == 0 over GF(2).
    bool orthogonal_to(const GeneratorMatrix& other) const;

    BitVec encode(const BitVec& message) const;

private:
    std::size_t length_;
    std::vector<BitVec> rows_;
    bool systematic_;
};

// Binary cyclic code of odd length n = 2^m - 1 given by its defining set T
// relative to the field's primitive element.
class CyclicCode {
public:
    static CyclicCode from_defining_set(std::shared_ptr<const FieldGF2m> field, DefiningSet T);

    std::size_t length() const noexcept { return T_.modulus(); }
    std::size_t dimension() const noexcept { return length() - T_.size(); }
    const BinaryPoly& generator() const noexcept { return g_; }
    const DefiningSet& defining_set() const noexcept { return T_; }
    const FieldGF2m& field() const noexcept { return *field_; }
    const std::shared_ptr<const FieldGF2m>& field_ptr() const noexcept { return field_; }

    BinaryPoly check_polynomial() const;

    // Rows x^i g(x), 0 <= i < k.
    GeneratorMatrix generator_matrix() const;

    // w(x) mod g(x) == 0
    bool contains(const BitVec& word) const;
    // w(alpha^i) == 0 for every i in T
    bool contains_by_roots(const BitVec& word) const;

    // C is contained in its dual; checked through the autocorrelation of g,
    // which equals G * G^T for the shift-form generator matrix.
    bool is_self_orthogonal() const;

    friend CyclicCode dual(const CyclicCode& c);

private:
    CyclicCode(std::shared_ptr<const FieldGF2m> field, DefiningSet T, BinaryPoly g);

    std::shared_ptr<const FieldGF2m> field_;
    DefiningSet T_;
    BinaryPoly g_;
};

// Dual code: generator is the reciprocal of the check polynomial, defining set
// Z_n \ (-T).
CyclicCode dual(const CyclicCode& c);

// C extended by an overall parity bit stored at index n.
class ExtendedCode {
public:
    explicit ExtendedCode(CyclicCode base) : base_(std::move(base)) {}

    const CyclicCode& base() const noexcept { return base_; }
    std::size_t length() const noexcept { return base_.length() + 1; }
    std::size_t dimension() const noexcept { return base_.dimension(); }

    // Appends the parity bit to a length-n word.
    BitVec extend_word(const BitVec& word) const;
    // g(x) with its parity bit; every generator row is a shift of this word.
    BitVec extended_generator() const;
    GeneratorMatrix generator_matrix() const;
    bool contains(const BitVec& word) const;

    // G * G^T == 0, evaluated through the autocorrelation of g plus parity.
    bool is_self_orthogonal() const;

private:
    CyclicCode base_;
};

ExtendedCode extend(const CyclicCode& c);

// 2 * dim == length and G * G^T == 0.
bool is_self_dual(const ExtendedCode& e);
// Self-orthogonal and every generator row weight divisible by 4.
bool is_doubly_even(const ExtendedCode& e);
// sub is contained in sup with codimension 1, sup has an odd-weight word, and
// every generator row of sub has even weight.
bool is_even_weight_subcode(const CyclicCode& sub, const CyclicCode& sup);

// Parity of the autocorrelation sum_l g_l g_{l+s} for every shift s < rows,
// each combined with `parity_product`; true iff all vanish. This is the
// Gram matrix of the shift-form generator matrix of g with `rows` rows.
bool shift_form_gram_is_zero(const BinaryPoly& g, std::size_t rows, bool parity_product);

}  // namespace duadic
