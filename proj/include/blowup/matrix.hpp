// Dense matrices over GF(p^k) and the exact operations the rest of the
// toolkit is built on: rank, products, Kronecker products and the block
// row/column operations used to reduce linearizations.
#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "blowup/gf.hpp"

namespace blowup {

class MatrixError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class MatrixFq {
public:
    MatrixFq() = default;
    /// Zero matrix.
    MatrixFq(Field field, std::size_t rows, std::size_t cols);

    static MatrixFq identity(Field field, std::size_t n);
    /// Entries are integers mapped through Z -> GF(p); use `from_reps` for
    /// extension-field entries.
    static MatrixFq from_ints(Field field, std::initializer_list<std::initializer_list<std::int64_t>> rows);
    static MatrixFq from_reps(Field field, std::size_t rows, std::size_t cols,
                              std::vector<FieldElement> entries);
    /// E_{i,j} (0-based): a single one at (i, j).
    static MatrixFq unit(Field field, std::size_t rows, std::size_t cols, std::size_t i,
                         std::size_t j);

    const Field& field() const { return field_; }
    const FieldSpec& spec() const { return *field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    FieldElement operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    FieldElement& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }

    std::span<const FieldElement> entries() const { return data_; }
    std::span<FieldElement> entries() { return data_; }

    bool is_zero() const;

    friend bool operator==(const MatrixFq& a, const MatrixFq& b);

private:
    Field field_;
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<FieldElement> data_;
};

// --- rank ---------------------------------------------------------------

/// Rank over the matrix's field. Dispatches to the bit-packed kernel for GF(2).
std::size_t mat_rank(const MatrixFq& a);
/// Gaussian elimination over GF(p^k); pivot = first nonzero entry top-to-bottom.
std::size_t rank_generic(const MatrixFq& a);
/// GF(2) only: rows packed into 64-bit words, elimination by XOR.
std::size_t rank_gf2(const MatrixFq& a);

/// In-place kernels over caller-owned storage; both destroy their input.
std::size_t rank_generic_inplace(const FieldSpec& f, std::span<FieldElement> a, std::size_t rows,
                                 std::size_t cols);
std::size_t rank_gf2_inplace(std::span<std::uint64_t> words, std::size_t rows,
                             std::size_t words_per_row, std::size_t cols);

inline std::size_t gf2_words_per_row(std::size_t cols) { return (cols + 63) / 64; }

// --- arithmetic ---------------------------------------------------------

MatrixFq mat_add(const MatrixFq& a, const MatrixFq& b);
MatrixFq mat_sub(const MatrixFq& a, const MatrixFq& b);
MatrixFq mat_neg(const MatrixFq& a);
MatrixFq mat_scale(FieldElement c, const MatrixFq& a);
MatrixFq mat_mul(const MatrixFq& a, const MatrixFq& b);
/// a^e for square a; a^0 = I.
MatrixFq mat_pow(const MatrixFq& a, std::uint64_t e);
MatrixFq transpose(const MatrixFq& a);

/// Inverse of a square matrix, or nullopt when singular.
std::optional<MatrixFq> mat_inverse(const MatrixFq& a);

/// Block (i, j) of the result is a_ij * b.
MatrixFq kron(const MatrixFq& a, const MatrixFq& b);

// --- block operations on d x d partitions -------------------------------

/// Block-row dst <- block-row dst + p * block-row src.
MatrixFq row_block_axpy(const MatrixFq& m, const MatrixFq& p, std::size_t src, std::size_t dst,
                        std::size_t d);
/// Block-col dst <- block-col dst + block-col src * q.
MatrixFq col_block_axpy(const MatrixFq& m, const MatrixFq& q, std::size_t src, std::size_t dst,
                        std::size_t d);
/// Block column j of the result is block column perm[j] of m.
MatrixFq block_permute_cols(const MatrixFq& m, std::span<const std::size_t> perm, std::size_t d);

/// The d x d block at block position (bi, bj).
MatrixFq block(const MatrixFq& m, std::size_t bi, std::size_t bj, std::size_t d);

}  // namespace blowup
