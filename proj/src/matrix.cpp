#include "blowup/matrix.hpp"

#include <algorithm>
#include <string>
#include <utility>

namespace blowup {

namespace {

void require_same_field(const MatrixFq& a, const MatrixFq& b, const char* op) {
    if (!same_field(a.field(), b.field()))
        throw MatrixError(std::string(op) + ": operands live in different fields");
}

void require_same_shape(const MatrixFq& a, const MatrixFq& b, const char* op) {
    require_same_field(a, b, op);
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw MatrixError(std::string(op) + ": shape mismatch");
}

void require_blocked(const MatrixFq& m, std::size_t d, const char* op) {
    if (d == 0 || m.rows() % d != 0 || m.cols() % d != 0)
        throw MatrixError(std::string(op) + ": dimensions not divisible by block size");
}

}  // namespace

MatrixFq::MatrixFq(Field field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols) {
    if (!field_) throw MatrixError("matrix requires a field");
}

MatrixFq MatrixFq::identity(Field field, std::size_t n) {
    MatrixFq m(std::move(field), n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = FieldElement{1};
    return m;
}

MatrixFq MatrixFq::from_ints(Field field,
                             std::initializer_list<std::initializer_list<std::int64_t>> rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.begin()->size();
    MatrixFq m(field, r, c);
    std::size_t i = 0;
    for (const auto& row : rows) {
        if (row.size() != c) throw MatrixError("ragged matrix literal");
        std::size_t j = 0;
        for (auto v : row) m.at(i, j++) = field->from_int(v);
        ++i;
    }
    return m;
}

MatrixFq MatrixFq::from_reps(Field field, std::size_t rows, std::size_t cols,
                             std::vector<FieldElement> entries) {
    if (entries.size() != rows * cols) throw MatrixError("entry count does not match shape");
    for (auto e : entries)
        if (!field->contains(e)) throw MatrixError("entry rep out of range for field");
    MatrixFq m(std::move(field), rows, cols);
    m.data_ = std::move(entries);
    return m;
}

MatrixFq MatrixFq::unit(Field field, std::size_t rows, std::size_t cols, std::size_t i,
                        std::size_t j) {
    MatrixFq m(std::move(field), rows, cols);
    m.at(i, j) = FieldElement{1};
    return m;
}

bool MatrixFq::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](FieldElement e) { return e.is_zero(); });
}

bool operator==(const MatrixFq& a, const MatrixFq& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && same_field(a.field_, b.field_) &&
           a.data_ == b.data_;
}

// --- rank ---------------------------------------------------------------

std::size_t rank_generic_inplace(const FieldSpec& f, std::span<FieldElement> a, std::size_t rows,
                                 std::size_t cols) {
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t piv = rank;
        while (piv < rows && a[piv * cols + col].is_zero()) ++piv;
        if (piv == rows) continue;
        if (piv != rank)
            std::swap_ranges(a.begin() + piv * cols, a.begin() + (piv + 1) * cols,
                             a.begin() + rank * cols);
        FieldElement* prow = a.data() + rank * cols;
        const FieldElement inv = f.inv(prow[col]);
        for (std::size_t r = rank + 1; r < rows; ++r) {
            FieldElement* row = a.data() + r * cols;
            if (row[col].is_zero()) continue;
            const FieldElement factor = f.neg(f.mul(row[col], inv));
            for (std::size_t c = col; c < cols; ++c)
                if (!prow[c].is_zero()) row[c] = f.add(row[c], f.mul(factor, prow[c]));
        }
        ++rank;
    }
    return rank;
}

std::size_t rank_gf2_inplace(std::span<std::uint64_t> w, std::size_t rows,
                             std::size_t words_per_row, std::size_t cols) {
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        const std::size_t word = col / 64;
        const std::uint64_t bit = std::uint64_t{1} << (col % 64);
        std::size_t piv = rank;
        while (piv < rows && !(w[piv * words_per_row + word] & bit)) ++piv;
        if (piv == rows) continue;
        std::uint64_t* prow = w.data() + rank * words_per_row;
        if (piv != rank) std::swap_ranges(prow, prow + words_per_row, w.data() + piv * words_per_row);
        for (std::size_t r = rank + 1; r < rows; ++r) {
            std::uint64_t* row = w.data() + r * words_per_row;
            if (row[word] & bit)
                for (std::size_t k = word; k < words_per_row; ++k) row[k] ^= prow[k];
        }
        ++rank;
    }
    return rank;
}

std::size_t rank_generic(const MatrixFq& a) {
    std::vector<FieldElement> work(a.entries().begin(), a.entries().end());
    return rank_generic_inplace(a.spec(), work, a.rows(), a.cols());
}

std::size_t rank_gf2(const MatrixFq& a) {
    if (!a.spec().is_gf2()) throw MatrixError("rank_gf2: matrix is not over GF(2)");
    const std::size_t wpr = gf2_words_per_row(a.cols());
    std::vector<std::uint64_t> words(a.rows() * wpr, 0);
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (a(i, j).rep) words[i * wpr + j / 64] |= std::uint64_t{1} << (j % 64);
    return rank_gf2_inplace(words, a.rows(), wpr, a.cols());
}

std::size_t mat_rank(const MatrixFq& a) {
    if (a.rows() == 0 || a.cols() == 0) return 0;
    return a.spec().is_gf2() ? rank_gf2(a) : rank_generic(a);
}

// --- arithmetic ---------------------------------------------------------

MatrixFq mat_add(const MatrixFq& a, const MatrixFq& b) {
    require_same_shape(a, b, "mat_add");
    MatrixFq out(a.field(), a.rows(), a.cols());
    const auto& f = a.spec();
    for (std::size_t i = 0; i < a.entries().size(); ++i)
        out.entries()[i] = f.add(a.entries()[i], b.entries()[i]);
    return out;
}

MatrixFq mat_sub(const MatrixFq& a, const MatrixFq& b) { return mat_add(a, mat_neg(b)); }

MatrixFq mat_neg(const MatrixFq& a) {
    MatrixFq out(a.field(), a.rows(), a.cols());
    for (std::size_t i = 0; i < a.entries().size(); ++i)
        out.entries()[i] = a.spec().neg(a.entries()[i]);
    return out;
}

MatrixFq mat_scale(FieldElement c, const MatrixFq& a) {
    if (!a.spec().contains(c)) throw MatrixError("mat_scale: scalar not in field");
    MatrixFq out(a.field(), a.rows(), a.cols());
    for (std::size_t i = 0; i < a.entries().size(); ++i)
        out.entries()[i] = a.spec().mul(c, a.entries()[i]);
    return out;
}

MatrixFq mat_mul(const MatrixFq& a, const MatrixFq& b) {
    require_same_field(a, b, "mat_mul");
    if (a.cols() != b.rows()) throw MatrixError("mat_mul: inner dimensions differ");
    const auto& f = a.spec();
    MatrixFq out(a.field(), a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t l = 0; l < a.cols(); ++l) {
            const FieldElement x = a(i, l);
            if (x.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                out.at(i, j) = f.add(out(i, j), f.mul(x, b(l, j)));
        }
    return out;
}

MatrixFq mat_pow(const MatrixFq& a, std::uint64_t e) {
    if (!a.is_square()) throw MatrixError("mat_pow: matrix not square");
    MatrixFq result = MatrixFq::identity(a.field(), a.rows());
    MatrixFq base = a;
    while (e) {
        if (e & 1) result = mat_mul(result, base);
        e >>= 1;
        if (e) base = mat_mul(base, base);
    }
    return result;
}

MatrixFq transpose(const MatrixFq& a) {
    MatrixFq out(a.field(), a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out.at(j, i) = a(i, j);
    return out;
}

std::optional<MatrixFq> mat_inverse(const MatrixFq& a) {
    if (!a.is_square()) throw MatrixError("mat_inverse: matrix not square");
    const std::size_t n = a.rows();
    const auto& f = a.spec();
    // Gauss-Jordan on [A | I].
    MatrixFq aug(a.field(), n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = a(i, j);
        aug.at(i, n + i) = f.one();
    }
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && aug(piv, col).is_zero()) ++piv;
        if (piv == n) return std::nullopt;
        if (piv != col)
            for (std::size_t j = 0; j < 2 * n; ++j) std::swap(aug.at(piv, j), aug.at(col, j));
        const FieldElement inv = f.inv(aug(col, col));
        for (std::size_t j = 0; j < 2 * n; ++j) aug.at(col, j) = f.mul(inv, aug(col, j));
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || aug(r, col).is_zero()) continue;
            const FieldElement factor = f.neg(aug(r, col));
            for (std::size_t j = 0; j < 2 * n; ++j)
                aug.at(r, j) = f.add(aug(r, j), f.mul(factor, aug(col, j)));
        }
    }
    MatrixFq out(a.field(), n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out.at(i, j) = aug(i, n + j);
    return out;
}

MatrixFq kron(const MatrixFq& a, const MatrixFq& b) {
    require_same_field(a, b, "kron");
    const auto& f = a.spec();
    MatrixFq out(a.field(), a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const FieldElement x = a(i, j);
            if (x.is_zero()) continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    out.at(i * b.rows() + k, j * b.cols() + l) = f.mul(x, b(k, l));
        }
    return out;
}

// --- block operations ---------------------------------------------------

MatrixFq block(const MatrixFq& m, std::size_t bi, std::size_t bj, std::size_t d) {
    require_blocked(m, d, "block");
    if ((bi + 1) * d > m.rows() || (bj + 1) * d > m.cols())
        throw MatrixError("block: index out of range");
    MatrixFq out(m.field(), d, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) out.at(i, j) = m(bi * d + i, bj * d + j);
    return out;
}

MatrixFq row_block_axpy(const MatrixFq& m, const MatrixFq& p, std::size_t src, std::size_t dst,
                        std::size_t d) {
    require_blocked(m, d, "row_block_axpy");
    require_same_field(m, p, "row_block_axpy");
    const std::size_t nb = m.rows() / d;
    if (src >= nb || dst >= nb) throw MatrixError("row_block_axpy: block index out of range");
    if (src == dst) throw MatrixError("row_block_axpy: src and dst must differ");
    if (p.rows() != d || p.cols() != d) throw MatrixError("row_block_axpy: multiplier must be d x d");
    const auto& f = m.spec();
    MatrixFq out = m;
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t l = 0; l < d; ++l) {
            const FieldElement x = p(i, l);
            if (x.is_zero()) continue;
            for (std::size_t c = 0; c < m.cols(); ++c)
                out.at(dst * d + i, c) = f.add(out(dst * d + i, c), f.mul(x, m(src * d + l, c)));
        }
    return out;
}

MatrixFq col_block_axpy(const MatrixFq& m, const MatrixFq& q, std::size_t src, std::size_t dst,
                        std::size_t d) {
    require_blocked(m, d, "col_block_axpy");
    require_same_field(m, q, "col_block_axpy");
    const std::size_t nb = m.cols() / d;
    if (src >= nb || dst >= nb) throw MatrixError("col_block_axpy: block index out of range");
    if (src == dst) throw MatrixError("col_block_axpy: src and dst must differ");
    if (q.rows() != d || q.cols() != d) throw MatrixError("col_block_axpy: multiplier must be d x d");
    const auto& f = m.spec();
    MatrixFq out = m;
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t l = 0; l < d; ++l) {
            const FieldElement x = m(r, src * d + l);
            if (x.is_zero()) continue;
            for (std::size_t j = 0; j < d; ++j)
                out.at(r, dst * d + j) = f.add(out(r, dst * d + j), f.mul(x, q(l, j)));
        }
    return out;
}

MatrixFq block_permute_cols(const MatrixFq& m, std::span<const std::size_t> perm, std::size_t d) {
    if (d == 0 || m.cols() % d != 0)
        throw MatrixError("block_permute_cols: columns not divisible by block size");
    const std::size_t nb = m.cols() / d;
    if (perm.size() != nb) throw MatrixError("block_permute_cols: permutation has wrong length");
    std::vector<bool> seen(nb, false);
    for (auto p : perm) {
        if (p >= nb || seen[p]) throw MatrixError("block_permute_cols: not a permutation");
        seen[p] = true;
    }
    MatrixFq out(m.field(), m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t bj = 0; bj < nb; ++bj)
            for (std::size_t j = 0; j < d; ++j) out.at(r, bj * d + j) = m(r, perm[bj] * d + j);
    return out;
}

}  // namespace blowup
