// Higman linearization: square pencils L_f(t0, t1..tm) with
//   rk L_f(I, A_1..A_m) = d (l - 1) + rk f(A_1..A_m)
// for every d and every tuple of d x d matrices, plus the t0-padded pencils
// D_{f,r} and the explicit block reduction for the Frobenius pencil.
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "blowup/ncpoly.hpp"
#include "blowup/pencil.hpp"

namespace blowup {

/// s x s pencil in (t0, t1): t0 on the superdiagonal, diagonal
/// (t1, -t1, ..., -t1), and -t1 in the bottom-left corner. Linearizes
/// T1^s - T1.
LinearMatrix build_frobenius_pencil(const Field& field, std::size_t s);

/// Generic linearization of a nonconstant f. Each word of length k >= 2
/// contributes a chain of k-1 blocks; the last block row/column carries the
/// linear and constant terms, and its Schur complement is -f.
LinearMatrix higman_linearize(const NcPoly& f);

/// Block diagonal [L_f, t0 I_r]. L_f must be square with t0 as indeterminate 0.
LinearMatrix pad_pencil(const LinearMatrix& lf, std::size_t r);

struct BlockOp {
    enum class Kind { row_axpy, col_axpy, permute };
    Kind kind = Kind::permute;
    std::size_t src = 0;
    std::size_t dst = 0;
    std::optional<MatrixFq> factor;  // axpy multiplier
    std::vector<std::size_t> perm;   // permute only

    friend bool operator==(const BlockOp&, const BlockOp&) = default;
};

const char* to_string(BlockOp::Kind kind);

struct Reduction {
    MatrixFq canonical;
    std::vector<BlockOp> transcript;
};

/// Reduces M = L(I, A) for the l x l Frobenius pencil to diag(I, .., I, A^l - A)
/// by the alternating row/column eliminations with powers of A followed by a
/// cyclic block-column permutation. Throws MatrixError if M is not of that form.
Reduction higman_reduce(const MatrixFq& m, std::size_t d, std::size_t ell);

/// Applies a transcript with the matfq block primitives.
MatrixFq replay_transcript(const MatrixFq& m, const std::vector<BlockOp>& ops, std::size_t d);

struct HigmanVerification {
    bool holds = true;
    std::size_t d = 0;
    std::size_t ell = 0;
    std::uint64_t tuples_checked = 0;
    /// First violating tuple (A_1..A_m) with both sides of the rank identity.
    std::optional<std::vector<MatrixFq>> violation;
    std::size_t lhs_rank = 0;
    std::size_t rhs_rank = 0;
};

/// Exhaustively checks rk L_f(I, A) = d (l - 1) + rk f(A) over Mat_d^m.
/// L_f must have m + 1 indeterminates, t0 first.
HigmanVerification verify_higman(const LinearMatrix& lf, const NcPoly& f, std::size_t d,
                                 const SearchConfig& cfg = {});

}  // namespace blowup
