// Linear matrices L = t_1 X_1 + ... + t_m X_m and their blow-up ranks.
#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "blowup/matrix.hpp"
#include "blowup/search.hpp"

namespace blowup {

/// A pencil over a field: an ordered list of p x q coefficient matrices,
/// one per indeterminate, with optional indeterminate names.
class LinearMatrix {
public:
    /// Labels default to t1..tm.
    LinearMatrix(Field field, std::size_t rows, std::size_t cols, std::vector<MatrixFq> coeffs,
                 std::vector<std::string> labels = {});

    const Field& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t num_vars() const { return coeffs_.size(); }
    const std::vector<MatrixFq>& coeffs() const { return coeffs_; }
    const MatrixFq& coeff(std::size_t i) const { return coeffs_.at(i); }
    const std::vector<std::string>& labels() const { return labels_; }
    std::optional<std::size_t> index_of(const std::string& label) const;

    friend bool operator==(const LinearMatrix& a, const LinearMatrix& b) {
        return same_field(a.field_, b.field_) && a.rows_ == b.rows_ && a.cols_ == b.cols_ &&
               a.coeffs_ == b.coeffs_ && a.labels_ == b.labels_;
    }

private:
    Field field_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<MatrixFq> coeffs_;
    std::vector<std::string> labels_;
};

/// sum_i a_i X_i.
MatrixFq pencil_eval_scalars(const LinearMatrix& l, std::span<const FieldElement> a);

/// sum_i X_i (x) A_i for r x s matrices A_i, assembled block by block.
MatrixFq pencil_eval_matrices(const LinearMatrix& l, std::span<const MatrixFq> a);

enum class SearchMode { exhaustive, normalized, random };

const char* to_string(SearchMode mode);
std::optional<SearchMode> parse_search_mode(const std::string& s);

struct RankCertificate {
    std::size_t achieved_rank = 0;
    std::vector<MatrixFq> witness;
    std::size_t blowup_rows = 1;
    std::size_t blowup_cols = 1;
    SearchMode mode = SearchMode::exhaustive;
    bool exhaustive_proof = false;
    bool is_multiple_of_d = false;
    std::uint64_t tuples_checked = 0;
    std::optional<std::uint64_t> seed;
    std::int64_t elapsed_ms = 0;
};

/// Number of assignments the given mode enumerates, or nullopt on overflow.
std::optional<std::uint64_t> search_size(const LinearMatrix& l, std::size_t d, SearchMode mode,
                                         const SearchConfig& cfg);

/// Max rank of L(A_1..A_m) over d x d assignments.
///   exhaustive: all q^(m d^2) tuples.
///   normalized: A_1 restricted to diag(1,..,1,0,..,0) (d+1 forms), the rest
///     over all of Mat_d; covers every rank since simultaneous A_i -> P A_i Q
///     preserves rank of the blow-up.
///   random: `cfg.budget` seeded samples; never a proof.
/// Ties go to the least enumeration index. The certificate is re-verified
/// before being returned.
RankCertificate blowup_rank(const LinearMatrix& l, std::size_t d, SearchMode mode,
                            const SearchConfig& cfg = {});

/// Scalar rank: blow-up with d = 1, exhaustive.
RankCertificate pencil_rank(const LinearMatrix& l, const SearchConfig& cfg = {});

/// Drops coefficients that are linearly dependent on earlier ones (zero and
/// repeated coefficients in particular). The parametrized space is unchanged,
/// so its rank and blow-up ranks are those of the input pencil.
LinearMatrix space_from_pencil(const LinearMatrix& l);

/// Re-evaluates a certificate's witness and compares ranks.
bool certificate_self_check(const LinearMatrix& l, const RankCertificate& cert);

/// Rank of L(A) for a flat tuple of m*d*d entries, reusing internal scratch.
/// Uses a packed GF(2) assembly when the field is GF(2).
class BlowupEvaluator {
public:
    BlowupEvaluator(const LinearMatrix& l, std::size_t d);
    std::size_t rank_of(std::span<const FieldElement> tuple);

private:
    std::size_t rank_gf2(std::span<const FieldElement> tuple);
    std::size_t rank_generic(std::span<const FieldElement> tuple);

    const LinearMatrix* l_;
    std::size_t d_;
    std::size_t out_rows_;
    std::size_t out_cols_;
    // For each block (i, j): the (var, coefficient) pairs with X_var(i,j) != 0.
    std::vector<std::vector<std::pair<std::size_t, FieldElement>>> support_;
    std::vector<std::uint64_t> words_;
    std::vector<std::uint64_t> block_rows_;
    std::vector<FieldElement> dense_;
};

}  // namespace blowup
