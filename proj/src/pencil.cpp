#include "blowup/pencil.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

namespace blowup {

LinearMatrix::LinearMatrix(Field field, std::size_t rows, std::size_t cols,
                           std::vector<MatrixFq> coeffs, std::vector<std::string> labels)
    : field_(std::move(field)), rows_(rows), cols_(cols), coeffs_(std::move(coeffs)),
      labels_(std::move(labels)) {
    if (!field_) throw MatrixError("pencil requires a field");
    if (coeffs_.empty()) throw MatrixError("pencil needs at least one indeterminate");
    for (const auto& x : coeffs_) {
        if (!same_field(x.field(), field_)) throw MatrixError("pencil coefficient in wrong field");
        if (x.rows() != rows_ || x.cols() != cols_) throw MatrixError("pencil coefficient has wrong shape");
    }
    if (labels_.empty())
        for (std::size_t i = 0; i < coeffs_.size(); ++i) labels_.push_back("t" + std::to_string(i + 1));
    if (labels_.size() != coeffs_.size()) throw MatrixError("pencil label count mismatch");
}

std::optional<std::size_t> LinearMatrix::index_of(const std::string& label) const {
    auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - labels_.begin());
}

MatrixFq pencil_eval_scalars(const LinearMatrix& l, std::span<const FieldElement> a) {
    if (a.size() != l.num_vars()) throw MatrixError("pencil_eval_scalars: wrong number of scalars");
    MatrixFq out(l.field(), l.rows(), l.cols());
    for (std::size_t k = 0; k < a.size(); ++k) {
        if (!l.field()->contains(a[k])) throw MatrixError("pencil_eval_scalars: scalar not in field");
        if (!a[k].is_zero()) out = mat_add(out, mat_scale(a[k], l.coeff(k)));
    }
    return out;
}

MatrixFq pencil_eval_matrices(const LinearMatrix& l, std::span<const MatrixFq> a) {
    if (a.size() != l.num_vars()) throw MatrixError("pencil_eval_matrices: wrong number of matrices");
    const std::size_t r = a[0].rows(), s = a[0].cols();
    for (const auto& x : a) {
        if (x.rows() != r || x.cols() != s) throw MatrixError("pencil_eval_matrices: shape mismatch");
        if (!same_field(x.field(), l.field())) throw MatrixError("pencil_eval_matrices: field mismatch");
    }
    const auto& f = *l.field();
    MatrixFq out(l.field(), l.rows() * r, l.cols() * s);
    for (std::size_t i = 0; i < l.rows(); ++i)
        for (std::size_t j = 0; j < l.cols(); ++j)
            for (std::size_t k = 0; k < a.size(); ++k) {
                const FieldElement c = l.coeff(k)(i, j);
                if (c.is_zero()) continue;
                for (std::size_t u = 0; u < r; ++u)
                    for (std::size_t v = 0; v < s; ++v) {
                        auto& e = out.at(i * r + u, j * s + v);
                        e = f.add(e, f.mul(c, a[k](u, v)));
                    }
            }
    return out;
}

const char* to_string(SearchMode mode) {
    switch (mode) {
        case SearchMode::exhaustive: return "exhaustive";
        case SearchMode::normalized: return "normalized";
        case SearchMode::random: return "random";
    }
    return "?";
}

std::optional<SearchMode> parse_search_mode(const std::string& s) {
    if (s == "exhaustive") return SearchMode::exhaustive;
    if (s == "normalized") return SearchMode::normalized;
    if (s == "random") return SearchMode::random;
    return std::nullopt;
}

// --- evaluator ----------------------------------------------------------

BlowupEvaluator::BlowupEvaluator(const LinearMatrix& l, std::size_t d)
    : l_(&l), d_(d), out_rows_(l.rows() * d), out_cols_(l.cols() * d),
      support_(l.rows() * l.cols()) {
    if (d == 0) throw std::invalid_argument("blow-up size must be >= 1");
    for (std::size_t i = 0; i < l.rows(); ++i)
        for (std::size_t j = 0; j < l.cols(); ++j)
            for (std::size_t k = 0; k < l.num_vars(); ++k) {
                const FieldElement c = l.coeff(k)(i, j);
                if (!c.is_zero()) support_[i * l.cols() + j].emplace_back(k, c);
            }
    if (l.field()->is_gf2() && d <= 64) {
        words_.resize(out_rows_ * gf2_words_per_row(out_cols_));
        block_rows_.resize(l.num_vars() * d);
    } else {
        dense_.resize(out_rows_ * out_cols_);
    }
}

std::size_t BlowupEvaluator::rank_of(std::span<const FieldElement> tuple) {
    if (tuple.size() != l_->num_vars() * d_ * d_) throw std::invalid_argument("tuple has wrong length");
    if (out_rows_ == 0 || out_cols_ == 0) return 0;
    return words_.empty() ? rank_generic(tuple) : rank_gf2(tuple);
}

std::size_t BlowupEvaluator::rank_gf2(std::span<const FieldElement> tuple) {
    const std::size_t d = d_;
    for (std::size_t k = 0; k < l_->num_vars(); ++k)
        for (std::size_t a = 0; a < d; ++a) {
            std::uint64_t bits = 0;
            for (std::size_t b = 0; b < d; ++b)
                if (tuple[(k * d + a) * d + b].rep) bits |= std::uint64_t{1} << b;
            block_rows_[k * d + a] = bits;
        }
    const std::size_t wpr = gf2_words_per_row(out_cols_);
    std::fill(words_.begin(), words_.end(), 0);
    for (std::size_t i = 0; i < l_->rows(); ++i)
        for (std::size_t j = 0; j < l_->cols(); ++j) {
            const auto& supp = support_[i * l_->cols() + j];
            if (supp.empty()) continue;
            const std::size_t off = j * d, w = off / 64, sh = off % 64;
            for (std::size_t a = 0; a < d; ++a) {
                std::uint64_t mask = 0;
                for (const auto& [k, c] : supp) mask ^= block_rows_[k * d + a];
                if (!mask) continue;
                std::uint64_t* row = words_.data() + (i * d + a) * wpr;
                row[w] |= mask << sh;
                if (sh != 0 && sh + d > 64) row[w + 1] |= mask >> (64 - sh);
            }
        }
    return rank_gf2_inplace(words_, out_rows_, wpr, out_cols_);
}

std::size_t BlowupEvaluator::rank_generic(std::span<const FieldElement> tuple) {
    const auto& f = *l_->field();
    const std::size_t d = d_;
    std::fill(dense_.begin(), dense_.end(), FieldElement{0});
    for (std::size_t i = 0; i < l_->rows(); ++i)
        for (std::size_t j = 0; j < l_->cols(); ++j)
            for (const auto& [k, c] : support_[i * l_->cols() + j])
                for (std::size_t a = 0; a < d; ++a)
                    for (std::size_t b = 0; b < d; ++b) {
                        const FieldElement x = tuple[(k * d + a) * d + b];
                        if (x.is_zero()) continue;
                        auto& e = dense_[(i * d + a) * out_cols_ + j * d + b];
                        e = f.add(e, f.mul(c, x));
                    }
    return rank_generic_inplace(f, dense_, out_rows_, out_cols_);
}

// --- search -------------------------------------------------------------

namespace {

/// Flat tuple for enumeration index `i` under the given mode.
void tuple_at(SearchMode mode, std::uint64_t i, std::uint32_t q, std::size_t d, std::uint64_t seed,
              std::span<FieldElement> buf) {
    switch (mode) {
        case SearchMode::exhaustive:
            decode_tuple(i, q, buf);
            return;
        case SearchMode::normalized: {
            const std::size_t r = i % (d + 1);
            auto head = buf.first(d * d);
            std::fill(head.begin(), head.end(), FieldElement{0});
            for (std::size_t a = 0; a < r; ++a) head[a * d + a] = FieldElement{1};
            decode_tuple(i / (d + 1), q, buf.subspan(d * d));
            return;
        }
        case SearchMode::random:
            random_tuple(seed, i, q, buf);
            return;
    }
}

}  // namespace

std::optional<std::uint64_t> search_size(const LinearMatrix& l, std::size_t d, SearchMode mode,
                                         const SearchConfig& cfg) {
    const std::uint64_t q = l.field()->q();
    const std::uint64_t dd = std::uint64_t{d} * d;
    switch (mode) {
        case SearchMode::exhaustive: return checked_pow(q, l.num_vars() * dd);
        case SearchMode::normalized: {
            auto rest = checked_pow(q, (l.num_vars() - 1) * dd);
            if (!rest || *rest > (std::uint64_t{1} << 62) / (d + 1)) return std::nullopt;
            return *rest * (d + 1);
        }
        case SearchMode::random: return cfg.budget;
    }
    return std::nullopt;
}

RankCertificate blowup_rank(const LinearMatrix& l, std::size_t d, SearchMode mode,
                            const SearchConfig& cfg) {
    if (d < 1) throw std::invalid_argument("blowup_rank: d must be >= 1");
    const auto t0 = std::chrono::steady_clock::now();
    const std::uint32_t q = l.field()->q();
    const std::size_t len = l.num_vars() * d * d;

    auto count = search_size(l, d, mode, cfg);
    if (mode != SearchMode::random && (!count || *count > cfg.cap)) {
        throw SearchError(std::string("blowup_rank: ") + to_string(mode) + " search needs " +
                          (count ? std::to_string(*count) : std::string("more than 2^62")) +
                          " assignments, cap is " + std::to_string(cfg.cap));
    }

    const auto ceiling = static_cast<std::int64_t>(std::min(l.rows(), l.cols()) * d);
    auto make_eval = [&] {
        return [&, ev = BlowupEvaluator(l, d), buf = std::vector<FieldElement>(len)](
                   std::uint64_t i) mutable -> std::int64_t {
            tuple_at(mode, i, q, d, cfg.seed, buf);
            return static_cast<std::int64_t>(ev.rank_of(buf));
        };
    };
    const ArgMax best = run_argmax(cfg, *count, make_eval, ceiling);

    RankCertificate cert;
    cert.blowup_rows = cert.blowup_cols = d;
    cert.mode = mode;
    cert.exhaustive_proof = mode != SearchMode::random;
    cert.tuples_checked = best.checked;
    if (mode == SearchMode::random) cert.seed = cfg.seed;
    if (best.found()) {
        std::vector<FieldElement> buf(len);
        tuple_at(mode, best.index, q, d, cfg.seed, buf);
        cert.achieved_rank = static_cast<std::size_t>(best.score);
        for (std::size_t k = 0; k < l.num_vars(); ++k) {
            auto part = std::span<const FieldElement>(buf).subspan(k * d * d, d * d);
            cert.witness.push_back(MatrixFq::from_reps(l.field(), d, d, {part.begin(), part.end()}));
        }
        if (!certificate_self_check(l, cert))
            throw std::logic_error("blowup_rank: witness does not reproduce the achieved rank");
    } else {
        // Empty random budget: the all-zero assignment is the trivial witness.
        for (std::size_t k = 0; k < l.num_vars(); ++k) cert.witness.emplace_back(l.field(), d, d);
    }
    cert.is_multiple_of_d = cert.achieved_rank % d == 0;
    cert.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - t0)
                          .count();
    return cert;
}

RankCertificate pencil_rank(const LinearMatrix& l, const SearchConfig& cfg) {
    return blowup_rank(l, 1, SearchMode::exhaustive, cfg);
}

bool certificate_self_check(const LinearMatrix& l, const RankCertificate& cert) {
    if (cert.witness.size() != l.num_vars()) return false;
    return mat_rank(pencil_eval_matrices(l, cert.witness)) == cert.achieved_rank;
}

LinearMatrix space_from_pencil(const LinearMatrix& l) {
    const std::size_t n = l.rows() * l.cols();
    std::vector<MatrixFq> kept;
    std::vector<std::string> labels;
    std::vector<FieldElement> stacked;
    std::size_t rank = 0;
    for (std::size_t k = 0; k < l.num_vars(); ++k) {
        std::vector<FieldElement> trial = stacked;
        auto e = l.coeff(k).entries();
        trial.insert(trial.end(), e.begin(), e.end());
        std::vector<FieldElement> work = trial;
        const std::size_t r = n == 0 ? 0 : rank_generic_inplace(*l.field(), work, kept.size() + 1, n);
        if (r > rank) {
            rank = r;
            stacked = std::move(trial);
            kept.push_back(l.coeff(k));
            labels.push_back(l.labels()[k]);
        }
    }
    if (kept.empty()) {
        // The zero space; keep one zero coefficient so the pencil stays well-formed.
        kept.push_back(l.coeff(0));
        labels.push_back(l.labels()[0]);
    }
    return LinearMatrix(l.field(), l.rows(), l.cols(), std::move(kept), std::move(labels));
}

}  // namespace blowup
