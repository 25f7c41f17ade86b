#include "blowup/higman.hpp"

#include <stdexcept>

namespace blowup {

LinearMatrix build_frobenius_pencil(const Field& field, std::size_t s) {
    if (s < 2) throw std::invalid_argument("build_frobenius_pencil: s must be >= 2");
    const auto& f = *field;
    const FieldElement one = f.one(), minus_one = f.neg(f.one());
    MatrixFq x0(field, s, s), x1(field, s, s);
    for (std::size_t i = 0; i + 1 < s; ++i) x0.at(i, i + 1) = one;
    x1.at(0, 0) = one;
    for (std::size_t i = 1; i < s; ++i) x1.at(i, i) = minus_one;
    x1.at(s - 1, 0) = minus_one;
    return LinearMatrix(field, s, s, {std::move(x0), std::move(x1)}, {"t0", "t1"});
}

LinearMatrix higman_linearize(const NcPoly& f) {
    if (f.is_constant()) throw std::invalid_argument("higman_linearize: polynomial is constant");
    const Field& field = f.field();
    const auto& F = *field;
    const std::size_t m = f.num_vars();

    std::size_t ell = 1;
    for (const auto& t : f.terms())
        if (t.word.size() >= 2) ell += t.word.size() - 1;
    const std::size_t corner = ell - 1;

    std::vector<MatrixFq> x(m + 1, MatrixFq(field, ell, ell));
    auto add = [&](std::size_t var, std::size_t i, std::size_t j, FieldElement c) {
        x[var].at(i, j) = F.add(x[var](i, j), c);
    };
    const FieldElement minus_one = F.neg(F.one());

    std::size_t base = 0;
    for (const auto& t : f.terms()) {
        const Word& w = t.word;
        if (w.empty()) {
            add(0, corner, corner, F.neg(t.coeff));
        } else if (w.size() == 1) {
            add(w[0], corner, corner, F.neg(t.coeff));
        } else {
            const std::size_t k = w.size();
            for (std::size_t j = 0; j + 1 < k; ++j) add(0, base + j, base + j, F.one());
            for (std::size_t j = 0; j + 2 < k; ++j) add(w[j + 1], base + j, base + j + 1, minus_one);
            add(w[0], corner, base, F.one());
            add(w[k - 1], base + k - 2, corner, t.coeff);
            base += k - 1;
        }
    }
    std::vector<std::string> labels;
    for (std::size_t i = 0; i <= m; ++i) labels.push_back("t" + std::to_string(i));
    return LinearMatrix(field, ell, ell, std::move(x), std::move(labels));
}

LinearMatrix pad_pencil(const LinearMatrix& lf, std::size_t r) {
    if (r < 1) throw std::invalid_argument("pad_pencil: r must be >= 1");
    if (lf.rows() != lf.cols()) throw std::invalid_argument("pad_pencil: L_f must be square");
    if (lf.labels().front() != "t0")
        throw std::invalid_argument("pad_pencil: indeterminate 0 must be t0");
    const std::size_t ell = lf.rows(), n = ell + r;
    std::vector<MatrixFq> coeffs;
    for (std::size_t k = 0; k < lf.num_vars(); ++k) {
        MatrixFq x(lf.field(), n, n);
        for (std::size_t i = 0; i < ell; ++i)
            for (std::size_t j = 0; j < ell; ++j) x.at(i, j) = lf.coeff(k)(i, j);
        if (k == 0)
            for (std::size_t i = ell; i < n; ++i) x.at(i, i) = FieldElement{1};
        coeffs.push_back(std::move(x));
    }
    return LinearMatrix(lf.field(), n, n, std::move(coeffs), lf.labels());
}

const char* to_string(BlockOp::Kind kind) {
    switch (kind) {
        case BlockOp::Kind::row_axpy: return "row_axpy";
        case BlockOp::Kind::col_axpy: return "col_axpy";
        case BlockOp::Kind::permute: return "permute";
    }
    return "?";
}

MatrixFq replay_transcript(const MatrixFq& m, const std::vector<BlockOp>& ops, std::size_t d) {
    MatrixFq cur = m;
    for (const auto& op : ops) {
        switch (op.kind) {
            case BlockOp::Kind::row_axpy:
                cur = row_block_axpy(cur, op.factor.value(), op.src, op.dst, d);
                break;
            case BlockOp::Kind::col_axpy:
                cur = col_block_axpy(cur, op.factor.value(), op.src, op.dst, d);
                break;
            case BlockOp::Kind::permute:
                cur = block_permute_cols(cur, op.perm, d);
                break;
        }
    }
    return cur;
}

Reduction higman_reduce(const MatrixFq& m, std::size_t d, std::size_t ell) {
    if (ell < 2 || d < 1 || !m.is_square() || m.rows() != ell * d)
        throw MatrixError("higman_reduce: matrix is not an l x l arrangement of d x d blocks");
    const Field& field = m.field();
    const MatrixFq a = block(m, 0, 0, d);
    const MatrixFq id = MatrixFq::identity(field, d);
    const std::vector<MatrixFq> args{id, a};
    if (pencil_eval_matrices(build_frobenius_pencil(field, ell), args) != m)
        throw MatrixError("higman_reduce: matrix is not L(I, A) for the Frobenius pencil");

    // Step j: block-row j+1 += A * block-row j, which leaves A^(j+2) in block
    // (j+1, 0); then block-col 0 -= block-col (j+1) * A^(j+1) clears block (j, 0).
    Reduction out{m, {}};
    MatrixFq power = a;
    for (std::size_t j = 0; j + 1 < ell; ++j) {
        out.transcript.push_back({BlockOp::Kind::row_axpy, j, j + 1, a, {}});
        out.transcript.push_back({BlockOp::Kind::col_axpy, j + 1, 0, mat_neg(power), {}});
        power = mat_mul(power, a);
    }
    std::vector<std::size_t> perm;
    for (std::size_t j = 1; j < ell; ++j) perm.push_back(j);
    perm.push_back(0);
    out.transcript.push_back({BlockOp::Kind::permute, 0, 0, std::nullopt, perm});
    out.canonical = replay_transcript(m, out.transcript, d);
    return out;
}

HigmanVerification verify_higman(const LinearMatrix& lf, const NcPoly& f, std::size_t d,
                                 const SearchConfig& cfg) {
    if (d < 1) throw std::invalid_argument("verify_higman: d must be >= 1");
    if (lf.rows() != lf.cols()) throw std::invalid_argument("verify_higman: L_f must be square");
    if (lf.num_vars() != f.num_vars() + 1)
        throw std::invalid_argument("verify_higman: L_f needs one more indeterminate than f");
    if (!same_field(lf.field(), f.field())) throw std::invalid_argument("verify_higman: field mismatch");

    const Field& field = f.field();
    const std::uint32_t q = field->q();
    const std::size_t m = f.num_vars(), dd = d * d, ell = lf.rows();
    const std::uint64_t count = require_within_cap(q, m * dd, cfg.cap, "verify_higman");

    auto sides = [&](BlowupEvaluator& ev, std::vector<FieldElement>& buf, std::uint64_t i) {
        std::fill(buf.begin(), buf.begin() + dd, FieldElement{0});
        for (std::size_t a = 0; a < d; ++a) buf[a * d + a] = FieldElement{1};
        decode_tuple(i, q, std::span<FieldElement>(buf).subspan(dd));
        const std::size_t lhs = ev.rank_of(buf);
        auto args = unpack_tuple(field, m, d, std::span<const FieldElement>(buf).subspan(dd));
        const std::size_t rhs = d * (ell - 1) + mat_rank(ncpoly_eval(f, args));
        return std::pair{lhs, rhs};
    };
    auto make_pred = [&] {
        return [&, ev = BlowupEvaluator(lf, d),
                buf = std::vector<FieldElement>((m + 1) * dd)](std::uint64_t i) mutable {
            auto [lhs, rhs] = sides(ev, buf, i);
            return lhs != rhs;
        };
    };

    HigmanVerification report;
    report.d = d;
    report.ell = ell;
    auto hit = find_first(cfg, count, make_pred, &report.tuples_checked);
    if (hit) {
        BlowupEvaluator ev(lf, d);
        std::vector<FieldElement> buf((m + 1) * dd);
        auto [lhs, rhs] = sides(ev, buf, *hit);
        report.holds = false;
        report.lhs_rank = lhs;
        report.rhs_rank = rhs;
        report.violation = unpack_tuple(field, m, d, std::span<const FieldElement>(buf).subspan(dd));
    }
    return report;
}

}  // namespace blowup
