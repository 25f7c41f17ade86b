#include <random>

#include "blowup/higman.hpp"
#include "blowup/io.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace blowup;

namespace {

std::size_t structural_bound(const NcPoly& f) {
    std::size_t b = 1;
    for (const auto& t : f.terms()) b += t.word.empty() ? 0 : t.word.size() - 1;
    return b;
}

MatrixFq frobenius_at(const Field& f, std::size_t s, const MatrixFq& a) {
    const std::vector<MatrixFq> args{MatrixFq::identity(f, a.rows()), a};
    return pencil_eval_matrices(build_frobenius_pencil(f, s), args);
}

}  // namespace

TEST_CASE("Frobenius pencil, s = 2 over GF(3)") {
    auto f3 = FieldSpec::make(3);
    LinearMatrix l = build_frobenius_pencil(f3, 2);
    CHECK(l.labels() == std::vector<std::string>{"t0", "t1"});
    CHECK(l.coeff(0) == MatrixFq::unit(f3, 2, 2, 0, 1));
    CHECK(l.coeff(1) == MatrixFq::from_ints(f3, {{1, 0}, {-1, -1}}));
    CHECK_THROWS_AS(build_frobenius_pencil(f3, 1), std::invalid_argument);
}

TEST_CASE("Frobenius pencil, s = 4 over GF(2)") {
    auto f2 = FieldSpec::make(2);
    LinearMatrix l = build_frobenius_pencil(f2, 4);
    CHECK(l.coeff(1) == MatrixFq::from_ints(f2, {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {1, 0, 0, 1}}));
    CHECK(l.coeff(0) == MatrixFq::from_ints(f2, {{0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}, {0, 0, 0, 0}}));
    for (std::size_t s = 2; s <= 9; ++s) {
        const std::vector<FieldElement> at{FieldElement{1}, FieldElement{0}};
        CHECK(mat_rank(pencil_eval_scalars(build_frobenius_pencil(f2, s), at)) == s - 1);
    }
}

TEST_CASE("higman_linearize: shapes") {
    auto f2 = FieldSpec::make(2);
    LinearMatrix t1 = higman_linearize(ncpoly_parse("T1", f2));
    CHECK(t1.rows() == 1);
    CHECK(t1.labels() == std::vector<std::string>{"t0", "t1"});
    CHECK(verify_higman(t1, ncpoly_parse("T1", f2), 2).holds);

    NcPoly rem = ncpoly_parse("[T1,T2]^2 + [T1,T2]", f2);
    LinearMatrix lr = higman_linearize(rem);
    CHECK(lr.rows() == structural_bound(rem));
    CHECK(lr.num_vars() == 3);

    CHECK_THROWS_AS(higman_linearize(ncpoly_parse("1", f2)), std::invalid_argument);
    CHECK_THROWS_AS(higman_linearize(ncpoly_parse("T1 - T1", f2)), std::invalid_argument);
}

TEST_CASE("verify_higman: Frobenius pencils") {
    auto f2 = FieldSpec::make(2), f3 = FieldSpec::make(3);
    for (std::size_t d : {1u, 2u}) {
        auto v = verify_higman(build_frobenius_pencil(f2, 4), ncpoly_parse("T1^4 - T1", f2), d);
        CHECK(v.holds);
        CHECK(v.tuples_checked == (d == 1 ? 2u : 16u));
        auto v3 = verify_higman(build_frobenius_pencil(f3, 9), ncpoly_parse("T1^9 - T1", f3), d);
        CHECK(v3.holds);
        CHECK(v3.tuples_checked == (d == 1 ? 3u : 81u));
    }
    // The Frobenius pencil of size s linearizes T1^s - T1 for every s.
    for (std::size_t s = 2; s <= 6; ++s)
        CHECK(verify_higman(build_frobenius_pencil(f3, s), ncpoly_parse("T1^" + std::to_string(s) + " - T1", f3), 2)
                  .holds);
}

TEST_CASE("verify_higman: wrong polynomial is caught") {
    auto f2 = FieldSpec::make(2);
    auto v = verify_higman(build_frobenius_pencil(f2, 4), ncpoly_parse("T1^3 - T1", f2), 2);
    CHECK_FALSE(v.holds);
    REQUIRE(v.violation.has_value());
    CHECK(v.lhs_rank != v.rhs_rank);
    const MatrixFq& a = v.violation->front();
    CHECK(mat_rank(frobenius_at(f2, 4, a)) == v.lhs_rank);
    CHECK(v.tuples_checked >= 1);

    CHECK_THROWS_AS(verify_higman(build_frobenius_pencil(f2, 4), ncpoly_parse("T1 T2", f2), 2),
                    std::invalid_argument);
    CHECK_THROWS_AS(verify_higman(build_frobenius_pencil(f2, 4), ncpoly_parse("T1^4", f2), 5),
                    SearchError);
}

TEST_CASE("verify_higman: generic linearization") {
    auto f2 = FieldSpec::make(2);
    NcPoly rem = ncpoly_parse("[T1,T2]^2 + [T1,T2]", f2);
    LinearMatrix lr = higman_linearize(rem);
    auto v1 = verify_higman(lr, rem, 1);
    CHECK(v1.holds);
    CHECK(v1.tuples_checked == 4);
    auto v2 = verify_higman(lr, rem, 2);
    CHECK(v2.holds);
    CHECK(v2.tuples_checked == 256);

    // The generic construction also linearizes the Frobenius polynomial.
    NcPoly frob = ncpoly_parse("T1^4 - T1", f2);
    CHECK(verify_higman(higman_linearize(frob), frob, 2).holds);
}

TEST_CASE("verify_higman: random polynomials") {
    std::mt19937_64 rng(73);
    for (auto f : {FieldSpec::make(2), FieldSpec::make(3)}) {
        for (int t = 0; t < 25; ++t) {
            std::vector<Term> terms;
            const std::size_t n = 1 + rng() % 4;
            for (std::size_t i = 0; i < n; ++i) {
                Word w(rng() % 5);
                for (auto& x : w) x = static_cast<std::uint8_t>(1 + rng() % 2);
                terms.push_back(Term{FieldElement{static_cast<std::uint32_t>(1 + rng() % (f->q() - 1))}, w});
            }
            NcPoly g(f, 2, terms);
            if (g.is_constant()) continue;
            LinearMatrix lg = higman_linearize(g);
            CAPTURE(g.to_string());
            CHECK(lg.rows() <= structural_bound(g));
            CHECK(verify_higman(lg, g, 1).holds);
            CHECK(verify_higman(lg, g, 2).holds);
        }
    }
}

TEST_CASE("pad_pencil") {
    auto f2 = FieldSpec::make(2);
    LinearMatrix l4 = build_frobenius_pencil(f2, 4);
    LinearMatrix d = pad_pencil(l4, 1);
    CHECK(d.rows() == 5);
    CHECK(d.coeff(0)(4, 4) == FieldElement{1});
    CHECK(d.coeff(1)(4, 4).is_zero());
    CHECK(pad_pencil(l4, 2).rows() == 6);
    for (std::uint32_t a1 : {0u, 1u}) {
        const std::vector<FieldElement> at{FieldElement{0}, FieldElement{a1}};
        CHECK(mat_rank(pencil_eval_scalars(d, at)) == mat_rank(pencil_eval_scalars(l4, at)));
    }
    CHECK_THROWS_AS(pad_pencil(l4, 0), std::invalid_argument);
    LinearMatrix unlabeled(f2, 4, 4, l4.coeffs());
    CHECK_THROWS_AS(pad_pencil(unlabeled, 1), std::invalid_argument);
    CHECK_THROWS_AS(pad_pencil(LinearMatrix(f2, 2, 3, {MatrixFq(f2, 2, 3)}, {"t0"}), 1), std::invalid_argument);
}

TEST_CASE("higman_reduce: s = 2 over GF(2)") {
    auto f2 = FieldSpec::make(2);
    for (const auto& a : oracle::all_matrices(f2, 2)) {
        const MatrixFq m = frobenius_at(f2, 2, a);
        const MatrixFq id = MatrixFq::identity(f2, 2);
        CHECK(block(m, 0, 0, 2) == a);
        CHECK(block(m, 0, 1, 2) == id);
        CHECK(block(m, 1, 0, 2) == a);
        CHECK(block(m, 1, 1, 2) == a);
        auto red = higman_reduce(m, 2, 2);
        REQUIRE(red.transcript.size() == 3);
        CHECK(block(red.canonical, 0, 0, 2) == id);
        CHECK(block(red.canonical, 0, 1, 2).is_zero());
        CHECK(block(red.canonical, 1, 0, 2).is_zero());
        CHECK(block(red.canonical, 1, 1, 2) == mat_add(mat_mul(a, a), a));
        CHECK(mat_rank(red.canonical) == mat_rank(m));
    }
}

TEST_CASE("higman_reduce: intermediates and transcript") {
    auto f2 = FieldSpec::make(2);
    const MatrixFq e12 = MatrixFq::unit(f2, 2, 2, 0, 1);
    auto red = higman_reduce(frobenius_at(f2, 4, e12), 2, 4);
    CHECK(red.transcript.size() == 7);
    CHECK(red.transcript[0].kind == BlockOp::Kind::row_axpy);
    CHECK(red.transcript[1].kind == BlockOp::Kind::col_axpy);
    CHECK(red.transcript[6].kind == BlockOp::Kind::permute);
    CHECK(red.transcript[6].perm == std::vector<std::size_t>{1, 2, 3, 0});

    // After the first row operation block (1,0) holds A^2.
    auto f3 = FieldSpec::make(3);
    const MatrixFq a = MatrixFq::from_ints(f3, {{1, 2}, {0, 2}});
    auto r3 = higman_reduce(frobenius_at(f3, 3, a), 2, 3);
    const std::vector<BlockOp> first(r3.transcript.begin(), r3.transcript.begin() + 1);
    CHECK(block(replay_transcript(frobenius_at(f3, 3, a), first, 2), 1, 0, 2) == mat_mul(a, a));

    CHECK(block(red.canonical, 3, 3, 2) == e12);
    CHECK(mat_rank(red.canonical) == 7);
    auto red_i = higman_reduce(frobenius_at(f2, 4, MatrixFq::identity(f2, 2)), 2, 4);
    CHECK(block(red_i.canonical, 3, 3, 2).is_zero());
    CHECK(mat_rank(red_i.canonical) == 6);
}

TEST_CASE("higman_reduce: canonical form and rank for random inputs") {
    std::mt19937_64 rng(79);
    for (auto f : {FieldSpec::make(2), FieldSpec::make(3), FieldSpec::make(2, 2)}) {
        for (int t = 0; t < 20; ++t) {
            const std::size_t d = 1 + rng() % 3, ell = 2 + rng() % 5;
            const MatrixFq a = oracle::random_matrix(f, d, d, rng);
            const MatrixFq m = frobenius_at(f, ell, a);
            auto red = higman_reduce(m, d, ell);
            CHECK(mat_rank(red.canonical) == mat_rank(m));
            CHECK(replay_transcript(m, red.transcript, d) == red.canonical);
            for (std::size_t i = 0; i < ell; ++i)
                for (std::size_t j = 0; j < ell; ++j) {
                    const MatrixFq b = block(red.canonical, i, j, d);
                    if (i != j) CHECK(b.is_zero());
                    else if (i + 1 < ell) CHECK(b == MatrixFq::identity(f, d));
                    else CHECK(b == mat_sub(mat_pow(a, ell), a));
                }
        }
    }
}

TEST_CASE("higman_reduce: rejects other matrices") {
    auto f2 = FieldSpec::make(2);
    MatrixFq m = frobenius_at(f2, 3, MatrixFq::unit(f2, 2, 2, 1, 0));
    m.at(5, 5) = f2->add(m(5, 5), FieldElement{1});
    CHECK_THROWS_AS(higman_reduce(m, 2, 3), MatrixError);
    CHECK_THROWS_AS(higman_reduce(MatrixFq::identity(f2, 6), 2, 4), MatrixError);
    CHECK_THROWS_AS(higman_reduce(MatrixFq(f2, 6, 4), 2, 3), MatrixError);
}

TEST_CASE("transcript JSON replays to the same canonical form") {
    std::mt19937_64 rng(83);
    auto f3 = FieldSpec::make(3);
    const MatrixFq a = oracle::random_matrix(f3, 2, 2, rng);
    const MatrixFq m = frobenius_at(f3, 5, a);
    auto red = higman_reduce(m, 2, 5);
    json j = json::parse(transcript_to_json(red.transcript, 2).dump());
    CHECK(j[0]["op"] == "row_axpy");
    CHECK(j[0]["d"] == 2);
    auto ops = transcript_from_json(j, f3);
    CHECK(ops == red.transcript);
    CHECK(replay_transcript(m, ops, 2) == red.canonical);
    CHECK_THROWS_AS(transcript_from_json(json::parse(R"([{"op":"swap"}])"), f3), FormatError);
}

TEST_CASE("padded pencil rank identity at q = 2, d = 2, s = 4, r = 1") {
    auto f2 = FieldSpec::make(2);
    LinearMatrix d = pad_pencil(build_frobenius_pencil(f2, 4), 1);
    NcPoly frob = ncpoly_parse("T1^4 - T1", f2);
    const auto all = oracle::all_matrices(f2, 2);
    std::size_t invertible = 0;
    for (const auto& a0 : all)
        for (const auto& a1 : all) {
            const std::size_t rk = mat_rank(pencil_eval_matrices(d, std::vector{a0, a1}));
            if (auto inv = mat_inverse(a0)) {
                ++invertible;
                const MatrixFq b = mat_mul(*inv, a1);
                CHECK(rk == 2 * 3 + mat_rank(ncpoly_eval(frob, std::vector{b})) + 2);
            } else {
                CHECK(rk < 10);
            }
        }
    CHECK(invertible == 6 * 16);
}
