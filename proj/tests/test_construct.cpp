#include "blowup/construct.hpp"
#include "blowup/io.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace blowup;

TEST_CASE("construct_theorem2") {
    auto f2 = FieldSpec::make(2), f3 = FieldSpec::make(3);
    LinearMatrix d5 = construct_theorem2(f2, 2, 5);
    CHECK(d5.rows() == 5);
    CHECK(d5 == pad_pencil(build_frobenius_pencil(f2, 4), 1));
    CHECK(recognize_padded_frobenius(d5) == PaddedShape{4, 1});

    LinearMatrix d10 = construct_theorem2(f3, 2, 10);
    CHECK(d10.rows() == 10);
    CHECK(recognize_padded_frobenius(d10) == PaddedShape{9, 1});
    CHECK(recognize_padded_frobenius(construct_theorem2(f2, 3, 11)) == PaddedShape{8, 3});

    CHECK_THROWS_AS(construct_theorem2(f2, 2, 4), std::invalid_argument);
    CHECK_THROWS_AS(construct_theorem2(f2, 1, 5), std::invalid_argument);

    auto inst = theorem2_instance(f3, 2, 10);
    CHECK(inst.kind == "theorem2");
    CHECK(inst.shape == PaddedShape{9, 1});
}

TEST_CASE("log condition") {
    CHECK(theorem2_log_condition(2, 2, 5));     // 2^2 <= 4
    CHECK_FALSE(theorem2_log_condition(2, 3, 9));  // 3^2 > 8
    CHECK(theorem2_log_condition(3, 2, 10));    // 2^3 <= 9
    CHECK_FALSE(theorem2_log_condition(3, 2, 8));
}

TEST_CASE("scalar rank of the theorem pencil is below n") {
    for (auto [p, d, n] : {std::tuple{2u, 2u, 5u}, {2u, 2u, 6u}, {3u, 2u, 10u}, {2u, 3u, 9u}}) {
        auto f = FieldSpec::make(p);
        LinearMatrix l = construct_theorem2(f, d, n);
        for (auto a0 : f->elements())
            for (auto a1 : f->elements()) {
                const std::vector<FieldElement> at{a0, a1};
                CHECK(mat_rank(pencil_eval_scalars(l, at)) < n);
            }
        CHECK(pencil_rank(l).achieved_rank == n - 1);
    }
}

TEST_CASE("remark pencil") {
    LinearMatrix r = construct_remark_f2();
    auto f2 = r.field();
    CHECK(r.rows() == 7);
    CHECK(r.labels() == std::vector<std::string>{"a", "b", "c", "d"});
    CHECK(r.coeff(2).is_zero());
    CHECK(space_from_pencil(r).num_vars() == 3);
    CHECK(space_from_pencil(r).labels() == std::vector<std::string>{"a", "b", "d"});
    CHECK_FALSE(recognize_padded_frobenius(r).has_value());

    const std::vector<FieldElement> zero(4, FieldElement{0});
    CHECK(pencil_eval_scalars(r, zero).is_zero());

    // d = 1: the d-pattern, two skew blocks side by side plus two diagonal ones.
    const std::vector<FieldElement> only_d{FieldElement{0}, FieldElement{0}, FieldElement{0}, FieldElement{1}};
    const MatrixFq md = pencil_eval_scalars(r, only_d);
    CHECK(md == MatrixFq::from_ints(f2, {{0, 1, 0, 0, 1, 0, 0},
                                         {1, 0, 0, 1, 0, 0, 0},
                                         {0, 0, 0, 0, 0, 0, 0},
                                         {0, 1, 0, 0, 0, 0, 0},
                                         {1, 0, 0, 0, 0, 0, 0},
                                         {0, 0, 0, 0, 0, 1, 0},
                                         {0, 0, 0, 0, 0, 0, 1}}));
    CHECK(mat_rank(md) == 6);
}

TEST_CASE("verify_counterexample") {
    auto f2 = FieldSpec::make(2);
    auto r5 = verify_counterexample(construct_theorem2(f2, 2, 5), 2, SearchMode::exhaustive);
    CHECK(r5.certificate.achieved_rank == 9);
    CHECK(r5.certificate.tuples_checked == 256);
    CHECK(r5.verdict == Verdict::counterexample_confirmed);
    CHECK(r5.proposition_bounds == std::pair<std::size_t, std::size_t>{8, 10});
    CHECK(r5.bounds_consistent == true);

    auto r6 = verify_counterexample(construct_theorem2(f2, 2, 6), 2, SearchMode::normalized);
    CHECK(r6.certificate.achieved_rank == 11);
    CHECK(r6.verdict == Verdict::counterexample_confirmed);
    CHECK(r6.bounds_consistent == true);

    LinearMatrix id(f2, 5, 5, {MatrixFq::identity(f2, 5)});
    auto ri = verify_counterexample(id, 2, SearchMode::exhaustive);
    CHECK(ri.certificate.achieved_rank == 10);
    CHECK(ri.verdict == Verdict::not_a_counterexample);
    CHECK_FALSE(ri.proposition_bounds.has_value());

    SearchConfig cfg{.budget = 100, .seed = 1};
    auto rr = verify_counterexample(construct_theorem2(f2, 2, 5), 2, SearchMode::random, cfg);
    CHECK(rr.verdict == Verdict::inconclusive);

    auto rem = verify_counterexample(construct_remark_f2(), 2, SearchMode::normalized, {}, remark_f2_instance().shape);
    CHECK(rem.certificate.achieved_rank == 13);
    CHECK(rem.space.num_vars() == 3);
    CHECK(rem.verdict == Verdict::counterexample_confirmed);
    CHECK(rem.proposition_bounds == std::pair<std::size_t, std::size_t>{12, 14});

    SearchConfig tight{.cap = 100};
    CHECK_THROWS_AS(verify_counterexample(construct_theorem2(f2, 2, 5), 2, SearchMode::exhaustive, tight),
                    SearchError);
}

TEST_CASE("check_hypothesis") {
    auto f2 = FieldSpec::make(2);
    auto h = check_hypothesis(ncpoly_parse("T1^4 - T1", f2), 2);
    CHECK(h.holds);
    CHECK(h.witness.witness.front() == MatrixFq::unit(f2, 2, 2, 0, 1));
    CHECK_FALSE(check_hypothesis(ncpoly_parse("T1", f2), 2).holds);
    CHECK(check_hypothesis(ncpoly_parse("[T1,T2]^2 + [T1,T2]", f2), 2).holds);
    // Singular everywhere but identically zero on Mat_1.
    auto z = check_hypothesis(ncpoly_parse("T1^2 - T1", f2), 1);
    CHECK(z.census.all_singular);
    CHECK_FALSE(z.holds);
}

TEST_CASE("space file round trip") {
    auto f2 = FieldSpec::make(2), f3 = FieldSpec::make(3);
    for (const auto& [l, inst] : {std::pair{construct_theorem2(f2, 2, 5), theorem2_instance(f2, 2, 5)},
                                  std::pair{construct_theorem2(f3, 2, 10), theorem2_instance(f3, 2, 10)},
                                  std::pair{construct_remark_f2(), remark_f2_instance()}}) {
        const std::string text = space_to_json(l, inst).dump();
        SpaceFile back = space_from_json(json::parse(text));
        CHECK(back.pencil == l);
        REQUIRE(back.instance.has_value());
        CHECK(back.instance->shape == inst.shape);
        CHECK(space_to_json(back.pencil, back.instance).dump() == text);
    }
}
