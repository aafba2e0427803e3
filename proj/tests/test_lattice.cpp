#include "reeder/dynkin.hpp"
#include "reeder/errors.hpp"
#include "reeder/forms.hpp"
#include "reeder/intmath.hpp"
#include "reeder/lattice.hpp"

#include <doctest.h>

#include <random>
#include <set>
#include <vector>

using namespace reeder;

namespace {

bool same(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            if (a(i, j) != b(i, j)) return false;
    return true;
}

bool unimodular(const IntMatrix& m) {
    const Int d = det_bareiss(m);
    return d == 1 || d == -1;
}

void check_snf(const IntMatrix& m) {
    const SmithResult res = smith_normal_form(m);
    CHECK(unimodular(res.U));
    CHECK(unimodular(res.V));
    CHECK(same(multiply(multiply(res.U, m), res.V), res.S));
    for (Eigen::Index i = 0; i < res.S.rows(); ++i)
        for (Eigen::Index j = 0; j < res.S.cols(); ++j)
            if (i != j) CHECK(res.S(i, j) == 0);
    for (size_t k = 0; k < res.diagonal.size(); ++k) {
        CHECK(res.diagonal[k] >= 0);
        if (k + 1 < res.diagonal.size()) {
            const Int& d = res.diagonal[k];
            const Int& e = res.diagonal[k + 1];
            CHECK((d == 0 ? e == 0 : e % d == 0));
        }
    }
}

IntMatrix from_list(int rows, int cols, const std::vector<int>& entries) {
    IntMatrix m(rows, cols);
    int k = 0;
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m(i, j) = entries[static_cast<size_t>(k++)];
    return m;
}

RealFormSpec compact(Series s, int rank) { return make_inner_form(make_type(s, rank), 0); }

} // namespace

TEST_CASE("diagonal form of simple examples") {
    const auto d23 = smith_normal_form(from_list(2, 2, {2, 0, 0, 3}));
    CHECK(d23.diagonal == std::vector<Int>{1, 6});

    const auto id3 = smith_normal_form(from_list(3, 3, {1, 0, 0, 0, 1, 0, 0, 0, 1}));
    CHECK(id3.diagonal == std::vector<Int>{1, 1, 1});

    const auto neg = smith_normal_form(from_list(1, 1, {-5}));
    CHECK(neg.diagonal == std::vector<Int>{5});

    const auto rect = smith_normal_form(from_list(2, 3, {2, 4, 4, -6, 6, 12}));
    CHECK(rect.diagonal == std::vector<Int>{2, 6});
    const auto rect_t = smith_normal_form(from_list(3, 2, {2, -6, 4, 6, 4, 12}));
    CHECK(rect_t.diagonal == std::vector<Int>{2, 6});

    const auto rank1 = smith_normal_form(from_list(2, 2, {0, 1, 0, 0}));
    CHECK(rank1.diagonal == std::vector<Int>{1, 0});

    const auto zero = smith_normal_form(IntMatrix::Zero(2, 2));
    CHECK(zero.diagonal == std::vector<Int>{0, 0});
}

TEST_CASE("transform matrices reconstruct the input") {
    check_snf(from_list(2, 2, {2, 0, 0, 3}));
    check_snf(from_list(2, 3, {2, 4, 4, -6, 6, 12}));
    check_snf(from_list(3, 3, {4, -2, 0, -2, 4, -2, 0, -2, 4}));
    check_snf(IntMatrix::Zero(3, 2));

    std::mt19937_64 rng(1905);
    std::uniform_int_distribution<int> entry(-9, 9);
    for (int trial = 0; trial < 30; ++trial) {
        IntMatrix m(4, 4);
        for (Eigen::Index i = 0; i < 4; ++i)
            for (Eigen::Index j = 0; j < 4; ++j) m(i, j) = entry(rng);
        check_snf(m);
    }
}

TEST_CASE("coroot columns: unit vectors, lowest root from the comarks") {
    const IntMatrix a3 = coroot_matrix(make_type(Series::A, 3), {1, 3});
    REQUIRE(a3.rows() == 3);
    REQUIRE(a3.cols() == 2);
    CHECK(same(a3, from_list(3, 2, {1, 0, 0, 0, 0, 1})));

    const IntMatrix d4 = coroot_matrix(make_type(Series::D, 4), {0, 1, 3, 4});
    CHECK(same(d4, from_list(4, 4,
                             {-1, 1, 0, 0, //
                              -2, 0, 0, 0, //
                              -1, 0, 1, 0, //
                              -1, 0, 0, 1})));
}

TEST_CASE("subset validation") {
    const auto d4 = compact(Series::D, 4);
    CHECK_NOTHROW(make_subgroup(d4, {1, 3, 4}));
    CHECK_NOTHROW(make_subgroup(d4, {0, 1, 3, 4}, true));
    CHECK_THROWS_AS(make_subgroup(d4, {}), ArgumentError);
    CHECK_THROWS_AS(make_subgroup(d4, {0, 1}, false), ArgumentError); // 0 needs the flag
    CHECK_THROWS_AS(make_subgroup(d4, {3, 1}), ArgumentError);
    CHECK_THROWS_AS(make_subgroup(d4, {1, 1, 3}), ArgumentError);
    CHECK_THROWS_AS(make_subgroup(d4, {1, 5}), ArgumentError);
    // the whole extended diagram is not a finite shape
    CHECK_THROWS_AS(make_subgroup(d4, {0, 1, 2, 3, 4}, true), UnsupportedError);
}

TEST_CASE("simple-root subsets have trivial torsion") {
    for (const Series s : {Series::A, Series::B, Series::C, Series::D, Series::E,
                           Series::F, Series::G}) {
        for (int n = 1; n <= 6; ++n) {
            DynkinType t{};
            try {
                t = make_type(s, n);
            } catch (const ArgumentError&) {
                continue;
            }
            const auto spec = compact(s, n);
            for (unsigned mask = 1; mask < (1u << n); ++mask) {
                std::vector<int> keep;
                for (int v = 1; v <= n; ++v)
                    if (mask & (1u << (v - 1))) keep.push_back(v);
                CHECK(fundamental_group_order(make_subgroup(spec, keep)) == 1);
            }
        }
    }
}

TEST_CASE("extended subsets can pick up torsion") {
    const auto d4 = make_subgroup(compact(Series::D, 4), {0, 1, 3, 4}, true);
    CHECK(fundamental_group_order(d4) == 2);
    const EmbeddingMap emb = embedding_mod2(d4);
    CHECK(emb.pi1_order == 2);
    CHECK(emb.invariant_factors == std::vector<Int>{1, 1, 1, 2});
    // even torsion shows up as a mod-2 kernel
    CHECK(emb.apply(parse_labeling("1111")) == 0);
    CHECK(emb.apply(parse_labeling("1000")) != 0);
    CHECK(emb.apply(parse_labeling("0100")) == vertex_bit(1));

    const auto e8 = make_subgroup(compact(Series::E, 8), {0, 1, 2, 3, 5, 6, 7, 8}, true);
    CHECK(fundamental_group_order(e8) == 5);
    const EmbeddingMap odd = embedding_mod2(e8);
    CHECK(odd.pi1_order == 5);
    // odd torsion: the mod-2 transport is injective
    std::set<Labeling> images;
    for (Labeling sub = 0; sub < (Labeling{1} << 8); ++sub)
        images.insert(odd.apply(sub));
    CHECK(images.size() == (Labeling{1} << 8));

    // the A-series affine subsets all stay torsion-free
    const auto a2 = make_subgroup(compact(Series::A, 2), {0, 2}, true);
    CHECK(fundamental_group_order(a2) == 1);
    // two orthogonal short/long root lines inside the rank-2 triple-bond type
    const auto g2 = make_subgroup(compact(Series::G, 2), {0, 1}, true);
    CHECK(fundamental_group_order(g2) == 2);
}

TEST_CASE("twist bits transport along the kept vertices") {
    const auto b3_1 = make_inner_form(make_type(Series::B, 3), 1);
    CHECK(induced_coloring(make_subgroup(b3_1, {0, 2}, true)) == parse_labeling("10"));
    const auto b3_3 = make_inner_form(make_type(Series::B, 3), 3);
    CHECK(induced_coloring(make_subgroup(b3_3, {0, 2}, true)) == 0); // mark 2 kills the bit
    CHECK(induced_coloring(make_subgroup(b3_3, {2, 3}, false)) == parse_labeling("01"));

    const auto outer = named_form("SL(6,R)");
    CHECK_THROWS_AS(induced_coloring(SubgroupSpec{outer, {1, 2}, false}), UnsupportedError);
}
