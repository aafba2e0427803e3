#include "reeder/dynkin.hpp"
#include "reeder/errors.hpp"
#include "reeder/forms.hpp"
#include "reeder/homspace.hpp"
#include "reeder/puzzle.hpp"

#include <doctest.h>

#include <algorithm>
#include <vector>

using namespace reeder;

namespace {

std::vector<int> all_but(int n, int removed) {
    std::vector<int> keep;
    for (int v = 1; v <= n; ++v)
        if (v != removed) keep.push_back(v);
    return keep;
}

void check_invariants(const Pi0Result& res) {
    CHECK(res.count == res.xi0.size());
    CHECK(res.count >= 1);
    CHECK(res.subgroup_class_count == res.xi.size());
    for (Labeling x : res.xi0)
        CHECK(std::find(res.xi.begin(), res.xi.end(), x) != res.xi.end());
}

} // namespace

TEST_CASE("component counts for the split rank-7 quotients") {
    const auto ev = named_form("EV");

    const auto r3 = pi0_count(ev, all_but(7, 3));
    check_invariants(r3);
    CHECK(r3.count == 3);
    CHECK(r3.pi1_order == 1);
    CHECK(r3.ambient_class_count == 2);
    CHECK(r3.subgroup_class_count == 6);
    CHECK(r3.sub_n == 6);

    const auto r2 = pi0_count(ev, all_but(7, 2));
    check_invariants(r2);
    CHECK(r2.count == 2);
    CHECK(r2.subgroup_class_count == 4);

    const auto r1 = pi0_count(ev, all_but(7, 1));
    check_invariants(r1);
    CHECK(r1.count == 1);
    CHECK(r1.subgroup_class_count == 3);

    // keeping everything leaves a single component
    CHECK(pi0_count(ev, {1, 2, 3, 4, 5, 6, 7}).count == 1);
    CHECK(pi0_count(ev, {7}).count == 1);
}

TEST_CASE("component counts for the Grassmannian-like quotients of the leaf twists") {
    auto star = [](int n) { return named_form("SpinStar(" + std::to_string(2 * n) + ")"); };
    // dropping an interior vertex m
    CHECK(pi0_count(star(6), all_but(6, 2)).count == 2);
    CHECK(pi0_count(star(6), all_but(6, 4)).count == 3);
    CHECK(pi0_count(star(8), all_but(8, 3)).count == 2);
    CHECK(pi0_count(star(8), all_but(8, 4)).count == 3);
    // dropping the other fork leaf
    CHECK(pi0_count(star(6), all_but(6, 5)).count == 2);
    CHECK(pi0_count(star(8), all_but(8, 7)).count == 2);
    CHECK(pi0_count(star(12), all_but(12, 11)).count == 3);
}

TEST_CASE("odd-odd orthogonal quotients go through the folded recipe") {
    const auto spin57 = named_form("Spin(5,7)");
    const auto res = reduced_pi0(spin57, 3);
    check_invariants(res);
    CHECK(res.count == 2);
    CHECK(res.ambient_class_count == 3); // the folded ambient pair
    CHECK(res.subgroup_class_count == 4);

    // only interior vertices between the two blocks reduce
    CHECK_THROWS_AS(reduced_pi0(spin57, 2), UnsupportedError);
    CHECK_THROWS_AS(reduced_pi0(spin57, 4), UnsupportedError);

    CHECK(reduced_pi0(named_form("Spin(7,9)"), 4).count == 2);
    CHECK(reduced_pi0(named_form("Spin(7,9)"), 5).count == 2);
    CHECK(reduced_pi0(named_form("Spin(5,9)"), 3).count == 2);
    CHECK(reduced_pi0(named_form("Spin(5,9)"), 4).count == 2);

    // no recipe outside that family
    CHECK_THROWS_AS(reduced_pi0(named_form("Sp(4)"), 2), UnsupportedError);
    CHECK_THROWS_AS(reduced_pi0(named_form("EI"), 3), UnsupportedError);
    CHECK_THROWS_AS(reduced_pi0(named_form("SL(6,R)"), 3), UnsupportedError);
}

TEST_CASE("extended subsets ride through odd torsion only") {
    const auto eviii = named_form("EVIII");
    const auto res = pi0_count(eviii, {0, 1, 2, 3, 5, 6, 7, 8}, true);
    check_invariants(res);
    CHECK(res.pi1_order == 5);
    CHECK(res.invariant_factors == std::vector<Int>{1, 1, 1, 1, 1, 1, 1, 5});
    CHECK(res.xi.size() == 9);
    CHECK(res.xi0.size() == 4);
    CHECK(res.count == 4);
    CHECK(res.ambient_class_count == 3);

    // an even fundamental group breaks the labeling transport
    const auto spin8 = make_inner_form(make_type(Series::D, 4), 0);
    CHECK_THROWS_AS(subgroup_puzzle(spin8, {0, 1, 3, 4}, true), UnsupportedError);
    CHECK_THROWS_AS(pi0_count(spin8, {0, 1, 3, 4}, true), UnsupportedError);
}

TEST_CASE("subgroup boards require an inner ambient form") {
    CHECK_THROWS_AS(subgroup_puzzle(named_form("EI"), {1, 2}), UnsupportedError);
    CHECK_THROWS_AS(pi0_count(named_form("SL(6,R)"), {1, 2}), UnsupportedError);
}

TEST_CASE("a hand-rolled embedding replays the built-in pipeline") {
    const auto ev = named_form("EV");
    const auto keep = all_but(7, 3);
    const SubgroupPuzzle sp = subgroup_puzzle(ev, keep);
    CHECK(sp.instance.n == 6);
    CHECK(sp.instance.display == keep);

    const PuzzleInstance ambient = make_instance(build_diagram(ev.dtype), ev.coloring);
    const Pi0Result direct = pi0_with_custom_embedding(sp.instance, sp.embedding, ambient);
    const Pi0Result built_in = pi0_count(ev, keep);
    CHECK(direct.count == built_in.count);
    CHECK(direct.xi == built_in.xi);
    CHECK(direct.xi0 == built_in.xi0);

    // dimension mismatches are rejected on both sides
    const PuzzleInstance a3 = make_instance(build_diagram(make_type(Series::A, 3)), 0);
    CHECK_THROWS_AS(pi0_with_custom_embedding(sp.instance, sp.embedding, a3), ArgumentError);
    CHECK_THROWS_AS(pi0_with_custom_embedding(a3, sp.embedding, ambient), ArgumentError);
}
