#include "reeder/dynkin.hpp"
#include "reeder/errors.hpp"
#include "reeder/forms.hpp"
#include "reeder/puzzle.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>
#include <string>
#include <vector>

using namespace reeder;

namespace {

Labeling L(const std::string& s) { return parse_labeling(s); }

PuzzleInstance board_of(const RealFormSpec& spec) {
    return make_instance(build_diagram(spec.dtype), spec.coloring);
}

std::set<Labeling> class_set(const OrbitDecomposition& dec, int id) {
    std::set<Labeling> out;
    for (Labeling a = 0; a < (Labeling{1} << dec.n); ++a)
        if (dec.class_id(a) == id) out.insert(a);
    return out;
}

} // namespace

TEST_CASE("named forms resolve to the expected twists") {
    const auto su23 = named_form("SU(2,3)");
    CHECK(su23.dtype == make_type(Series::A, 4));
    CHECK(su23.inner());
    CHECK(su23.coloring == vertex_bit(2));
    CHECK(twisting_label(su23) == "A4^(2)");

    const auto sp4 = named_form("Sp(4)");
    CHECK(sp4.dtype == make_type(Series::C, 4));
    CHECK(sp4.coloring == 0);
    CHECK(h1_cardinality(sp4) == 5);

    CHECK(twisting_label(named_form("SpR(8)")) == "C4^(4)");
    CHECK(h1_cardinality(named_form("SpR(8)")) == 1);
    CHECK(twisting_label(named_form("Sp(1,3)")) == "C4^(1)");
    CHECK(twisting_label(named_form("Spin(2,7)")) == "B4^(1)");
    CHECK(twisting_label(named_form("SpinStar(12)")) == "D6^(6)");
    CHECK(twisting_label(named_form("Spin(5,7)")) == "2D6^(2)");
    CHECK(h1_cardinality(named_form("Spin(5,7)")) == 3);

    const auto sl6r = named_form("SL(6,R)");
    CHECK(twisting_label(sl6r) == "2A5^(3)");
    CHECK_FALSE(sl6r.inner());
    CHECK(h1_cardinality(sl6r) == 1);
    CHECK(twisting_label(named_form("SL(5,R)")) == "2A4^(0)");
    CHECK(h1_cardinality(named_form("SL(5,R)")) == 1);
    CHECK(twisting_label(named_form("SL(3,H)")) == "2A5^(0)");
    CHECK(h1_cardinality(named_form("SL(3,H)")) == 2);

    CHECK(twisting_label(named_form("EI")) == "2E6^(6)");
    CHECK(twisting_label(named_form("EIV")) == "2E6^(0)");
    CHECK(twisting_label(named_form("EV")) == "E7^(7)");
}

TEST_CASE("name aliases and argument order normalize") {
    const auto a = named_form("SU(3,2)");
    const auto b = named_form("SU(2,3)");
    CHECK(a.dtype == b.dtype);
    CHECK(a.coloring == b.coloring);
    CHECK(a.display_name == b.display_name);

    const auto star = named_form("Spin*(12)");
    const auto ascii = named_form("SpinStar(12)");
    CHECK(star.coloring == ascii.coloring);
    CHECK(star.dtype == ascii.dtype);

    CHECK(named_form("Spin(7,5)").coloring == named_form("Spin(5,7)").coloring);
    CHECK(named_form("Sp(3,1)").coloring == named_form("Sp(1,3)").coloring);
}

TEST_CASE("unknown names are refused") {
    CHECK_THROWS_AS(named_form(""), CatalogError);
    CHECK_THROWS_AS(named_form("E9"), CatalogError);
    CHECK_THROWS_AS(named_form("Frobnitz(4)"), CatalogError);
    CHECK_THROWS_AS(named_form("SpinStar(7)"), CatalogError);
    CHECK_THROWS_AS(named_form("Sp(3,R)"), CatalogError);
    CHECK_THROWS_AS(named_form("SU(2,)"), CatalogError);
}

TEST_CASE("the catalog round-trips through its display names with unique labels") {
    const auto forms = catalog_forms(8);
    CHECK(forms.size() > 50);
    std::set<std::string> labels;
    for (const auto& spec : forms) {
        CAPTURE(spec.display_name);
        CHECK(labels.insert(twisting_label(spec)).second);
        const auto again = named_form(spec.display_name);
        CHECK(again.dtype == spec.dtype);
        CHECK(again.tau == spec.tau);
        CHECK(again.coloring == spec.coloring);
        CHECK(again.display_name == spec.display_name);
    }
}

TEST_CASE("cataloged affine labelings are valid and reproduce the twist bits") {
    int seen = 0;
    for (const auto& spec : catalog_forms(8)) {
        if (!spec.kac_nu || !spec.inner()) continue;
        ++seen;
        CAPTURE(spec.display_name);
        const KacDiagram kd{extend(build_diagram(spec.dtype)), *spec.kac_nu};
        const KacCheck check = validate_kac(kd);
        CAPTURE(check.diagnostic);
        CHECK(check.ok);
        const auto [diagram, coloring] = kac_to_twisting(kd);
        CHECK(diagram.type == spec.dtype);
        CHECK(coloring == spec.coloring);
    }
    CHECK(seen > 20);
}

TEST_CASE("affine label validation") {
    const auto b4 = extend(build_diagram(make_type(Series::B, 4)));
    CHECK(validate_kac({b4, {0, 0, 0, 1, 0}}).ok);  // one black of mark 2
    CHECK(validate_kac({b4, {1, 1, 0, 0, 0}}).ok);  // zero plus a mark-1 vertex
    CHECK_FALSE(validate_kac({b4, {0, 0, 0, 0, 0}}).ok);
    CHECK_FALSE(validate_kac({b4, {1, 0, 0, 0, 0}}).ok); // weighted sum 1
    CHECK_FALSE(validate_kac({b4, {1, 0, 0, 1, 0}}).ok); // weighted sum 3
    CHECK_FALSE(validate_kac({b4, {0, 1, 0, 0, 1}}).ok); // weighted sum 3
    CHECK_FALSE(validate_kac({b4, {0, 2, 0, 0, 0}}).ok); // labels must be 0 or 1

    const auto a3 = extend(build_diagram(make_type(Series::A, 3)));
    CHECK(validate_kac({a3, {1, 0, 1, 0}}).ok);
    const auto [d, c] = kac_to_twisting({a3, {1, 0, 1, 0}});
    CHECK(d.type == make_type(Series::A, 3));
    CHECK(c == vertex_bit(2));
}

TEST_CASE("form construction rejects unusable data") {
    const auto e6 = make_type(Series::E, 6);
    const auto autos = automorphisms(build_diagram(e6));
    REQUIRE(autos.size() == 2);
    const auto& flip = autos[1];

    CHECK_NOTHROW(make_form(e6, flip, vertex_bit(6)));
    CHECK_NOTHROW(make_form(e6, flip, 0));
    // twist bits must sit on symmetry-fixed vertices
    CHECK_THROWS_AS(make_form(e6, flip, vertex_bit(1)), ArgumentError);

    DiagramAutomorphism bogus;
    bogus.perm = {2, 1, 3, 4, 5, 6}; // not a symmetry of the diagram
    CHECK_THROWS_AS(make_form(e6, bogus, 0), ArgumentError);

    DiagramAutomorphism wrong_size;
    wrong_size.perm = {1, 2, 3};
    CHECK_THROWS_AS(make_form(e6, wrong_size, 0), ArgumentError);

    CHECK_THROWS_AS(make_inner_form(e6, 9), ArgumentError);
}

TEST_CASE("fixed vertex sets") {
    CHECK(fixed_vertices(named_form("EI")) == std::vector<int>{3, 6});
    CHECK(fixed_vertices(named_form("SL(6,R)")) == std::vector<int>{3});
    CHECK(fixed_vertices(named_form("SL(5,R)")).empty());
    CHECK(fixed_vertices(named_form("Spin(5,7)")) == std::vector<int>{1, 2, 3, 4});
    CHECK(fixed_vertices(named_form("Sp(4)")) == std::vector<int>{1, 2, 3, 4});
}

TEST_CASE("folded boards for the twisted forms") {
    const auto eiv = reduce_outer(named_form("EIV"));
    CHECK(eiv.ambient_n == 6);
    CHECK(eiv.vertex_of == std::vector<int>{3, 6});
    CHECK(eiv.instance.n == 2);
    CHECK(eiv.instance.coloring == 0);
    CHECK(eiv.instance.adjacent(1, 2));
    CHECK(eiv.lift(L("10")) == vertex_bit(3));
    CHECK(eiv.lift(L("01")) == vertex_bit(6));
    CHECK(h1_cardinality(named_form("EIV")) == 2);

    const auto ei = reduce_outer(named_form("EI"));
    CHECK(ei.instance.n == 2);
    CHECK(ei.instance.coloring == L("01")); // ambient twist at vertex 6
    CHECK(h1_cardinality(named_form("EI")) == 2);

    // no fixed vertices at all: a 0-vertex board with the single empty class
    const auto sl5 = reduce_outer(named_form("SL(5,R)"));
    CHECK(sl5.instance.n == 0);
    CHECK(sl5.lift(0) == 0);

    // inner forms fold to themselves
    const auto sp4 = reduce_outer(named_form("Sp(4)"));
    CHECK(sp4.instance.n == 4);
    CHECK(sp4.vertex_of == std::vector<int>{1, 2, 3, 4});

    const auto spin57 = reduce_outer(named_form("Spin(5,7)"));
    CHECK(spin57.vertex_of == std::vector<int>{1, 2, 3, 4});
    CHECK(spin57.instance.coloring == L("0100"));
}

TEST_CASE("class lists come back lifted, minimal first") {
    CHECK(h1_representatives(named_form("Sp(4)")) ==
          enumerate_orbits(board_of(named_form("Sp(4)"))).reps);
    CHECK(h1_representatives(named_form("EI")) == std::vector<Labeling>{0, vertex_bit(3)});
    CHECK(h1_representatives(named_form("EIV")) == std::vector<Labeling>{0, vertex_bit(3)});
    CHECK(h1_representatives(named_form("SL(3,H)")) == std::vector<Labeling>{0, vertex_bit(3)});
    CHECK(h1_representatives(named_form("SL(6,R)")) == std::vector<Labeling>{0});
    for (const auto& spec : catalog_forms(6))
        CHECK(h1_representatives(spec).size() == h1_cardinality(spec));
}

TEST_CASE("case formulas agree with enumeration across the catalog") {
    for (const auto& spec : catalog_forms(10)) {
        CAPTURE(spec.display_name);
        CHECK(closed_form_count(spec) == h1_cardinality(spec));
    }
}

TEST_CASE("twists without a stated formula are refused symbolically") {
    CHECK_THROWS_AS(closed_form_count(make_inner_form(make_type(Series::E, 6), 3)),
                    UnsupportedError);
}

TEST_CASE("small exceptional boards, class by class") {
    // untwisted rank-2 board with the triple-bonded pair
    const auto g2c = enumerate_orbits(board_of(named_form("G2compact")));
    REQUIRE(g2c.class_count() == 2);
    CHECK(class_set(g2c, g2c.zero_class) == std::set<Labeling>{0});
    CHECK(class_set(g2c, g2c.class_id(1)) == std::set<Labeling>{1, 2, 3});

    const auto g2s_spec = named_form("G2split");
    CHECK(twisting_label(g2s_spec) == "G2^(2)");
    const auto g2s = enumerate_orbits(board_of(g2s_spec));
    REQUIRE(g2s.class_count() == 2);
    CHECK(class_set(g2s, g2s.zero_class) == std::set<Labeling>{0, 2, 3});
    CHECK(class_set(g2s, g2s.class_id(1)) == std::set<Labeling>{1});

    const auto f4c = enumerate_orbits(board_of(named_form("F4")));
    REQUIRE(f4c.class_count() == 3);
    CHECK(class_set(f4c, f4c.zero_class) == std::set<Labeling>{0});
    CHECK(class_set(f4c, f4c.class_id(L("0100"))) ==
          std::set<Labeling>{L("1000"), L("0100"), L("1100")});
    CHECK(class_set(f4c, f4c.class_id(L("1010"))).size() == 12);

    const auto fii_spec = named_form("FII");
    CHECK(twisting_label(fii_spec) == "F4^(1)");
    const auto fii = enumerate_orbits(board_of(fii_spec));
    REQUIRE(fii.class_count() == 3);
    CHECK(class_set(fii, fii.zero_class) ==
          std::set<Labeling>{L("0000"), L("1000"), L("1100")});
    CHECK(is_fixed(board_of(fii_spec), L("0100")));
    CHECK(fii.class_id(L("1110")) != fii.zero_class);
    CHECK(fii.class_id(L("1110")) != fii.class_id(L("0100")));

    const auto fi_spec = named_form("FI");
    CHECK(twisting_label(fi_spec) == "F4^(4)");
    const auto fi = enumerate_orbits(board_of(fi_spec));
    REQUIRE(fi.class_count() == 3);
    std::set<Labeling> fi_zero;
    for (Labeling a = 0; a < 16; ++a)
        if (!(get_vertex(a, 3) == 1 && get_vertex(a, 4) == 0)) fi_zero.insert(a);
    CHECK(class_set(fi, fi.zero_class) == fi_zero);
    CHECK(is_fixed(board_of(fi_spec), L("1010")));
    CHECK(class_set(fi, fi.class_id(L("0010"))) ==
          std::set<Labeling>{L("0010"), L("0110"), L("1110")});
}

TEST_CASE("labelings that every move leaves alone") {
    auto fixed_on = [](const std::string& name, const std::string& labeling) {
        return is_fixed(board_of(named_form(name)), parse_labeling(labeling));
    };
    CHECK(fixed_on("Spin(13)", "000001"));
    CHECK(fixed_on("Spin(4,9)", "100001"));             // twist at 2
    CHECK(fixed_on("SpinStar(12)", "000001") == false); // the twist keeps the leaf moving

    // the same support pattern works on the two-black path board
    const auto c53 = make_inner_form(make_type(Series::C, 5), 3);
    CHECK(is_fixed(board_of(c53), L("10111")));
    const DynkinDiagram a5 = build_diagram(make_type(Series::A, 5));
    const PuzzleInstance two_black = make_instance(a5, vertex_bit(3) | vertex_bit(5));
    CHECK(is_fixed(two_black, L("10111")));

    const auto d82 = make_inner_form(make_type(Series::D, 8), 2);
    CHECK(is_fixed(board_of(d82), L("10000000")));
    CHECK(is_fixed(board_of(d82), L("10000011")));
    CHECK(is_fixed(board_of(d82), L("00101010")));
    CHECK(is_fixed(board_of(d82), L("00101001")));

    const auto d60 = make_inner_form(make_type(Series::D, 6), 0);
    CHECK(is_fixed(board_of(d60), L("000011")));
    CHECK(is_fixed(board_of(d60), L("101010")));
    CHECK(is_fixed(board_of(d60), L("101001")));

    CHECK(is_fixed(board_of(named_form("EII")), vertex_bit(1)));
    CHECK(is_fixed(board_of(named_form("EIII")), vertex_bit(2) | vertex_bit(6)));
    CHECK(is_fixed(board_of(named_form("E7")), vertex_bit(1) | vertex_bit(3) | vertex_bit(7)));
    CHECK(is_fixed(board_of(named_form("EVI")), vertex_bit(1)));
    CHECK(is_fixed(board_of(named_form("EVI")), vertex_bit(3) | vertex_bit(7)));
    CHECK(is_fixed(board_of(named_form("EVIII")), vertex_bit(6) | vertex_bit(8)));
    CHECK(is_fixed(board_of(named_form("EIX")),
                   vertex_bit(2) | vertex_bit(4) | vertex_bit(8)));
}

TEST_CASE("component structure separates the larger exceptional classes") {
    const auto eii_spec = named_form("EII");
    const auto eii_board = board_of(eii_spec);
    const auto eii = enumerate_orbits(eii_board);
    REQUIRE(eii.class_count() == 3);
    const Labeling l3 = vertex_bit(1) | vertex_bit(2) | vertex_bit(6);
    CHECK(eii.class_id(l3) != eii.zero_class);
    CHECK(eii.class_id(l3) != eii.class_id(vertex_bit(1)));

    const auto eiii = enumerate_orbits(board_of(named_form("EIII")));
    REQUIRE(eiii.class_count() == 3);
    const Labeling l2p = vertex_bit(2) | vertex_bit(6);
    const Labeling l3p = vertex_bit(1) | vertex_bit(2) | vertex_bit(6);
    CHECK(eiii.class_id(l2p) != eiii.zero_class);
    CHECK(eiii.class_id(l3p) != eiii.zero_class);
    CHECK(eiii.class_id(l3p) != eiii.class_id(l2p));

    // compact rank-7 board: four classes told apart by support components
    const auto e7 = enumerate_orbits(board_of(named_form("E7")));
    REQUIRE(e7.class_count() == 4);
    const PuzzleInstance e7b = board_of(named_form("E7"));
    const Labeling m3 = vertex_bit(1) | vertex_bit(3) | vertex_bit(7);
    std::set<int> ids = {e7.zero_class, e7.class_id(m3), e7.class_id(vertex_bit(1)),
                         e7.class_id(vertex_bit(3) | vertex_bit(7))};
    CHECK(ids.size() == 4);
    for (Labeling a = 0; a < (Labeling{1} << 7); ++a) {
        if (a == 0 || a == m3) continue;
        const int expected =
            component_count(e7b, a) % 2 == 1 ? e7.class_id(vertex_bit(1))
                                             : e7.class_id(vertex_bit(3) | vertex_bit(7));
        CHECK(e7.class_id(a) == expected);
    }
}

TEST_CASE("enumeration caps propagate") {
    CHECK_THROWS_AS(h1_cardinality(named_form("Spin(2,7)"), 3), CapError);
    CHECK_THROWS_AS(h1_representatives(named_form("EV"), 5), CapError);
    CHECK_NOTHROW(h1_cardinality(named_form("EI"), 2)); // the folded board is tiny
}
