#include "doctest.h"

#include <vector>

#include "fracolor/color.hpp"

using namespace fracolor;

TEST_SUITE("color") {

TEST_CASE("string round trips") {
    std::vector<Color> cs = {
        Color::zero(),      Color::plain(1),  Color::plain(17),
        Color::tuple(3, 2), Color::heart(),   Color::diamond1(),
        Color::diamond2(),  Color::extra(),
    };
    for (const Color& c : cs) {
        auto back = Color::from_string(c.to_string());
        REQUIRE(back.has_value());
        CHECK(*back == c);
    }
    CHECK(!Color::from_string("definitely not a color").has_value());
    CHECK(!Color::from_string("").has_value());
}

TEST_CASE("distinct colors have distinct strings") {
    std::vector<Color> cs = {
        Color::zero(),      Color::plain(1),    Color::plain(2),
        Color::tuple(1, 1), Color::tuple(1, 2), Color::tuple(2, 1),
        Color::heart(),     Color::diamond1(),  Color::diamond2(),
        Color::extra(),
    };
    for (size_t a = 0; a < cs.size(); ++a)
        for (size_t b = a + 1; b < cs.size(); ++b)
            CHECK(cs[a].to_string() != cs[b].to_string());
}

TEST_CASE("tuple sequences") {
    std::vector<Color> fwd = tuple_seq(4, 3);
    REQUIRE(fwd.size() == 3);
    CHECK(fwd[0] == Color::tuple(4, 1));
    CHECK(fwd[2] == Color::tuple(4, 3));
    std::vector<Color> rev = tuple_seq_rev(4, 3);
    REQUIRE(rev.size() == 3);
    CHECK(rev[0] == Color::tuple(4, 3));
    CHECK(rev[2] == Color::tuple(4, 1));
    CHECK(tuple_seq(2, 0).empty());
}

TEST_CASE("ordering and palette") {
    CHECK(Color::zero() < Color::plain(1));
    CHECK(Color::tuple(1, 1) < Color::tuple(1, 2));
    CHECK(Color::tuple(1, 2) < Color::tuple(2, 1));
    VertexColoring c;
    c.at = {Color::plain(1), Color::plain(2), Color::plain(1), Color::zero()};
    CHECK(c.size() == 4);
    CHECK(c.palette_size() == 3);
}

}  // TEST_SUITE
