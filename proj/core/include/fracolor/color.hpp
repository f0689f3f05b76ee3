#ifndef FRACOLOR_COLOR_HPP
#define FRACOLOR_COLOR_HPP

#include <compare>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace fracolor {

// Palette element for fractional-power colorings. Zero is reserved for
// branch vertices; tuple colors a_i pair a base color a >= 1 with a slot
// index i >= 1; Heart/Diamond1/Diamond2 are the three named extra colors;
// Extra is the single fresh color some constructions append; Plain wraps
// bare integers from search-based colorings.
struct Color {
    enum class Kind : uint8_t { Zero, Plain, Tuple, Heart, Diamond1, Diamond2, Extra };

    Kind kind = Kind::Zero;
    int a = 0;  // Plain value, or tuple base
    int i = 0;  // tuple slot

    static Color zero() { return {}; }
    static Color plain(int v) { return {Kind::Plain, v, 0}; }
    static Color tuple(int base, int slot) { return {Kind::Tuple, base, slot}; }
    static Color heart() { return {Kind::Heart, 0, 0}; }
    static Color diamond1() { return {Kind::Diamond1, 0, 0}; }
    static Color diamond2() { return {Kind::Diamond2, 0, 0}; }
    static Color extra() { return {Kind::Extra, 0, 0}; }

    bool is_zero() const { return kind == Kind::Zero; }
    bool is_tuple() const { return kind == Kind::Tuple; }

    auto operator<=>(const Color&) const = default;

    std::string to_string() const;
    // Inverse of to_string; nullopt on unrecognized text.
    static std::optional<Color> from_string(const std::string& s);
};

// Straight tuple (a_1 .. a_len) as a color sequence.
std::vector<Color> tuple_seq(int base, int len);
// Reversed tuple (a_len .. a_1).
std::vector<Color> tuple_seq_rev(int base, int len);

// A total vertex coloring of a FracPowGraph, indexed by vertex id.
struct VertexColoring {
    std::vector<Color> at;

    int size() const { return static_cast<int>(at.size()); }
    std::set<Color> palette() const {
        return std::set<Color>(at.begin(), at.end());
    }
    int palette_size() const { return static_cast<int>(palette().size()); }
};

}  // namespace fracolor

#endif
