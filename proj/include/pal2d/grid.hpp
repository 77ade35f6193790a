#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace pal2d {

using Symbol = std::int32_t;

// 2D text over a dense integer alphabet, row-major.
struct Grid {
    int n = 0;
    int m = 0;
    int sigma = 0;
    std::vector<Symbol> cells;

    Grid() = default;
    Grid(int n_, int m_, int sigma_, std::vector<Symbol> cells_);

    // Maps bytes to dense symbol codes, case-sensitively, in byte-value order.
    static Grid from_bytes(const std::vector<std::string>& rows);

    Symbol at(int i, int j) const { return cells[static_cast<std::size_t>(i) * m + j]; }
    bool in_bounds(int i, int j) const { return i >= 0 && i < n && j >= 0 && j < m; }
};

struct Pos2 {
    int i = 0;
    int j = 0;
    friend auto operator<=>(const Pos2&, const Pos2&) = default;
};

// Palindrome center in doubled coordinates: the block spanning rows a..b and
// columns l..r has center (a+b, l+r). Integer for every parity.
struct Center {
    int cr = 0;
    int cc = 0;
    bool is_square_center() const { return ((cr ^ cc) & 1) == 0; }
    friend auto operator<=>(const Center&, const Center&) = default;
};

// Parity rule: h odd <=> cr even, w odd <=> cc even.
bool height_admissible(const Grid& g, int cr, int h);
bool width_admissible(const Grid& g, int cc, int w);
int max_width(const Grid& g, int cc);    // widest in-bounds admissible width (0 if none)
int max_height(const Grid& g, int cr);

// Square layer geometry. Layer 0 is the center cell of an odd square; the 2x2
// core of an even square is layer 1. side_at_layer inverts layer_count.
int min_square_side(Center c);                    // 1 or 2
int side_at_layer(Center c, int layer);
int max_square_layer(const Grid& g, Center c);    // largest in-bounds layer
int layer_of_cell(Center c, Pos2 p);              // from D = max(|2i-cr|, |2j-cc|)

Pos2 rotate180(Center c, Pos2 p);
Pos2 reflect_main(Center c, Pos2 p);   // requires square-center parity
Pos2 reflect_anti(Center c, Pos2 p);

// Equivalence class of positions under the square symmetry group.
struct Orbit {
    Pos2 positions[4];
    int size = 0;
    int layer = 0;
    Pos2 canonical() const { return positions[0]; }
};

Orbit orbit_of(Center c, Pos2 p);                        // throws on parity violation
int orbit_deficit(const Grid& g, const Orbit& o);        // |orbit| - max symbol multiplicity

long long sq_layer_deficit(const Grid& g, Center c, int layer);
long long sq_mismatch_count(const Grid& g, Center c, int side);
long long rect_mismatch_count(const Grid& g, Center c, int w, int h);

// Non-majority cells of the square, under the deterministic tie rule: the
// lexicographically smallest symbol with maximal multiplicity wins its orbit.
std::vector<Pos2> sq_mismatch_positions(const Grid& g, Center c, int side);

struct SqPalindrome {
    Center center;
    int side = 0;
    long long mismatches = 0;
    std::optional<std::vector<Pos2>> mismatch_positions;
};

struct RectPalindrome {
    Center center;
    int w = 0;
    int h = 0;
    long long mismatches = 0;
};

// Exhaustive oracles. One square per productive center; the exact Pareto
// frontier of (w, h) pairs per center for rectangles.
std::vector<SqPalindrome> brute_sq_maximal(const Grid& g, long long k);
std::vector<RectPalindrome> brute_rect_maximal(const Grid& g, long long k);

}  // namespace pal2d
