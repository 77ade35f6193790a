#include "pal2d/grid.hpp"

#include <algorithm>
#include <array>

namespace pal2d {

Grid::Grid(int n_, int m_, int sigma_, std::vector<Symbol> cells_)
    : n(n_), m(m_), sigma(sigma_), cells(std::move(cells_)) {
    if (n < 1 || m < 1)
        throw std::invalid_argument("grid dimensions must be >= 1");
    if (cells.size() != static_cast<std::size_t>(n) * m)
        throw std::invalid_argument("grid cell count does not match n*m");
}

Grid Grid::from_bytes(const std::vector<std::string>& rows) {
    if (rows.empty())
        throw std::invalid_argument("grid must have at least one row");
    const int n = static_cast<int>(rows.size());
    const int m = static_cast<int>(rows[0].size());
    if (m == 0)
        throw std::invalid_argument("grid rows must be non-empty");

    std::array<int, 256> code{};
    code.fill(-1);
    for (const auto& r : rows)
        for (unsigned char b : r) code[b] = 0;
    int sigma = 0;
    for (int b = 0; b < 256; ++b)
        if (code[b] == 0) code[b] = sigma++;

    std::vector<Symbol> cells;
    cells.reserve(static_cast<std::size_t>(n) * m);
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(rows[i].size()) != m)
            throw std::invalid_argument("ragged row at index " + std::to_string(i));
        for (unsigned char b : rows[i]) cells.push_back(code[b]);
    }
    return Grid(n, m, sigma, std::move(cells));
}

bool height_admissible(const Grid& g, int cr, int h) {
    if (h < 1) return false;
    if (((h & 1) == 1) != ((cr & 1) == 0)) return false;
    const int top = (cr - h + 1) / 2;
    const int bot = (cr + h - 1) / 2;
    return top >= 0 && bot < g.n;
}

bool width_admissible(const Grid& g, int cc, int w) {
    if (w < 1) return false;
    if (((w & 1) == 1) != ((cc & 1) == 0)) return false;
    const int left = (cc - w + 1) / 2;
    const int right = (cc + w - 1) / 2;
    return left >= 0 && right < g.m;
}

int max_width(const Grid& g, int cc) {
    if ((cc & 1) == 0) {
        const int c = cc / 2;
        return 2 * std::min(c, g.m - 1 - c) + 1;
    }
    const int r = (cc + 1) / 2;
    return 2 * std::min(r, g.m - r);
}

int max_height(const Grid& g, int cr) {
    if ((cr & 1) == 0) {
        const int c = cr / 2;
        return 2 * std::min(c, g.n - 1 - c) + 1;
    }
    const int r = (cr + 1) / 2;
    return 2 * std::min(r, g.n - r);
}

int min_square_side(Center c) { return (c.cr & 1) == 0 ? 1 : 2; }

int side_at_layer(Center c, int layer) {
    return (c.cr & 1) == 0 ? 2 * layer + 1 : 2 * layer;
}

int max_square_layer(const Grid& g, Center c) {
    const int dmax = std::min(std::min(c.cr, 2 * (g.n - 1) - c.cr),
                              std::min(c.cc, 2 * (g.m - 1) - c.cc));
    return (c.cr & 1) == 0 ? dmax / 2 : (dmax + 1) / 2;
}

int layer_of_cell(Center c, Pos2 p) {
    const int d = std::max(std::abs(2 * p.i - c.cr), std::abs(2 * p.j - c.cc));
    return (c.cr & 1) == 0 ? d / 2 : (d + 1) / 2;
}

Pos2 rotate180(Center c, Pos2 p) { return {c.cr - p.i, c.cc - p.j}; }

Pos2 reflect_main(Center c, Pos2 p) {
    // (di, dj) -> (dj, di) in doubled offsets around the center.
    return {(c.cr + 2 * p.j - c.cc) / 2, (c.cc + 2 * p.i - c.cr) / 2};
}

Pos2 reflect_anti(Center c, Pos2 p) {
    return {(c.cr - (2 * p.j - c.cc)) / 2, (c.cc - (2 * p.i - c.cr)) / 2};
}

Orbit orbit_of(Center c, Pos2 p) {
    if (!c.is_square_center())
        throw std::invalid_argument("orbit_of requires a square center (cr == cc mod 2)");
    Pos2 imgs[4] = {p, rotate180(c, p), reflect_main(c, p), reflect_anti(c, p)};
    std::sort(imgs, imgs + 4);
    Orbit o;
    for (const Pos2& q : imgs)
        if (o.size == 0 || !(o.positions[o.size - 1] == q)) o.positions[o.size++] = q;
    o.layer = layer_of_cell(c, p);
    return o;
}

int orbit_deficit(const Grid& g, const Orbit& o) {
    Symbol syms[4];
    for (int t = 0; t < o.size; ++t) syms[t] = g.at(o.positions[t].i, o.positions[t].j);
    std::sort(syms, syms + o.size);
    int best = 1, run = 1;
    for (int t = 1; t < o.size; ++t) {
        run = (syms[t] == syms[t - 1]) ? run + 1 : 1;
        best = std::max(best, run);
    }
    return o.size - best;
}

long long sq_layer_deficit(const Grid& g, Center c, int layer) {
    if (layer == 0) return 0;
    const int d = (c.cr & 1) == 0 ? 2 * layer : 2 * layer - 1;
    const int rt = (c.cr - d) / 2, rb = (c.cr + d) / 2;
    const int cl = (c.cc - d) / 2, cr2 = (c.cc + d) / 2;
    long long total = 0;
    auto visit = [&](Pos2 p) {
        Orbit o = orbit_of(c, p);
        if (o.canonical() == p) total += orbit_deficit(g, o);
    };
    for (int j = cl; j <= cr2; ++j) {
        visit({rt, j});
        visit({rb, j});
    }
    for (int i = rt + 1; i < rb; ++i) {
        visit({i, cl});
        visit({i, cr2});
    }
    return total;
}

static void check_square(const Grid& g, Center c, int side) {
    if (!c.is_square_center())
        throw std::invalid_argument("not a square center");
    if (!height_admissible(g, c.cr, side) || !width_admissible(g, c.cc, side))
        throw std::out_of_range("square does not fit the grid at this center");
}

long long sq_mismatch_count(const Grid& g, Center c, int side) {
    check_square(g, c, side);
    const int layers = (c.cr & 1) == 0 ? (side - 1) / 2 : side / 2;
    long long total = 0;
    for (int l = 1; l <= layers; ++l) total += sq_layer_deficit(g, c, l);
    return total;
}

long long rect_mismatch_count(const Grid& g, Center c, int w, int h) {
    if (!width_admissible(g, c.cc, w) || !height_admissible(g, c.cr, h))
        throw std::out_of_range("rectangle does not fit the grid at this center");
    const int rt = (c.cr - h + 1) / 2, rb = (c.cr + h - 1) / 2;
    const int cl = (c.cc - w + 1) / 2, cr2 = (c.cc + w - 1) / 2;
    long long total = 0;
    for (int i = rt; i <= rb; ++i)
        for (int j = cl; j <= cr2; ++j) {
            const Pos2 p{i, j};
            const Pos2 q = rotate180(c, p);
            if (p < q && g.at(p.i, p.j) != g.at(q.i, q.j)) ++total;
        }
    return total;
}

std::vector<Pos2> sq_mismatch_positions(const Grid& g, Center c, int side) {
    check_square(g, c, side);
    const int rt = (c.cr - side + 1) / 2, rb = (c.cr + side - 1) / 2;
    const int cl = (c.cc - side + 1) / 2, cr2 = (c.cc + side - 1) / 2;
    std::vector<Pos2> out;
    for (int i = rt; i <= rb; ++i)
        for (int j = cl; j <= cr2; ++j) {
            const Orbit o = orbit_of(c, {i, j});
            if (!(o.canonical() == Pos2{i, j})) continue;
            // Winner: smallest symbol among those of maximal multiplicity.
            Symbol syms[4];
            for (int t = 0; t < o.size; ++t) syms[t] = g.at(o.positions[t].i, o.positions[t].j);
            std::sort(syms, syms + o.size);
            Symbol winner = syms[0];
            int best = 0;
            for (int t = 0; t < o.size;) {
                int u = t;
                while (u < o.size && syms[u] == syms[t]) ++u;
                if (u - t > best) {
                    best = u - t;
                    winner = syms[t];
                }
                t = u;
            }
            for (int t = 0; t < o.size; ++t)
                if (g.at(o.positions[t].i, o.positions[t].j) != winner)
                    out.push_back(o.positions[t]);
        }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<SqPalindrome> brute_sq_maximal(const Grid& g, long long k) {
    std::vector<SqPalindrome> out;
    for (int cr = 0; cr <= 2 * (g.n - 1); ++cr)
        for (int cc = (cr & 1); cc <= 2 * (g.m - 1); cc += 2) {
            const Center c{cr, cc};
            const int lmax = max_square_layer(g, c);
            long long cum = 0;
            int best_layer = -1;
            const int first = (cr & 1) == 0 ? 0 : 1;
            for (int l = first; l <= lmax; ++l) {
                const long long add = sq_layer_deficit(g, c, l);
                if (cum + add > k) break;
                cum += add;
                best_layer = l;
            }
            if (best_layer >= 0)
                out.push_back({c, side_at_layer(c, best_layer), cum, std::nullopt});
        }
    return out;
}

std::vector<RectPalindrome> brute_rect_maximal(const Grid& g, long long k) {
    std::vector<RectPalindrome> out;
    for (int cr = 0; cr <= 2 * (g.n - 1); ++cr)
        for (int cc = 0; cc <= 2 * (g.m - 1); ++cc) {
            const Center c{cr, cc};
            const int wmax = max_width(g, cc);
            const int hmax = max_height(g, cr);
            const int h0 = (cr & 1) == 0 ? 1 : 2;
            int prev_h = 0;  // max height of the next wider width
            for (int w = wmax; w >= 1; w -= 2) {
                // Grow height, accumulating the one new row pair per step.
                const int cl = (cc - w + 1) / 2, cr2 = (cc + w - 1) / 2;
                long long cum = rect_mismatch_count(g, c, w, h0);
                if (cum > k) {
                    prev_h = 0;
                    continue;
                }
                int h = h0;
                while (h + 2 <= hmax) {
                    const int rt = (cr - h - 1) / 2, rb = (cr + h + 1) / 2;
                    long long add = 0;
                    for (int j = cl; j <= cr2; ++j)
                        if (g.at(rt, j) != g.at(rb, cl + (cr2 - j))) ++add;
                    if (cum + add > k) break;
                    cum += add;
                    h += 2;
                }
                if (h > prev_h) out.push_back({c, w, h, cum});
                prev_h = h;
            }
        }
    return out;
}

}  // namespace pal2d
