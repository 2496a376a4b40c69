#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "board.hpp"
#include "game.hpp"

namespace schubert {

/**
 * Puzzle geometry. Row m (1..n) of the side-n triangle holds up-triangles
 * U(m,1..m) and down-triangles D(m,1..m-1), alternating U D U ... U.
 * Edges: H(m,j) is the bottom of U(m,j) and the top of D(m+1,j);
 * L(m,j) is the left side of U(m,j), R(m,j) its right side.
 * D(m,j) has left side R(m,j) and right side L(m,j+1).
 *
 * Boundary: the north-west side carries alpha read bottom to top, the
 * north-east side beta read top to bottom, the bottom gamma read left to right.
 */
inline std::string subset_to_boundary(const SubsetK& s, int n) {
    std::string out(n, '0');
    for (int x : s.elems()) {
        if (x < 1 || x > n) throw OutOfRectangle("subset element outside 1..n");
        out[x - 1] = '1';
    }
    return out;
}

enum class PieceKind { ZeroTriangle, OneTriangle, Rhombus, KPiece };

inline const char* to_string(PieceKind k) {
    switch (k) {
        case PieceKind::ZeroTriangle: return "zero";
        case PieceKind::OneTriangle: return "one";
        case PieceKind::Rhombus: return "rhombus";
        case PieceKind::KPiece: return "k";
    }
    return "?";
}

struct Cell {
    bool up = true;
    int row = 0;
    int index = 0;
    friend auto operator<=>(const Cell&, const Cell&) = default;
};

// Triangles: rotation 0 for up cells, 1 for down cells. Rhombi are anchored at
// their up cell; rotation names the shared edge (0 bottom, 1 left, 2 right).
// K-pieces are anchored at their top-left down cell and never rotate.
struct PlacedPiece {
    Cell cell;
    PieceKind kind = PieceKind::ZeroTriangle;
    int rotation = 0;
    friend auto operator<=>(const PlacedPiece&, const PlacedPiece&) = default;
};

inline constexpr int kInternal = 3;  // edge inside a K-piece

struct Puzzle {
    int n = 0;
    std::string alpha, beta, gamma;
    std::vector<PlacedPiece> pieces;  // canonical order
    std::vector<int> h, l, r;         // edge labels, indexed by edge_index(m, j)

    static std::size_t edge_index(int m, int j) { return static_cast<std::size_t>(m * (m - 1) / 2 + j - 1); }
    int H(int m, int j) const { return h[edge_index(m, j)]; }
    int L(int m, int j) const { return l[edge_index(m, j)]; }
    int R(int m, int j) const { return r[edge_index(m, j)]; }

    int k_pieces() const {
        return static_cast<int>(std::count_if(pieces.begin(), pieces.end(),
                                              [](const PlacedPiece& p) { return p.kind == PieceKind::KPiece; }));
    }
    int sign() const { return k_pieces() % 2 ? -1 : 1; }

    friend bool operator==(const Puzzle& a, const Puzzle& b) {
        return a.n == b.n && a.alpha == b.alpha && a.beta == b.beta && a.gamma == b.gamma &&
               a.pieces == b.pieces;
    }
    friend auto operator<=>(const Puzzle& a, const Puzzle& b) {
        return std::tie(a.n, a.alpha, a.beta, a.gamma, a.pieces) <=>
               std::tie(b.n, b.alpha, b.beta, b.gamma, b.pieces);
    }
};

inline std::string serialize(const Puzzle& p) {
    std::string s;
    for (const auto& pc : p.pieces)
        s += std::string(pc.cell.up ? "U" : "D") + "(" + std::to_string(pc.cell.row) + "," +
             std::to_string(pc.cell.index) + ")" + to_string(pc.kind) + std::to_string(pc.rotation) + " ";
    if (!s.empty()) s.pop_back();
    return s;
}

struct PuzzleCount {
    long long count = 0;
    long long signed_count = 0;
    std::vector<Puzzle> puzzles;
};

namespace detail {

// Label triples shared by both orientations: up cells read (left, right, bottom),
// down cells read (top, right, left).
inline constexpr std::array<std::array<int, 3>, 5> kTriples{{{0, 0, 0}, {1, 1, 1}, {1, 0, 2}, {0, 2, 1}, {2, 1, 0}}};

inline int boundary_bit(const std::string& s, std::size_t i) { return s.at(i) == '1' ? 1 : 0; }

// Classifies the pieces of a fully labelled puzzle; K-piece anchors supplied separately.
inline std::vector<PlacedPiece> classify(int n, const std::vector<int>& h, const std::vector<int>& l,
                                         const std::vector<int>& r, const std::vector<Cell>& kanchors) {
    std::vector<PlacedPiece> out;
    auto e = Puzzle::edge_index;
    std::vector<Cell> kcells;
    for (auto c : kanchors) {
        out.push_back({c, PieceKind::KPiece, 0});
        kcells.push_back({true, c.row, c.index + 1});
        kcells.push_back({false, c.row, c.index + 1});
        kcells.push_back({false, c.row + 1, c.index + 1});
        kcells.push_back(c);
    }
    auto in_k = [&](Cell c) { return std::find(kcells.begin(), kcells.end(), c) != kcells.end(); };
    for (int m = 1; m <= n; ++m) {
        for (int j = 1; j <= m; ++j) {
            const Cell c{true, m, j};
            if (in_k(c)) continue;
            const int a = l[e(m, j)], b = r[e(m, j)], d = h[e(m, j)];
            if (a == 0 && b == 0 && d == 0) out.push_back({c, PieceKind::ZeroTriangle, 0});
            else if (a == 1 && b == 1 && d == 1) out.push_back({c, PieceKind::OneTriangle, 0});
            else out.push_back({c, PieceKind::Rhombus, d == 2 ? 0 : a == 2 ? 1 : 2});
        }
        for (int j = 1; j < m; ++j) {
            const Cell c{false, m, j};
            if (in_k(c)) continue;
            const int t = h[e(m - 1, j)], b = l[e(m, j + 1)], a = r[e(m, j)];
            if (t == 0 && a == 0 && b == 0) out.push_back({c, PieceKind::ZeroTriangle, 1});
            else if (t == 1 && a == 1 && b == 1) out.push_back({c, PieceKind::OneTriangle, 1});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

class PuzzleSolver {
public:
    PuzzleSolver(std::string alpha, std::string beta, std::string gamma, Mode mode, bool collect)
        : n_(static_cast<int>(alpha.size())), mode_(mode), collect_(collect),
          alpha_(std::move(alpha)), beta_(std::move(beta)), gamma_(std::move(gamma)) {
        const std::size_t E = Puzzle::edge_index(n_ + 1, 1);
        h_.assign(E, -1);
        l_.assign(E, -1);
        r_.assign(E, -1);
        for (int m = 1; m <= n_; ++m) {
            l_[Puzzle::edge_index(m, 1)] = boundary_bit(alpha_, n_ - m);
            r_[Puzzle::edge_index(m, m)] = boundary_bit(beta_, m - 1);
        }
        for (int j = 1; j <= n_; ++j) h_[Puzzle::edge_index(n_, j)] = boundary_bit(gamma_, j - 1);
        for (int m = 1; m <= n_; ++m)
            for (int j = 1; j <= m; ++j) {
                cells_.push_back({true, m, j});
                if (j < m) cells_.push_back({false, m, j});
            }
    }

    PuzzleCount run() {
        rec(0);
        return std::move(result_);
    }

private:
    struct Undo {
        std::vector<int>* v;
        std::size_t i;
    };

    bool assign(std::vector<int>& v, std::size_t i, int label, std::vector<Undo>& undo) {
        if (v[i] == -1) {
            v[i] = label;
            undo.push_back({&v, i});
            return true;
        }
        return v[i] == label;
    }
    static void rollback(std::vector<Undo>& undo) {
        for (auto& u : undo) (*u.v)[u.i] = -1;
        undo.clear();
    }

    bool covered(Cell c) const { return std::find(covered_.begin(), covered_.end(), c) != covered_.end(); }

    void rec(std::size_t idx) {
        if (idx == cells_.size()) {
            ++result_.count;
            result_.signed_count += anchors_.size() % 2 ? -1 : 1;
            if (static_cast<int>(anchors_.size()) > n_ * n_)
                throw InvariantViolation("too many K-pieces in one puzzle");
            if (collect_)
                result_.puzzles.push_back(Puzzle{n_, alpha_, beta_, gamma_,
                                                 classify(n_, h_, l_, r_, anchors_), h_, l_, r_});
            return;
        }
        const Cell c = cells_[idx];
        if (covered(c)) {
            rec(idx + 1);
            return;
        }
        const int m = c.row, j = c.index;
        auto e = Puzzle::edge_index;
        std::vector<Undo> undo;
        for (const auto& t : kTriples) {
            bool ok;
            if (c.up)
                ok = assign(l_, e(m, j), t[0], undo) && assign(r_, e(m, j), t[1], undo) &&
                     assign(h_, e(m, j), t[2], undo);
            else
                ok = assign(h_, e(m - 1, j), t[0], undo) && assign(l_, e(m, j + 1), t[1], undo) &&
                     assign(r_, e(m, j), t[2], undo);
            if (ok) rec(idx + 1);
            rollback(undo);
        }
        if (!c.up && mode_ == Mode::KTheory && m + 1 <= n_ && j + 1 <= m - 1) {
            const std::array<Cell, 3> cov{Cell{true, m, j + 1}, Cell{false, m, j + 1}, Cell{false, m + 1, j + 1}};
            bool free = true;
            for (auto x : cov) free = free && !covered(x);
            if (free && assign(h_, e(m - 1, j), 0, undo) && assign(h_, e(m - 1, j + 1), 1, undo) &&
                assign(r_, e(m, j), 1, undo) && assign(r_, e(m + 1, j + 1), 0, undo) &&
                assign(l_, e(m, j + 2), 0, undo) && assign(l_, e(m + 1, j + 2), 1, undo) &&
                assign(l_, e(m, j + 1), kInternal, undo) && assign(r_, e(m, j + 1), kInternal, undo) &&
                assign(h_, e(m, j + 1), kInternal, undo)) {
                covered_.insert(covered_.end(), cov.begin(), cov.end());
                anchors_.push_back(c);
                rec(idx + 1);
                anchors_.pop_back();
                covered_.resize(covered_.size() - cov.size());
            }
            rollback(undo);
        }
    }

    int n_;
    Mode mode_;
    bool collect_;
    std::string alpha_, beta_, gamma_;
    std::vector<int> h_, l_, r_;
    std::vector<Cell> cells_;
    std::vector<Cell> covered_;
    std::vector<Cell> anchors_;
    PuzzleCount result_;
};

inline bool valid_boundary(const std::string& s) {
    return std::all_of(s.begin(), s.end(), [](char c) { return c == '0' || c == '1'; });
}

}  // namespace detail

/// Backtracking fill, one row of triangles at a time, left to right.
inline PuzzleCount enumerate_puzzles(const std::string& alpha, const std::string& beta, const std::string& gamma,
                                     Mode mode = Mode::Cohomology, bool collect = true) {
    if (alpha.size() != beta.size() || beta.size() != gamma.size() || !detail::valid_boundary(alpha) ||
        !detail::valid_boundary(beta) || !detail::valid_boundary(gamma))
        throw std::invalid_argument("boundaries must be 0/1 strings of equal length");
    auto ones = [](const std::string& s) { return std::count(s.begin(), s.end(), '1'); };
    if (ones(alpha) != ones(beta) || ones(beta) != ones(gamma)) return {};
    auto res = detail::PuzzleSolver(alpha, beta, gamma, mode, collect).run();
    std::sort(res.puzzles.begin(), res.puzzles.end());
    return res;
}

inline long long puzzle_coefficient(const Partition& alpha, const Partition& beta, const Partition& gamma,
                                    int k, int n, Mode mode = Mode::Cohomology) {
    auto b = [&](const Partition& p) { return subset_to_boundary(partition_to_subset(p, k, n), n); };
    const auto r = enumerate_puzzles(b(alpha), b(beta), b(gamma), mode, false);
    return mode == Mode::KTheory ? r.signed_count : r.count;
}

/// C_{ab}^{c^} = C_{bc}^{a^} = C_{ca}^{b^} over all triples, from puzzle counts.
inline bool triality_check(int k, int n, Mode mode) {
    const auto P = partitions_in_rect(k, n - k);
    const std::size_t N = P.size();
    std::vector<long long> C(N * N * N);
    for (std::size_t a = 0; a < N; ++a)
        for (std::size_t b = 0; b < N; ++b)
            for (std::size_t c = 0; c < N; ++c) C[(a * N + b) * N + c] = puzzle_coefficient(P[a], P[b], P[c], k, n, mode);
    auto idx = [&](const Partition& p) {
        return static_cast<std::size_t>(std::find(P.begin(), P.end(), p) - P.begin());
    };
    std::vector<std::size_t> dual(N);
    for (std::size_t i = 0; i < N; ++i) dual[i] = idx(P[i].complement(k, n - k));
    for (std::size_t a = 0; a < N; ++a)
        for (std::size_t b = 0; b < N; ++b)
            for (std::size_t c = 0; c < N; ++c) {
                const long long x = C[(a * N + b) * N + dual[c]];
                const long long y = C[(b * N + c) * N + dual[a]];
                const long long z = C[(c * N + a) * N + dual[b]];
                if (x != y || y != z) return false;
            }
    return true;
}

namespace detail {

// Frontier word after the part of the game where column m descends:
// position j looks at row n-m+j and column j (1 both occupied, 2 row only, 0 neither).
inline std::vector<int> frontier(const WhiteConfig& w, int m, int n) {
    std::vector<int> f;
    for (int j = 1; j <= m; ++j) {
        const bool row = w.in_row(n - m + j).has_value();
        const bool col = w.in_col(j).has_value();
        if (col && !row) throw TranslationGap("white column with no matching row at phase " + std::to_string(m));
        f.push_back(row && col ? 1 : row ? 2 : 0);
    }
    return f;
}

struct RowFill {
    std::vector<int> bottom;
    std::vector<std::array<int, 3>> up;    // (left, right, bottom) per U(m,j)
    std::vector<std::array<int, 3>> down;  // (top, right, left) per D(m,j)
};

// Cohomology fillings of row m given the top edges and the two side labels.
inline std::vector<RowFill> row_fillings(int m, const std::vector<int>& top, int left, int right) {
    std::vector<RowFill> out;
    RowFill cur;
    auto rec = [&](auto&& self, int j, int L) -> void {
        for (const auto& u : kTriples) {
            if (u[0] != L) continue;
            cur.up.push_back(u);
            cur.bottom.push_back(u[2]);
            if (j == m) {
                if (u[1] == right) out.push_back(cur);
            } else {
                for (const auto& d : kTriples) {
                    if (d[0] != top[j - 1] || d[2] != u[1]) continue;
                    cur.down.push_back(d);
                    self(self, j + 1, d[1]);
                    cur.down.pop_back();
                }
            }
            cur.up.pop_back();
            cur.bottom.pop_back();
        }
    };
    rec(rec, 1, left);
    return out;
}

}  // namespace detail

/**
 * Translates a completed cohomology game into a puzzle, one puzzle row per
 * descending column. Within a row, the game's route between consecutive
 * frontier words is matched to the row filling of the same rank.
 */
inline Puzzle game_to_puzzle(const Game& game, int k, int n) {
    if (game.a.k() != k || game.n != n) throw std::invalid_argument("game does not match (k,n)");
    const auto order = specialization_sequence(n);
    const auto start = initial_white(game.a, game.b, n);
    if (!start) throw std::invalid_argument("no game for these subsets");
    if (game.trace.size() != order.length()) throw std::invalid_argument("incomplete trace");
    for (const auto& r : game.trace)
        if (r.action == WhiteAction::Subswap) throw std::invalid_argument("game_to_puzzle needs a cohomology game");
    if (n == 0) return Puzzle{0, "", "", "", {}, {}, {}, {}};

    // phase_start[m] = first stage of the pass where column m descends (m >= 2)
    std::vector<int> phase_start(n + 2, 0);
    int s = 0;
    for (int m = 2; m <= n; ++m) {
        phase_start[m] = s;
        s += m - 1;
    }
    phase_start[n + 1] = s;
    std::vector<WhiteConfig> W(n + 1);
    W[1] = *start;
    for (int m = 2; m <= n; ++m) W[m] = game.trace[phase_start[m + 1] - 1].white_after;

    const std::string alpha = subset_to_boundary(game.a, n);
    const std::string beta = subset_to_boundary(game.b, n);
    const std::string gamma = subset_to_boundary(game.output, n);
    const std::size_t E = Puzzle::edge_index(n + 1, 1);
    std::vector<int> h(E, -1), l(E, -1), r(E, -1);
    auto e = Puzzle::edge_index;
    auto gap = [&](const std::string& what, int m) {
        throw TranslationGap(what + " at puzzle row " + std::to_string(m) + " [A=" + to_string(game.a) +
                             " B=" + to_string(game.b) + " S=" + to_string(game.output) + "]");
    };

    std::vector<int> prev;
    for (int m = 1; m <= n; ++m) {
        const int left = detail::boundary_bit(alpha, n - m);
        const int right = detail::boundary_bit(beta, m - 1);
        const auto target = detail::frontier(W[m], m, n);
        std::vector<detail::RowFill> fills;
        for (auto& f : detail::row_fillings(m, prev, left, right))
            if (f.bottom == target) fills.push_back(std::move(f));

        std::size_t rank = 0, routes = 1;
        if (m >= 2) {
            // Routes through this pass from W[m-1] that end at W[m], in depth-first order.
            std::vector<WhiteAction> mine;
            for (int st = phase_start[m]; st < phase_start[m + 1]; ++st) mine.push_back(game.trace[st].action);
            routes = 0;
            bool found = false;
            std::vector<WhiteAction> path;
            auto walk = [&](auto&& self, int st, const WhiteConfig& w) -> void {
                if (st == phase_start[m + 1]) {
                    if (w != W[m]) return;
                    if (path == mine) {
                        rank = routes;
                        found = true;
                    }
                    ++routes;
                    return;
                }
                const auto mv = describe_move(order.states[st], order.letters[st]);
                for (auto& o : step_options(w, mv, order.states[st + 1], Mode::Cohomology)) {
                    path.push_back(o.action);
                    self(self, st + 1, o.white);
                    path.pop_back();
                }
            };
            walk(walk, phase_start[m], W[m - 1]);
            if (!found) gap("game route not reproduced", m);
        }
        if (fills.size() != routes)
            gap(std::to_string(routes) + " game routes but " + std::to_string(fills.size()) + " row fillings", m);
        const auto& f = fills[rank];
        for (int j = 1; j <= m; ++j) {
            l[e(m, j)] = f.up[j - 1][0];
            r[e(m, j)] = f.up[j - 1][1];
            h[e(m, j)] = f.up[j - 1][2];
        }
        prev = target;
    }
    for (int j = 1; j <= n; ++j)
        if (h[e(n, j)] != detail::boundary_bit(gamma, j - 1)) gap("bottom edge disagrees with the output", n);
    return Puzzle{n, alpha, beta, gamma, detail::classify(n, h, l, r, {}), h, l, r};
}

/// SVG drawing: 1-triangles dark, 0-triangles light, rhombi white, K-pieces highlighted.
inline std::string puzzle_svg(const Puzzle& p, double unit = 40.0) {
    const int n = p.n;
    const double hgt = unit * std::sqrt(3.0) / 2.0;
    auto vx = [&](int line, int i) { return 10.0 + (n - line) * unit / 2.0 + i * unit; };
    auto vy = [&](int line) { return 10.0 + line * hgt; };
    auto corners = [&](Cell c) {
        std::array<std::pair<double, double>, 3> v;
        const int m = c.row, j = c.index;
        if (c.up) v = {{{vx(m - 1, j - 1), vy(m - 1)}, {vx(m, j - 1), vy(m)}, {vx(m, j), vy(m)}}};
        else v = {{{vx(m - 1, j - 1), vy(m - 1)}, {vx(m - 1, j), vy(m - 1)}, {vx(m, j), vy(m)}}};
        return v;
    };
    std::map<Cell, std::string> fill;
    for (int m = 1; m <= n; ++m)
        for (int j = 1; j <= m; ++j) {
            fill[{true, m, j}] = "#ffffff";
            if (j < m) fill[{false, m, j}] = "#ffffff";
        }
    for (const auto& pc : p.pieces) {
        const Cell c = pc.cell;
        if (pc.kind == PieceKind::ZeroTriangle) fill[c] = "#e8e8e8";
        if (pc.kind == PieceKind::OneTriangle) fill[c] = "#333333";
        if (pc.kind == PieceKind::KPiece)
            for (Cell x : {c, Cell{true, c.row, c.index + 1}, Cell{false, c.row, c.index + 1},
                           Cell{false, c.row + 1, c.index + 1}})
                fill[x] = "#f4a340";
    }
    std::ostringstream o;
    o << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << 20 + n * unit << "\" height=\""
      << 20 + n * hgt << "\">\n";
    for (const auto& [c, col] : fill) {
        const auto v = corners(c);
        o << "<polygon points=\"";
        for (auto [x, y] : v) o << x << "," << y << " ";
        o << "\" fill=\"" << col << "\" stroke=\"#999999\" stroke-width=\"0.5\"/>\n";
    }
    // Edge labels on drawn edges, internal K-piece edges omitted.
    auto label = [&](double x1, double y1, double x2, double y2, int lab) {
        if (lab < 0 || lab == kInternal) return;
        o << "<text x=\"" << (x1 + x2) / 2 << "\" y=\"" << (y1 + y2) / 2 + 3
          << "\" font-size=\"9\" text-anchor=\"middle\" fill=\"#c00000\">" << lab << "</text>\n";
    };
    if (!p.h.empty())
        for (int m = 1; m <= n; ++m)
            for (int j = 1; j <= m; ++j) {
                label(vx(m - 1, j - 1), vy(m - 1), vx(m, j - 1), vy(m), p.L(m, j));
                label(vx(m - 1, j - 1), vy(m - 1), vx(m, j), vy(m), p.R(m, j));
                label(vx(m, j - 1), vy(m), vx(m, j), vy(m), p.H(m, j));
            }
    o << "</svg>\n";
    return o.str();
}

}  // namespace schubert
