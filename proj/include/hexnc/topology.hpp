#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hexnc/gf2.hpp"

namespace hexnc {

struct InvalidParameter : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Position in the triangular network. Valid when c >= 1, r >= 1 and
// c + r <= K + 1; the derived third coordinate s = K + 2 - c - r is then
// >= 1 and c + r + s = K + 2.
struct TriCoord {
    int c = 1;
    int r = 1;

    friend bool operator==(const TriCoord&, const TriCoord&) = default;
    friend auto operator<=>(const TriCoord&, const TriCoord&) = default;
};

std::string to_string(const TriCoord& p);

// The six neighbour labels, fixed displacements on (c, r):
//   A=(+1,-1)  B=(+1,0)  C=(0,+1)  D=(-1,+1)  E=(-1,0)  F=(0,-1)
// (A,D), (B,E) and (C,F) are inverse pairs.
enum class Direction : std::uint8_t { A, B, C, D, E, F };

inline constexpr Direction kAllDirections[6] = {Direction::A, Direction::B, Direction::C,
                                                Direction::D, Direction::E, Direction::F};

std::pair<int, int> displacement(Direction d);
Direction inverse(Direction d);
// Image of a direction under one counter-clockwise rotation step of the
// triangle: A->C->E->A, B->D->F->B.
Direction rotated(Direction d);
Direction rotated(Direction d, int steps);
const char* to_string(Direction d);

enum class NodeClass : std::uint8_t {
    Internal,
    EdgeLeft,         // r = 1, 2 <= c <= K-1
    EdgeBottom,       // c = 1, 2 <= r <= K-1
    EdgeDiagonal,     // s = 1, non-corner
    CornerBottomLeft, // (1,1)
    CornerTop,        // (K,1)
    CornerBottomRight // (1,K)
};

const char* to_string(NodeClass c);

struct SessionPlacement {
    SessionId session;
    TriCoord source;
    TriCoord receiver;
};

using NodeId = int;

// Adjacency-only view consumed by the engine; node identity is a dense id.
struct Topology {
    int node_count = 0;
    std::vector<std::vector<NodeId>> neighbors;
};

// The K-triangle on the hexagonal lattice: each of the three network edges
// holds K nodes. Immutable after construction.
class HexGrid {
public:
    explicit HexGrid(int K);

    int K() const { return k_; }
    int node_count() const { return static_cast<int>(nodes_.size()); }
    int internal_count() const;

    const std::vector<TriCoord>& nodes() const { return nodes_; }
    bool valid(const TriCoord& p) const;
    NodeId id(const TriCoord& p) const;
    const TriCoord& coord(NodeId n) const { return nodes_[n]; }

    int third(const TriCoord& p) const { return k_ + 2 - p.c - p.r; }
    std::optional<TriCoord> neighbor(const TriCoord& p, Direction d) const;
    NodeClass node_class(const TriCoord& p) const;
    bool is_border(const TriCoord& p) const { return node_class(p) != NodeClass::Internal; }

    // Three-fold symmetry rho(c, r) = (s, c); rho^3 = identity. Maps the
    // left edge to the diagonal edge to the bottom edge.
    TriCoord rotate(const TriCoord& p) const;
    TriCoord rotate(const TriCoord& p, int steps) const;

    Topology topology() const;

    // S(x_i)=(i,1), R(x_i)=(i,K+1-i); S(y_j)=(K+1-j,j), R(y_j)=(1,j);
    // S(z_k)=(1,K+1-k), R(z_k)=(K+1-k,1). 3K sessions in total.
    std::vector<SessionPlacement> place_sessions() const;

private:
    int k_;
    std::vector<TriCoord> nodes_;
    std::vector<int> id_table_;  // (c-1) * (K+1) + (r-1) -> NodeId or -1
};

// Path of N nodes, consecutive indices adjacent. Node ids are 0..N-1 for
// line positions 1..N.
Topology build_line(int N);

}  // namespace hexnc
