#include "hexnc/topology.hpp"

namespace hexnc {

std::string to_string(const TriCoord& p) {
    return "(" + std::to_string(p.c) + "," + std::to_string(p.r) + ")";
}

std::pair<int, int> displacement(Direction d) {
    switch (d) {
        case Direction::A: return {+1, -1};
        case Direction::B: return {+1, 0};
        case Direction::C: return {0, +1};
        case Direction::D: return {-1, +1};
        case Direction::E: return {-1, 0};
        case Direction::F: return {0, -1};
    }
    return {0, 0};
}

Direction inverse(Direction d) {
    switch (d) {
        case Direction::A: return Direction::D;
        case Direction::B: return Direction::E;
        case Direction::C: return Direction::F;
        case Direction::D: return Direction::A;
        case Direction::E: return Direction::B;
        case Direction::F: return Direction::C;
    }
    return d;
}

Direction rotated(Direction d) {
    switch (d) {
        case Direction::A: return Direction::C;
        case Direction::B: return Direction::D;
        case Direction::C: return Direction::E;
        case Direction::D: return Direction::F;
        case Direction::E: return Direction::A;
        case Direction::F: return Direction::B;
    }
    return d;
}

Direction rotated(Direction d, int steps) {
    for (int i = 0; i < ((steps % 3) + 3) % 3; ++i) d = rotated(d);
    return d;
}

const char* to_string(Direction d) {
    static const char* names[] = {"A", "B", "C", "D", "E", "F"};
    return names[static_cast<int>(d)];
}

const char* to_string(NodeClass c) {
    switch (c) {
        case NodeClass::Internal: return "internal";
        case NodeClass::EdgeLeft: return "edge-left";
        case NodeClass::EdgeBottom: return "edge-bottom";
        case NodeClass::EdgeDiagonal: return "edge-diagonal";
        case NodeClass::CornerBottomLeft: return "corner-bottom-left";
        case NodeClass::CornerTop: return "corner-top";
        case NodeClass::CornerBottomRight: return "corner-bottom-right";
    }
    return "?";
}

HexGrid::HexGrid(int K) : k_(K) {
    if (K < 2) throw InvalidParameter("HexGrid: K must be >= 2");
    id_table_.assign(static_cast<size_t>(K + 1) * (K + 1), -1);
    for (int c = 1; c <= K; ++c) {
        for (int r = 1; c + r <= K + 1; ++r) {
            id_table_[static_cast<size_t>(c - 1) * (K + 1) + (r - 1)] = static_cast<int>(nodes_.size());
            nodes_.push_back(TriCoord{c, r});
        }
    }
}

int HexGrid::internal_count() const { return (k_ - 2) * (k_ - 3) / 2; }

bool HexGrid::valid(const TriCoord& p) const {
    return p.c >= 1 && p.r >= 1 && p.c + p.r <= k_ + 1;
}

NodeId HexGrid::id(const TriCoord& p) const {
    if (!valid(p)) throw InvalidParameter("HexGrid::id: coordinate outside the triangle " + to_string(p));
    return id_table_[static_cast<size_t>(p.c - 1) * (k_ + 1) + (p.r - 1)];
}

std::optional<TriCoord> HexGrid::neighbor(const TriCoord& p, Direction d) const {
    auto [dc, dr] = displacement(d);
    TriCoord q{p.c + dc, p.r + dr};
    if (!valid(q)) return std::nullopt;
    return q;
}

NodeClass HexGrid::node_class(const TriCoord& p) const {
    const int s = third(p);
    if (p.c == 1 && p.r == 1) return NodeClass::CornerBottomLeft;
    if (p.c == k_ && p.r == 1) return NodeClass::CornerTop;
    if (p.c == 1 && p.r == k_) return NodeClass::CornerBottomRight;
    if (p.r == 1) return NodeClass::EdgeLeft;
    if (p.c == 1) return NodeClass::EdgeBottom;
    if (s == 1) return NodeClass::EdgeDiagonal;
    return NodeClass::Internal;
}

TriCoord HexGrid::rotate(const TriCoord& p) const { return TriCoord{third(p), p.c}; }

TriCoord HexGrid::rotate(const TriCoord& p, int steps) const {
    TriCoord q = p;
    for (int i = 0; i < ((steps % 3) + 3) % 3; ++i) q = rotate(q);
    return q;
}

Topology HexGrid::topology() const {
    Topology t;
    t.node_count = node_count();
    t.neighbors.resize(nodes_.size());
    for (NodeId n = 0; n < t.node_count; ++n) {
        for (Direction d : kAllDirections) {
            if (auto q = neighbor(nodes_[n], d)) t.neighbors[n].push_back(id(*q));
        }
    }
    return t;
}

std::vector<SessionPlacement> HexGrid::place_sessions() const {
    std::vector<SessionPlacement> out;
    out.reserve(3 * k_);
    for (int i = 1; i <= k_; ++i)
        out.push_back({SessionId{SessionKind::X, i}, TriCoord{i, 1}, TriCoord{i, k_ + 1 - i}});
    for (int j = 1; j <= k_; ++j)
        out.push_back({SessionId{SessionKind::Y, j}, TriCoord{k_ + 1 - j, j}, TriCoord{1, j}});
    for (int k = 1; k <= k_; ++k)
        out.push_back({SessionId{SessionKind::Z, k}, TriCoord{1, k_ + 1 - k}, TriCoord{k_ + 1 - k, 1}});
    return out;
}

Topology build_line(int N) {
    if (N < 2) throw InvalidParameter("build_line: N must be >= 2");
    Topology t;
    t.node_count = N;
    t.neighbors.resize(N);
    for (int n = 0; n + 1 < N; ++n) {
        t.neighbors[n].push_back(n + 1);
        t.neighbors[n + 1].push_back(n);
    }
    return t;
}

}  // namespace hexnc
