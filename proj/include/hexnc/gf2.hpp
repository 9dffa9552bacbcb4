#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace hexnc {

// A single GF(2) value. Addition is xor.
struct Bit {
    std::uint8_t value = 0;

    Bit& operator+=(Bit o) {
        value ^= o.value;
        return *this;
    }
    friend Bit operator+(Bit a, Bit b) { return Bit{static_cast<std::uint8_t>(a.value ^ b.value)}; }
    friend bool operator==(Bit a, Bit b) { return a.value == b.value; }
    bool is_zero() const { return value == 0; }
};

enum class SessionKind : std::uint8_t { X, Y, Z, A, B };

const char* to_string(SessionKind k);

// One unicast stream. X/Y/Z index the triangle sessions, A/B the two
// line-network streams (index 1).
struct SessionId {
    SessionKind kind;
    int index = 1;

    friend bool operator==(const SessionId&, const SessionId&) = default;
    friend auto operator<=>(const SessionId&, const SessionId&) = default;
};

std::string to_string(const SessionId& s);

// One source symbol: session stream sampled at a time slot.
struct SymbolTerm {
    SessionId session;
    int time = 0;

    friend bool operator==(const SymbolTerm&, const SymbolTerm&) = default;
    friend auto operator<=>(const SymbolTerm&, const SymbolTerm&) = default;
};

std::string to_string(const SymbolTerm& t);

// GF(2) linear combination of source symbols, kept as a sorted term set.
// Addition is symmetric difference; terms at time <= 0 are dropped on
// insertion so equality is plain set equality.
class LinComb {
public:
    LinComb() = default;
    LinComb(std::initializer_list<SymbolTerm> terms) {
        for (const auto& t : terms) *this += LinComb::single(t.session, t.time);
    }

    static LinComb single(SessionId s, int time) {
        LinComb c;
        if (time >= 1) c.terms_.push_back(SymbolTerm{s, time});
        return c;
    }

    LinComb& operator+=(const LinComb& o);
    friend LinComb operator+(LinComb a, const LinComb& b) {
        a += b;
        return a;
    }
    friend bool operator==(const LinComb&, const LinComb&) = default;

    bool is_zero() const { return terms_.empty(); }
    const std::vector<SymbolTerm>& terms() const { return terms_; }

    // Evaluate against concrete streams (stream(term) in {0,1}).
    Bit eval(const std::function<Bit(const SymbolTerm&)>& stream) const;

private:
    std::vector<SymbolTerm> terms_;  // sorted, unique, all times >= 1
};

std::string to_string(const LinComb& c);

}  // namespace hexnc
