#include "hexnc/gf2.hpp"

namespace hexnc {

const char* to_string(SessionKind k) {
    switch (k) {
        case SessionKind::X: return "x";
        case SessionKind::Y: return "y";
        case SessionKind::Z: return "z";
        case SessionKind::A: return "a";
        case SessionKind::B: return "b";
    }
    return "?";
}

std::string to_string(const SessionId& s) { return std::string(to_string(s.kind)) + std::to_string(s.index); }

std::string to_string(const SymbolTerm& t) { return to_string(t.session) + "@" + std::to_string(t.time); }

LinComb& LinComb::operator+=(const LinComb& o) {
    std::vector<SymbolTerm> merged;
    merged.reserve(terms_.size() + o.terms_.size());
    std::set_symmetric_difference(terms_.begin(), terms_.end(), o.terms_.begin(), o.terms_.end(),
                                  std::back_inserter(merged));
    terms_ = std::move(merged);
    return *this;
}

Bit LinComb::eval(const std::function<Bit(const SymbolTerm&)>& stream) const {
    Bit acc;
    for (const auto& t : terms_) acc += stream(t);
    return acc;
}

std::string to_string(const LinComb& c) {
    if (c.is_zero()) return "0";
    std::string out;
    for (const auto& t : c.terms()) {
        if (!out.empty()) out += "+";
        out += to_string(t);
    }
    return out;
}

}  // namespace hexnc
