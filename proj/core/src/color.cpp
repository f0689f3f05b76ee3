#include "fracolor/color.hpp"

namespace fracolor {

std::string Color::to_string() const {
    switch (kind) {
        case Kind::Zero:
            return "0";
        case Kind::Plain:
            return std::to_string(a);
        case Kind::Tuple:
            return std::to_string(a) + "_" + std::to_string(i);
        case Kind::Heart:
            return "♥";
        case Kind::Diamond1:
            return "♦1";
        case Kind::Diamond2:
            return "♦2";
        case Kind::Extra:
            return "+";
    }
    return "?";
}

std::optional<Color> Color::from_string(const std::string& s) {
    if (s == "0") return zero();
    if (s == "♥" || s == "heart") return heart();
    if (s == "♦1" || s == "diamond1") return diamond1();
    if (s == "♦2" || s == "diamond2") return diamond2();
    if (s == "+") return extra();
    auto sep = s.find('_');
    try {
        if (sep == std::string::npos) {
            size_t used;
            int v = std::stoi(s, &used);
            if (used != s.size()) return std::nullopt;
            return plain(v);
        }
        size_t ua, ui;
        int a = std::stoi(s.substr(0, sep), &ua);
        int i = std::stoi(s.substr(sep + 1), &ui);
        if (ua != sep || ui != s.size() - sep - 1) return std::nullopt;
        return tuple(a, i);
    } catch (...) {
        return std::nullopt;
    }
}

std::vector<Color> tuple_seq(int base, int len) {
    std::vector<Color> out;
    for (int i = 1; i <= len; ++i) out.push_back(Color::tuple(base, i));
    return out;
}

std::vector<Color> tuple_seq_rev(int base, int len) {
    std::vector<Color> out;
    for (int i = len; i >= 1; --i) out.push_back(Color::tuple(base, i));
    return out;
}

}  // namespace fracolor
