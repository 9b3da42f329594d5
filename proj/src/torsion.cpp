#include "artal/torsion.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace artal {

TorsionPoint TorsionPoint::from_index(int i) {
    if (i < 0 || i > 8) throw std::out_of_range("torsion point index must be in 0..8");
    return {i / 3, i % 3};
}

TorsionPoint add(TorsionPoint p, TorsionPoint q) {
    return {(p.a + q.a) % 3, (p.b + q.b) % 3};
}

TorsionPoint negate(TorsionPoint p) {
    return {(3 - p.a) % 3, (3 - p.b) % 3};
}

bool is_collinear_triple(TorsionPoint p, TorsionPoint q, TorsionPoint r) {
    if (p == q || p == r || q == r) return false;
    return add(add(p, q), r) == TorsionPoint::origin();
}

std::uint16_t TorsionLine::mask() const {
    std::uint16_t m = 0;
    for (auto p : points) m |= static_cast<std::uint16_t>(1u << p.index());
    return m;
}

bool TorsionLine::contains(TorsionPoint p) const {
    return points[0] == p || points[1] == p || points[2] == p;
}

const std::vector<TorsionLine>& all_lines() {
    static const std::vector<TorsionLine> lines = [] {
        std::vector<TorsionLine> out;
        for (int i = 0; i < 9; ++i)
            for (int j = i + 1; j < 9; ++j)
                for (int k = j + 1; k < 9; ++k) {
                    auto p = TorsionPoint::from_index(i);
                    auto q = TorsionPoint::from_index(j);
                    auto r = TorsionPoint::from_index(k);
                    if (is_collinear_triple(p, q, r)) out.push_back({{p, q, r}});
                }
        return out;
    }();
    return lines;
}

PointSubset::PointSubset(std::uint16_t mask) : mask_(mask) {
    if (mask >= (1u << 9)) throw std::invalid_argument("subset mask has bits beyond the 9 points");
}

PointSubset PointSubset::full() { return PointSubset{(1u << 9) - 1}; }

int PointSubset::size() const { return std::popcount(mask_); }

bool PointSubset::contains(TorsionPoint p) const {
    return (mask_ >> p.index()) & 1u;
}

PointSubset PointSubset::with(TorsionPoint p) const {
    return PointSubset{static_cast<std::uint16_t>(mask_ | (1u << p.index()))};
}

PointSubset PointSubset::without(TorsionPoint p) const {
    return PointSubset{static_cast<std::uint16_t>(mask_ & ~(1u << p.index()))};
}

std::vector<TorsionPoint> PointSubset::points() const {
    std::vector<TorsionPoint> out;
    out.reserve(size());
    for (int i = 0; i < 9; ++i)
        if ((mask_ >> i) & 1u) out.push_back(TorsionPoint::from_index(i));
    return out;
}

std::string PointSubset::to_string() const {
    std::string out = "[";
    bool first = true;
    for (auto p : points()) {
        if (!first) out += ' ';
        out += artal::to_string(p);
        first = false;
    }
    out += ']';
    return out;
}

PointSubset PointSubset::parse(std::string_view text) {
    auto fail = [&](const char* why) {
        throw std::invalid_argument(std::string("bad subset \"") + std::string(text) + "\": " + why);
    };
    size_t begin = text.find_first_not_of(" \t");
    size_t end = text.find_last_not_of(" \t");
    if (begin == std::string_view::npos) fail("empty");
    text = text.substr(begin, end - begin + 1);
    if (text.size() < 2 || text.front() != '[' || text.back() != ']') fail("missing brackets");
    text = text.substr(1, text.size() - 2);

    PointSubset out;
    size_t pos = 0;
    while (pos < text.size()) {
        while (pos < text.size() && text[pos] == ' ') ++pos;
        if (pos >= text.size()) break;
        size_t next = text.find(' ', pos);
        if (next == std::string_view::npos) next = text.size();
        TorsionPoint p = parse_torsion_point(text.substr(pos, next - pos));
        if (out.contains(p)) fail("duplicate member");
        out = out.with(p);
        pos = next;
    }
    return out;
}

bool subset_lex_less(PointSubset x, PointSubset y) {
    auto px = x.points();
    auto py = y.points();
    return std::lexicographical_compare(px.begin(), px.end(), py.begin(), py.end());
}

int collinear_triple_count(PointSubset s) {
    auto pts = s.points();
    int n = 0;
    for (size_t i = 0; i < pts.size(); ++i)
        for (size_t j = i + 1; j < pts.size(); ++j)
            for (size_t k = j + 1; k < pts.size(); ++k)
                if (is_collinear_triple(pts[i], pts[j], pts[k])) ++n;
    return n;
}

std::string to_string(TorsionPoint p) {
    std::string out;
    out += static_cast<char>('0' + p.a);
    out += ',';
    out += static_cast<char>('0' + p.b);
    return out;
}

TorsionPoint parse_torsion_point(std::string_view s) {
    if (s.size() != 3 || s[1] != ',' || s[0] < '0' || s[0] > '2' || s[2] < '0' || s[2] > '2')
        throw std::invalid_argument(std::string("bad torsion point \"") + std::string(s) +
                                    "\": expected \"a,b\" with digits 0..2");
    return {s[0] - '0', s[2] - '0'};
}

}  // namespace artal
