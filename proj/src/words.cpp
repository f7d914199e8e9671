#include "pmb/words.hpp"

#include <algorithm>
#include <sstream>

namespace pmb {

std::string region_name(Region r) {
    switch (r) {
        case Region::D: return "D";
        case Region::H1: return "H1";
        case Region::H2: return "H2";
    }
    return "?";
}

Region region_from_name(const std::string& s) {
    if (s == "D") return Region::D;
    if (s == "H1") return Region::H1;
    if (s == "H2") return Region::H2;
    throw WordError("unknown region '" + s + "'");
}

namespace {

// a region borders the crossing's arc iff it is D or the arc's handle
bool region_borders(Region r, int arc) {
    return r == Region::D || r == handle_of_arc(arc);
}

std::vector<std::string> tokens(const std::string& s) {
    std::istringstream is(s);
    std::vector<std::string> out;
    std::string t;
    while (is >> t) out.push_back(t);
    return out;
}

}  // namespace

void CurveWord::check_valid() const {
    if (crossings.size() != regions.size())
        throw WordError("closed word: crossing/region count mismatch");
    size_t n = crossings.size();
    for (size_t i = 0; i < n; ++i) {
        if (crossings[i] < 1 || crossings[i] > 4) throw WordError("bad arc label");
        // regions[i] sits between crossings[i] and crossings[i+1]
        if (!region_borders(regions[i], crossings[i]))
            throw WordError("region does not border preceding crossing");
        if (!region_borders(regions[i], crossings[(i + 1) % n]))
            throw WordError("region does not border following crossing");
    }
    // the two sides of each crossing must differ (D on one side, handle on the other)
    for (size_t i = 0; i < n; ++i) {
        Region before = regions[(i + n - 1) % n], after = regions[i];
        if (before == after) throw WordError("crossing does not separate regions");
    }
}

std::string CurveWord::str() const {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < crossings.size(); ++i) {
        if (i) os << " ";
        os << crossings[i] << " " << region_name(regions[i]);
    }
    os << ")";
    return os.str();
}

CurveWord CurveWord::parse(const std::string& s) {
    std::string s2 = s;
    bool saw_paren = false;
    for (char& c : s2)
        if (c == '(' || c == ')') { c = ' '; saw_paren = true; }
    if (!saw_paren) throw WordError("closed word must be parenthesized");
    auto t = tokens(s2);
    if (t.size() % 2 != 0) throw WordError("closed word needs crossing/region pairs");
    CurveWord w;
    for (size_t i = 0; i < t.size(); i += 2) {
        try {
            w.crossings.push_back(std::stoi(t[i]));
        } catch (...) {
            throw WordError("bad crossing token '" + t[i] + "'");
        }
        w.regions.push_back(region_from_name(t[i + 1]));
    }
    w.check_valid();
    return w;
}

bool operator<(const CurveWord& a, const CurveWord& b) {
    if (a.crossings != b.crossings) return a.crossings < b.crossings;
    return a.regions < b.regions;
}

CurveWord CurveWord::canonical() const {
    size_t n = crossings.size();
    if (n == 0) return *this;
    CurveWord best = *this;
    bool first = true;
    auto consider = [&](const CurveWord& w) {
        for (size_t r = 0; r < n; ++r) {
            CurveWord rot;
            for (size_t i = 0; i < n; ++i) {
                rot.crossings.push_back(w.crossings[(r + i) % n]);
                rot.regions.push_back(w.regions[(r + i) % n]);
            }
            if (first || rot < best) { best = rot; first = false; }
        }
    };
    consider(*this);
    // reversal: region i of the reverse lies between reversed crossings i and
    // i+1, i.e. between original crossings n-1-i and n-2-i
    CurveWord rev;
    for (size_t i = 0; i < n; ++i) {
        rev.crossings.push_back(crossings[n - 1 - i]);
        rev.regions.push_back(regions[(2 * n - 2 - i) % n]);
    }
    consider(rev);
    return best;
}

Region ArcWord::region_before(size_t i) const {
    if (i == 0) return segment_region(end1);
    return regions[i - 1];
}

Region ArcWord::region_after(size_t i) const {
    if (i + 1 == crossings.size()) return segment_region(end2);
    return regions[i];
}

void ArcWord::check_valid() const {
    if (edge_is_A(end1) || edge_is_A(end2)) throw WordError("endpoint must be a boundary segment");
    if (crossings.empty()) {
        if (!regions.empty()) throw WordError("zero-crossing arc carries no regions");
        if (segment_region(end1) != segment_region(end2))
            throw WordError("zero-crossing arc endpoints in different regions");
        return;
    }
    if (regions.size() + 1 != crossings.size())
        throw WordError("arc word needs one region between consecutive crossings");
    for (size_t i = 0; i < crossings.size(); ++i) {
        int c = crossings[i];
        if (c < 1 || c > 4) throw WordError("bad arc label");
        Region rb = region_before(i), ra = region_after(i);
        if (!region_borders(rb, c) || !region_borders(ra, c))
            throw WordError("region does not border crossing");
        if (rb == ra) throw WordError("crossing does not separate regions");
    }
}

std::string ArcWord::str() const {
    std::ostringstream os;
    os << edge_name(end1) << " |";
    for (size_t i = 0; i < crossings.size(); ++i) {
        os << " " << crossings[i];
        if (i + 1 < crossings.size()) os << " " << region_name(regions[i]);
    }
    os << " | " << edge_name(end2);
    return os.str();
}

ArcWord ArcWord::parse(const std::string& s) {
    auto t = tokens(s);
    std::vector<size_t> bars;
    for (size_t i = 0; i < t.size(); ++i)
        if (t[i] == "|") bars.push_back(i);
    if (t.size() < 4 || bars.size() != 2 || bars[0] != 1 || bars[1] != t.size() - 2)
        throw WordError("arc word must be 'E | ... | E'");
    ArcWord w;
    auto e1 = edge_from_name(t.front());
    auto e2 = edge_from_name(t.back());
    if (!e1 || !e2 || edge_is_A(*e1) || edge_is_A(*e2)) throw WordError("bad endpoint token");
    w.end1 = *e1;
    w.end2 = *e2;
    bool expect_crossing = true;
    for (size_t i = 2; i + 2 < t.size(); ++i) {
        if (expect_crossing) {
            try {
                w.crossings.push_back(std::stoi(t[i]));
            } catch (...) {
                throw WordError("bad crossing token '" + t[i] + "'");
            }
        } else {
            w.regions.push_back(region_from_name(t[i]));
        }
        expect_crossing = !expect_crossing;
    }
    w.check_valid();
    return w;
}

ArcWord ArcWord::reversed() const {
    ArcWord r;
    r.end1 = end2;
    r.end2 = end1;
    r.crossings.assign(crossings.rbegin(), crossings.rend());
    r.regions.assign(regions.rbegin(), regions.rend());
    return r;
}

ArcWord ArcWord::canonical() const {
    ArcWord r = reversed();
    return *this < r ? *this : r;
}

bool operator<(const ArcWord& a, const ArcWord& b) {
    if (a.end1 != b.end1) return int(a.end1) < int(b.end1);
    if (a.end2 != b.end2) return int(a.end2) < int(b.end2);
    if (a.crossings != b.crossings) return a.crossings < b.crossings;
    return a.regions < b.regions;
}

std::string CurveType::str() const {
    return "(" + std::to_string(r1) + "," + std::to_string(r2) + ")";
}

const std::vector<CurveType>& admissible_curve_types() {
    static const std::vector<CurveType> types = {{1, 0}, {2, 0}, {0, 1},
                                                 {1, 1}, {2, 1}, {2, 2}};
    return types;
}

std::string ArcType::str() const {
    std::ostringstream os;
    os << (bracket ? '[' : '{') << i << "," << j << (bracket ? ']' : '}');
    return os.str();
}

ArcType ArcType::parse(const std::string& s) {
    if (s.size() < 5) throw WordError("bad arc type '" + s + "'");
    ArcType t;
    t.bracket = s.front() == '[';
    if (!t.bracket && s.front() != '{') throw WordError("bad arc type '" + s + "'");
    auto comma = s.find(',');
    if (comma == std::string::npos) throw WordError("bad arc type '" + s + "'");
    t.i = std::stoi(s.substr(1, comma - 1));
    t.j = std::stoi(s.substr(comma + 1, s.size() - comma - 2));
    return t;
}

const std::vector<ArcType>& admissible_arc_types() {
    static const std::vector<ArcType> types = {
        bracket_type(1, 2), bracket_type(2, 3), bracket_type(1, 3), bracket_type(3, 4),
        brace_type(1, 0),   brace_type(2, 0),   brace_type(2, 1),   brace_type(0, 1)};
    return types;
}

}  // namespace pmb
