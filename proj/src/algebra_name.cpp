#include "xi/algebra_name.hpp"

#include <algorithm>
#include <cctype>
#include <regex>

#include "xi/exact.hpp"

namespace xi {

namespace {

const SimpleAlgebraName kR{AlgebraKind::abelian, 1, 0};

std::string normalize(std::string_view text) {
    std::string s;
    for (std::size_t i = 0; i < text.size(); ++i) {
        const auto c = static_cast<unsigned char>(text[i]);
        if (std::isspace(c)) continue;
        // UTF-8 encodings of the direct-sum sign and the blackboard letters.
        if (text.substr(i, 3) == "⊕") {
            s.push_back('+');
            i += 2;
            continue;
        }
        if (text.substr(i, 3) == "ℝ") {
            s.push_back('R');
            i += 2;
            continue;
        }
        if (text.substr(i, 3) == "ℂ") {
            s.push_back('C');
            i += 2;
            continue;
        }
        if (text.substr(i, 3) == "ℍ") {
            s.push_back('H');
            i += 2;
            continue;
        }
        if (text.substr(i, 3) == "−") {
            s.push_back('-');
            i += 2;
            continue;
        }
        s.push_back(static_cast<char>(c));
    }
    return s;
}

std::vector<std::string> split_summands(const std::string& s) {
    std::vector<std::string> parts;
    std::string cur;
    int depth = 0;
    for (char c : s) {
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == '+' && depth == 0) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    parts.push_back(cur);
    return parts;
}

Error grammar_error(std::string_view text) {
    return Error("cannot parse algebra name '" + std::string(text) + "'; valid forms: " + algebra_grammar());
}

SimpleAlgebraName parse_simple(const std::string& s, std::string_view original) {
    static const std::regex field_form(R"(^(sl|gl|sp)\((\d+),([rRcChH])\)$)");
    static const std::regex pair_form(R"(^(so|su|sp)\((\d+),(\d+)\)$)");
    static const std::regex socomplex_form(R"(^so\((\d+),[cC]\)$)");
    static const std::regex compact_form(R"(^(so|su|sp)\((\d+)\)$)");
    static const std::regex star_form(R"(^(so|su)\*\((\d+)\)$)");
    static const std::regex exceptional_form(R"(^([eEfF])([4-8])\(?(-?\d+|[cC])\)?$)");
    std::smatch m;
    auto num = [](const std::ssub_match& g) {
        if (g.length() > 3) throw Error("algebra parameter too large");
        return std::stoi(g.str());
    };
    if (s == "R" || s == "r") return kR;
    if (std::regex_match(s, m, field_form)) {
        const std::string f = m[1];
        const char fld = static_cast<char>(std::toupper(static_cast<unsigned char>(m[3].str()[0])));
        const int n = num(m[2]);
        if (f == "sl" && fld == 'R') return {AlgebraKind::sl_R, n, 0};
        if (f == "sl" && fld == 'C') return {AlgebraKind::sl_C, n, 0};
        if (f == "sl" && fld == 'H') return {AlgebraKind::sl_H, n, 0};
        if (f == "gl" && fld == 'R') return {AlgebraKind::gl_R, n, 0};
        if (f == "sp" && fld == 'R') return {AlgebraKind::sp_R, n, 0};
        if (f == "sp" && fld == 'C') return {AlgebraKind::sp_C, n, 0};
        throw grammar_error(original);
    }
    if (std::regex_match(s, m, socomplex_form)) return {AlgebraKind::so_C, num(m[1]), 0};
    if (std::regex_match(s, m, pair_form)) {
        const std::string f = m[1];
        const AlgebraKind k = f == "so" ? AlgebraKind::so_pq : f == "su" ? AlgebraKind::su_pq : AlgebraKind::sp_pq;
        return {k, num(m[2]), num(m[3])};
    }
    if (std::regex_match(s, m, compact_form)) {
        const std::string f = m[1];
        const AlgebraKind k = f == "so" ? AlgebraKind::so_pq : f == "su" ? AlgebraKind::su_pq : AlgebraKind::sp_pq;
        return {k, 0, num(m[2])};
    }
    if (std::regex_match(s, m, star_form)) {
        const int n = num(m[2]);
        if (n % 2 != 0 || n == 0) throw Error("so*(2n) and su*(2n) need an even positive parameter: " + std::string(original));
        if (m[1] == "so") return {AlgebraKind::so_star, n, 0};
        return {AlgebraKind::sl_H, n / 2, 0};
    }
    if (std::regex_match(s, m, exceptional_form)) {
        const char letter = static_cast<char>(std::tolower(static_cast<unsigned char>(m[1].str()[0])));
        const int rank = num(m[2]);
        std::string idx = m[3];
        const bool complex = idx == "c" || idx == "C";
        if (letter == 'e' && rank == 6) {
            if (complex) return {AlgebraKind::e6_C, 0, 0};
            if (idx == "6") return {AlgebraKind::e6_split, 0, 0};
            if (idx == "-14") return {AlgebraKind::e6_m14, 0, 0};
            if (idx == "-26") return {AlgebraKind::e6_m26, 0, 0};
        }
        if (letter == 'e' && rank == 7) {
            if (complex) return {AlgebraKind::e7_C, 0, 0};
            if (idx == "7") return {AlgebraKind::e7_split, 0, 0};
            if (idx == "-25") return {AlgebraKind::e7_m25, 0, 0};
        }
        if (letter == 'f' && rank == 4 && idx == "-20") return {AlgebraKind::f4_m20, 0, 0};
    }
    throw grammar_error(original);
}

int dim_so(int n) { return n * (n - 1) / 2; }

}  // namespace

std::string algebra_grammar() {
    return "sl(n,R|C|H), gl(n,R), so(p,q), so(n), so(n,C), so*(2n), sp(n,R|C), sp(p,q), sp(n), su(p,q), su(n), "
           "su*(2n), R, e6(6), e7(7), e6C, e7C, e6(-14), e6(-26), e7(-25), f4(-20); direct sums joined by '+'";
}

AlgebraName parse_algebra_name(std::string_view text) {
    const std::string s = normalize(text);
    if (s.empty()) throw grammar_error(text);
    AlgebraName out;
    for (const auto& part : split_summands(s)) {
        if (part.empty()) throw grammar_error(text);
        out.summands.push_back(parse_simple(part, text));
    }
    return out;
}

const SimpleAlgebraName& AlgebraName::simple() const {
    if (summands.size() != 1) throw Error("expected a simple algebra, got " + to_string());
    return summands.front();
}

std::string to_string(const SimpleAlgebraName& s) {
    const std::string a = std::to_string(s.a);
    const std::string b = std::to_string(s.b);
    switch (s.kind) {
        case AlgebraKind::sl_R: return "sl(" + a + ",R)";
        case AlgebraKind::sl_C: return "sl(" + a + ",C)";
        case AlgebraKind::sl_H: return "sl(" + a + ",H)";
        case AlgebraKind::gl_R: return "gl(" + a + ",R)";
        case AlgebraKind::so_pq: return s.a == 0 ? "so(" + b + ")" : "so(" + a + "," + b + ")";
        case AlgebraKind::so_C: return "so(" + a + ",C)";
        case AlgebraKind::so_star: return "so*(" + a + ")";
        case AlgebraKind::sp_R: return "sp(" + a + ",R)";
        case AlgebraKind::sp_C: return "sp(" + a + ",C)";
        case AlgebraKind::sp_pq: return s.a == 0 ? "sp(" + b + ")" : "sp(" + a + "," + b + ")";
        case AlgebraKind::su_pq: return s.a == 0 ? "su(" + b + ")" : "su(" + a + "," + b + ")";
        case AlgebraKind::abelian: return "R";
        case AlgebraKind::e6_split: return "e6(6)";
        case AlgebraKind::e6_m14: return "e6(-14)";
        case AlgebraKind::e6_m26: return "e6(-26)";
        case AlgebraKind::e6_C: return "e6C";
        case AlgebraKind::e7_split: return "e7(7)";
        case AlgebraKind::e7_m25: return "e7(-25)";
        case AlgebraKind::e7_C: return "e7C";
        case AlgebraKind::f4_m20: return "f4(-20)";
    }
    return "?";
}

std::string AlgebraName::to_string() const {
    if (summands.empty()) return "0";
    std::string s;
    for (std::size_t i = 0; i < summands.size(); ++i) {
        if (i) s += "+";
        s += xi::to_string(summands[i]);
    }
    return s;
}

AlgebraName AlgebraName::canonical() const {
    AlgebraName out;
    for (SimpleAlgebraName s : summands) {
        switch (s.kind) {
            case AlgebraKind::so_pq:
            case AlgebraKind::su_pq:
            case AlgebraKind::sp_pq:
                if (s.a > s.b) std::swap(s.a, s.b);
                break;
            default: break;
        }
        const long d = real_dimension(s);
        if (d == 0) continue;
        if (d == 1) s = kR;
        out.summands.push_back(s);
    }
    std::sort(out.summands.begin(), out.summands.end(), [](const SimpleAlgebraName& x, const SimpleAlgebraName& y) {
        return xi::to_string(x) < xi::to_string(y);
    });
    return out;
}

long real_dimension(const SimpleAlgebraName& s) {
    const long a = s.a;
    const long b = s.b;
    switch (s.kind) {
        case AlgebraKind::sl_R: return a * a - 1;
        case AlgebraKind::sl_C: return 2 * (a * a - 1);
        case AlgebraKind::sl_H: return 4 * a * a - 1;
        case AlgebraKind::gl_R: return a * a;
        case AlgebraKind::so_pq: return dim_so(static_cast<int>(a + b));
        case AlgebraKind::so_C: return 2L * dim_so(static_cast<int>(a));
        case AlgebraKind::so_star: return dim_so(static_cast<int>(a));
        case AlgebraKind::sp_R: return a * (2 * a + 1);
        case AlgebraKind::sp_C: return 2 * a * (2 * a + 1);
        case AlgebraKind::sp_pq: return (a + b) * (2 * (a + b) + 1);
        case AlgebraKind::su_pq: return (a + b) * (a + b) - 1;
        case AlgebraKind::abelian: return 1;
        case AlgebraKind::e6_split:
        case AlgebraKind::e6_m14:
        case AlgebraKind::e6_m26: return 78;
        case AlgebraKind::e6_C: return 156;
        case AlgebraKind::e7_split:
        case AlgebraKind::e7_m25: return 133;
        case AlgebraKind::e7_C: return 266;
        case AlgebraKind::f4_m20: return 52;
    }
    return 0;
}

long real_dimension(const AlgebraName& n) {
    long d = 0;
    for (const auto& s : n.summands) d += real_dimension(s);
    return d;
}

}  // namespace xi
