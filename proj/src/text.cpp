#include "qsylv/text.hpp"

#include <cctype>
#include <cerrno>
#include <cstdio>
#include <cstdlib>

namespace qsylv {

namespace {

struct Cursor {
    std::string_view s;
    std::size_t pos = 0;

    bool eof() const { return pos >= s.size(); }
    char peek() const { return s[pos]; }
    void skip_ws() {
        while (!eof() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
};

[[noreturn]] void fail(const Cursor& c, const std::string& expected) {
    const std::string got =
        c.eof() ? std::string("end of input") : "'" + std::string(1, c.s[c.pos]) + "'";
    throw ParseError("expected " + expected + ", got " + got + " at position " +
                         std::to_string(c.pos),
                     c.pos);
}

int unit_index(char ch) {
    switch (ch) {
        case 'i': return 1;
        case 'j': return 2;
        case 'k': return 3;
        default: return -1;
    }
}

bool at_digit(const Cursor& c) {
    return !c.eof() && std::isdigit(static_cast<unsigned char>(c.peek()));
}

// Unsigned decimal with optional fraction and exponent; the caller owns signs.
double parse_number(Cursor& c) {
    const std::size_t start = c.pos;
    std::size_t digits = 0;
    while (at_digit(c)) {
        ++c.pos;
        ++digits;
    }
    if (!c.eof() && c.peek() == '.') {
        ++c.pos;
        while (at_digit(c)) {
            ++c.pos;
            ++digits;
        }
    }
    if (digits == 0) {
        c.pos = start;
        fail(c, "a number or unit (i, j, k)");
    }
    if (!c.eof() && (c.peek() == 'e' || c.peek() == 'E')) {
        ++c.pos;
        if (!c.eof() && (c.peek() == '+' || c.peek() == '-')) ++c.pos;
        if (!at_digit(c)) fail(c, "exponent digits");
        while (at_digit(c)) ++c.pos;
    }
    const std::string buf(c.s.substr(start, c.pos - start));
    errno = 0;
    const double v = std::strtod(buf.c_str(), nullptr);
    if (errno == ERANGE || !std::isfinite(v))
        throw ParseError("number out of range at position " + std::to_string(start),
                         start);
    return v;
}

double parse_signed_number(Cursor& c) {
    c.skip_ws();
    bool negative = false;
    if (!c.eof() && (c.peek() == '+' || c.peek() == '-')) {
        negative = c.peek() == '-';
        ++c.pos;
        c.skip_ws();
    }
    const double v = parse_number(c);
    return negative ? -v : v; // -0.0 preserved
}

Quaternion parse_positional(Cursor& c) {
    ++c.pos; // consume '('
    double comp[4];
    for (int i = 0; i < 4; ++i) {
        comp[i] = parse_signed_number(c);
        c.skip_ws();
        if (i < 3) {
            if (c.eof() || c.peek() != ',') fail(c, "','");
            ++c.pos;
        }
    }
    if (c.eof() || c.peek() != ')') fail(c, "')'");
    ++c.pos;
    return {comp[0], comp[1], comp[2], comp[3]};
}

Quaternion parse_terms(Cursor& c) {
    static const char* slot_name[4] = {"real", "'i'", "'j'", "'k'"};
    bool seen[4] = {};
    double comp[4] = {};
    bool first = true;
    while (true) {
        c.skip_ws();
        if (c.eof()) {
            if (first) fail(c, "a quaternion");
            break;
        }
        bool negative = false;
        if (c.peek() == '+' || c.peek() == '-') {
            negative = c.peek() == '-';
            ++c.pos;
            c.skip_ws();
        } else if (!first) {
            fail(c, "'+', '-' or end of input");
        }
        const std::size_t term_pos = c.pos;
        double coeff;
        int slot;
        if (!c.eof() && unit_index(c.peek()) >= 0) {
            slot = unit_index(c.peek());
            ++c.pos;
            coeff = 1.0;
        } else {
            coeff = parse_number(c);
            c.skip_ws();
            slot = 0;
            if (!c.eof() && unit_index(c.peek()) >= 0) {
                slot = unit_index(c.peek());
                ++c.pos;
            }
        }
        if (seen[slot])
            throw ParseError("duplicate " + std::string(slot_name[slot]) +
                                 " term at position " + std::to_string(term_pos),
                             term_pos);
        seen[slot] = true;
        comp[slot] = negative ? -coeff : coeff;
        first = false;
    }
    return {comp[0], comp[1], comp[2], comp[3]};
}

std::string repr_digits(double v, int digits) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.*g", digits, v);
    return buf;
}

} // namespace

Quaternion parse_quaternion(std::string_view text) {
    Cursor c{text};
    c.skip_ws();
    Quaternion q;
    if (!c.eof() && c.peek() == '(')
        q = parse_positional(c);
    else
        q = parse_terms(c);
    c.skip_ws();
    if (!c.eof()) fail(c, "end of input");
    if (!is_finite(q)) throw ParseError("quaternion components must be finite", 0);
    return q;
}

std::string format_quaternion(const Quaternion& q, int digits) {
    const double comp[4] = {q.w, q.x, q.y, q.z};
    static const char* suffix[4] = {"", "i", "j", "k"};
    std::string out;
    for (int s = 0; s < 4; ++s) {
        if (comp[s] == 0.0) continue;
        std::string term;
        if (s > 0 && comp[s] == 1.0)
            term = suffix[s];
        else if (s > 0 && comp[s] == -1.0)
            term = std::string("-") + suffix[s];
        else
            term = repr_digits(comp[s], digits) + suffix[s];
        if (!out.empty() && term[0] != '-') out += '+';
        out += term;
    }
    return out.empty() ? "0" : out;
}

std::string format_exact(const Quaternion& q) {
    return "(" + shortest_repr(q.w) + "," + shortest_repr(q.x) + "," +
           shortest_repr(q.y) + "," + shortest_repr(q.z) + ")";
}

std::string shortest_repr(double v) {
    char buf[40];
    std::string best;
    for (int prec = 1; prec <= 17; ++prec) {
        std::snprintf(buf, sizeof buf, "%.*g", prec, v);
        if (std::strtod(buf, nullptr) == v &&
            (best.empty() || std::string_view(buf).size() < best.size()))
            best = buf;
    }
    return best;
}

} // namespace qsylv
