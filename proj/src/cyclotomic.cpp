#include "twistrel/cyclotomic.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

namespace twistrel {

BigRational make_rational(long num, long den) {
    if (den == 0) throw std::domain_error("make_rational: zero denominator");
    BigRational r(num, den);
    r.canonicalize();
    return r;
}

bool operator==(const CycNum& x, const CycNum& y) { return x.a == y.a && x.b == y.b; }

CycNum operator+(const CycNum& x, const CycNum& y) { return {x.a + y.a, x.b + y.b}; }
CycNum operator-(const CycNum& x, const CycNum& y) { return {x.a - y.a, x.b - y.b}; }
CycNum operator-(const CycNum& x) { return {-x.a, -x.b}; }

// (a1+b1 w)(a2+b2 w) = a1 a2 - b1 b2 + (a1 b2 + a2 b1 + b1 b2) w, using w^2 = w - 1.
CycNum operator*(const CycNum& x, const CycNum& y) {
    return {x.a * y.a - x.b * y.b, x.a * y.b + y.a * x.b + x.b * y.b};
}

CycNum& operator+=(CycNum& x, const CycNum& y) {
    x.a += y.a;
    x.b += y.b;
    return x;
}
CycNum& operator-=(CycNum& x, const CycNum& y) {
    x.a -= y.a;
    x.b -= y.b;
    return x;
}
CycNum& operator*=(CycNum& x, const CycNum& y) { return x = x * y; }

CycNum inv(const CycNum& x) {
    // Norm of a + b*w is (a + b*w)(a + b - b*w) = a^2 + ab + b^2, zero only at 0.
    BigRational norm = x.a * x.a + x.a * x.b + x.b * x.b;
    if (norm == 0) throw std::domain_error("inv: zero CycNum");
    return {(x.a + x.b) / norm, -x.b / norm};
}

CycNum omega_pow(long n) {
    long r = n % 6;
    if (r < 0) r += 6;
    switch (r) {
        case 0: return {1, 0};
        case 1: return {0, 1};
        case 2: return {-1, 1};  // w^2 = w - 1
        case 3: return {-1, 0};
        case 4: return {0, -1};
        default: return {1, -1};  // w^5 = 1 - w
    }
}

CycNum omega_antisym(long d) {
    long r = d % 6;
    if (r < 0) r += 6;
    if (r == 0 || r == 3) return {0, 0};
    if (r == 1 || r == 2) return {-1, 2};  // sqrt(3) i = 2w - 1
    return {1, -2};
}

namespace {

std::string rat_str(const BigRational& r) { return r.get_str(); }

}  // namespace

std::string to_string(const CycNum& x) {
    if (x.b == 0) return rat_str(x.a);
    std::string bw;
    if (x.b == 1)
        bw = "w";
    else if (x.b == -1)
        bw = "-w";
    else
        bw = rat_str(x.b) + "*w";
    if (x.a == 0) return bw;
    if (x.b > 0) return rat_str(x.a) + "+" + bw;
    return rat_str(x.a) + bw;  // bw already carries the minus sign
}

std::ostream& operator<<(std::ostream& os, const CycNum& x) { return os << to_string(x); }

namespace {

// Parses a signed rational starting at s[pos]; advances pos past it.
BigRational parse_rat(const std::string& s, size_t& pos) {
    size_t start = pos;
    if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) ++pos;
    while (pos < s.size() && (std::isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == '/')) ++pos;
    if (pos == start || (pos == start + 1 && !std::isdigit(static_cast<unsigned char>(s[start]))))
        throw std::invalid_argument("parse_cycnum: expected rational in '" + s + "'");
    std::string body = s.substr(start, pos - start);
    if (body.front() == '+') body.erase(0, 1);  // mpq_set_str rejects a leading '+'
    BigRational r;
    if (r.set_str(body, 10) != 0 || r.get_den() == 0)
        throw std::invalid_argument("parse_cycnum: bad rational in '" + s + "'");
    r.canonicalize();
    return r;
}

}  // namespace

CycNum parse_cycnum(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("parse_cycnum: empty string");
    size_t pos = 0;
    BigRational a(0), b(0);
    bool seen_w = false, seen_a = false;
    while (pos < s.size()) {
        int sign = 1;
        if (s[pos] == '+' || s[pos] == '-') {
            // Bare "w" / "-w" / "+w" term.
            if (pos + 1 < s.size() && s[pos + 1] == 'w') {
                sign = (s[pos] == '-') ? -1 : 1;
                pos += 2;
                if (seen_w) throw std::invalid_argument("parse_cycnum: repeated w term");
                b += sign;
                seen_w = true;
                continue;
            }
        } else if (s[pos] == 'w') {
            if (seen_w) throw std::invalid_argument("parse_cycnum: repeated w term");
            b += 1;
            seen_w = true;
            ++pos;
            continue;
        }
        BigRational r = parse_rat(s, pos);
        if (pos + 1 < s.size() && s[pos] == '*' && s[pos + 1] == 'w') {
            if (seen_w) throw std::invalid_argument("parse_cycnum: repeated w term");
            b += r;
            seen_w = true;
            pos += 2;
        } else {
            if (seen_a) throw std::invalid_argument("parse_cycnum: repeated rational term");
            a += r;
            seen_a = true;
        }
    }
    return {a, b};
}

}  // namespace twistrel
