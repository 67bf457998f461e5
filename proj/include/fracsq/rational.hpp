#pragma once

#include <boost/rational.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace fracsq {

using Rat = boost::rational<long long>;

std::string rat_to_string(const Rat& r);   // "0", "-1", "1/2"
Rat rat_from_string(const std::string& s);

struct Vec2 {
    Rat x{0}, y{0};

    friend bool operator==(const Vec2& a, const Vec2& b) { return a.x == b.x && a.y == b.y; }
    friend bool operator!=(const Vec2& a, const Vec2& b) { return !(a == b); }
    friend Vec2 operator+(const Vec2& a, const Vec2& b) { return {a.x + b.x, a.y + b.y}; }
    friend Vec2 operator-(const Vec2& a, const Vec2& b) { return {a.x - b.x, a.y - b.y}; }
    friend Vec2 operator*(const Rat& s, const Vec2& v) { return {s * v.x, s * v.y}; }
    friend bool operator<(const Vec2& a, const Vec2& b) {
        return a.x != b.x ? a.x < b.x : a.y < b.y;
    }
};

// Row-major 2x2 matrix [[a, b], [c, d]].
struct Mat2 {
    Rat a{0}, b{0}, c{0}, d{0};

    Rat det() const { return a * d - b * c; }
    Vec2 apply(const Vec2& v) const { return {a * v.x + b * v.y, c * v.x + d * v.y}; }
    Mat2 inverse() const {
        Rat dt = det();
        if (dt == Rat(0)) throw std::invalid_argument("matrix is singular");
        return {d / dt, -b / dt, -c / dt, a / dt};
    }
    friend Mat2 operator*(const Mat2& m, const Mat2& n) {
        return {m.a * n.a + m.b * n.c, m.a * n.b + m.b * n.d, m.c * n.a + m.d * n.c,
                m.c * n.b + m.d * n.d};
    }
    friend bool operator==(const Mat2& m, const Mat2& n) {
        return m.a == n.a && m.b == n.b && m.c == n.c && m.d == n.d;
    }
};

}  // namespace fracsq
