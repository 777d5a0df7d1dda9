#pragma once

#include "polysurf/rational.hpp"

#include <array>
#include <compare>
#include <vector>

namespace polysurf {

struct Vec3 {
    Rat x, y, z;

    Vec3() : x(0), y(0), z(0) {}
    Vec3(Rat px, Rat py, Rat pz) : x(std::move(px)), y(std::move(py)), z(std::move(pz)) {}

    Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    Vec3 operator-() const { return {-x, -y, -z}; }
    Vec3 operator*(const Rat& s) const { return {x * s, y * s, z * s}; }
    Vec3& operator+=(const Vec3& o) { x += o.x; y += o.y; z += o.z; return *this; }

    bool operator==(const Vec3& o) const { return x == o.x && y == o.y && z == o.z; }
    bool operator!=(const Vec3& o) const { return !(*this == o); }

    const Rat& operator[](int i) const { return i == 0 ? x : (i == 1 ? y : z); }
    Rat& operator[](int i) { return i == 0 ? x : (i == 1 ? y : z); }

    bool is_zero() const { return sign(x) == 0 && sign(y) == 0 && sign(z) == 0; }
};

using Point3 = Vec3;

inline Vec3 operator*(const Rat& s, const Vec3& v) { return v * s; }

inline Rat dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

inline Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

inline Rat norm2(const Vec3& a) { return dot(a, a); }

// Lexicographic order so points can key std::map / sorted containers.
inline bool lex_less(const Vec3& a, const Vec3& b) {
    int c = cmp(a.x, b.x);
    if (c != 0) return c < 0;
    c = cmp(a.y, b.y);
    if (c != 0) return c < 0;
    return cmp(a.z, b.z) < 0;
}

struct Vec3Less {
    bool operator()(const Vec3& a, const Vec3& b) const { return lex_less(a, b); }
};

struct Vec2 {
    Rat x, y;

    Vec2() : x(0), y(0) {}
    Vec2(Rat px, Rat py) : x(std::move(px)), y(std::move(py)) {}

    Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
    Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
    Vec2 operator*(const Rat& s) const { return {x * s, y * s}; }
    bool operator==(const Vec2& o) const { return x == o.x && y == o.y; }
    bool operator!=(const Vec2& o) const { return !(*this == o); }
};

inline Rat dot(const Vec2& a, const Vec2& b) { return a.x * b.x + a.y * b.y; }
inline Rat cross2(const Vec2& a, const Vec2& b) { return a.x * b.y - a.y * b.x; }

// Row-major homogeneous 4x4 transform over the rationals.
struct Mat4 {
    std::array<std::array<Rat, 4>, 4> m;

    Mat4() {
        for (auto& row : m)
            for (auto& v : row) v = 0;
    }

    static Mat4 identity() {
        Mat4 t;
        for (int i = 0; i < 4; ++i) t.m[i][i] = 1;
        return t;
    }

    static Mat4 scaling(const Rat& s) {
        Mat4 t = identity();
        t.m[0][0] = t.m[1][1] = t.m[2][2] = s;
        return t;
    }

    static Mat4 translation(const Vec3& d) {
        Mat4 t = identity();
        t.m[0][3] = d.x;
        t.m[1][3] = d.y;
        t.m[2][3] = d.z;
        return t;
    }

    Mat4 operator*(const Mat4& o) const {
        Mat4 r;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) {
                Rat s = 0;
                for (int k = 0; k < 4; ++k) s += m[i][k] * o.m[k][j];
                r.m[i][j] = s;
            }
        return r;
    }

    std::array<Rat, 4> apply_homogeneous(const Vec3& p) const {
        std::array<Rat, 4> out;
        for (int i = 0; i < 4; ++i)
            out[i] = m[i][0] * p.x + m[i][1] * p.y + m[i][2] * p.z + m[i][3];
        return out;
    }

    Rat det() const;
};

}  // namespace polysurf
