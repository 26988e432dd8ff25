#pragma once

#include <array>
#include <cstdint>
#include <numeric>

namespace adlv {

/// Ambient coordinates never exceed three entries; unused entries stay zero.
using Vec = std::array<std::int64_t, 3>;
using Mat = std::array<Vec, 3>;

inline constexpr Vec zero_vec() { return Vec{0, 0, 0}; }

inline constexpr Mat identity_mat()
{
    return Mat{Vec{1, 0, 0}, Vec{0, 1, 0}, Vec{0, 0, 1}};
}

inline constexpr std::int64_t dot(const Vec& a, const Vec& b)
{
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

inline constexpr Vec add(const Vec& a, const Vec& b)
{
    return Vec{a[0] + b[0], a[1] + b[1], a[2] + b[2]};
}

inline constexpr Vec sub(const Vec& a, const Vec& b)
{
    return Vec{a[0] - b[0], a[1] - b[1], a[2] - b[2]};
}

inline constexpr Vec scaled(const Vec& a, std::int64_t k)
{
    return Vec{a[0] * k, a[1] * k, a[2] * k};
}

inline constexpr Vec neg(const Vec& a) { return Vec{-a[0], -a[1], -a[2]}; }

inline constexpr bool is_zero(const Vec& a) { return a[0] == 0 && a[1] == 0 && a[2] == 0; }

inline constexpr Vec mat_vec(const Mat& m, const Vec& v)
{
    return Vec{dot(m[0], v), dot(m[1], v), dot(m[2], v)};
}

inline constexpr Mat mul(const Mat& a, const Mat& b)
{
    Mat r{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            r[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j] + a[i][2] * b[2][j];
    return r;
}

inline constexpr Mat transpose(const Mat& a)
{
    Mat r{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) r[i][j] = a[j][i];
    return r;
}

/// Floor division for a positive divisor.
inline constexpr std::int64_t floor_div(std::int64_t a, std::int64_t b)
{
    std::int64_t q = a / b;
    if ((a % b != 0) && (a < 0)) --q;
    return q;
}

inline constexpr int sign(std::int64_t v) { return (v > 0) - (v < 0); }

inline std::int64_t vec_gcd(const Vec& v)
{
    return std::gcd(std::gcd(v[0] < 0 ? -v[0] : v[0], v[1] < 0 ? -v[1] : v[1]),
                    v[2] < 0 ? -v[2] : v[2]);
}

}  // namespace adlv
