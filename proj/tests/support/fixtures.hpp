#pragma once

#include <array>
#include <vector>

#include "oracle.hpp"
#include "tripv/arrangement.hpp"
#include "tripv/matrix.hpp"

namespace fx {

inline tripv::TriangleArrangement arr(std::size_t n, const std::vector<std::array<long, 3>>& tris) {
    return tripv::TriangleArrangement(n, tris);
}

// x1x4x5 + x2x5x6 + x3x6x7
inline tripv::TriangleArrangement TA() { return arr(7, {{1, 4, 5}, {2, 5, 6}, {3, 6, 7}}); }
// x1x2x3 + x2x4x5 + x3x5x6
inline tripv::TriangleArrangement TB() { return arr(6, {{1, 2, 3}, {2, 4, 5}, {3, 5, 6}}); }
// x1x5x6 + x2x6x7 + x2x3x7 + x3x4x8
inline tripv::TriangleArrangement TC() { return arr(8, {{1, 5, 6}, {2, 6, 7}, {2, 3, 7}, {3, 4, 8}}); }
// x1x2x3 + x1x4x5
inline tripv::TriangleArrangement petal() { return arr(5, {{1, 2, 3}, {1, 4, 5}}); }
// petal relabelled so the shared vertex is 2
inline tripv::TriangleArrangement TD() { return arr(5, {{1, 2, 3}, {2, 4, 5}}); }
inline tripv::TriangleArrangement hexagon_fan() { return arr(6, {{1, 2, 3}, {1, 3, 4}, {1, 4, 5}, {1, 5, 6}}); }
inline tripv::TriangleArrangement hexagon_reduced() { return arr(6, {{1, 2, 3}, {1, 5, 6}}); }

inline std::vector<oracle::Tri> tris_of(const tripv::TriangleArrangement& a) {
    std::vector<oracle::Tri> out;
    for (const auto& t : a.triangles()) out.push_back({int(t[0]), int(t[1]), int(t[2])});
    return out;
}

inline oracle::Mat to_oracle(const tripv::RationalMatrix& m) {
    oracle::Mat out(m.rows(), std::vector<oracle::Q>(m.cols()));
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) out[r][c] = m(r, c);
    return out;
}

// canonicalized num/den; gmp arithmetic assumes canonical operands
inline tripv::Rational q(long num, long den) {
    tripv::Rational r(num, den);
    r.canonicalize();
    return r;
}

inline tripv::RationalVector vec(const std::vector<long>& v) {
    tripv::RationalVector x(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) x[i] = v[i];
    return x;
}

}  // namespace fx
