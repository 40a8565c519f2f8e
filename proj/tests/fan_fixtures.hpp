#pragma once

#include "toriczeta/gfan.hpp"

// Built-in fans used across the test binaries. Kept independent of the JSON
// files in data/ so loader bugs cannot mask math bugs.

inline tz::GFan make_p1(long long q = 2) {
    tz::GFan f;
    f.rank = 1;
    f.rays = {{1}, {-1}};
    f.max_cones = {{0}, {1}};
    f.frobenius = tz::IntMatrix::identity(1);
    f.e = 1;
    f.q = q;
    f.finalize();
    return f;
}

inline tz::GFan make_p2(long long q = 2) {
    tz::GFan f;
    f.rank = 2;
    f.rays = {{1, 0}, {0, 1}, {-1, -1}};
    f.max_cones = {{0, 1}, {1, 2}, {0, 2}};
    f.frobenius = tz::IntMatrix::identity(2);
    f.e = 1;
    f.q = q;
    f.finalize();
    return f;
}

inline tz::GFan make_p1xp1(long long q = 2) {
    tz::GFan f;
    f.rank = 2;
    f.rays = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    f.max_cones = {{0, 1}, {1, 2}, {2, 3}, {0, 3}};
    f.frobenius = tz::IntMatrix::identity(2);
    f.e = 1;
    f.q = q;
    f.finalize();
    return f;
}

inline tz::GFan make_blp2(long long q = 2) {
    tz::GFan f;
    f.rank = 2;
    f.rays = {{1, 0}, {0, 1}, {-1, -1}, {1, 1}};
    f.max_cones = {{0, 3}, {1, 3}, {1, 2}, {0, 2}};
    f.frobenius = tz::IntMatrix::identity(2);
    f.e = 1;
    f.q = q;
    f.finalize();
    return f;
}

// P1 x P1 with the coordinate swap: Res_{F_{q^2}(t)/F_q(t)} G_m.
inline tz::GFan make_swap(long long q = 2) {
    tz::GFan f;
    f.rank = 2;
    f.rays = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    f.max_cones = {{0, 1}, {1, 2}, {2, 3}, {0, 3}};
    f.frobenius = tz::IntMatrix::from_rows({{0, 1}, {1, 0}});
    f.e = 2;
    f.q = q;
    f.finalize();
    return f;
}

// P1 x P1 with the antipodal action g = -identity.
inline tz::GFan make_antipodal(long long q = 2) {
    tz::GFan f;
    f.rank = 2;
    f.rays = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    f.max_cones = {{0, 1}, {1, 2}, {2, 3}, {0, 3}};
    f.frobenius = tz::IntMatrix::from_rows({{-1, 0}, {0, -1}});
    f.e = 2;
    f.q = q;
    f.finalize();
    return f;
}

inline std::vector<tz::GFan> all_split_fans(long long q = 2) {
    return {make_p1(q), make_p2(q), make_p1xp1(q), make_blp2(q)};
}

inline std::vector<tz::GFan> all_builtin_fans(long long q = 2) {
    auto v = all_split_fans(q);
    v.push_back(make_swap(q));
    return v;
}
