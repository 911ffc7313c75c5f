#pragma once

// Coefficient tables for the localized second-derivative bound: the
// polynomial identity
//   w1(a)^2 (w1(u) D1w2(u) - w2(u) D1w1(u)) - w1(u)^2 (w1(a) D1w2(a) - w2(a) D1w1(a))
//     = sum_{(i,j)} ( upsilon^{i,j}_{0,0} + sum_{(k,l) != 0} upsilon^{i,j}_{k,l} a1^k a2^l ) h1^i h2^j
// with u = a + h, expanded once symbolically and frozen here.  The
// (i,j) set is {(0,1),(1,0),(1,1),(2,0),(2,1),(3,0),(4,0)}.

#include <array>

#include "tcap/interval.hpp"

namespace tcap {

struct UpsilonTables {
    // indexed [i][j][k][l]; valid entries flagged in `present`
    std::array<std::array<std::array<std::array<Interval, 2>, 7>, 2>, 5> value{};
    std::array<std::array<std::array<std::array<bool, 2>, 7>, 2>, 5> present{};

    const Interval& at(int i, int j, int k, int l) const { return value[i][j][k][l]; }
    bool has(int i, int j, int k, int l) const { return present[i][j][k][l]; }
};

inline UpsilonTables upsilon_tables(const Interval& l1, const Interval& l3, const Interval& l4,
                                    const Interval& n1, const Interval& n2) {
    UpsilonTables t;
    std::array<Interval, 7> p1;
    std::array<Interval, 2> p3;
    std::array<Interval, 2> p4;
    std::array<Interval, 2> q1;
    std::array<Interval, 4> q2;
    p1[0] = p3[0] = p4[0] = q1[0] = q2[0] = Interval(1.0);
    for (std::size_t k = 1; k < p1.size(); ++k) p1[k] = p1[k - 1] * l1;
    for (std::size_t k = 1; k < p3.size(); ++k) p3[k] = p3[k - 1] * l3;
    for (std::size_t k = 1; k < p4.size(); ++k) p4[k] = p4[k - 1] * l4;
    for (std::size_t k = 1; k < q1.size(); ++k) q1[k] = q1[k - 1] * n1;
    for (std::size_t k = 1; k < q2.size(); ++k) q2[k] = q2[k - 1] * n2;
    auto put = [&t](int i, int j, int k, int l, const Interval& v) {
        t.value[i][j][k][l] += v;
        t.present[i][j][k][l] = true;
    };
    put(0,1,0,0, Interval(1.0) * p1[6] * p3[0] * p4[0] * q1[1] * q2[3]);
    put(0,1,0,0, Interval(2.0) * p1[5] * p3[0] * p4[0] * q1[1] * q2[2]);
    put(0,1,0,0, Interval(1.0) * p1[4] * p3[0] * p4[0] * q1[1] * q2[2]);
    put(0,1,0,0, Interval(1.0) * p1[4] * p3[0] * p4[0] * q1[1] * q2[1]);
    put(0,1,0,0, Interval(-1.0) * p1[2] * p3[0] * p4[0] * q1[1] * q2[1]);
    put(0,1,0,0, Interval(-1.0) * p1[2] * p3[0] * p4[0] * q1[1] * q2[0]);
    put(0,1,0,0, Interval(-2.0) * p1[1] * p3[0] * p4[0] * q1[1] * q2[0]);
    put(0,1,0,0, Interval(-1.0) * p1[0] * p3[0] * p4[0] * q1[1] * q2[0]);
    put(0,1,1,0, Interval(6.0) * p1[5] * p3[0] * p4[0] * q1[1] * q2[3]);
    put(0,1,1,0, Interval(10.0) * p1[4] * p3[0] * p4[0] * q1[1] * q2[2]);
    put(0,1,1,0, Interval(4.0) * p1[3] * p3[0] * p4[0] * q1[1] * q2[2]);
    put(0,1,1,0, Interval(4.0) * p1[3] * p3[0] * p4[0] * q1[1] * q2[1]);
    put(0,1,1,0, Interval(-2.0) * p1[1] * p3[0] * p4[0] * q1[1] * q2[1]);
    put(0,1,1,0, Interval(-2.0) * p1[1] * p3[0] * p4[0] * q1[1] * q2[0]);
    put(0,1,1,0, Interval(-2.0) * p1[0] * p3[0] * p4[0] * q1[1] * q2[0]);
    put(0,1,2,0, Interval(15.0) * p1[4] * p3[0] * p4[0] * q1[1] * q2[3]);
    put(0,1,2,0, Interval(20.0) * p1[3] * p3[0] * p4[0] * q1[1] * q2[2]);
    put(0,1,2,0, Interval(6.0) * p1[2] * p3[0] * p4[0] * q1[1] * q2[2]);
    put(0,1,2,0, Interval(6.0) * p1[2] * p3[0] * p4[0] * q1[1] * q2[1]);
    put(0,1,2,0, Interval(-1.0) * p1[0] * p3[0] * p4[0] * q1[1] * q2[1]);
    put(0,1,2,0, Interval(-1.0) * p1[0] * p3[0] * p4[0] * q1[1] * q2[0]);
    put(0,1,3,0, Interval(20.0) * p1[3] * p3[0] * p4[0] * q1[1] * q2[3]);
    put(0,1,3,0, Interval(20.0) * p1[2] * p3[0] * p4[0] * q1[1] * q2[2]);
    put(0,1,3,0, Interval(4.0) * p1[1] * p3[0] * p4[0] * q1[1] * q2[2]);
    put(0,1,3,0, Interval(4.0) * p1[1] * p3[0] * p4[0] * q1[1] * q2[1]);
    put(0,1,4,0, Interval(15.0) * p1[2] * p3[0] * p4[0] * q1[1] * q2[3]);
    put(0,1,4,0, Interval(10.0) * p1[1] * p3[0] * p4[0] * q1[1] * q2[2]);
    put(0,1,4,0, Interval(1.0) * p1[0] * p3[0] * p4[0] * q1[1] * q2[2]);
    put(0,1,4,0, Interval(1.0) * p1[0] * p3[0] * p4[0] * q1[1] * q2[1]);
    put(0,1,5,0, Interval(6.0) * p1[1] * p3[0] * p4[0] * q1[1] * q2[3]);
    put(0,1,5,0, Interval(2.0) * p1[0] * p3[0] * p4[0] * q1[1] * q2[2]);
    put(0,1,6,0, Interval(1.0) * p1[0] * p3[0] * p4[0] * q1[1] * q2[3]);
    put(1,0,0,0, Interval(2.0) * p1[6] * p3[1] * p4[0] * q1[0] * q2[3]);
    put(1,0,0,0, Interval(6.0) * p1[5] * p3[1] * p4[0] * q1[0] * q2[2]);
    put(1,0,0,0, Interval(-4.0) * p1[5] * p3[0] * p4[1] * q1[0] * q2[3]);
    put(1,0,0,0, Interval(6.0) * p1[4] * p3[1] * p4[0] * q1[0] * q2[2]);
    put(1,0,0,0, Interval(6.0) * p1[4] * p3[1] * p4[0] * q1[0] * q2[1]);
    put(1,0,0,0, Interval(-10.0) * p1[4] * p3[0] * p4[1] * q1[0] * q2[2]);
    put(1,0,0,0, Interval(12.0) * p1[3] * p3[1] * p4[0] * q1[0] * q2[1]);
    put(1,0,0,0, Interval(2.0) * p1[3] * p3[1] * p4[0] * q1[0] * q2[0]);
    put(1,0,0,0, Interval(-8.0) * p1[3] * p3[0] * p4[1] * q1[0] * q2[2]);
    put(1,0,0,0, Interval(-8.0) * p1[3] * p3[0] * p4[1] * q1[0] * q2[1]);
    put(1,0,0,0, Interval(6.0) * p1[2] * p3[1] * p4[0] * q1[0] * q2[1]);
    put(1,0,0,0, Interval(6.0) * p1[2] * p3[1] * p4[0] * q1[0] * q2[0]);
    put(1,0,0,0, Interval(-12.0) * p1[2] * p3[0] * p4[1] * q1[0] * q2[1]);
    put(1,0,0,0, Interval(-2.0) * p1[2] * p3[0] * p4[1] * q1[0] * q2[0]);
    put(1,0,0,0, Interval(6.0) * p1[1] * p3[1] * p4[0] * q1[0] * q2[0]);
    put(1,0,0,0, Interval(-4.0) * p1[1] * p3[0] * p4[1] * q1[0] * q2[1]);
    put(1,0,0,0, Interval(-4.0) * p1[1] * p3[0] * p4[1] * q1[0] * q2[0]);
    put(1,0,0,0, Interval(2.0) * p1[0] * p3[1] * p4[0] * q1[0] * q2[0]);
    put(1,0,0,0, Interval(-2.0) * p1[0] * p3[0] * p4[1] * q1[0] * q2[0]);
    put(1,0,0,1, Interval(-2.0) * p1[5] * p3[0] * p4[0] * q1[1] * q2[3]);
    put(1,0,0,1, Interval(-2.0) * p1[4] * p3[0] * p4[0] * q1[1] * q2[2]);
    put(1,0,0,1, Interval(4.0) * p1[3] * p3[0] * p4[0] * q1[1] * q2[2]);
    put(1,0,0,1, Interval(8.0) * p1[2] * p3[0] * p4[0] * q1[1] * q2[1]);
    put(1,0,0,1, Interval(6.0) * p1[1] * p3[0] * p4[0] * q1[1] * q2[1]);
    put(1,0,0,1, Interval(2.0) * p1[1] * p3[0] * p4[0] * q1[1] * q2[0]);
    put(1,0,0,1, Interval(2.0) * p1[0] * p3[0] * p4[0] * q1[1] * q2[0]);
    put(1,0,1,0, Interval(4.0) * p1[5] * p3[1] * p4[0] * q1[0] * q2[3]);
    put(1,0,1,0, Interval(10.0) * p1[4] * p3[1] * p4[0] * q1[0] * q2[2]);
    put(1,0,1,0, Interval(-14.0) * p1[4] * p3[0] * p4[1] * q1[0] * q2[3]);
    put(1,0,1,0, Interval(8.0) * p1[3] * p3[1] * p4[0] * q1[0] * q2[2]);
    put(1,0,1,0, Interval(8.0) * p1[3] * p3[1] * p4[0] * q1[0] * q2[1]);
    put(1,0,1,0, Interval(-28.0) * p1[3] * p3[0] * p4[1] * q1[0] * q2[2]);
    put(1,0,1,0, Interval(12.0) * p1[2] * p3[1] * p4[0] * q1[0] * q2[1]);
    put(1,0,1,0, Interval(2.0) * p1[2] * p3[1] * p4[0] * q1[0] * q2[0]);
    put(1,0,1,0, Interval(-20.0) * p1[2] * p3[0] * p4[1] * q1[0] * q2[2]);
    put(1,0,1,0, Interval(-16.0) * p1[2] * p3[0] * p4[1] * q1[0] * q2[1]);
    put(1,0,1,0, Interval(4.0) * p1[1] * p3[1] * p4[0] * q1[0] * q2[1]);
    put(1,0,1,0, Interval(4.0) * p1[1] * p3[1] * p4[0] * q1[0] * q2[0]);
    put(1,0,1,0, Interval(-20.0) * p1[1] * p3[0] * p4[1] * q1[0] * q2[1]);
    put(1,0,1,0, Interval(-2.0) * p1[1] * p3[0] * p4[1] * q1[0] * q2[0]);
    put(1,0,1,0, Interval(2.0) * p1[0] * p3[1] * p4[0] * q1[0] * q2[0]);
    put(1,0,1,0, Interval(-6.0) * p1[0] * p3[0] * p4[1] * q1[0] * q2[1]);
    put(1,0,1,0, Interval(-2.0) * p1[0] * p3[0] * p4[1] * q1[0] * q2[0]);
    put(1,0,1,1, Interval(-10.0) * p1[4] * p3[0] * p4[0] * q1[1] * q2[3]);
    put(1,0,1,1, Interval(-8.0) * p1[3] * p3[0] * p4[0] * q1[1] * q2[2]);
    put(1,0,1,1, Interval(12.0) * p1[2] * p3[0] * p4[0] * q1[1] * q2[2]);
    put(1,0,1,1, Interval(16.0) * p1[1] * p3[0] * p4[0] * q1[1] * q2[1]);
    put(1,0,1,1, Interval(6.0) * p1[0] * p3[0] * p4[0] * q1[1] * q2[1]);
    put(1,0,1,1, Interval(2.0) * p1[0] * p3[0] * p4[0] * q1[1] * q2[0]);
    put(1,0,2,0, Interval(-4.0) * p1[4] * p3[1] * p4[0] * q1[0] * q2[3]);
    put(1,0,2,0, Interval(-8.0) * p1[3] * p3[1] * p4[0] * q1[0] * q2[2]);
    put(1,0,2,0, Interval(-16.0) * p1[3] * p3[0] * p4[1] * q1[0] * q2[3]);
    put(1,0,2,0, Interval(-8.0) * p1[2] * p3[1] * p4[0] * q1[0] * q2[2]);
    put(1,0,2,0, Interval(-4.0) * p1[2] * p3[1] * p4[0] * q1[0] * q2[1]);
    put(1,0,2,0, Interval(-24.0) * p1[2] * p3[0] * p4[1] * q1[0] * q2[2]);
    put(1,0,2,0, Interval(-8.0) * p1[1] * p3[1] * p4[0] * q1[0] * q2[1]);
    put(1,0,2,0, Interval(-16.0) * p1[1] * p3[0] * p4[1] * q1[0] * q2[2]);
    put(1,0,2,0, Interval(-8.0) * p1[1] * p3[0] * p4[1] * q1[0] * q2[1]);
    put(1,0,2,0, Interval(-4.0) * p1[0] * p3[1] * p4[0] * q1[0] * q2[1]);
    put(1,0,2,0, Interval(-8.0) * p1[0] * p3[0] * p4[1] * q1[0] * q2[1]);
    put(1,0,2,1, Interval(-20.0) * p1[3] * p3[0] * p4[0] * q1[1] * q2[3]);
    put(1,0,2,1, Interval(-12.0) * p1[2] * p3[0] * p4[0] * q1[1] * q2[2]);
    put(1,0,2,1, Interval(12.0) * p1[1] * p3[0] * p4[0] * q1[1] * q2[2]);
    put(1,0,2,1, Interval(8.0) * p1[0] * p3[0] * p4[0] * q1[1] * q2[1]);
    put(1,0,3,0, Interval(-16.0) * p1[3] * p3[1] * p4[0] * q1[0] * q2[3]);
    put(1,0,3,0, Interval(-24.0) * p1[2] * p3[1] * p4[0] * q1[0] * q2[2]);
    put(1,0,3,0, Interval(-4.0) * p1[2] * p3[0] * p4[1] * q1[0] * q2[3]);
    put(1,0,3,0, Interval(-16.0) * p1[1] * p3[1] * p4[0] * q1[0] * q2[2]);
    put(1,0,3,0, Interval(-8.0) * p1[1] * p3[1] * p4[0] * q1[0] * q2[1]);
    put(1,0,3,0, Interval(-4.0) * p1[1] * p3[0] * p4[1] * q1[0] * q2[2]);
    put(1,0,3,0, Interval(-8.0) * p1[0] * p3[1] * p4[0] * q1[0] * q2[1]);
    put(1,0,3,0, Interval(-4.0) * p1[0] * p3[0] * p4[1] * q1[0] * q2[2]);
    put(1,0,3,1, Interval(-20.0) * p1[2] * p3[0] * p4[0] * q1[1] * q2[3]);
    put(1,0,3,1, Interval(-8.0) * p1[1] * p3[0] * p4[0] * q1[1] * q2[2]);
    put(1,0,3,1, Interval(4.0) * p1[0] * p3[0] * p4[0] * q1[1] * q2[2]);
    put(1,0,4,0, Interval(-14.0) * p1[2] * p3[1] * p4[0] * q1[0] * q2[3]);
    put(1,0,4,0, Interval(-14.0) * p1[1] * p3[1] * p4[0] * q1[0] * q2[2]);
    put(1,0,4,0, Interval(4.0) * p1[1] * p3[0] * p4[1] * q1[0] * q2[3]);
    put(1,0,4,0, Interval(-6.0) * p1[0] * p3[1] * p4[0] * q1[0] * q2[2]);
    put(1,0,4,0, Interval(-2.0) * p1[0] * p3[1] * p4[0] * q1[0] * q2[1]);
    put(1,0,4,0, Interval(2.0) * p1[0] * p3[0] * p4[1] * q1[0] * q2[2]);
    put(1,0,4,1, Interval(-10.0) * p1[1] * p3[0] * p4[0] * q1[1] * q2[3]);
    put(1,0,4,1, Interval(-2.0) * p1[0] * p3[0] * p4[0] * q1[1] * q2[2]);
    put(1,0,5,0, Interval(-4.0) * p1[1] * p3[1] * p4[0] * q1[0] * q2[3]);
    put(1,0,5,0, Interval(-2.0) * p1[0] * p3[1] * p4[0] * q1[0] * q2[2]);
    put(1,0,5,0, Interval(2.0) * p1[0] * p3[0] * p4[1] * q1[0] * q2[3]);
    put(1,0,5,1, Interval(-2.0) * p1[0] * p3[0] * p4[0] * q1[1] * q2[3]);
    put(1,1,0,0, Interval(2.0) * p1[5] * p3[0] * p4[0] * q1[1] * q2[3]);
    put(1,1,0,0, Interval(4.0) * p1[4] * p3[0] * p4[0] * q1[1] * q2[2]);
    put(1,1,0,0, Interval(4.0) * p1[3] * p3[0] * p4[0] * q1[1] * q2[2]);
    put(1,1,0,0, Interval(2.0) * p1[3] * p3[0] * p4[0] * q1[1] * q2[1]);
    put(1,1,0,0, Interval(4.0) * p1[2] * p3[0] * p4[0] * q1[1] * q2[1]);
    put(1,1,0,0, Interval(2.0) * p1[1] * p3[0] * p4[0] * q1[1] * q2[1]);
    put(1,1,1,0, Interval(10.0) * p1[4] * p3[0] * p4[0] * q1[1] * q2[3]);
    put(1,1,1,0, Interval(16.0) * p1[3] * p3[0] * p4[0] * q1[1] * q2[2]);
    put(1,1,1,0, Interval(12.0) * p1[2] * p3[0] * p4[0] * q1[1] * q2[2]);
    put(1,1,1,0, Interval(6.0) * p1[2] * p3[0] * p4[0] * q1[1] * q2[1]);
    put(1,1,1,0, Interval(8.0) * p1[1] * p3[0] * p4[0] * q1[1] * q2[1]);
    put(1,1,1,0, Interval(2.0) * p1[0] * p3[0] * p4[0] * q1[1] * q2[1]);
    put(1,1,2,0, Interval(20.0) * p1[3] * p3[0] * p4[0] * q1[1] * q2[3]);
    put(1,1,2,0, Interval(24.0) * p1[2] * p3[0] * p4[0] * q1[1] * q2[2]);
    put(1,1,2,0, Interval(12.0) * p1[1] * p3[0] * p4[0] * q1[1] * q2[2]);
    put(1,1,2,0, Interval(6.0) * p1[1] * p3[0] * p4[0] * q1[1] * q2[1]);
    put(1,1,2,0, Interval(4.0) * p1[0] * p3[0] * p4[0] * q1[1] * q2[1]);
    put(1,1,3,0, Interval(20.0) * p1[2] * p3[0] * p4[0] * q1[1] * q2[3]);
    put(1,1,3,0, Interval(16.0) * p1[1] * p3[0] * p4[0] * q1[1] * q2[2]);
    put(1,1,3,0, Interval(4.0) * p1[0] * p3[0] * p4[0] * q1[1] * q2[2]);
    put(1,1,3,0, Interval(2.0) * p1[0] * p3[0] * p4[0] * q1[1] * q2[1]);
    put(1,1,4,0, Interval(10.0) * p1[1] * p3[0] * p4[0] * q1[1] * q2[3]);
    put(1,1,4,0, Interval(4.0) * p1[0] * p3[0] * p4[0] * q1[1] * q2[2]);
    put(1,1,5,0, Interval(2.0) * p1[0] * p3[0] * p4[0] * q1[1] * q2[3]);
    put(2,0,0,0, Interval(2.0) * p1[5] * p3[1] * p4[0] * q1[0] * q2[3]);
    put(2,0,0,0, Interval(5.0) * p1[4] * p3[1] * p4[0] * q1[0] * q2[2]);
    put(2,0,0,0, Interval(-7.0) * p1[4] * p3[0] * p4[1] * q1[0] * q2[3]);
    put(2,0,0,0, Interval(4.0) * p1[3] * p3[1] * p4[0] * q1[0] * q2[2]);
    put(2,0,0,0, Interval(4.0) * p1[3] * p3[1] * p4[0] * q1[0] * q2[1]);
    put(2,0,0,0, Interval(-14.0) * p1[3] * p3[0] * p4[1] * q1[0] * q2[2]);
    put(2,0,0,0, Interval(6.0) * p1[2] * p3[1] * p4[0] * q1[0] * q2[1]);
    put(2,0,0,0, Interval(1.0) * p1[2] * p3[1] * p4[0] * q1[0] * q2[0]);
    put(2,0,0,0, Interval(-10.0) * p1[2] * p3[0] * p4[1] * q1[0] * q2[2]);
    put(2,0,0,0, Interval(-8.0) * p1[2] * p3[0] * p4[1] * q1[0] * q2[1]);
    put(2,0,0,0, Interval(2.0) * p1[1] * p3[1] * p4[0] * q1[0] * q2[1]);
    put(2,0,0,0, Interval(2.0) * p1[1] * p3[1] * p4[0] * q1[0] * q2[0]);
    put(2,0,0,0, Interval(-10.0) * p1[1] * p3[0] * p4[1] * q1[0] * q2[1]);
    put(2,0,0,0, Interval(-1.0) * p1[1] * p3[0] * p4[1] * q1[0] * q2[0]);
    put(2,0,0,0, Interval(1.0) * p1[0] * p3[1] * p4[0] * q1[0] * q2[0]);
    put(2,0,0,0, Interval(-3.0) * p1[0] * p3[0] * p4[1] * q1[0] * q2[1]);
    put(2,0,0,0, Interval(-1.0) * p1[0] * p3[0] * p4[1] * q1[0] * q2[0]);
    put(2,0,0,1, Interval(-5.0) * p1[4] * p3[0] * p4[0] * q1[1] * q2[3]);
    put(2,0,0,1, Interval(-4.0) * p1[3] * p3[0] * p4[0] * q1[1] * q2[2]);
    put(2,0,0,1, Interval(6.0) * p1[2] * p3[0] * p4[0] * q1[1] * q2[2]);
    put(2,0,0,1, Interval(8.0) * p1[1] * p3[0] * p4[0] * q1[1] * q2[1]);
    put(2,0,0,1, Interval(3.0) * p1[0] * p3[0] * p4[0] * q1[1] * q2[1]);
    put(2,0,0,1, Interval(1.0) * p1[0] * p3[0] * p4[0] * q1[1] * q2[0]);
    put(2,0,1,0, Interval(-4.0) * p1[4] * p3[1] * p4[0] * q1[0] * q2[3]);
    put(2,0,1,0, Interval(-8.0) * p1[3] * p3[1] * p4[0] * q1[0] * q2[2]);
    put(2,0,1,0, Interval(-16.0) * p1[3] * p3[0] * p4[1] * q1[0] * q2[3]);
    put(2,0,1,0, Interval(-8.0) * p1[2] * p3[1] * p4[0] * q1[0] * q2[2]);
    put(2,0,1,0, Interval(-4.0) * p1[2] * p3[1] * p4[0] * q1[0] * q2[1]);
    put(2,0,1,0, Interval(-24.0) * p1[2] * p3[0] * p4[1] * q1[0] * q2[2]);
    put(2,0,1,0, Interval(-8.0) * p1[1] * p3[1] * p4[0] * q1[0] * q2[1]);
    put(2,0,1,0, Interval(-16.0) * p1[1] * p3[0] * p4[1] * q1[0] * q2[2]);
    put(2,0,1,0, Interval(-8.0) * p1[1] * p3[0] * p4[1] * q1[0] * q2[1]);
    put(2,0,1,0, Interval(-4.0) * p1[0] * p3[1] * p4[0] * q1[0] * q2[1]);
    put(2,0,1,0, Interval(-8.0) * p1[0] * p3[0] * p4[1] * q1[0] * q2[1]);
    put(2,0,1,1, Interval(-20.0) * p1[3] * p3[0] * p4[0] * q1[1] * q2[3]);
    put(2,0,1,1, Interval(-12.0) * p1[2] * p3[0] * p4[0] * q1[1] * q2[2]);
    put(2,0,1,1, Interval(12.0) * p1[1] * p3[0] * p4[0] * q1[1] * q2[2]);
    put(2,0,1,1, Interval(8.0) * p1[0] * p3[0] * p4[0] * q1[1] * q2[1]);
    put(2,0,2,0, Interval(-24.0) * p1[3] * p3[1] * p4[0] * q1[0] * q2[3]);
    put(2,0,2,0, Interval(-36.0) * p1[2] * p3[1] * p4[0] * q1[0] * q2[2]);
    put(2,0,2,0, Interval(-6.0) * p1[2] * p3[0] * p4[1] * q1[0] * q2[3]);
    put(2,0,2,0, Interval(-24.0) * p1[1] * p3[1] * p4[0] * q1[0] * q2[2]);
    put(2,0,2,0, Interval(-12.0) * p1[1] * p3[1] * p4[0] * q1[0] * q2[1]);
    put(2,0,2,0, Interval(-6.0) * p1[1] * p3[0] * p4[1] * q1[0] * q2[2]);
    put(2,0,2,0, Interval(-12.0) * p1[0] * p3[1] * p4[0] * q1[0] * q2[1]);
    put(2,0,2,0, Interval(-6.0) * p1[0] * p3[0] * p4[1] * q1[0] * q2[2]);
    put(2,0,2,1, Interval(-30.0) * p1[2] * p3[0] * p4[0] * q1[1] * q2[3]);
    put(2,0,2,1, Interval(-12.0) * p1[1] * p3[0] * p4[0] * q1[1] * q2[2]);
    put(2,0,2,1, Interval(6.0) * p1[0] * p3[0] * p4[0] * q1[1] * q2[2]);
    put(2,0,3,0, Interval(-28.0) * p1[2] * p3[1] * p4[0] * q1[0] * q2[3]);
    put(2,0,3,0, Interval(-28.0) * p1[1] * p3[1] * p4[0] * q1[0] * q2[2]);
    put(2,0,3,0, Interval(8.0) * p1[1] * p3[0] * p4[1] * q1[0] * q2[3]);
    put(2,0,3,0, Interval(-12.0) * p1[0] * p3[1] * p4[0] * q1[0] * q2[2]);
    put(2,0,3,0, Interval(-4.0) * p1[0] * p3[1] * p4[0] * q1[0] * q2[1]);
    put(2,0,3,0, Interval(4.0) * p1[0] * p3[0] * p4[1] * q1[0] * q2[2]);
    put(2,0,3,1, Interval(-20.0) * p1[1] * p3[0] * p4[0] * q1[1] * q2[3]);
    put(2,0,3,1, Interval(-4.0) * p1[0] * p3[0] * p4[0] * q1[1] * q2[2]);
    put(2,0,4,0, Interval(-10.0) * p1[1] * p3[1] * p4[0] * q1[0] * q2[3]);
    put(2,0,4,0, Interval(-5.0) * p1[0] * p3[1] * p4[0] * q1[0] * q2[2]);
    put(2,0,4,0, Interval(5.0) * p1[0] * p3[0] * p4[1] * q1[0] * q2[3]);
    put(2,0,4,1, Interval(-5.0) * p1[0] * p3[0] * p4[0] * q1[1] * q2[3]);
    put(2,1,0,0, Interval(1.0) * p1[4] * p3[0] * p4[0] * q1[1] * q2[3]);
    put(2,1,0,0, Interval(2.0) * p1[3] * p3[0] * p4[0] * q1[1] * q2[2]);
    put(2,1,0,0, Interval(2.0) * p1[2] * p3[0] * p4[0] * q1[1] * q2[2]);
    put(2,1,0,0, Interval(1.0) * p1[2] * p3[0] * p4[0] * q1[1] * q2[1]);
    put(2,1,0,0, Interval(2.0) * p1[1] * p3[0] * p4[0] * q1[1] * q2[1]);
    put(2,1,0,0, Interval(1.0) * p1[0] * p3[0] * p4[0] * q1[1] * q2[1]);
    put(2,1,1,0, Interval(4.0) * p1[3] * p3[0] * p4[0] * q1[1] * q2[3]);
    put(2,1,1,0, Interval(6.0) * p1[2] * p3[0] * p4[0] * q1[1] * q2[2]);
    put(2,1,1,0, Interval(4.0) * p1[1] * p3[0] * p4[0] * q1[1] * q2[2]);
    put(2,1,1,0, Interval(2.0) * p1[1] * p3[0] * p4[0] * q1[1] * q2[1]);
    put(2,1,1,0, Interval(2.0) * p1[0] * p3[0] * p4[0] * q1[1] * q2[1]);
    put(2,1,2,0, Interval(6.0) * p1[2] * p3[0] * p4[0] * q1[1] * q2[3]);
    put(2,1,2,0, Interval(6.0) * p1[1] * p3[0] * p4[0] * q1[1] * q2[2]);
    put(2,1,2,0, Interval(2.0) * p1[0] * p3[0] * p4[0] * q1[1] * q2[2]);
    put(2,1,2,0, Interval(1.0) * p1[0] * p3[0] * p4[0] * q1[1] * q2[1]);
    put(2,1,3,0, Interval(4.0) * p1[1] * p3[0] * p4[0] * q1[1] * q2[3]);
    put(2,1,3,0, Interval(2.0) * p1[0] * p3[0] * p4[0] * q1[1] * q2[2]);
    put(2,1,4,0, Interval(1.0) * p1[0] * p3[0] * p4[0] * q1[1] * q2[3]);
    put(3,0,0,0, Interval(-4.0) * p1[3] * p3[0] * p4[1] * q1[0] * q2[3]);
    put(3,0,0,0, Interval(-6.0) * p1[2] * p3[0] * p4[1] * q1[0] * q2[2]);
    put(3,0,0,0, Interval(-4.0) * p1[1] * p3[0] * p4[1] * q1[0] * q2[2]);
    put(3,0,0,0, Interval(-2.0) * p1[1] * p3[0] * p4[1] * q1[0] * q2[1]);
    put(3,0,0,0, Interval(-2.0) * p1[0] * p3[0] * p4[1] * q1[0] * q2[1]);
    put(3,0,0,1, Interval(-4.0) * p1[3] * p3[0] * p4[0] * q1[1] * q2[3]);
    put(3,0,0,1, Interval(-2.0) * p1[2] * p3[0] * p4[0] * q1[1] * q2[2]);
    put(3,0,0,1, Interval(4.0) * p1[1] * p3[0] * p4[0] * q1[1] * q2[2]);
    put(3,0,0,1, Interval(2.0) * p1[0] * p3[0] * p4[0] * q1[1] * q2[1]);
    put(3,0,1,0, Interval(-8.0) * p1[3] * p3[1] * p4[0] * q1[0] * q2[3]);
    put(3,0,1,0, Interval(-12.0) * p1[2] * p3[1] * p4[0] * q1[0] * q2[2]);
    put(3,0,1,0, Interval(-4.0) * p1[2] * p3[0] * p4[1] * q1[0] * q2[3]);
    put(3,0,1,0, Interval(-8.0) * p1[1] * p3[1] * p4[0] * q1[0] * q2[2]);
    put(3,0,1,0, Interval(-4.0) * p1[1] * p3[1] * p4[0] * q1[0] * q2[1]);
    put(3,0,1,0, Interval(-4.0) * p1[1] * p3[0] * p4[1] * q1[0] * q2[2]);
    put(3,0,1,0, Interval(-4.0) * p1[0] * p3[1] * p4[0] * q1[0] * q2[1]);
    put(3,0,1,0, Interval(-4.0) * p1[0] * p3[0] * p4[1] * q1[0] * q2[2]);
    put(3,0,1,1, Interval(-12.0) * p1[2] * p3[0] * p4[0] * q1[1] * q2[3]);
    put(3,0,1,1, Interval(-4.0) * p1[1] * p3[0] * p4[0] * q1[1] * q2[2]);
    put(3,0,1,1, Interval(4.0) * p1[0] * p3[0] * p4[0] * q1[1] * q2[2]);
    put(3,0,2,0, Interval(-16.0) * p1[2] * p3[1] * p4[0] * q1[0] * q2[3]);
    put(3,0,2,0, Interval(-16.0) * p1[1] * p3[1] * p4[0] * q1[0] * q2[2]);
    put(3,0,2,0, Interval(4.0) * p1[1] * p3[0] * p4[1] * q1[0] * q2[3]);
    put(3,0,2,0, Interval(-8.0) * p1[0] * p3[1] * p4[0] * q1[0] * q2[2]);
    put(3,0,2,0, Interval(-2.0) * p1[0] * p3[1] * p4[0] * q1[0] * q2[1]);
    put(3,0,2,0, Interval(2.0) * p1[0] * p3[0] * p4[1] * q1[0] * q2[2]);
    put(3,0,2,1, Interval(-12.0) * p1[1] * p3[0] * p4[0] * q1[1] * q2[3]);
    put(3,0,2,1, Interval(-2.0) * p1[0] * p3[0] * p4[0] * q1[1] * q2[2]);
    put(3,0,3,0, Interval(-8.0) * p1[1] * p3[1] * p4[0] * q1[0] * q2[3]);
    put(3,0,3,0, Interval(-4.0) * p1[0] * p3[1] * p4[0] * q1[0] * q2[2]);
    put(3,0,3,0, Interval(4.0) * p1[0] * p3[0] * p4[1] * q1[0] * q2[3]);
    put(3,0,3,1, Interval(-4.0) * p1[0] * p3[0] * p4[0] * q1[1] * q2[3]);
    put(4,0,0,0, Interval(-1.0) * p1[2] * p3[0] * p4[1] * q1[0] * q2[3]);
    put(4,0,0,0, Interval(-1.0) * p1[1] * p3[0] * p4[1] * q1[0] * q2[2]);
    put(4,0,0,0, Interval(-1.0) * p1[0] * p3[0] * p4[1] * q1[0] * q2[2]);
    put(4,0,0,1, Interval(-1.0) * p1[2] * p3[0] * p4[0] * q1[1] * q2[3]);
    put(4,0,0,1, Interval(1.0) * p1[0] * p3[0] * p4[0] * q1[1] * q2[2]);
    put(4,0,1,0, Interval(-2.0) * p1[2] * p3[1] * p4[0] * q1[0] * q2[3]);
    put(4,0,1,0, Interval(-2.0) * p1[1] * p3[1] * p4[0] * q1[0] * q2[2]);
    put(4,0,1,0, Interval(-2.0) * p1[0] * p3[1] * p4[0] * q1[0] * q2[2]);
    put(4,0,1,1, Interval(-2.0) * p1[1] * p3[0] * p4[0] * q1[1] * q2[3]);
    put(4,0,2,0, Interval(-2.0) * p1[1] * p3[1] * p4[0] * q1[0] * q2[3]);
    put(4,0,2,0, Interval(-1.0) * p1[0] * p3[1] * p4[0] * q1[0] * q2[2]);
    put(4,0,2,0, Interval(1.0) * p1[0] * p3[0] * p4[1] * q1[0] * q2[3]);
    put(4,0,2,1, Interval(-1.0) * p1[0] * p3[0] * p4[0] * q1[1] * q2[3]);
    return t;
}

} // namespace tcap
