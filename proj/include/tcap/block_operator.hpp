#pragma once

// 2x2 block of (N+1)x(N+1) interval matrices acting on truncated SeqPairs,
// with the weighted-column-sum operator norm on l1_{e,tau}.

#include "tcap/imatrix.hpp"
#include "tcap/sequence.hpp"

namespace tcap {

struct DimensionMismatch : IntervalError {
    DimensionMismatch() : IntervalError("block operator dimension mismatch") {}
};

struct BlockOperator {
    IMatrix b11, b12, b21, b22;
    std::size_t N = 0; // truncation; blocks are (N+1)x(N+1)

    BlockOperator() = default;
    explicit BlockOperator(std::size_t N_)
        : b11(N_ + 1, N_ + 1), b12(N_ + 1, N_ + 1), b21(N_ + 1, N_ + 1), b22(N_ + 1, N_ + 1), N(N_) {}

    static BlockOperator identity(std::size_t N_) {
        BlockOperator b(N_);
        b.b11 = IMatrix::identity(N_ + 1);
        b.b22 = IMatrix::identity(N_ + 1);
        return b;
    }
};

inline SeqPair apply_block(const BlockOperator& b, const SeqPair& u) {
    if (u.support() > b.N) throw DimensionMismatch();
    const std::size_t n = b.N + 1;
    std::vector<Interval> x1(n, Interval(0.0)), x2(n, Interval(0.0));
    for (std::size_t i = 0; i < n; ++i) {
        x1[i] = u.u1.at(i);
        x2[i] = u.u2.at(i);
    }
    const std::vector<Interval> y1a = b.b11 * x1, y1b = b.b12 * x2;
    const std::vector<Interval> y2a = b.b21 * x1, y2b = b.b22 * x2;
    CosineSeq r1(u.u1.d, u.u1.tau, b.N), r2(u.u1.d, u.u1.tau, b.N);
    for (std::size_t i = 0; i < n; ++i) {
        r1.c[i] = y1a[i] + y1b[i];
        r2.c[i] = y2a[i] + y2b[i];
    }
    return SeqPair(r1, r2);
}

// Operator norm on l1_{e,tau}: the maximum over (block column, column j) of
//   sum_i alpha_i (|top_ij| + |bot_ij|) tau^i / (alpha_j tau^j).
inline Interval op_norm_l1tau(const BlockOperator& b, const Interval& tau) {
    const std::size_t n = b.N + 1;
    std::vector<Interval> taup(n, Interval(1.0));
    for (std::size_t i = 1; i < n; ++i) taup[i] = taup[i - 1] * tau;
    Interval best(0.0);
    for (int blockcol = 0; blockcol < 2; ++blockcol) {
        const IMatrix& top = blockcol == 0 ? b.b11 : b.b12;
        const IMatrix& bot = blockcol == 0 ? b.b21 : b.b22;
        for (std::size_t j = 0; j < n; ++j) {
            Interval s(0.0);
            for (std::size_t i = 0; i < n; ++i)
                s += Interval(alpha_n(i)) * (iv_abs(top(i, j)) + iv_abs(bot(i, j))) * taup[i];
            s = s / (Interval(alpha_n(j)) * taup[j]);
            best = iv_max(best, s);
        }
    }
    return best;
}

} // namespace tcap
