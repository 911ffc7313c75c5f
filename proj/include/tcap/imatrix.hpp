#pragma once

// Dense interval matrices and the certified norm bounds used by the
// certifiers.  Norm computations run on endpoint/magnitude doubles with
// directed rounding rather than full interval ops.

#include <cstddef>
#include <functional>
#include <vector>

#include "tcap/interval.hpp"

namespace tcap {

class IMatrix {
public:
    IMatrix() : rows_(0), cols_(0) {}
    IMatrix(std::size_t rows, std::size_t cols, Interval fill = Interval(0.0))
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {
        if (rows == 0 || cols == 0) throw IntervalError("IMatrix dimensions must be positive");
    }

    static IMatrix identity(std::size_t n) {
        IMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = Interval(1.0);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Interval& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Interval& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    const std::vector<Interval>& data() const { return data_; }
    std::vector<Interval>& data() { return data_; }

private:
    std::size_t rows_, cols_;
    std::vector<Interval> data_;
};

inline IMatrix operator+(const IMatrix& a, const IMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw IntervalError("IMatrix add: dimension mismatch");
    IMatrix c(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows() * a.cols(); ++i) c.data()[i] = a.data()[i] + b.data()[i];
    return c;
}

inline IMatrix operator-(const IMatrix& a, const IMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw IntervalError("IMatrix sub: dimension mismatch");
    IMatrix c(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows() * a.cols(); ++i) c.data()[i] = a.data()[i] - b.data()[i];
    return c;
}

inline IMatrix operator*(const IMatrix& a, const IMatrix& b) {
    if (a.cols() != b.rows()) throw IntervalError("IMatrix mul: dimension mismatch");
    const std::size_t n = a.rows(), m = b.cols(), p = a.cols();
    IMatrix c(n, m);
    std::vector<double> clo(m), chi(m);
    for (std::size_t i = 0; i < n; ++i) {
        std::fill(clo.begin(), clo.end(), 0.0);
        std::fill(chi.begin(), chi.end(), 0.0);
        for (std::size_t k = 0; k < p; ++k) {
            const Interval& a_ik = a(i, k);
            const double al = a_ik.lo(), ah = a_ik.hi();
            if (al == 0.0 && ah == 0.0) continue;
            const Interval* brow = &b(k, 0);
            if (al == ah) {
                if (al >= 0.0) {
                    for (std::size_t j = 0; j < m; ++j) {
                        clo[j] = rnd::add_down(clo[j], rnd::mul_down(al, brow[j].lo()));
                        chi[j] = rnd::add_up(chi[j], rnd::mul_up(al, brow[j].hi()));
                    }
                } else {
                    for (std::size_t j = 0; j < m; ++j) {
                        clo[j] = rnd::add_down(clo[j], rnd::mul_down(al, brow[j].hi()));
                        chi[j] = rnd::add_up(chi[j], rnd::mul_up(al, brow[j].lo()));
                    }
                }
            } else {
                for (std::size_t j = 0; j < m; ++j) {
                    const Interval t = a_ik * brow[j];
                    clo[j] = rnd::add_down(clo[j], t.lo());
                    chi[j] = rnd::add_up(chi[j], t.hi());
                }
            }
        }
        for (std::size_t j = 0; j < m; ++j) c(i, j) = Interval(clo[j], chi[j]);
    }
    return c;
}

inline std::vector<Interval> operator*(const IMatrix& a, const std::vector<Interval>& x) {
    if (a.cols() != x.size()) throw IntervalError("IMatrix matvec: dimension mismatch");
    std::vector<Interval> y(a.rows(), Interval(0.0));
    for (std::size_t i = 0; i < a.rows(); ++i) {
        double lo = 0.0, hi = 0.0;
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Interval t = a(i, k) * x[k];
            lo = rnd::add_down(lo, t.lo());
            hi = rnd::add_up(hi, t.hi());
        }
        y[i] = Interval(lo, hi);
    }
    return y;
}

inline IMatrix transpose(const IMatrix& a) {
    IMatrix t(a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
    return t;
}

enum class MatrixNorm { one, inf, two_upper };

namespace detail {

inline std::vector<double> mag_data(const IMatrix& m) {
    std::vector<double> u(m.rows() * m.cols());
    for (std::size_t i = 0; i < u.size(); ++i) u[i] = m.data()[i].mag();
    return u;
}

inline Interval colsum_norm(const IMatrix& m, bool by_rows) {
    const std::size_t nr = m.rows(), nc = m.cols();
    double best_up = 0.0, best_down = 0.0;
    const std::size_t outer = by_rows ? nr : nc, inner = by_rows ? nc : nr;
    for (std::size_t a = 0; a < outer; ++a) {
        double su = 0.0, sd = 0.0;
        for (std::size_t b = 0; b < inner; ++b) {
            const Interval& e = by_rows ? m(a, b) : m(b, a);
            su = rnd::add_up(su, e.mag());
            sd = rnd::add_down(sd, e.mig());
        }
        best_up = std::max(best_up, su);
        best_down = std::max(best_down, sd);
    }
    return Interval(std::min(best_down, best_up), best_up);
}

} // namespace detail

// Certified matrix norm bounds.  `one` and `inf` return enclosures of the
// exact induced norms over all point matrices in the interval matrix.
// `two_upper` returns a certified upper bound on the spectral norm through
// the signed Gram row-sum estimate  |M|_2^2 = rho(M^T M) <= || |M^T M| ||_inf,
// computed in interval arithmetic.  For very large matrices it falls back to
// the cheaper (wider) magnitude Gram  || |M^T| |M| ||_inf.
inline Interval norm_bounds(const IMatrix& m, MatrixNorm kind) {
    if (m.rows() == 0) throw IntervalError("norm_bounds: empty matrix");
    switch (kind) {
        case MatrixNorm::one: return detail::colsum_norm(m, false);
        case MatrixNorm::inf: return detail::colsum_norm(m, true);
        case MatrixNorm::two_upper: break;
    }
    const std::size_t nr = m.rows(), nc = m.cols();
    double lower = 0.0;
    for (const Interval& e : m.data()) lower = std::max(lower, e.mig());

    const double cost = 0.5 * double(nc) * double(nc) * double(nr);
    if (cost <= 4e9) {
        // |G|_inf with G = M^T M; exploit symmetry of G
        std::vector<double> rowmag(nc, 0.0);
        std::vector<double> glo(nc), ghi(nc);
        for (std::size_t i = 0; i < nc; ++i) {
            std::fill(glo.begin() + (long)i, glo.end(), 0.0);
            std::fill(ghi.begin() + (long)i, ghi.end(), 0.0);
            for (std::size_t k = 0; k < nr; ++k) {
                const Interval& a = m(k, i);
                const double al = a.lo(), ah = a.hi();
                if (al == 0.0 && ah == 0.0) continue;
                const Interval* row = &m(k, 0);
                if (al == ah) {
                    if (al >= 0.0) {
                        for (std::size_t j = i; j < nc; ++j) {
                            glo[j] = rnd::add_down(glo[j], rnd::mul_down(al, row[j].lo()));
                            ghi[j] = rnd::add_up(ghi[j], rnd::mul_up(al, row[j].hi()));
                        }
                    } else {
                        for (std::size_t j = i; j < nc; ++j) {
                            glo[j] = rnd::add_down(glo[j], rnd::mul_down(al, row[j].hi()));
                            ghi[j] = rnd::add_up(ghi[j], rnd::mul_up(al, row[j].lo()));
                        }
                    }
                } else {
                    for (std::size_t j = i; j < nc; ++j) {
                        const Interval t = a * row[j];
                        glo[j] = rnd::add_down(glo[j], t.lo());
                        ghi[j] = rnd::add_up(ghi[j], t.hi());
                    }
                }
            }
            for (std::size_t j = i; j < nc; ++j) {
                const double mag = std::max(std::fabs(glo[j]), std::fabs(ghi[j]));
                rowmag[i] = rnd::add_up(rowmag[i], mag);
                if (j > i) rowmag[j] = rnd::add_up(rowmag[j], mag);
            }
        }
        double best = 0.0;
        for (std::size_t i = 0; i < nc; ++i) best = std::max(best, rowmag[i]);
        return Interval(lower, rnd::sqrt_up(best));
    }
    if (nc <= 4096) {
        const std::vector<double> u = detail::mag_data(m);
        double best = 0.0;
        std::vector<double> gram_row(nc);
        for (std::size_t i = 0; i < nc; ++i) {
            std::fill(gram_row.begin(), gram_row.end(), 0.0);
            for (std::size_t k = 0; k < nr; ++k) {
                const double uki = u[k * nc + i];
                if (uki == 0.0) continue;
                const double* urow = &u[k * nc];
                for (std::size_t j = 0; j < nc; ++j)
                    gram_row[j] = rnd::add_up(gram_row[j], rnd::mul_up(uki, urow[j]));
            }
            double rs = 0.0;
            for (std::size_t j = 0; j < nc; ++j) rs = rnd::add_up(rs, gram_row[j]);
            best = std::max(best, rs);
        }
        return Interval(lower, rnd::sqrt_up(best));
    }
    const double n1 = detail::colsum_norm(m, false).hi();
    const double ninf = detail::colsum_norm(m, true).hi();
    return Interval(lower, rnd::sqrt_up(rnd::mul_up(n1, ninf)));
}

// Exact spectral norm enclosure for a 2x2 interval matrix:
// sigma_max^2 = (|M|_F^2 + sqrt(|M|_F^4 - 4 det(M)^2)) / 2.
inline Interval spectral_norm_2x2(const Interval& a, const Interval& b, const Interval& c, const Interval& d) {
    const Interval f2 = iv_sqr(a) + iv_sqr(b) + iv_sqr(c) + iv_sqr(d);
    const Interval det = a * d - b * c;
    Interval disc = iv_sqr(f2) - Interval(4.0) * iv_sqr(det);
    if (disc.lo() < 0) disc = Interval(0.0, std::max(0.0, disc.hi()));
    const Interval s2 = (f2 + iv_sqrt(disc)) * Interval(0.5);
    return iv_sqrt(s2);
}

} // namespace tcap
