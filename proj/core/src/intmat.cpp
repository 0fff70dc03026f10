#include "lpcalc/intmat.hpp"

#include <stdexcept>

namespace lpcalc {

IMat IMat::operator*(const IMat& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("IMat: shape mismatch");
    IMat r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Int& a = at(i, k);
            if (a == 0) continue;
            for (int j = 0; j < o.cols_; ++j) r.at(i, j) += a * o.at(k, j);
        }
    return r;
}

std::vector<Int> IMat::apply(const std::vector<Int>& v) const {
    if (static_cast<int>(v.size()) != cols_) throw std::invalid_argument("IMat: vector size");
    std::vector<Int> r(rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (at(i, j) != 0) r[i] += at(i, j) * v[j];
    return r;
}

bool IMat::is_zero() const {
    for (const Int& x : data_)
        if (x != 0) return false;
    return true;
}

namespace {

void row_add(IMat& m, int dst, int src, const Int& q) {
    for (int j = 0; j < m.cols(); ++j) m.at(dst, j) += q * m.at(src, j);
}
void col_add(IMat& m, int dst, int src, const Int& q) {
    for (int i = 0; i < m.rows(); ++i) m.at(i, dst) += q * m.at(i, src);
}
void row_swap(IMat& m, int a, int b) {
    for (int j = 0; j < m.cols(); ++j) std::swap(m.at(a, j), m.at(b, j));
}
void col_swap(IMat& m, int a, int b) {
    for (int i = 0; i < m.rows(); ++i) std::swap(m.at(i, a), m.at(i, b));
}
void row_neg(IMat& m, int a) {
    for (int j = 0; j < m.cols(); ++j) m.at(a, j) = -m.at(a, j);
}

// nearest-integer quotient, |a - q*b| <= |b|/2. Keeps the Euclidean steps
// short and the intermediate entries small.
Int nearest_div(const Int& a, const Int& b) {
    Int q = a / b;
    Int r = a - q * b;
    if (2 * abs(r) > abs(b)) q += (r < 0) == (b < 0) ? 1 : -1;
    return q;
}

}  // namespace

SmithForm smith_normal_form(const IMat& m) {
    SmithForm f;
    f.d = m;
    f.u = IMat::identity(m.rows());
    f.v = IMat::identity(m.cols());
    IMat& d = f.d;
    IMat& u = f.u;
    IMat& v = f.v;

    int t = 0;
    const int nmin = std::min(m.rows(), m.cols());
    while (t < nmin) {
        // move a minimal-magnitude entry of the trailing block to (t, t).
        // Re-selecting after every reduction step is what keeps the
        // intermediate entries from exploding.
        auto repivot = [&]() -> bool {
            int pi = -1, pj = -1;
            Int best;
            for (int i = t; i < d.rows(); ++i)
                for (int j = t; j < d.cols(); ++j) {
                    if (d.at(i, j) == 0) continue;
                    Int a = abs(d.at(i, j));
                    if (pi < 0 || a < best) {
                        best = a;
                        pi = i;
                        pj = j;
                    }
                }
            if (pi < 0) return false;
            if (pi != t) {
                row_swap(d, pi, t);
                row_swap(u, pi, t);
            }
            if (pj != t) {
                col_swap(d, pj, t);
                col_swap(v, pj, t);
            }
            return true;
        };
        if (!repivot()) break;

        for (;;) {
            bool reduced = false;
            for (int i = t + 1; i < d.rows(); ++i) {
                if (d.at(i, t) == 0) continue;
                Int q = nearest_div(d.at(i, t), d.at(t, t));
                row_add(d, i, t, -q);
                row_add(u, i, t, -q);
                reduced = true;
            }
            for (int j = t + 1; j < d.cols(); ++j) {
                if (d.at(t, j) == 0) continue;
                Int q = nearest_div(d.at(t, j), d.at(t, t));
                col_add(d, j, t, -q);
                col_add(v, j, t, -q);
                reduced = true;
            }
            if (!reduced) break;
            // remainders (strictly smaller than the pivot) become the next
            // pivot; when everything cleared exactly, repivot is a no-op
            repivot();
        }

        if (d.at(t, t) < 0) {
            row_neg(d, t);
            row_neg(u, t);
        }

        // enforce divisibility of the trailing block by the pivot
        bool redo = false;
        for (int i = t + 1; i < d.rows() && !redo; ++i)
            for (int j = t + 1; j < d.cols() && !redo; ++j)
                if (d.at(i, j) % d.at(t, t) != 0) {
                    row_add(d, t, i, 1);
                    row_add(u, t, i, 1);
                    redo = true;
                }
        if (!redo) ++t;
    }

    f.rank = 0;
    for (int i = 0; i < nmin; ++i)
        if (d.at(i, i) != 0) {
            ++f.rank;
            if (d.at(i, i) > 1) f.torsion.push_back(d.at(i, i));
        }
    return f;
}

std::vector<std::vector<Int>> kernel_basis(const IMat& m) {
    SmithForm f = smith_normal_form(m);
    std::vector<std::vector<Int>> out;
    for (int j = f.rank; j < m.cols(); ++j) {
        std::vector<Int> col(m.cols());
        for (int i = 0; i < m.cols(); ++i) col[i] = f.v.at(i, j);
        out.push_back(std::move(col));
    }
    return out;
}

std::optional<std::vector<Int>> solve(const IMat& m, const std::vector<Int>& b) {
    SmithForm f = smith_normal_form(m);
    std::vector<Int> c = f.u.apply(b);
    std::vector<Int> y(m.cols());
    for (int i = 0; i < m.rows(); ++i) {
        Int di = i < std::min(m.rows(), m.cols()) ? f.d.at(i, i) : Int(0);
        if (di == 0) {
            if (c[i] != 0) return std::nullopt;
        } else {
            if (c[i] % di != 0) return std::nullopt;
            if (i < m.cols()) y[i] = c[i] / di;
        }
    }
    return f.v.apply(y);
}

}  // namespace lpcalc
