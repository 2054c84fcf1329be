#include "qent/qmat.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qent {

namespace {

constexpr int kMaxDim = 8;

// Rotation zeroing the off-diagonal of the Hermitian 2x2 [[app, h], [conj(h), aqq]].
// Returns (c, s, phase) for the plane unitary
//   U[p][p] = c, U[p][q] = s*phase, U[q][p] = -s*conj(phase), U[q][q] = c.
struct PlaneRotation {
    double c = 1.0, s = 0.0;
    Complex phase{1.0, 0.0};
};

PlaneRotation make_rotation(double app, double aqq, Complex h) {
    PlaneRotation rot;
    double r = std::abs(h);
    if (r == 0.0) return rot;
    rot.phase = h / r;
    double theta = (aqq - app) / (2.0 * r);
    double t;
    if (theta >= 0.0)
        t = 1.0 / (theta + std::sqrt(theta * theta + 1.0));
    else
        t = -1.0 / (-theta + std::sqrt(theta * theta + 1.0));
    rot.c = 1.0 / std::sqrt(t * t + 1.0);
    rot.s = t * rot.c;
    return rot;
}

double off_diagonal_norm(const ComplexMatrix& h) {
    double sum = 0.0;
    for (int i = 0; i < h.dim(); ++i)
        for (int j = 0; j < h.dim(); ++j)
            if (i != j) sum += std::norm(h(i, j));
    return std::sqrt(sum);
}

// Cyclic Jacobi on a Hermitian matrix; accumulates the unitary in v when
// given. Off-diagonal norm target 1e-13, at most 100 sweeps.
void jacobi_hermitian(ComplexMatrix& h, ComplexMatrix* v) {
    const int n = h.dim();
    if (v) *v = ComplexMatrix::identity(n);
    for (int sweep = 0; sweep < 100; ++sweep) {
        if (off_diagonal_norm(h) <= 1e-13) return;
        for (int p = 0; p < n; ++p) {
            for (int q = p + 1; q < n; ++q) {
                PlaneRotation rot = make_rotation(h(p, p).real(), h(q, q).real(), h(p, q));
                if (rot.s == 0.0 && std::abs(h(p, q)) == 0.0) continue;
                Complex upp{rot.c, 0.0};
                Complex upq = rot.s * rot.phase;
                Complex uqp = -rot.s * std::conj(rot.phase);
                Complex uqq{rot.c, 0.0};
                // h <- U^dagger h U
                for (int k = 0; k < n; ++k) {
                    Complex hp = h(k, p), hq = h(k, q);
                    h(k, p) = hp * upp + hq * uqp;
                    h(k, q) = hp * upq + hq * uqq;
                }
                for (int k = 0; k < n; ++k) {
                    Complex hp = h(p, k), hq = h(q, k);
                    h(p, k) = std::conj(upp) * hp + std::conj(uqp) * hq;
                    h(q, k) = std::conj(upq) * hp + std::conj(uqq) * hq;
                }
                h(p, q) = Complex{0.0, 0.0};
                h(q, p) = Complex{0.0, 0.0};
                if (v) {
                    for (int k = 0; k < n; ++k) {
                        Complex vp = (*v)(k, p), vq = (*v)(k, q);
                        (*v)(k, p) = vp * upp + vq * uqp;
                        (*v)(k, q) = vp * upq + vq * uqq;
                    }
                }
            }
        }
    }
    if (off_diagonal_norm(h) > 1e-13)
        throw std::runtime_error("jacobi_hermitian: no convergence after 100 sweeps");
}

}  // namespace

ComplexMatrix ComplexMatrix::identity(int dim) {
    ComplexMatrix m(dim);
    for (int i = 0; i < dim; ++i) m(i, i) = Complex{1.0, 0.0};
    return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix m(dim_);
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j) m(i, j) = std::conj((*this)(j, i));
    return m;
}

Complex ComplexMatrix::trace() const {
    Complex t{0.0, 0.0};
    for (int i = 0; i < dim_; ++i) t += (*this)(i, i);
    return t;
}

bool ComplexMatrix::is_hermitian(double tol) const {
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j)
            if (std::abs((*this)(i, j) - std::conj((*this)(j, i))) > tol) return false;
    return true;
}

ComplexMatrix ComplexMatrix::operator*(const ComplexMatrix& o) const {
    if (dim_ != o.dim_) throw std::invalid_argument("matrix product: dimension mismatch");
    ComplexMatrix m(dim_);
    for (int i = 0; i < dim_; ++i)
        for (int k = 0; k < dim_; ++k) {
            Complex x = (*this)(i, k);
            if (x == Complex{0.0, 0.0}) continue;
            for (int j = 0; j < dim_; ++j) m(i, j) += x * o(k, j);
        }
    return m;
}

ComplexMatrix ComplexMatrix::operator+(const ComplexMatrix& o) const {
    if (dim_ != o.dim_) throw std::invalid_argument("matrix sum: dimension mismatch");
    ComplexMatrix m(dim_);
    for (int i = 0; i < dim_ * dim_; ++i) m.a_[i] = a_[i] + o.a_[i];
    return m;
}

ComplexMatrix ComplexMatrix::operator-(const ComplexMatrix& o) const {
    if (dim_ != o.dim_) throw std::invalid_argument("matrix difference: dimension mismatch");
    ComplexMatrix m(dim_);
    for (int i = 0; i < dim_ * dim_; ++i) m.a_[i] = a_[i] - o.a_[i];
    return m;
}

ComplexMatrix ComplexMatrix::operator*(Complex s) const {
    ComplexMatrix m(dim_);
    for (int i = 0; i < dim_ * dim_; ++i) m.a_[i] = a_[i] * s;
    return m;
}

double ComplexMatrix::max_abs_diff(const ComplexMatrix& o) const {
    double d = 0.0;
    for (int i = 0; i < dim_ * dim_; ++i) d = std::max(d, std::abs(a_[i] - o.a_[i]));
    return d;
}

ComplexMatrix pauli_x() {
    ComplexMatrix m(2);
    m(0, 1) = m(1, 0) = Complex{1.0, 0.0};
    return m;
}

ComplexMatrix pauli_y() {
    ComplexMatrix m(2);
    m(0, 1) = Complex{0.0, -1.0};
    m(1, 0) = Complex{0.0, 1.0};
    return m;
}

ComplexMatrix pauli_z() {
    ComplexMatrix m(2);
    m(0, 0) = Complex{1.0, 0.0};
    m(1, 1) = Complex{-1.0, 0.0};
    return m;
}

ComplexMatrix identity2() { return ComplexMatrix::identity(2); }

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    int dim = a.dim() * b.dim();
    if (dim > kMaxDim) throw std::invalid_argument("kron: result dimension exceeds 8");
    ComplexMatrix m(dim);
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j)
            for (int k = 0; k < b.dim(); ++k)
                for (int l = 0; l < b.dim(); ++l)
                    m(i * b.dim() + k, j * b.dim() + l) = a(i, j) * b(k, l);
    return m;
}

ComplexMatrix partial_trace(const ComplexMatrix& rho, const std::vector<int>& drop) {
    int nq;
    if (rho.dim() == 8)
        nq = 3;
    else if (rho.dim() == 4)
        nq = 2;
    else
        throw std::invalid_argument("partial_trace: dimension must be 4 or 8");
    for (int q : drop)
        if (q < 1 || q > nq) throw std::invalid_argument("partial_trace: invalid qubit index");

    std::vector<int> keep;
    for (int q = 1; q <= nq; ++q)
        if (std::find(drop.begin(), drop.end(), q) == drop.end()) keep.push_back(q);

    int nk = static_cast<int>(keep.size());
    int nd = nq - nk;
    ComplexMatrix out(1 << nk);
    // Qubit 1 is the most significant bit of the index.
    auto bit = [nq](int idx, int q) { return (idx >> (nq - q)) & 1; };
    for (int r = 0; r < rho.dim(); ++r) {
        for (int c = 0; c < rho.dim(); ++c) {
            bool diag = true;
            for (int q : drop)
                if (bit(r, q) != bit(c, q)) { diag = false; break; }
            if (!diag) continue;
            int ro = 0, co = 0;
            for (int i = 0; i < nk; ++i) {
                ro = (ro << 1) | bit(r, keep[i]);
                co = (co << 1) | bit(c, keep[i]);
            }
            out(ro, co) += rho(r, c);
        }
    }
    (void)nd;
    return out;
}

ComplexMatrix partial_transpose(const ComplexMatrix& rho) {
    if (rho.dim() != 4) throw std::invalid_argument("partial_transpose: dimension must be 4");
    ComplexMatrix m(4);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k)
                for (int l = 0; l < 2; ++l)
                    m(2 * i + k, 2 * j + l) = rho(2 * i + l, 2 * j + k);
    return m;
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& h) {
    if (!h.is_hermitian(1e-10))
        throw std::invalid_argument("hermitian_eigenvalues: input not Hermitian");
    ComplexMatrix w = h;
    jacobi_hermitian(w, nullptr);
    std::vector<double> ev(w.dim());
    for (int i = 0; i < w.dim(); ++i) ev[i] = w(i, i).real();
    std::sort(ev.begin(), ev.end());
    return ev;
}

Eigensystem hermitian_eigensystem(const ComplexMatrix& h) {
    if (!h.is_hermitian(1e-10))
        throw std::invalid_argument("hermitian_eigensystem: input not Hermitian");
    ComplexMatrix w = h;
    ComplexMatrix v(h.dim());
    jacobi_hermitian(w, &v);
    int n = w.dim();
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return w(a, a).real() < w(b, b).real(); });
    Eigensystem es;
    es.values.resize(n);
    es.vectors = ComplexMatrix(n);
    for (int i = 0; i < n; ++i) {
        es.values[i] = w(order[i], order[i]).real();
        for (int k = 0; k < n; ++k) es.vectors(k, i) = v(k, order[i]);
    }
    return es;
}

std::vector<double> singular_values(const ComplexMatrix& m) {
    const int n = m.dim();
    ComplexMatrix a = m;
    auto col_dot = [&](int i, int j) {  // c_i^dagger c_j
        Complex s{0.0, 0.0};
        for (int k = 0; k < n; ++k) s += std::conj(a(k, i)) * a(k, j);
        return s;
    };
    for (int sweep = 0; sweep < 100; ++sweep) {
        bool converged = true;
        for (int p = 0; p < n; ++p) {
            for (int q = p + 1; q < n; ++q) {
                double app = col_dot(p, p).real();
                double aqq = col_dot(q, q).real();
                Complex g = col_dot(p, q);
                if (std::abs(g) <= 1e-30 + 1e-16 * std::sqrt(app * aqq)) continue;
                converged = false;
                PlaneRotation rot = make_rotation(app, aqq, g);
                Complex upp{rot.c, 0.0};
                Complex upq = rot.s * rot.phase;
                Complex uqp = -rot.s * std::conj(rot.phase);
                Complex uqq{rot.c, 0.0};
                for (int k = 0; k < n; ++k) {
                    Complex cp = a(k, p), cq = a(k, q);
                    a(k, p) = cp * upp + cq * uqp;
                    a(k, q) = cp * upq + cq * uqq;
                }
            }
        }
        if (converged) break;
    }
    std::vector<double> s(n);
    for (int j = 0; j < n; ++j) s[j] = std::sqrt(std::max(0.0, col_dot(j, j).real()));
    std::sort(s.rbegin(), s.rend());
    return s;
}

Mat3 Mat3::identity() {
    Mat3 m;
    m(0, 0) = m(1, 1) = m(2, 2) = 1.0;
    return m;
}

Mat3 Mat3::transpose() const {
    Mat3 m;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m(i, j) = (*this)(j, i);
    return m;
}

Mat3 Mat3::operator*(const Mat3& o) const {
    Mat3 m;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            double s = 0.0;
            for (int k = 0; k < 3; ++k) s += (*this)(i, k) * o(k, j);
            m(i, j) = s;
        }
    return m;
}

Mat3 Mat3::operator-(const Mat3& o) const {
    Mat3 m;
    for (int i = 0; i < 9; ++i) m.a[i] = a[i] - o.a[i];
    return m;
}

double Mat3::max_abs_diff(const Mat3& o) const {
    double d = 0.0;
    for (int i = 0; i < 9; ++i) d = std::max(d, std::abs(a[i] - o.a[i]));
    return d;
}

double dot(const Vec3& x, const Vec3& y) { return x[0] * y[0] + x[1] * y[1] + x[2] * y[2]; }

double norm(const Vec3& x) { return std::sqrt(dot(x, x)); }

Vec3 normalized(const Vec3& x) {
    double n = norm(x);
    if (n == 0.0) throw std::invalid_argument("normalized: zero vector");
    return {x[0] / n, x[1] / n, x[2] / n};
}

Vec3 mul(const Mat3& m, const Vec3& x) {
    Vec3 y{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) y[i] += m(i, j) * x[j];
    return y;
}

Vec3 mul_t(const Mat3& m, const Vec3& x) {
    Vec3 y{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) y[i] += m(j, i) * x[j];
    return y;
}

std::array<double, 3> charpoly3(const Mat3& m) {
    double tr = m(0, 0) + m(1, 1) + m(2, 2);
    // sum of principal 2x2 minors
    double m01 = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
    double m02 = m(0, 0) * m(2, 2) - m(0, 2) * m(2, 0);
    double m12 = m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1);
    double det = m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
                 m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
                 m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
    return {-tr, m01 + m02 + m12, -det};
}

std::array<double, 3> symmetric_eigenvalues3(const Mat3& m) {
    ComplexMatrix h(3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) h(i, j) = Complex{0.5 * (m(i, j) + m(j, i)), 0.0};
    std::vector<double> ev = hermitian_eigenvalues(h);
    return {ev[0], ev[1], ev[2]};
}

Svd3 svd3(const Mat3& r) {
    ComplexMatrix g(3);
    Mat3 gram = r.transpose() * r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) g(i, j) = Complex{0.5 * (gram(i, j) + gram(j, i)), 0.0};
    Eigensystem es = hermitian_eigensystem(g);

    Svd3 out;
    // descending order
    for (int j = 0; j < 3; ++j) {
        int src = 2 - j;
        out.s[j] = std::sqrt(std::max(0.0, es.values[src]));
        Vec3 v{es.vectors(0, src).real(), es.vectors(1, src).real(), es.vectors(2, src).real()};
        double vn = norm(v);
        for (double& x : v) x /= vn;
        // sign convention: first component of magnitude > 1e-12 positive
        for (int i = 0; i < 3; ++i) {
            if (std::abs(v[i]) > 1e-12) {
                if (v[i] < 0.0)
                    for (double& x : v) x = -x;
                break;
            }
        }
        for (int i = 0; i < 3; ++i) out.v(i, j) = v[i];
    }

    // left singular vectors: R v_j / s_j where defined, completed to an
    // orthogonal set otherwise
    std::array<Vec3, 3> u;
    std::array<bool, 3> have{};
    for (int j = 0; j < 3; ++j) {
        if (out.s[j] > 1e-12) {
            Vec3 vj{out.v(0, j), out.v(1, j), out.v(2, j)};
            Vec3 uj = mul(r, vj);
            for (double& x : uj) x /= out.s[j];
            // Gram-Schmidt against earlier columns to control drift
            for (int i = 0; i < j; ++i)
                if (have[i]) {
                    double p = dot(uj, u[i]);
                    for (int k = 0; k < 3; ++k) uj[k] -= p * u[i][k];
                }
            u[j] = normalized(uj);
            have[j] = true;
        }
    }
    for (int j = 0; j < 3; ++j) {
        if (have[j]) continue;
        for (int e = 0; e < 3; ++e) {
            Vec3 cand{};
            cand[e] = 1.0;
            for (int i = 0; i < 3; ++i)
                if (have[i]) {
                    double p = dot(cand, u[i]);
                    for (int k = 0; k < 3; ++k) cand[k] -= p * u[i][k];
                }
            if (norm(cand) > 1e-6) {
                u[j] = normalized(cand);
                have[j] = true;
                break;
            }
        }
    }
    for (int j = 0; j < 3; ++j)
        for (int i = 0; i < 3; ++i) out.u(i, j) = u[j][i];
    return out;
}

}  // namespace qent
