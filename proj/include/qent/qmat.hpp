#pragma once

#include <array>
#include <complex>
#include <vector>

// Dense complex-matrix kernel for dimensions up to 8: tensor products,
// partial trace/transpose, Jacobi eigensolvers and a 3x3 real SVD.

namespace qent {

using Complex = std::complex<double>;

class ComplexMatrix {
public:
    ComplexMatrix() : dim_(0) {}
    explicit ComplexMatrix(int dim) : dim_(dim), a_(dim * dim, Complex{0.0, 0.0}) {}

    static ComplexMatrix identity(int dim);

    int dim() const { return dim_; }
    Complex& operator()(int r, int c) { return a_[r * dim_ + c]; }
    const Complex& operator()(int r, int c) const { return a_[r * dim_ + c]; }

    ComplexMatrix adjoint() const;
    Complex trace() const;
    bool is_hermitian(double tol = 1e-12) const;

    ComplexMatrix operator*(const ComplexMatrix& o) const;
    ComplexMatrix operator+(const ComplexMatrix& o) const;
    ComplexMatrix operator-(const ComplexMatrix& o) const;
    ComplexMatrix operator*(Complex s) const;

    double max_abs_diff(const ComplexMatrix& o) const;

private:
    int dim_;
    std::vector<Complex> a_;
};

// Pauli matrices and the 2x2 identity.
ComplexMatrix pauli_x();
ComplexMatrix pauli_y();
ComplexMatrix pauli_z();
ComplexMatrix identity2();

// Tensor product with a-index major block ordering. Result dimension must
// not exceed 8.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

// Partial trace over the qubits listed in `drop` (1-based, qubit 1 is the
// most significant bit). Input dimension 4 or 8.
ComplexMatrix partial_trace(const ComplexMatrix& rho, const std::vector<int>& drop);

// Transpose of the second qubit of a 4x4 matrix.
ComplexMatrix partial_transpose(const ComplexMatrix& rho);

// Eigenvalues of a Hermitian matrix, ascending, by cyclic Jacobi.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& h);

struct Eigensystem {
    std::vector<double> values;   // ascending
    ComplexMatrix vectors;        // columns are orthonormal eigenvectors
};

Eigensystem hermitian_eigensystem(const ComplexMatrix& h);

// Singular values of a general complex matrix, descending, via one-sided
// Jacobi. Small values come out with absolute accuracy ~eps*norm, without
// the squaring loss of an eigenvalue route.
std::vector<double> singular_values(const ComplexMatrix& m);

struct Mat3 {
    std::array<double, 9> a{};

    double& operator()(int r, int c) { return a[r * 3 + c]; }
    const double& operator()(int r, int c) const { return a[r * 3 + c]; }

    static Mat3 identity();
    Mat3 transpose() const;
    Mat3 operator*(const Mat3& o) const;
    Mat3 operator-(const Mat3& o) const;
    double max_abs_diff(const Mat3& o) const;
};

using Vec3 = std::array<double, 3>;

double dot(const Vec3& x, const Vec3& y);
double norm(const Vec3& x);
Vec3 normalized(const Vec3& x);
Vec3 mul(const Mat3& m, const Vec3& x);
Vec3 mul_t(const Mat3& m, const Vec3& x);  // m^T x

// Coefficients (a1, a2, a3) of det(lambda I - m) = l^3 + a1 l^2 + a2 l + a3
// for a symmetric 3x3 matrix.
std::array<double, 3> charpoly3(const Mat3& m);

// Eigenvalues of a symmetric 3x3 matrix, ascending.
std::array<double, 3> symmetric_eigenvalues3(const Mat3& m);

struct Svd3 {
    Mat3 u;
    Vec3 s;  // non-negative, descending
    Mat3 v;  // r = u * diag(s) * v^T
};

// SVD of a real 3x3 matrix via the eigendecomposition of r^T r. Right
// singular vectors carry the sign convention that their first component of
// magnitude > 1e-12 is positive.
Svd3 svd3(const Mat3& r);

}  // namespace qent
