// Copyright 2026 The nonsep Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef NONSEP_LINALG_H
#define NONSEP_LINALG_H

#include <complex>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace nonsep {

using Complex = std::complex<double>;
using CVector = std::vector<Complex>;

/// Small dense square complex matrix, row-major.
class CMatrix {
   public:
    CMatrix() = default;
    explicit CMatrix(std::size_t n) : n_(n), data_(n * n) {
    }

    static CMatrix identity(std::size_t n);
    /// |v><v|.
    static CMatrix outer(std::span<const Complex> v);

    std::size_t dim() const {
        return n_;
    }
    Complex &operator()(std::size_t i, std::size_t j) {
        return data_[i * n_ + j];
    }
    const Complex &operator()(std::size_t i, std::size_t j) const {
        return data_[i * n_ + j];
    }

    CMatrix adjoint() const;
    Complex trace() const;
    /// Largest |m_ij - conj(m_ji)|.
    double hermiticity_defect() const;
    /// Frobenius norm.
    double frobenius() const;

    CVector apply(std::span<const Complex> v) const;
    /// <v, M v>.
    Complex expectation(std::span<const Complex> v) const;

    CMatrix &operator+=(const CMatrix &other);
    CMatrix &operator-=(const CMatrix &other);
    CMatrix &operator*=(Complex factor);
    friend CMatrix operator+(CMatrix a, const CMatrix &b) {
        a += b;
        return a;
    }
    friend CMatrix operator-(CMatrix a, const CMatrix &b) {
        a -= b;
        return a;
    }
    friend CMatrix operator*(CMatrix a, Complex factor) {
        a *= factor;
        return a;
    }
    friend CMatrix operator*(const CMatrix &a, const CMatrix &b);

    bool operator==(const CMatrix &) const = default;

   private:
    std::size_t n_ = 0;
    std::vector<Complex> data_;
};

Complex dot(std::span<const Complex> u, std::span<const Complex> v);
double vector_norm(std::span<const Complex> v);
CVector normalized(std::span<const Complex> v);

struct HermitianEigensystem {
    /// Ascending.
    std::vector<double> values;
    /// Column k is the unit eigenvector for values[k].
    CMatrix vectors;
    int sweeps = 0;
};

/// Cyclic complex Jacobi diagonalization of a Hermitian matrix. Intended for
/// the small dimensions (n <= 16) used by the guessing games; cost per sweep
/// is O(n^3). Only the Hermitian part of the input is diagonalized.
HermitianEigensystem hermitian_eigensystem(const CMatrix &m);

/// V f(D) V^dagger for Hermitian m.
CMatrix hermitian_function(const CMatrix &m, const std::function<double(double)> &f);

/// Principal square root; negative eigenvalues (round-off) are clamped to 0.
CMatrix psd_sqrt(const CMatrix &m);

/// Moore-Penrose inverse square root: eigenvalues <= cutoff map to 0.
CMatrix inverse_sqrt_on_support(const CMatrix &m, double cutoff);

double min_eigenvalue(const CMatrix &m);
double max_eigenvalue(const CMatrix &m);

/// Unit eigenvector of the largest eigenvalue.
CVector top_eigenvector(const CMatrix &m);

}  // namespace nonsep

#endif
