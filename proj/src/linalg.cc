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

#include "nonsep/linalg.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace nonsep {

CMatrix CMatrix::identity(std::size_t n) {
    CMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = 1.0;
    }
    return m;
}

CMatrix CMatrix::outer(std::span<const Complex> v) {
    CMatrix m(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        for (std::size_t j = 0; j < v.size(); ++j) {
            m(i, j) = v[i] * std::conj(v[j]);
        }
    }
    return m;
}

CMatrix CMatrix::adjoint() const {
    CMatrix m(n_);
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t j = 0; j < n_; ++j) {
            m(i, j) = std::conj((*this)(j, i));
        }
    }
    return m;
}

Complex CMatrix::trace() const {
    Complex t = 0;
    for (std::size_t i = 0; i < n_; ++i) {
        t += (*this)(i, i);
    }
    return t;
}

double CMatrix::hermiticity_defect() const {
    double worst = 0;
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t j = i; j < n_; ++j) {
            worst = std::max(worst, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
        }
    }
    return worst;
}

double CMatrix::frobenius() const {
    double total = 0;
    for (const auto &x : data_) {
        total += std::norm(x);
    }
    return std::sqrt(total);
}

CVector CMatrix::apply(std::span<const Complex> v) const {
    if (v.size() != n_) {
        throw std::invalid_argument("CMatrix::apply: dimension mismatch");
    }
    CVector out(n_);
    for (std::size_t i = 0; i < n_; ++i) {
        Complex acc = 0;
        for (std::size_t j = 0; j < n_; ++j) {
            acc += (*this)(i, j) * v[j];
        }
        out[i] = acc;
    }
    return out;
}

Complex CMatrix::expectation(std::span<const Complex> v) const {
    CVector mv = apply(v);
    return dot(v, mv);
}

CMatrix &CMatrix::operator+=(const CMatrix &other) {
    if (other.n_ != n_) {
        throw std::invalid_argument("CMatrix: dimension mismatch");
    }
    for (std::size_t k = 0; k < data_.size(); ++k) {
        data_[k] += other.data_[k];
    }
    return *this;
}

CMatrix &CMatrix::operator-=(const CMatrix &other) {
    if (other.n_ != n_) {
        throw std::invalid_argument("CMatrix: dimension mismatch");
    }
    for (std::size_t k = 0; k < data_.size(); ++k) {
        data_[k] -= other.data_[k];
    }
    return *this;
}

CMatrix &CMatrix::operator*=(Complex factor) {
    for (auto &x : data_) {
        x *= factor;
    }
    return *this;
}

CMatrix operator*(const CMatrix &a, const CMatrix &b) {
    if (a.n_ != b.n_) {
        throw std::invalid_argument("CMatrix: dimension mismatch");
    }
    std::size_t n = a.n_;
    CMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
            Complex aik = a(i, k);
            if (aik == Complex{0.0, 0.0}) {
                continue;
            }
            for (std::size_t j = 0; j < n; ++j) {
                m(i, j) += aik * b(k, j);
            }
        }
    }
    return m;
}

Complex dot(std::span<const Complex> u, std::span<const Complex> v) {
    if (u.size() != v.size()) {
        throw std::invalid_argument("dot: dimension mismatch");
    }
    Complex acc = 0;
    for (std::size_t i = 0; i < u.size(); ++i) {
        acc += std::conj(u[i]) * v[i];
    }
    return acc;
}

double vector_norm(std::span<const Complex> v) {
    double total = 0;
    for (const auto &x : v) {
        total += std::norm(x);
    }
    return std::sqrt(total);
}

CVector normalized(std::span<const Complex> v) {
    double n = vector_norm(v);
    if (n == 0) {
        throw std::invalid_argument("normalized: zero vector");
    }
    CVector out(v.begin(), v.end());
    for (auto &x : out) {
        x /= n;
    }
    return out;
}

HermitianEigensystem hermitian_eigensystem(const CMatrix &m) {
    const std::size_t n = m.dim();
    CMatrix a(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            a(i, j) = 0.5 * (m(i, j) + std::conj(m(j, i)));
        }
    }
    CMatrix v = CMatrix::identity(n);

    auto off_diagonal = [&] {
        double total = 0;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                if (i != j) {
                    total += std::norm(a(i, j));
                }
            }
        }
        return std::sqrt(total);
    };

    const double scale = std::max(a.frobenius(), 1e-300);
    int sweep = 0;
    for (; sweep < 100; ++sweep) {
        if (off_diagonal() <= 1e-15 * scale) {
            break;
        }
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double mag = std::abs(a(p, q));
                if (mag <= 1e-300) {
                    continue;
                }
                // Rotate the phase of index q so that a(p, q) becomes real.
                const Complex e = a(p, q) / mag;
                const Complex ec = std::conj(e);
                for (std::size_t k = 0; k < n; ++k) {
                    a(k, q) *= ec;
                    v(k, q) *= ec;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    a(q, k) *= e;
                }

                const double app = a(p, p).real();
                const double aqq = a(q, q).real();
                const double tau = (aqq - app) / (2 * mag);
                const double t = (tau >= 0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1 + tau * tau));
                const double c = 1 / std::sqrt(1 + t * t);
                const double s = t * c;

                for (std::size_t k = 0; k < n; ++k) {
                    const Complex akp = a(k, p);
                    const Complex akq = a(k, q);
                    a(k, p) = c * akp - s * akq;
                    a(k, q) = s * akp + c * akq;
                    const Complex vkp = v(k, p);
                    const Complex vkq = v(k, q);
                    v(k, p) = c * vkp - s * vkq;
                    v(k, q) = s * vkp + c * vkq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const Complex apk = a(p, k);
                    const Complex aqk = a(q, k);
                    a(p, k) = c * apk - s * aqk;
                    a(q, k) = s * apk + c * aqk;
                }
                a(p, q) = 0;
                a(q, p) = 0;
                a(p, p) = a(p, p).real();
                a(q, q) = a(q, q).real();
            }
        }
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
        return a(x, x).real() < a(y, y).real();
    });
    HermitianEigensystem result;
    result.values.resize(n);
    result.vectors = CMatrix(n);
    result.sweeps = sweep;
    for (std::size_t k = 0; k < n; ++k) {
        result.values[k] = a(order[k], order[k]).real();
        for (std::size_t i = 0; i < n; ++i) {
            result.vectors(i, k) = v(i, order[k]);
        }
    }
    return result;
}

CMatrix hermitian_function(const CMatrix &m, const std::function<double(double)> &f) {
    HermitianEigensystem es = hermitian_eigensystem(m);
    const std::size_t n = m.dim();
    CMatrix out(n);
    for (std::size_t k = 0; k < n; ++k) {
        double fk = f(es.values[k]);
        if (fk == 0) {
            continue;
        }
        for (std::size_t i = 0; i < n; ++i) {
            Complex vik = es.vectors(i, k) * fk;
            for (std::size_t j = 0; j < n; ++j) {
                out(i, j) += vik * std::conj(es.vectors(j, k));
            }
        }
    }
    return out;
}

CMatrix psd_sqrt(const CMatrix &m) {
    return hermitian_function(m, [](double x) {
        return x > 0 ? std::sqrt(x) : 0.0;
    });
}

CMatrix inverse_sqrt_on_support(const CMatrix &m, double cutoff) {
    return hermitian_function(m, [cutoff](double x) {
        return x > cutoff ? 1 / std::sqrt(x) : 0.0;
    });
}

double min_eigenvalue(const CMatrix &m) {
    if (m.dim() == 0) {
        return 0;
    }
    return hermitian_eigensystem(m).values.front();
}

double max_eigenvalue(const CMatrix &m) {
    if (m.dim() == 0) {
        return 0;
    }
    return hermitian_eigensystem(m).values.back();
}

CVector top_eigenvector(const CMatrix &m) {
    HermitianEigensystem es = hermitian_eigensystem(m);
    const std::size_t n = m.dim();
    CVector out(n);
    for (std::size_t i = 0; i < n; ++i) {
        out[i] = es.vectors(i, n - 1);
    }
    return out;
}

}  // namespace nonsep
