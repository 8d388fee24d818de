// Copyright 2026 The ebcsim Authors
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

#include "ebc/dense.h"

#include <cmath>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace ebc {

namespace {

constexpr double kHermitianTol = 1e-9;
constexpr double kTraceTol = 1e-9;
constexpr double kEigenTol = 1e-10;

size_t qubits_for_dim(Eigen::Index dim) {
    if (dim <= 0) {
        throw std::invalid_argument("dense state dimension must be positive");
    }
    size_t q = 0;
    while ((Eigen::Index{1} << q) < dim) {
        q++;
    }
    if ((Eigen::Index{1} << q) != dim) {
        throw std::invalid_argument("dense state dimension must be a power of two");
    }
    if (q > kMaxDenseQubits) {
        throw std::invalid_argument("dense backend supports at most 12 qubits");
    }
    return q;
}

Eigen::VectorXd hermitian_eigenvalues(const CMatrix &m) {
    Eigen::SelfAdjointEigenSolver<CMatrix> solver(m, Eigen::EigenvaluesOnly);
    return solver.eigenvalues();
}

// Applies u to `qubit` on the left of m (rows only).
void apply_left(CMatrix &m, size_t qubits, size_t qubit, const Gate2 &u) {
    Eigen::Index stride = Eigen::Index{1} << (qubits - 1 - qubit);
    Eigen::Index dim = m.rows();
    for (Eigen::Index base = 0; base < dim; base++) {
        if (base & stride) {
            continue;
        }
        Eigen::Index i0 = base;
        Eigen::Index i1 = base | stride;
        for (Eigen::Index c = 0; c < m.cols(); c++) {
            std::complex<double> a = m(i0, c);
            std::complex<double> b = m(i1, c);
            m(i0, c) = u(0, 0) * a + u(0, 1) * b;
            m(i1, c) = u(1, 0) * a + u(1, 1) * b;
        }
    }
}

CMatrix conjugate_by(const CMatrix &rho, size_t qubits, size_t qubit, const Gate2 &u) {
    CMatrix m = rho;
    apply_left(m, qubits, qubit, u);
    CMatrix adj = m.adjoint();
    apply_left(adj, qubits, qubit, u);
    return adj.adjoint();
}

}  // namespace

DenseState::DenseState(const CMatrix &rho) {
    if (rho.rows() != rho.cols()) {
        throw std::invalid_argument("density matrix must be square");
    }
    qubits_ = qubits_for_dim(rho.rows());
    double asym = (rho - rho.adjoint()).cwiseAbs().maxCoeff();
    if (asym > kHermitianTol) {
        throw std::invalid_argument("density matrix is not Hermitian");
    }
    rho_ = 0.5 * (rho + rho.adjoint());
    std::complex<double> tr = rho_.trace();
    if (std::abs(tr - 1.0) > kTraceTol) {
        throw std::invalid_argument("density matrix trace is not 1");
    }
    if (hermitian_eigenvalues(rho_).minCoeff() < -kEigenTol) {
        throw std::invalid_argument("density matrix is not positive semidefinite");
    }
}

DenseState DenseState::from_pure(const CVector &psi) {
    double norm = psi.norm();
    if (norm == 0) {
        throw std::invalid_argument("cannot normalize the zero vector");
    }
    CVector v = psi / norm;
    return DenseState(v * v.adjoint());
}

DenseState DenseState::bb84(const BitString &u, const BitString &theta) {
    return from_pure(bb84_vector(u, theta));
}

DenseState DenseState::maximally_mixed(size_t qubits) {
    if (qubits > kMaxDenseQubits) {
        throw std::invalid_argument("dense backend supports at most 12 qubits");
    }
    Eigen::Index dim = Eigen::Index{1} << qubits;
    return DenseState(CMatrix::Identity(dim, dim) / static_cast<double>(dim));
}

std::string DenseState::dump() const {
    std::ostringstream out;
    out << std::setprecision(10);
    out << "qubits " << qubits_ << "\nreal\n" << rho_.real() << "\nimag\n" << rho_.imag() << "\n";
    return out.str();
}

Gate2 pauli_gate(char p) {
    using C = std::complex<double>;
    Gate2 g;
    switch (p) {
        case 'I':
            g << 1, 0, 0, 1;
            return g;
        case 'X':
            g << 0, 1, 1, 0;
            return g;
        case 'Y':
            g << 0, C(0, -1), C(0, 1), 0;
            return g;
        case 'Z':
            g << 1, 0, 0, -1;
            return g;
    }
    throw std::invalid_argument(std::string("unknown Pauli '") + p + "'");
}

Gate2 hadamard_gate() {
    Gate2 g;
    double s = 1.0 / std::sqrt(2.0);
    g << s, s, s, -s;
    return g;
}

CVector bb84_vector(const BitString &u, const BitString &theta) {
    if (u.size() != theta.size()) {
        throw std::invalid_argument("bb84_vector: data and basis lengths differ");
    }
    if (u.size() > kMaxDenseQubits) {
        throw std::invalid_argument("dense backend supports at most 12 qubits");
    }
    double s = 1.0 / std::sqrt(2.0);
    CVector v = CVector::Ones(1);
    for (size_t i = 0; i < u.size(); i++) {
        Eigen::Vector2cd single;
        if (!theta[i]) {
            single << (u[i] ? 0.0 : 1.0), (u[i] ? 1.0 : 0.0);
        } else {
            single << s, (u[i] ? -s : s);
        }
        CVector next(v.size() * 2);
        for (Eigen::Index a = 0; a < v.size(); a++) {
            next(2 * a) = v(a) * single(0);
            next(2 * a + 1) = v(a) * single(1);
        }
        v = std::move(next);
    }
    return v;
}

DenseState apply_gate(const DenseState &state, size_t qubit, const Gate2 &u) {
    if (qubit >= state.qubits()) {
        throw std::out_of_range("apply_gate: qubit out of range");
    }
    return DenseState(conjugate_by(state.matrix(), state.qubits(), qubit, u));
}

DenseState depolarize_qubit(const DenseState &state, size_t qubit, double eps) {
    if (!(eps >= 0 && eps <= 1)) {
        throw std::invalid_argument("depolarize_qubit: eps must lie in [0, 1]");
    }
    if (qubit >= state.qubits()) {
        throw std::out_of_range("depolarize_qubit: qubit out of range");
    }
    const CMatrix &rho = state.matrix();
    CMatrix out = (1.0 - eps) * rho;
    for (char p : {'I', 'X', 'Y', 'Z'}) {
        out += (eps / 4.0) * conjugate_by(rho, state.qubits(), qubit, pauli_gate(p));
    }
    return DenseState(out);
}

std::vector<double> outcome_distribution(const DenseState &state, const BitString &bases) {
    if (bases.size() != state.qubits()) {
        throw std::invalid_argument("outcome_distribution: one basis bit per qubit required");
    }
    CMatrix m = state.matrix();
    for (size_t q = 0; q < bases.size(); q++) {
        if (bases[q]) {
            m = conjugate_by(m, state.qubits(), q, hadamard_gate());
        }
    }
    std::vector<double> probs(state.dim());
    for (size_t i = 0; i < probs.size(); i++) {
        probs[i] = std::max(0.0, m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)).real());
    }
    return probs;
}

double trace_distance(const DenseState &rho, const DenseState &sigma) {
    if (rho.dim() != sigma.dim()) {
        throw std::invalid_argument("trace_distance: dimension mismatch");
    }
    return 0.5 * hermitian_eigenvalues(rho.matrix() - sigma.matrix()).cwiseAbs().sum();
}

CMatrix psd_sqrt(const CMatrix &m) {
    Eigen::SelfAdjointEigenSolver<CMatrix> solver(m);
    Eigen::VectorXd ev = solver.eigenvalues().cwiseMax(0.0).cwiseSqrt();
    const CMatrix &vecs = solver.eigenvectors();
    return vecs * ev.cast<std::complex<double>>().asDiagonal() * vecs.adjoint();
}

double fidelity(const DenseState &rho, const DenseState &sigma) {
    if (rho.dim() != sigma.dim()) {
        throw std::invalid_argument("fidelity: dimension mismatch");
    }
    CMatrix s = psd_sqrt(rho.matrix());
    CMatrix inner = s * sigma.matrix() * s;
    inner = 0.5 * (inner + inner.adjoint());
    double f = hermitian_eigenvalues(inner).cwiseMax(0.0).cwiseSqrt().sum();
    return std::min(1.0, f);
}

Purifications uhlmann_purifications(const DenseState &rho, const DenseState &rho_prime) {
    if (rho.dim() != rho_prime.dim()) {
        throw std::invalid_argument("uhlmann_purifications: dimension mismatch");
    }
    Eigen::Index dim = static_cast<Eigen::Index>(rho.dim());
    CMatrix s = psd_sqrt(rho.matrix());
    CMatrix sp = psd_sqrt(rho_prime.matrix());
    Eigen::JacobiSVD<CMatrix> svd(s * sp, Eigen::ComputeFullU | Eigen::ComputeFullV);
    CMatrix vt = svd.matrixV() * svd.matrixU().adjoint();
    CMatrix coeff = s;
    CMatrix coeff_prime = sp * vt;

    Purifications out;
    out.psi.resize(dim * dim);
    out.psi_prime.resize(dim * dim);
    for (Eigen::Index i = 0; i < dim; i++) {
        for (Eigen::Index j = 0; j < dim; j++) {
            out.psi(i * dim + j) = coeff(i, j);
            out.psi_prime(i * dim + j) = coeff_prime(i, j);
        }
    }
    out.overlap = std::abs(out.psi.dot(out.psi_prime));
    return out;
}

double pure_trace_distance(const CVector &a, const CVector &b) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("pure_trace_distance: dimension mismatch");
    }
    double ov = std::abs(a.dot(b));
    return std::sqrt(std::max(0.0, 1.0 - ov * ov));
}

DenseState random_density(size_t qubits, Rng &rng) {
    if (qubits > kMaxDenseQubits) {
        throw std::invalid_argument("dense backend supports at most 12 qubits");
    }
    Eigen::Index dim = Eigen::Index{1} << qubits;
    CMatrix g(dim, dim);
    for (Eigen::Index i = 0; i < dim; i++) {
        for (Eigen::Index j = 0; j < dim; j++) {
            double re = rng.next_gaussian();
            double im = rng.next_gaussian();
            g(i, j) = {re, im};
        }
    }
    CMatrix rho = g * g.adjoint();
    rho /= rho.trace().real();
    return DenseState(rho);
}

}  // namespace ebc
