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

#ifndef EBC_DENSE_H
#define EBC_DENSE_H

#include <Eigen/Dense>
#include <complex>
#include <cstddef>
#include <string>
#include <vector>

#include "ebc/bits.h"
#include "ebc/rng.h"

namespace ebc {

using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using Gate2 = Eigen::Matrix2cd;

inline constexpr size_t kMaxDenseQubits = 12;

/// Exact density matrix on q <= 12 qubits. Qubit 0 is the most significant
/// bit of the basis-state index.
class DenseState {
   public:
    /// Validates: square with power-of-two dimension, Hermitian to 1e-9, unit
    /// trace to 1e-9, eigenvalues >= -1e-10. The stored matrix is the
    /// Hermitian part of the input.
    explicit DenseState(const CMatrix &rho);

    /// Normalizes the vector first.
    static DenseState from_pure(const CVector &psi);
    /// Product state H^theta |u>.
    static DenseState bb84(const BitString &u, const BitString &theta);
    static DenseState maximally_mixed(size_t qubits);

    size_t qubits() const {
        return qubits_;
    }
    size_t dim() const {
        return static_cast<size_t>(rho_.rows());
    }
    const CMatrix &matrix() const {
        return rho_;
    }

    /// Real part, then imaginary part, one matrix row per line.
    std::string dump() const;

   private:
    size_t qubits_ = 0;
    CMatrix rho_;
};

Gate2 pauli_gate(char p);
Gate2 hadamard_gate();

/// H^theta |u> as a state vector.
CVector bb84_vector(const BitString &u, const BitString &theta);

/// U rho U^dagger with U acting on one qubit.
DenseState apply_gate(const DenseState &state, size_t qubit, const Gate2 &u);

/// (1 - eps) rho + eps (I/2 (x) tr_q rho), written as the Pauli twirl
/// (1 - eps) rho + (eps / 4) sum_P P rho P.
DenseState depolarize_qubit(const DenseState &state, size_t qubit, double eps);

/// Probabilities of the 2^q outcomes when qubit i is measured in the Hadamard
/// basis iff bases[i]. Outcome index uses the same bit order as the state.
std::vector<double> outcome_distribution(const DenseState &state, const BitString &bases);

/// (1/2) sum |eigenvalues of rho - sigma|. Throws on dimension mismatch.
double trace_distance(const DenseState &rho, const DenseState &sigma);

/// Root fidelity tr sqrt(sqrt(rho) sigma sqrt(rho)), in [0, 1].
double fidelity(const DenseState &rho, const DenseState &sigma);

/// Principal square root of a positive semidefinite Hermitian matrix; small
/// negative eigenvalues are clamped to zero.
CMatrix psd_sqrt(const CMatrix &m);

struct Purifications {
    /// Vectors on the doubled space, index i * dim + j for |i>_A |j>_R.
    CVector psi;
    CVector psi_prime;
    /// |<psi|psi'>|.
    double overlap = 0;
};

/// Purifications of rho and rho' whose overlap attains the fidelity:
///
///     |psi>  = (sqrt(rho)  (x) I) |Omega>
///     |psi'> = (sqrt(rho') (x) V) |Omega>,   V^T = B A^dagger
///
/// where sqrt(rho) sqrt(rho') = A Sigma B^dagger is a singular value
/// decomposition and |Omega> = sum_i |i>|i>.
Purifications uhlmann_purifications(const DenseState &rho, const DenseState &rho_prime);

/// Trace distance between two normalized pure states: sqrt(1 - |<a|b>|^2).
double pure_trace_distance(const CVector &a, const CVector &b);

/// Random full-rank state G G^dagger / tr, G with i.i.d. complex Gaussian entries.
DenseState random_density(size_t qubits, Rng &rng);

}  // namespace ebc

#endif
