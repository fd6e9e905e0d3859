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

#ifndef NONSEP_EPR_H
#define NONSEP_EPR_H

#include "nonsep/ket.h"
#include "nonsep/weyl.h"

namespace nonsep {

/// Eigenvalues demanded of an EPR vector: x for the position sum and p for
/// the momentum difference.
struct EprTarget {
    Rational x;
    Rational p;
};

/// Tensor product of two Halvorson-type representations. Alice's operators
/// act on the left key only and Bob's on the right key only.
struct BipartiteRep {
    HalvorsonRep rep_a;
    HalvorsonRep rep_b;

    bool is_bipartite() const {
        return true;
    }
    /// W_A(pa) (x) W_B(pb) psi.
    BiKet apply(const WeylParams &pa, const WeylParams &pb, const BiKet &psi) const;
};

/// Two position-type modes carrying the sum and difference degrees of
/// freedom: the left key is the eigenvalue of X_A + X_B, the right key the
/// eigenvalue of P_A - P_B.
///
/// A two-party Weyl operator W_A(a1, a2) (x) W_B(b1, b2) acts as
///
///     W_1((a1 + b1) / 2, a2 + b2) (x) W_2((a2 - b2) / 2, b1 - a1),
///
/// a symplectic change of variables, so the two-party CCRs hold. Even
/// W_A(.) (x) 1 moves both keys, so this representation does not respect
/// the A/B split.
struct SumDifferenceRep {
    HalvorsonRep sum_mode = HalvorsonRep::position();
    HalvorsonRep difference_mode = HalvorsonRep::position();

    bool is_bipartite() const {
        return false;
    }
    BiKet apply(const WeylParams &pa, const WeylParams &pb, const BiKet &psi) const;
};

/// Applies rep_left(p_left) to left keys and rep_right(p_right) to right keys.
BiKet apply_product(
    const HalvorsonRep &rep_left,
    const WeylParams &p_left,
    const HalvorsonRep &rep_right,
    const WeylParams &p_right,
    const BiKet &psi);

inline BiKet apply_bipartite(const BipartiteRep &rep, const WeylParams &pa, const WeylParams &pb, const BiKet &psi) {
    return rep.apply(pa, pb, psi);
}

/// Throws NotNormalized when | ||psi|| - 1 | > 1e-9.
void require_unit_norm(const BiKet &psi, const char *context);

/// ||U psi - c psi||^2 over the union of supports.
double phase_residual_sq(const BiKet &u_psi, Amplitude c, const BiKet &psi);

/// ||(W_A(a,0) (x) W_B(a,0)) psi - e^{iax} psi||^2.
template <typename Rep>
double condition_i_residual(const Rep &rep, const EprTarget &target, const Rational &a, const BiKet &psi) {
    require_unit_norm(psi, "condition_i_residual");
    BiKet moved = rep.apply(WeylParams{a, 0}, WeylParams{a, 0}, psi);
    return phase_residual_sq(moved, unit_phase(a * target.x), psi);
}

/// ||(W_A(0,b) (x) W_B(0,-b)) psi - e^{ibp} psi||^2.
template <typename Rep>
double condition_ii_residual(const Rep &rep, const EprTarget &target, const Rational &b, const BiKet &psi) {
    require_unit_norm(psi, "condition_ii_residual");
    BiKet moved = rep.apply(WeylParams{0, b}, WeylParams{0, -b}, psi);
    return phase_residual_sq(moved, unit_phase(b * target.p), psi);
}

/// U = (W_A(a,0) (x) W_B(a,0)) (W_A(0,b) (x) W_B(0,-b)).
template <typename Rep>
BiKet apply_combined_condition(const Rep &rep, const Rational &a, const Rational &b, const BiKet &psi) {
    BiKet moved = rep.apply(WeylParams{0, b}, WeylParams{0, -b}, psi);
    return rep.apply(WeylParams{a, 0}, WeylParams{a, 0}, moved);
}

/// ||U psi - e^{iax} e^{ibp} psi||^2, the combined necessary condition.
/// Zero for every (a, b) iff psi satisfies both EPR conditions' product.
template <typename Rep>
double epr_condition_residual(
    const Rep &rep, const EprTarget &target, const Rational &a, const Rational &b, const BiKet &psi) {
    require_unit_norm(psi, "epr_condition_residual");
    BiKet moved = apply_combined_condition(rep, a, b, psi);
    return phase_residual_sq(moved, unit_phase(a * target.x) * unit_phase(b * target.p), psi);
}

struct EprViolation {
    Rational a;
    Rational b;
    /// Shift of Alice's phi-values produced by U in her eigenbasis frame.
    Rational shift;
    /// Exactly 2: U psi and psi have disjoint supports.
    double residual_sq = 0;
};

/// Picks (a, b) such that U moves every left key of psi off the left support
/// of psi, so <psi, U psi> = 0 exactly. Bob's representation is never
/// consulted. Throws EmptyState on the zero vector.
EprViolation find_epr_violation(const BipartiteRep &rep, const EprTarget &target, const BiKet &psi);

struct GnsEprState {
    BiKet state;
    SumDifferenceRep rep;
};

/// chi_x (x) chi_p on the sum/difference space: an exact eigenvector of both
/// EPR condition operators.
GnsEprState make_gns_sum_difference_state(const Rational &x, const Rational &p);

}  // namespace nonsep

#endif
