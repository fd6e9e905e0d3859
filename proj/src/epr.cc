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

#include "nonsep/epr.h"

#include <cmath>
#include <stdexcept>
#include <string>

#include "nonsep/errors.h"

namespace nonsep {

BiKet apply_product(
    const HalvorsonRep &rep_left,
    const WeylParams &p_left,
    const HalvorsonRep &rep_right,
    const WeylParams &p_right,
    const BiKet &psi) {
    const WeylParams fl = rep_left.to_frame(p_left);
    const WeylParams fr = rep_right.to_frame(p_right);
    const Rational cocycle = (fl.a * fl.b + fr.a * fr.b) / Rational(2);
    BiKet result;
    for (const auto &[key, amp] : psi) {
        Rational vl = rep_left.phase(key.left);
        Rational vr = rep_right.phase(key.right);
        Rational arg = cocycle + fl.a * vl + fr.a * vr;
        LabelPair moved{
            fl.b.is_zero() ? key.left : rep_left.phase.inverse(vl + fl.b),
            fr.b.is_zero() ? key.right : rep_right.phase.inverse(vr + fr.b),
        };
        result.add_to(moved, amp * unit_phase(arg));
    }
    return result;
}

BiKet BipartiteRep::apply(const WeylParams &pa, const WeylParams &pb, const BiKet &psi) const {
    return apply_product(rep_a, pa, rep_b, pb, psi);
}

BiKet SumDifferenceRep::apply(const WeylParams &pa, const WeylParams &pb, const BiKet &psi) const {
    WeylParams sum_params{(pa.a + pb.a) / Rational(2), pa.b + pb.b};
    WeylParams diff_params{(pa.b - pb.b) / Rational(2), pb.a - pa.a};
    return apply_product(sum_mode, sum_params, difference_mode, diff_params, psi);
}

void require_unit_norm(const BiKet &psi, const char *context) {
    double n = psi.norm();
    if (std::abs(n - 1.0) > 1e-9) {
        throw NotNormalized(std::string(context) + ": state norm " + std::to_string(n) + " is not 1");
    }
}

double phase_residual_sq(const BiKet &u_psi, Amplitude c, const BiKet &psi) {
    double total = 0;
    for (const auto &[key, amp] : u_psi) {
        total += std::norm(amp - c * psi.at(key));
    }
    for (const auto &[key, amp] : psi) {
        if (!u_psi.contains(key)) {
            total += std::norm(c * amp);
        }
    }
    return total;
}

EprViolation find_epr_violation(const BipartiteRep &rep, const EprTarget &target, const BiKet &psi) {
    (void)target;  // the witness works for every target phase
    if (psi.empty()) {
        throw EmptyState("find_epr_violation: zero vector has no support");
    }
    const HalvorsonRep &ra = rep.rep_a;
    Rational r = smallest_positive_integer_outside(phase_difference_set(ra, left_support(psi)));

    // U acts on Alice as e^{iab/2} W_A(a, b). Choosing (a, b) along Alice's
    // conjugate direction makes that a pure shift of her phi-values by r.
    WeylParams params = ra.conjugate_params(r);
    return {params.a, params.b, r, 2.0};
}

GnsEprState make_gns_sum_difference_state(const Rational &x, const Rational &p) {
    return {tensor_product(characteristic_state(x), characteristic_state(p)), SumDifferenceRep{}};
}

}  // namespace nonsep
