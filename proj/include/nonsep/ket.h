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

#ifndef NONSEP_KET_H
#define NONSEP_KET_H

#include <cmath>
#include <complex>
#include <initializer_list>
#include <map>
#include <utility>
#include <vector>

#include "nonsep/rational.h"

namespace nonsep {

using Amplitude = std::complex<double>;

/// Finitely supported map Key -> complex amplitude.
///
/// Entries whose amplitude is exactly zero are never stored, so the key set
/// is the support and disjoint key sets mean orthogonal vectors. Keys are
/// kept ordered, which makes iteration (and therefore every floating point
/// sum over the support) deterministic.
template <typename Key>
class SparseVector {
   public:
    using Storage = std::map<Key, Amplitude>;

    SparseVector() = default;
    SparseVector(std::initializer_list<std::pair<const Key, Amplitude>> entries) {
        for (const auto &[key, amp] : entries) {
            add_to(key, amp);
        }
    }

    /// Adds amp to the amplitude at key. An entry whose magnitude ends at or
    /// below prune_threshold is erased; the default threshold only erases
    /// exact zeros.
    void add_to(const Key &key, Amplitude amp, double prune_threshold = 0.0) {
        auto it = entries_.find(key);
        if (it == entries_.end()) {
            if (std::abs(amp) > prune_threshold) {
                entries_.emplace(key, amp);
            }
            return;
        }
        it->second += amp;
        if (std::abs(it->second) <= prune_threshold) {
            entries_.erase(it);
        }
    }

    Amplitude at(const Key &key) const {
        auto it = entries_.find(key);
        return it == entries_.end() ? Amplitude{0.0, 0.0} : it->second;
    }

    bool contains(const Key &key) const {
        return entries_.contains(key);
    }

    std::size_t support_size() const {
        return entries_.size();
    }

    bool empty() const {
        return entries_.empty();
    }

    std::vector<Key> support() const {
        std::vector<Key> keys;
        keys.reserve(entries_.size());
        for (const auto &entry : entries_) {
            keys.push_back(entry.first);
        }
        return keys;
    }

    double norm_sq() const {
        double total = 0;
        for (const auto &entry : entries_) {
            total += std::norm(entry.second);
        }
        return total;
    }

    double norm() const {
        return std::sqrt(norm_sq());
    }

    SparseVector scaled(Amplitude factor) const {
        SparseVector result;
        if (factor == Amplitude{0.0, 0.0}) {
            return result;
        }
        for (const auto &[key, amp] : entries_) {
            result.add_to(key, amp * factor);
        }
        return result;
    }

    SparseVector normalized() const {
        return scaled(1.0 / norm());
    }

    friend SparseVector operator+(const SparseVector &a, const SparseVector &b) {
        SparseVector result = a;
        for (const auto &[key, amp] : b.entries_) {
            result.add_to(key, amp);
        }
        return result;
    }

    friend SparseVector operator-(const SparseVector &a, const SparseVector &b) {
        SparseVector result = a;
        for (const auto &[key, amp] : b.entries_) {
            result.add_to(key, -amp);
        }
        return result;
    }

    /// Returns a + b, erasing any entry whose magnitude ends at or below
    /// prune_threshold.
    static SparseVector sum(const SparseVector &a, const SparseVector &b, double prune_threshold) {
        SparseVector result;
        for (const auto &[key, amp] : a.entries_) {
            result.add_to(key, amp, prune_threshold);
        }
        for (const auto &[key, amp] : b.entries_) {
            result.add_to(key, amp, prune_threshold);
        }
        return result;
    }

    bool same_support(const SparseVector &other) const {
        if (entries_.size() != other.entries_.size()) {
            return false;
        }
        auto it = other.entries_.begin();
        for (const auto &entry : entries_) {
            if (!(entry.first == it->first)) {
                return false;
            }
            ++it;
        }
        return true;
    }

    bool disjoint_support(const SparseVector &other) const {
        const SparseVector &small = entries_.size() <= other.entries_.size() ? *this : other;
        const SparseVector &large = &small == this ? other : *this;
        for (const auto &entry : small.entries_) {
            if (large.entries_.contains(entry.first)) {
                return false;
            }
        }
        return true;
    }

    /// Largest amplitude difference over the union of supports.
    double max_abs_diff(const SparseVector &other) const {
        double worst = 0;
        for (const auto &[key, amp] : entries_) {
            worst = std::max(worst, std::abs(amp - other.at(key)));
        }
        for (const auto &[key, amp] : other.entries_) {
            if (!entries_.contains(key)) {
                worst = std::max(worst, std::abs(amp));
            }
        }
        return worst;
    }

    auto begin() const {
        return entries_.begin();
    }
    auto end() const {
        return entries_.end();
    }

    bool operator==(const SparseVector &other) const = default;

   private:
    Storage entries_;
};

/// A vector of l2(R) with exact rational keys.
using Ket = SparseVector<Label>;

/// Key of a product basis vector chi_left (x) xi_right.
struct LabelPair {
    Label left;
    Label right;

    friend bool operator==(const LabelPair &, const LabelPair &) = default;
    friend auto operator<=>(const LabelPair &, const LabelPair &) = default;
};

/// A vector of H_A (x) H_B; the left key indexes Alice's basis, the right key Bob's.
using BiKet = SparseVector<LabelPair>;

/// <u, v>, conjugate-linear in u. Only the intersection of supports contributes.
template <typename Key>
Amplitude inner_product(const SparseVector<Key> &u, const SparseVector<Key> &v) {
    const bool u_smaller = u.support_size() <= v.support_size();
    const SparseVector<Key> &small = u_smaller ? u : v;
    const SparseVector<Key> &large = u_smaller ? v : u;
    Amplitude total{0.0, 0.0};
    for (const auto &[key, amp] : small) {
        if (large.contains(key)) {
            Amplitude other = large.at(key);
            total += u_smaller ? std::conj(amp) * other : std::conj(other) * amp;
        }
    }
    return total;
}

/// Characteristic function of {x}: amplitude 1 at x.
inline Ket characteristic_state(const Label &x) {
    Ket result;
    result.add_to(x, Amplitude{1.0, 0.0});
    return result;
}

inline BiKet tensor_product(const Ket &u, const Ket &v) {
    BiKet result;
    for (const auto &[lk, la] : u) {
        for (const auto &[rk, ra] : v) {
            result.add_to(LabelPair{lk, rk}, la * ra);
        }
    }
    return result;
}

/// Left keys of the support (Alice's marginal support K_A).
inline std::vector<Label> left_support(const BiKet &psi) {
    std::vector<Label> keys;
    for (const auto &entry : psi) {
        if (keys.empty() || !(keys.back() == entry.first.left)) {
            keys.push_back(entry.first.left);
        }
    }
    return keys;
}

}  // namespace nonsep

#endif
