/*
   Copyright 2026 the ffcf authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef FFCF_NATEXT_HPP
#define FFCF_NATEXT_HPP

#include <map>

#include "ffcf/cfe.hpp"

namespace ffcf {

/**
 * Point of the natural-extension domain: xi_minus with v_inf < 0 and
 * xi_plus with v_inf >= 1, both irrational by construction.
 *
 * The two-sided dynamics is
 *   (xi_minus, xi_plus) -> (1/xi_minus - [1/xi_plus], Psi(xi_plus)),
 * an invertible extension of the Artin map whose second coordinate is the
 * one-sided orbit.
 */
struct NatExtPair {
    Surd minus;
    Surd plus;

    friend bool operator==(const NatExtPair& x, const NatExtPair& y) {
        return x.minus == y.minus && x.plus == y.plus;
    }
    friend bool operator!=(const NatExtPair& x, const NatExtPair& y) { return !(x == y); }
};

/// Builds (f^sigma, f) for a reduced f (f in M, f^sigma outside O).
/// Throws NotReduced when either membership fails.
NatExtPair pair_make(const Surd& f);

/// Forward step; returns the emitted coefficient [1/xi_plus] and the next
/// pair. Memberships are re-checked on the result.
std::pair<Poly, NatExtPair> natext_step(const NatExtPair& p);

/// Inverse step: digit a = -[xi_minus], previous pair
/// (1/(xi_minus + a), 1/(xi_plus + a)); natext_step(prev) == (a, p).
std::pair<Poly, NatExtPair> natext_unstep(const NatExtPair& p);

/// Two-sided coding window (a_{-m}, ..., a_0, a_1, ..., a_{m+1}) read off
/// by m+1 inverse and m+1 forward steps.
std::vector<Poly> coding_window(const NatExtPair& p, size_t m);

/// First return time 2 * deg [1/xi_plus]; always even and >= 2.
long long first_return_time(const NatExtPair& p);

/// Finite measure with positive rational weights on canonical surds.
class AtomicMeasure {
   public:
    void add(const Surd& atom, const Rat& w);
    const std::map<Surd, Rat>& atoms() const noexcept { return atoms_; }
    Rat total_mass() const;
    /// Rescaled to total mass 1.
    AtomicMeasure normalized() const;
    /// Weight of an atom, 0 when absent.
    Rat weight(const Surd& atom) const;

    friend bool operator==(const AtomicMeasure& x, const AtomicMeasure& y) {
        return x.atoms_ == y.atoms_;
    }

   private:
    std::map<Surd, Rat> atoms_;
};

/// The measure F(mu_x) of the compact orbit through f: each of the l
/// distinct cycle points carries weight 1/(2 * sum of cycle degrees), for
/// a total mass of l / lambda.
AtomicMeasure F_of_periodic_orbit(const Surd& f, size_t budget = kDefaultPeriodBudget);

}  // namespace ffcf

#endif  // FFCF_NATEXT_HPP
