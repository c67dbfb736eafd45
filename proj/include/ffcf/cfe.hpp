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

#ifndef FFCF_CFE_HPP
#define FFCF_CFE_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "ffcf/rational.hpp"
#include "ffcf/surd.hpp"

namespace ffcf {

/// Default cap on the number of states examined during period detection.
/// Must never fire for a valid quadratic irrational (the state space is
/// finite for fixed D).
inline constexpr size_t kDefaultPeriodBudget = 1'000'000;

/**
 * Folded state (P + sqrt(D))/Q with Q dividing D - P^2 exactly.
 *
 * D = (B*C)^2 * S relative to the originating surd, and sqrt(D) denotes
 * the fixed series (B*C)*sqrt(S), never a re-extracted canonical branch.
 * This keeps the whole recursion inside R: one series integral part is
 * computed up front, after which every step is polynomial division.
 */
struct CfeState {
    Poly P, Q, D;
};

/// Exact Artin-orbit iterator over folded states.
class CfeIterator {
   public:
    /// Starts at s_0 = {f}; integral_part() returns a_0.
    explicit CfeIterator(const Surd& f);

    /// Advances one step and returns the emitted coefficient
    /// a_{t+1} = [1/s_t] (nonconstant).
    Poly step();

    const Poly& integral_part() const noexcept { return a0_; }
    const CfeState& state() const noexcept { return state_; }
    /// Q | D - P^2; checked exactly.
    bool state_valid() const;
    /// Current state as a canonical surd.
    Surd state_surd() const;

   private:
    CfeState state_;
    Poly T_;    // [(B*C) * sqrt(S)], fixed along the orbit
    Poly BC_;   // sqrt multiplier for surd reconstruction
    Poly S_;    // kernel
    Poly a0_;
};

/// One Artin step f -> ([1/f], {1/f}) in exact surd arithmetic.
/// Requires f in M (NotInM otherwise); irrationality is structural.
std::pair<Poly, Surd> artin_step(const Surd& f);

/// Coefficients [a_0; a_1, ..., a_n] of the continued fraction expansion.
std::vector<Poly> cfe_expand(const Surd& f, size_t n);

/**
 * Eventually periodic expansion: preperiod (a_0 ... a_{k-1}), minimal
 * cycle (a_k ... a_{k+l-1}), and the orbit point entering the cycle.
 *
 * Detection is by first recurrence of the (P, Q) state pair, after which
 * the minimal string period of the digit cycle is extracted.
 */
struct PeriodicCfe {
    std::vector<Poly> preperiod;
    std::vector<Poly> cycle;
    Surd cycle_entry;        // the Psi-iterate of {f} at the cycle start
    size_t steps_to_cycle;   // Psi-steps from {f} to cycle_entry
    bool purely_periodic;    // cycle_entry == {f}

    size_t ell() const noexcept { return cycle.size(); }
};

PeriodicCfe cfe_period(const Surd& f, size_t budget = kDefaultPeriodBudget);

struct CfeReduction {
    size_t steps;  // Psi-steps taken from {f}
    Surd entry;    // first Psi-iterate of {f} on the cycle
};

/// Normalizes f to its cycle entry (the reduced representative used along
/// Hecke rays).
CfeReduction cfe_reduce(const Surd& f, size_t budget = kDefaultPeriodBudget);

/// Convergent pairs (p_i, q_i), i = 0..n, from the classical recursion
/// p_i = a_i p_{i-1} + p_{i-2}. Pairs are coprime and satisfy
/// |f - p_i/q_i| = q^{-(deg q_i + deg q_{i+1})}.
std::vector<std::pair<Poly, Poly>> convergents(const Surd& f, size_t n);

/// Period length, cycle degrees d_i, their sum and max, and the geodesic
/// period lambda = 2 * sum.
struct DegreeStats {
    size_t ell = 0;
    std::vector<int> degs;
    long long sum_deg = 0;
    long long max_deg = 0;
    long long lambda = 0;
};

/// Stats plus the degree-escape ratio (max_deg - N) / sum_deg.
std::pair<DegreeStats, Rat> degree_stats(const PeriodicCfe& c, long long N);

}  // namespace ffcf

#endif  // FFCF_CFE_HPP
