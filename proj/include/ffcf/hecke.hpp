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

#ifndef FFCF_HECKE_HPP
#define FFCF_HECKE_HPP

#include <functional>
#include <map>
#include <string>

#include "ffcf/natext.hpp"

namespace ffcf {

/// Per-vertex degree statistics along a Hecke scan. The height of the
/// orbit equals the maximal cycle degree, and the geodesic period lambda
/// equals twice the degree sum.
struct HeckeRow {
    long long n = 0;
    size_t ell = 0;
    long long sum_deg = 0;
    long long max_deg = 0;
    Rat ratio;  // (max_deg - N) / sum_deg
    long long lambda = 0;
    long long height = 0;
    std::map<int, long long> hist;  // cycle degree -> count
};

/// All q^{deg P} + 1 Hecke neighbors of f at the quadratic-irrational
/// level: P*f first, then (f + b)/P for deg b < deg P in canonical order.
/// Every neighbor shares the kernel S. Throws ReducibleP.
std::vector<Surd> hecke_neighbors(const Surd& f, const Poly& P);

/// The rational ray [f, P f, ..., P^{n_max} f], each vertex reduced to its
/// cycle entry.
std::vector<Surd> hecke_ray(const Surd& f, const Poly& P, size_t n_max,
                            size_t budget = kDefaultPeriodBudget);

/// One degree-statistics row per ray vertex P^n f, n = 0..n_max; rows are
/// independent and computed concurrently, merged in index order.
std::vector<HeckeRow> escape_table(const Surd& f, const Poly& P, size_t n_max, long long N,
                                   size_t budget = kDefaultPeriodBudget);

/// CSV serialization of escape rows; rationals as num/den, hist as
/// deg:count pairs joined by ';'.
std::string escape_csv(const std::vector<HeckeRow>& rows);

/**
 * Branch policy for non-backtracking walks. The walker passes the list of
 * admissible neighbors (predecessor excluded); the multiply-by-P branch,
 * when admissible, is always choices[0].
 */
using BranchChooser = std::function<size_t(size_t step, const std::vector<Surd>& choices)>;

/// Policy that always takes the multiply-by-P branch (reproduces the
/// rational ray).
BranchChooser chooser_always_multiply();
/// Deterministic pseudo-random policy for a given seed.
BranchChooser chooser_seeded(uint64_t seed);

/// Non-backtracking walk of `depth` steps in the neighbor graph, with
/// per-vertex statistics.
std::vector<std::pair<Surd, HeckeRow>> hecke_walk_explore(const Surd& f, const Poly& P,
                                                          size_t depth,
                                                          const BranchChooser& chooser,
                                                          long long N = 0,
                                                          size_t budget = kDefaultPeriodBudget);

/// Equiprobability on the periodic part of the Psi-orbit of {f}: weight
/// 1/l on each of the l cycle points.
AtomicMeasure nu_f(const Surd& f, size_t budget = kDefaultPeriodBudget);

/// Largest c with nu >= c * nu_target on the support of nu_target
/// (0 when some atom is missing). nu_target must be nonempty.
Rat nu_lower_bound(const AtomicMeasure& nu, const AtomicMeasure& nu_target);

/// Cylinder {f in M : a_1(f) = a_1, ..., a_k(f) = a_k}; digits nonconstant.
struct CylinderSpec {
    std::vector<Poly> digits;
};

/// Exact mass q^{-2 sum deg a_i} of the cylinder under the Haar
/// probability measure of M (the Gauss-measure analogue).
/// Throws ConstantDigit.
Rat cylinder_measure(const CylinderSpec& c);

/**
 * Exact evaluation of the cross-section mass series
 *   (q-1)^2/(2q) * sum_{n>=1} (q-1) q^n / q^{4n},
 * whose closed form is (q-1)^2 / (2q (q^2+q+1)), together with the
 * printed constants q^3 (q-1)^2 / (2 (q^2+q+1)) (cross-section mass) and
 * q^4 (q-1)^2 / (2 (q^2+q+1)) (Haar multiple), and a flag recording that
 * the exact sum and the printed mass disagree (by a factor q^4).
 * The derived Haar multiple uses c = q * ||m_C||.
 */
struct MassConstants {
    Rat series_value;
    std::vector<Rat> partial_sums;  // scaled partial sums, n = 1..cutoff
    Rat paper_mass;
    Rat paper_fmx;
    Rat derived_fmx;
    bool mismatch = false;
};

MassConstants mass_constants(const FieldCtx* F, size_t cutoff = 20);

/// PGL_2(R)-equivalence of quadratic irrationals, decided through their
/// reduced cycles: equal up to cyclic rotation and an alternating
/// unit twist a_i -> u^{+-1} a_i.
bool hecke_vertex_equivalent(const Surd& f, const Surd& g,
                             size_t budget = kDefaultPeriodBudget);

/// All polynomials of degree < d (including 0), in canonical order.
std::vector<Poly> polys_of_degree_below(const FieldCtx* F, int d);
/// All polynomials of degree exactly n, in canonical order.
std::vector<Poly> polys_of_degree(const FieldCtx* F, int n);

}  // namespace ffcf

#endif  // FFCF_HECKE_HPP
