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

#include "ffcf/hecke.hpp"

#include <algorithm>
#include <future>
#include <numeric>
#include <random>
#include <sstream>

namespace ffcf {

namespace {

void require_irreducible(const Poly& P) {
    if (P.is_zero() || P.deg() < 1)
        throw error(errc::reducible_p, "Hecke polynomial must be irreducible of degree >= 1");
    if (!poly_is_irreducible(P)) throw error(errc::reducible_p, "Hecke polynomial is reducible");
}

HeckeRow row_from_period(const PeriodicCfe& per, long long n, long long N) {
    HeckeRow row;
    row.n = n;
    auto [st, ratio] = degree_stats(per, N);
    row.ell = st.ell;
    row.sum_deg = st.sum_deg;
    row.max_deg = st.max_deg;
    row.ratio = ratio;
    row.lambda = st.lambda;
    row.height = st.max_deg;
    for (int d : st.degs) row.hist[d] += 1;
    return row;
}

}  // namespace

std::vector<Poly> polys_of_degree_below(const FieldCtx* F, int d) {
    std::vector<Poly> out;
    uint64_t count = 1;
    for (int i = 0; i < d; ++i) count *= F->q();
    out.reserve(count);
    for (uint64_t k = 0; k < count; ++k) {
        std::vector<uint64_t> vals;
        uint64_t t = k;
        for (int i = 0; i < d; ++i) {
            vals.push_back(t % F->q());
            t /= F->q();
        }
        out.push_back(Poly::from_values(F, vals));
    }
    return out;
}

std::vector<Poly> polys_of_degree(const FieldCtx* F, int n) {
    std::vector<Poly> out;
    for (const Poly& lower : polys_of_degree_below(F, n)) {
        for (uint64_t lead = 1; lead < F->q(); ++lead) {
            Poly t = lower + Poly::constant(F->elem(lead)).shifted(n);
            out.push_back(t);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Surd> hecke_neighbors(const Surd& f, const Poly& P) {
    require_irreducible(P);
    std::vector<Surd> out;
    out.reserve(2);
    out.push_back(surd_moebius(Moebius::scaling(P), f));
    for (const Poly& b : polys_of_degree_below(f.ctx(), P.deg()))
        out.push_back(surd_moebius(Moebius::add_div(b, P), f));
    return out;
}

std::vector<Surd> hecke_ray(const Surd& f, const Poly& P, size_t n_max, size_t budget) {
    require_irreducible(P);
    std::vector<Surd> out;
    out.reserve(n_max + 1);
    Surd raw = f;
    for (size_t n = 0; n <= n_max; ++n) {
        out.push_back(cfe_reduce(raw, budget).entry);
        if (n < n_max) raw = surd_moebius(Moebius::scaling(P), raw);
    }
    return out;
}

std::vector<HeckeRow> escape_table(const Surd& f, const Poly& P, size_t n_max, long long N,
                                   size_t budget) {
    require_irreducible(P);
    std::vector<Surd> vertices;
    vertices.reserve(n_max + 1);
    Surd raw = f;
    for (size_t n = 0; n <= n_max; ++n) {
        vertices.push_back(raw);
        if (n < n_max) raw = surd_moebius(Moebius::scaling(P), raw);
    }
    // rows are independent; fan out per n and merge in index order
    std::vector<std::future<HeckeRow>> jobs;
    jobs.reserve(vertices.size());
    for (size_t n = 0; n < vertices.size(); ++n) {
        jobs.push_back(std::async(std::launch::async, [&vertices, n, N, budget] {
            return row_from_period(cfe_period(vertices[n], budget), (long long)n, N);
        }));
    }
    std::vector<HeckeRow> rows;
    rows.reserve(jobs.size());
    for (auto& j : jobs) rows.push_back(j.get());
    return rows;
}

std::string escape_csv(const std::vector<HeckeRow>& rows) {
    std::ostringstream out;
    out << "n,period_len,sum_deg,max_deg,ratio_N,lambda,height,hist\n";
    for (const HeckeRow& r : rows) {
        out << r.n << "," << r.ell << "," << r.sum_deg << "," << r.max_deg << ","
            << rat_str(r.ratio) << "," << r.lambda << "," << r.height << ",";
        bool first = true;
        for (const auto& [deg, count] : r.hist) {
            if (!first) out << ";";
            first = false;
            out << deg << ":" << count;
        }
        out << "\n";
    }
    return out.str();
}

BranchChooser chooser_always_multiply() {
    return [](size_t, const std::vector<Surd>&) -> size_t { return 0; };
}

BranchChooser chooser_seeded(uint64_t seed) {
    auto rng = std::make_shared<std::mt19937_64>(seed);
    return [rng](size_t, const std::vector<Surd>& choices) -> size_t {
        return size_t((*rng)() % choices.size());
    };
}

std::vector<std::pair<Surd, HeckeRow>> hecke_walk_explore(const Surd& f, const Poly& P,
                                                          size_t depth,
                                                          const BranchChooser& chooser,
                                                          long long N, size_t budget) {
    require_irreducible(P);
    if (depth < 1) throw error(errc::invalid_argument, "walk depth must be >= 1");
    std::vector<std::pair<Surd, HeckeRow>> out;
    out.reserve(depth);
    Surd cur = f;
    bool have_prev = false;
    Surd prev;
    for (size_t step = 1; step <= depth; ++step) {
        std::vector<Surd> nb = hecke_neighbors(cur, P);
        std::vector<Surd> choices;
        choices.reserve(nb.size());
        for (const Surd& v : nb)
            if (!have_prev || v != prev) choices.push_back(v);
        size_t idx = chooser(step, choices);
        if (idx >= choices.size())
            throw error(errc::invalid_argument, "branch chooser returned an invalid index");
        Surd next = choices[idx];
        out.emplace_back(next, row_from_period(cfe_period(next, budget), (long long)step, N));
        prev = cur;
        have_prev = true;
        cur = next;
    }
    return out;
}

AtomicMeasure nu_f(const Surd& f, size_t budget) {
    PeriodicCfe per = cfe_period(f, budget);
    Rat w = Rat(1) / Rat((unsigned long long)per.ell());
    AtomicMeasure out;
    CfeIterator it(f);
    for (size_t i = 0; i < per.steps_to_cycle; ++i) it.step();
    for (size_t i = 0; i < per.ell(); ++i) {
        out.add(it.state_surd(), w);
        it.step();
    }
    return out;
}

Rat nu_lower_bound(const AtomicMeasure& nu, const AtomicMeasure& nu_target) {
    if (nu_target.atoms().empty())
        throw error(errc::invalid_argument, "comparison measure must be nonempty");
    bool first = true;
    Rat best = 0;
    for (const auto& [atom, w] : nu_target.atoms()) {
        Rat have = nu.weight(atom);
        if (have == 0) return Rat(0);
        Rat ratio = have / w;
        if (first || ratio < best) best = ratio;
        first = false;
    }
    return best;
}

Rat cylinder_measure(const CylinderSpec& c) {
    if (c.digits.empty()) throw error(errc::invalid_argument, "cylinder needs at least one digit");
    long long sum = 0;
    for (const Poly& a : c.digits) {
        if (a.is_zero() || a.deg() < 1)
            throw error(errc::constant_digit, "cylinder digits must be nonconstant");
        sum += a.deg();
    }
    return rat_pow(c.digits[0].ctx()->q(), -2 * sum);
}

MassConstants mass_constants(const FieldCtx* F, size_t cutoff) {
    const uint64_t q = F->q();
    MassConstants out;
    Rat qm1 = Rat(q) - 1;
    Rat scale = qm1 * qm1 / (Rat(2) * Rat(q));
    Rat acc = 0;
    out.partial_sums.reserve(cutoff);
    for (size_t n = 1; n <= cutoff; ++n) {
        // (q-1) q^n / q^{4n}
        acc += qm1 * rat_pow(q, (long long)n) * rat_pow(q, -4 * (long long)n);
        out.partial_sums.push_back(scale * acc);
    }
    Rat qq = Rat(q);
    Rat poly = qq * qq + qq + 1;
    out.series_value = qm1 * qm1 / (Rat(2) * qq * poly);
    out.paper_mass = rat_pow(q, 3) * qm1 * qm1 / (Rat(2) * poly);
    out.paper_fmx = rat_pow(q, 4) * qm1 * qm1 / (Rat(2) * poly);
    out.derived_fmx = qq * out.series_value;
    out.mismatch = (out.series_value != out.paper_mass);
    return out;
}

bool hecke_vertex_equivalent(const Surd& f, const Surd& g, size_t budget) {
    PeriodicCfe pf = cfe_period(f, budget);
    PeriodicCfe pg = cfe_period(g, budget);
    const FieldCtx* F = f.ctx();
    const size_t lf = pf.ell(), lg = pg.ell();
    const size_t window = 2 * std::lcm(lf, lg);
    // tails coincide up to rotation and an alternating unit twist
    for (size_t rot = 0; rot < lf; ++rot) {
        for (uint64_t u = 1; u < F->q(); ++u) {
            Fq unit = F->elem(u);
            Fq unit_inv = unit.inverse();
            for (int phase = 0; phase < 2; ++phase) {
                bool ok = true;
                for (size_t j = 0; j < window && ok; ++j) {
                    Fq tw = ((j + size_t(phase)) % 2 == 0) ? unit : unit_inv;
                    Poly lhs = pf.cycle[(rot + j) % lf] * tw;
                    ok = (lhs == pg.cycle[j % lg]);
                }
                if (ok) return true;
            }
        }
    }
    return false;
}

}  // namespace ffcf
