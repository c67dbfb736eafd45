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

#include "ffcf/cfe.hpp"

#include <map>

namespace ffcf {

CfeIterator::CfeIterator(const Surd& f) {
    a0_ = surd_integral_part(f);
    // fold {f} = ((A - a0*C) + B*sqrt(S))/C into (P + sqrt(D))/Q with
    // P = (A - a0*C)*C, Q = C^2, D = (B*C)^2*S, so that Q | D - P^2
    const Poly& C = f.c();
    Poly Af = f.a() - a0_ * C;
    state_.P = Af * C;
    state_.Q = C * C;
    BC_ = f.b() * C;
    S_ = f.s();
    state_.D = BC_ * BC_ * S_;
    T_ = surd_integral_part(surd_canonicalize(Poly(f.ctx()), BC_, Poly::one(f.ctx()), S_));
}

bool CfeIterator::state_valid() const {
    if (state_.Q.is_zero()) return false;
    return poly_divmod(state_.D - state_.P * state_.P, state_.Q).remainder.is_zero();
}

Poly CfeIterator::step() {
    // invert: 1/s = (-P + sqrt(D)) / ((D - P^2)/Q)
    Poly Pu = -state_.P;
    Poly Qu = poly_exact_div(state_.D - state_.P * state_.P, state_.Q);
    // a = [(Pu + sqrt(D))/Qu]; exact since {sqrt(D)}/Qu and rem/Qu lie in M
    Poly a = poly_divmod(Pu + T_, Qu).quotient;
    state_.P = Pu - a * Qu;
    state_.Q = std::move(Qu);
    return a;
}

Surd CfeIterator::state_surd() const {
    return surd_canonicalize(state_.P, BC_, state_.Q, S_);
}

std::pair<Poly, Surd> artin_step(const Surd& f) {
    if (surd_vinf(f) < 1) throw error(errc::not_in_m, "Artin step needs v_inf(f) >= 1");
    const FieldCtx* F = f.ctx();
    Surd inv = surd_moebius(Moebius::inversion(F), f);
    Poly digit = surd_integral_part(inv);
    Surd next = surd_moebius(Moebius::translation(-digit), inv);
    return {digit, next};
}

std::vector<Poly> cfe_expand(const Surd& f, size_t n) {
    CfeIterator it(f);
    std::vector<Poly> out;
    out.reserve(n + 1);
    out.push_back(it.integral_part());
    for (size_t i = 0; i < n; ++i) out.push_back(it.step());
    return out;
}

namespace {

// minimal cyclic string period of `digits`
size_t minimal_cycle(const std::vector<Poly>& digits) {
    const size_t L = digits.size();
    for (size_t ell = 1; ell <= L; ++ell) {
        if (L % ell != 0) continue;
        bool ok = true;
        for (size_t j = ell; j < L && ok; ++j) ok = (digits[j] == digits[j % ell]);
        if (ok) return ell;
    }
    return L;
}

struct OrbitScan {
    Poly a0;
    std::vector<Poly> digits;        // digits[t] = a_{t+1}, emitted from state t
    std::vector<CfeState> states;    // state t
    size_t entry;                    // index of the first state on the cycle
    size_t state_period;
    Surd entry_surd;
};

OrbitScan scan_orbit(const Surd& f, size_t budget) {
    CfeIterator it(f);
    OrbitScan scan;
    scan.a0 = it.integral_part();
    std::map<std::pair<Poly, Poly>, size_t> seen;
    for (size_t t = 0;; ++t) {
        auto key = std::make_pair(it.state().P, it.state().Q);
        auto [pos, inserted] = seen.emplace(key, t);
        if (!inserted) {
            scan.entry = pos->second;
            scan.state_period = t - pos->second;
            CfeIterator replay(f);
            for (size_t i = 0; i < scan.entry; ++i) replay.step();
            scan.entry_surd = replay.state_surd();
            return scan;
        }
        scan.states.push_back(it.state());
        if (t >= budget)
            throw error(errc::iteration_budget_exceeded,
                        "period not found within " + std::to_string(budget) + " states");
        scan.digits.push_back(it.step());
    }
}

}  // namespace

PeriodicCfe cfe_period(const Surd& f, size_t budget) {
    OrbitScan scan = scan_orbit(f, budget);
    PeriodicCfe out;
    out.steps_to_cycle = scan.entry;
    out.purely_periodic = (scan.entry == 0);
    out.cycle_entry = scan.entry_surd;
    out.preperiod.push_back(scan.a0);
    for (size_t i = 0; i < scan.entry; ++i) out.preperiod.push_back(scan.digits[i]);
    std::vector<Poly> raw(scan.digits.begin() + long(scan.entry), scan.digits.end());
    size_t ell = minimal_cycle(raw);
    out.cycle.assign(raw.begin(), raw.begin() + long(ell));
    return out;
}

CfeReduction cfe_reduce(const Surd& f, size_t budget) {
    OrbitScan scan = scan_orbit(f, budget);
    return {scan.entry, scan.entry_surd};
}

std::vector<std::pair<Poly, Poly>> convergents(const Surd& f, size_t n) {
    const FieldCtx* F = f.ctx();
    std::vector<Poly> a = cfe_expand(f, n);
    std::vector<std::pair<Poly, Poly>> out;
    out.reserve(n + 1);
    Poly p2 = Poly::one(F), p1 = a[0];
    Poly q2 = Poly(F), q1 = Poly::one(F);
    out.emplace_back(p1, q1);
    for (size_t i = 1; i <= n; ++i) {
        Poly p = a[i] * p1 + p2;
        Poly q = a[i] * q1 + q2;
        out.emplace_back(p, q);
        p2 = std::move(p1);
        p1 = std::move(p);
        q2 = std::move(q1);
        q1 = std::move(q);
    }
    return out;
}

std::pair<DegreeStats, Rat> degree_stats(const PeriodicCfe& c, long long N) {
    DegreeStats st;
    st.ell = c.cycle.size();
    for (const Poly& d : c.cycle) {
        int dd = d.deg();
        st.degs.push_back(dd);
        st.sum_deg += dd;
        st.max_deg = std::max<long long>(st.max_deg, dd);
    }
    st.lambda = 2 * st.sum_deg;
    Rat ratio = Rat(st.max_deg - N) / Rat(st.sum_deg);
    return {st, ratio};
}

}  // namespace ffcf
