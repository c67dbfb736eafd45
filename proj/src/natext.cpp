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

#include "ffcf/natext.hpp"

#include <algorithm>

namespace ffcf {

namespace {

void check_pair(const NatExtPair& p, errc code, const char* who) {
    if (surd_vinf(p.plus) < 1)
        throw error(code, std::string(who) + ": xi_plus is not in M");
    if (surd_vinf(p.minus) >= 0)
        throw error(code, std::string(who) + ": xi_minus is not outside O");
}

}  // namespace

NatExtPair pair_make(const Surd& f) {
    NatExtPair p{surd_conjugate(f), f};
    check_pair(p, errc::not_reduced, "pair_make");
    return p;
}

std::pair<Poly, NatExtPair> natext_step(const NatExtPair& p) {
    const FieldCtx* F = p.plus.ctx();
    auto [a, next_plus] = artin_step(p.plus);
    // 1/xi_minus - a as one projective map
    Moebius m{-a, Poly::one(F), Poly::one(F), Poly(F)};
    NatExtPair next{surd_moebius(m, p.minus), next_plus};
    check_pair(next, errc::internal, "natext_step");
    return {a, next};
}

std::pair<Poly, NatExtPair> natext_unstep(const NatExtPair& p) {
    const FieldCtx* F = p.plus.ctx();
    Poly a = -surd_integral_part(p.minus);
    // z -> 1/(z + a)
    Moebius m{Poly(F), Poly::one(F), Poly::one(F), a};
    NatExtPair prev{surd_moebius(m, p.minus), surd_moebius(m, p.plus)};
    check_pair(prev, errc::internal, "natext_unstep");
    return {a, prev};
}

std::vector<Poly> coding_window(const NatExtPair& p, size_t m) {
    std::vector<Poly> past;   // a_0, a_{-1}, ..., a_{-m}
    NatExtPair cur = p;
    for (size_t i = 0; i <= m; ++i) {
        auto [d, prev] = natext_unstep(cur);
        past.push_back(d);
        cur = prev;
    }
    std::vector<Poly> out(past.rbegin(), past.rend());
    cur = p;
    for (size_t i = 0; i <= m; ++i) {
        auto [d, next] = natext_step(cur);
        out.push_back(d);
        cur = next;
    }
    return out;
}

long long first_return_time(const NatExtPair& p) {
    Surd inv = surd_moebius(Moebius::inversion(p.plus.ctx()), p.plus);
    Poly a1 = surd_integral_part(inv);
    return 2 * a1.deg();
}

void AtomicMeasure::add(const Surd& atom, const Rat& w) {
    if (w <= 0) throw error(errc::invalid_argument, "atom weight must be positive");
    auto [it, inserted] = atoms_.emplace(atom, w);
    if (!inserted) it->second += w;
}

Rat AtomicMeasure::total_mass() const {
    Rat t = 0;
    for (const auto& [atom, w] : atoms_) t += w;
    return t;
}

AtomicMeasure AtomicMeasure::normalized() const {
    Rat t = total_mass();
    if (t == 0) throw error(errc::invalid_argument, "cannot normalize the empty measure");
    AtomicMeasure out;
    for (const auto& [atom, w] : atoms_) out.atoms_.emplace(atom, w / t);
    return out;
}

Rat AtomicMeasure::weight(const Surd& atom) const {
    auto it = atoms_.find(atom);
    return it == atoms_.end() ? Rat(0) : it->second;
}

AtomicMeasure F_of_periodic_orbit(const Surd& f, size_t budget) {
    PeriodicCfe per = cfe_period(f, budget);
    long long sum = 0;
    for (const Poly& d : per.cycle) sum += d.deg();
    Rat w = Rat(1) / Rat(2 * sum);
    // walk the cycle collecting its l distinct points
    AtomicMeasure out;
    CfeIterator it(f);
    for (size_t i = 0; i < per.steps_to_cycle; ++i) it.step();
    for (size_t i = 0; i < per.ell(); ++i) {
        out.add(it.state_surd(), w);
        it.step();
    }
    if (out.atoms().size() != per.ell())
        throw error(errc::internal, "cycle points are not distinct");
    return out;
}

}  // namespace ffcf
