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

#include "ffcf/laurent.hpp"

#include <algorithm>
#include <sstream>

namespace ffcf {

namespace {

long long clamp_prec(long long p) { return std::min(p, kPrecExact); }

long long prec_shift(long long p, long long d) {
    if (p >= kPrecExact) return kPrecExact;
    return clamp_prec(p + d);
}

}  // namespace

void Laurent::normalize() {
    // strip unknown-leading zeros, keep the window contiguous
    size_t lead = 0;
    while (lead < c_.size() && c_[lead].is_zero()) ++lead;
    if (lead == c_.size()) {
        c_.clear();
        v_ = prec_;
        return;
    }
    if (lead > 0) {
        c_.erase(c_.begin(), c_.begin() + long(lead));
        v_ += (long long)lead;
    }
    if (is_exact()) {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    } else {
        // window must span [v, prec)
        c_.resize(size_t(prec_ - v_), F_->zero());
    }
}

Laurent Laurent::zero_to(const FieldCtx* F, long long prec) {
    Laurent r;
    r.F_ = F;
    r.prec_ = clamp_prec(prec);
    r.v_ = r.prec_;
    return r;
}

Laurent Laurent::from_poly(const Poly& P) {
    if (P.is_zero()) return zero(P.ctx());
    Laurent r;
    r.F_ = P.ctx();
    r.v_ = -P.deg();
    r.prec_ = kPrecExact;
    r.c_.reserve(size_t(P.deg()) + 1);
    for (int i = P.deg(); i >= 0; --i) r.c_.push_back(P.coeff(i));
    r.normalize();
    return r;
}

Laurent Laurent::from_coeffs(const FieldCtx* F, long long v, std::vector<Fq> coeffs,
                             long long prec) {
    Laurent r;
    r.F_ = F;
    r.v_ = v;
    r.c_ = std::move(coeffs);
    r.prec_ = clamp_prec(prec);
    if (!r.is_exact()) r.c_.resize(size_t(std::max<long long>(0, r.prec_ - r.v_)), F->zero());
    r.normalize();
    return r;
}

Laurent Laurent::monomial(Fq c, long long k) {
    if (c.is_zero()) return zero(c.ctx());
    Laurent r;
    r.F_ = c.ctx();
    r.v_ = k;
    r.c_ = {c};
    r.prec_ = kPrecExact;
    return r;
}

std::optional<long long> Laurent::vinf() const {
    if (!c_.empty()) return v_;
    if (is_exact()) return std::nullopt;
    throw error(errc::insufficient_precision,
                "series is zero to precision " + std::to_string(prec_) +
                    "; valuation undetermined");
}

Fq Laurent::coeff(long long k) const {
    if (!knows(k)) throw error(errc::insufficient_precision, "coefficient beyond precision");
    if (c_.empty() || k < v_) return F_->zero();
    long long i = k - v_;
    if (size_t(i) >= c_.size()) return F_->zero();  // exact tail
    return c_[size_t(i)];
}

Laurent Laurent::operator-() const {
    Laurent r = *this;
    for (Fq& a : r.c_) a = -a;
    return r;
}

Laurent operator+(const Laurent& a, const Laurent& b) {
    assert(a.F_ == b.F_);
    const FieldCtx* F = a.F_;
    long long prec = std::min(a.prec_, b.prec_);
    long long lo = std::min(a.c_.empty() ? prec : a.v_, b.c_.empty() ? prec : b.v_);
    if (lo >= prec) return Laurent::zero_to(F, prec);
    long long hi = prec;
    if (prec == kPrecExact) {
        hi = std::max(a.c_.empty() ? lo : a.v_ + (long long)a.c_.size(),
                      b.c_.empty() ? lo : b.v_ + (long long)b.c_.size());
    }
    std::vector<Fq> out(size_t(hi - lo), F->zero());
    for (long long k = lo; k < hi; ++k) {
        Fq x = (k < a.prec_) ? a.coeff(k) : F->zero();
        Fq y = (k < b.prec_) ? b.coeff(k) : F->zero();
        out[size_t(k - lo)] = x + y;
    }
    return Laurent::from_coeffs(F, lo, std::move(out), prec);
}

Laurent operator-(const Laurent& a, const Laurent& b) { return a + (-b); }

Laurent operator*(const Laurent& a, const Laurent& b) {
    assert(a.F_ == b.F_);
    const FieldCtx* F = a.F_;
    // provable precision: min(prec_a + v_b, prec_b + v_a)
    if (a.is_exact_zero() || b.is_exact_zero()) return Laurent::zero(F);
    long long va = a.c_.empty() ? a.prec_ : a.v_;
    long long vb = b.c_.empty() ? b.prec_ : b.v_;
    long long prec = std::min(prec_shift(a.prec_, vb), prec_shift(b.prec_, va));
    if (a.c_.empty() || b.c_.empty()) return Laurent::zero_to(F, prec);
    long long lo = va + vb;
    long long hi;
    if (prec == kPrecExact)
        hi = (a.v_ + (long long)a.c_.size() - 1) + (b.v_ + (long long)b.c_.size() - 1) + 1;
    else
        hi = prec;
    if (lo >= hi) return Laurent::zero_to(F, prec);
    std::vector<Fq> out(size_t(hi - lo), F->zero());
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        long long ka = a.v_ + (long long)i;
        for (size_t j = 0; j < b.c_.size(); ++j) {
            long long k = ka + b.v_ + (long long)j;
            if (k >= hi) break;
            out[size_t(k - lo)] = out[size_t(k - lo)] + a.c_[i] * b.c_[j];
        }
    }
    return Laurent::from_coeffs(F, lo, std::move(out), prec);
}

Laurent Laurent::operator*(Fq s) const {
    if (s.is_zero()) return is_exact() ? zero(F_) : zero_to(F_, prec_);
    Laurent r = *this;
    for (Fq& a : r.c_) a = a * s;
    return r;
}

Laurent Laurent::truncated(long long p) const {
    p = clamp_prec(p);
    if (p >= prec_) return *this;
    Laurent r;
    r.F_ = F_;
    r.prec_ = p;
    if (c_.empty() || v_ >= p) return zero_to(F_, p);
    r.v_ = v_;
    r.c_.assign(c_.begin(), c_.begin() + std::min<long long>((long long)c_.size(), p - v_));
    r.c_.resize(size_t(p - v_), F_->zero());
    r.normalize();
    return r;
}

std::optional<long long> lau_vinf(const Laurent& f) { return f.vinf(); }

Laurent lau_inv(const Laurent& f, long long want) {
    if (f.is_zero_to_prec())
        throw error(errc::zero_divisor, "no nonzero coefficient before prec");
    const FieldCtx* F = f.ctx();
    const long long v = f.lead_index();
    // `want` is the requested output precision when f is exact; otherwise
    // the largest provable precision is used
    const long long count = std::max<long long>(1, f.is_exact() ? want + v : f.prec() - v);
    // g = 1/f with v_inf(g) = -v; forward substitution on f*g = 1
    Fq ic = f.lead_coeff().inverse();
    std::vector<Fq> g(size_t(count), F->zero());
    g[0] = ic;
    for (long long k = 1; k < count; ++k) {
        Fq acc = F->zero();
        for (long long j = 1; j <= k; ++j) {
            Fq cf = f.knows(v + j) ? f.coeff(v + j) : F->zero();
            if (!cf.is_zero()) acc = acc + cf * g[size_t(k - j)];
        }
        g[size_t(k)] = -(ic * acc);
    }
    long long gprec = f.is_exact() ? (-v + count) : clamp_prec(f.prec() - 2 * v);
    return Laurent::from_coeffs(F, -v, std::move(g), gprec);
}

Laurent lau_sqrt(const Laurent& f, long long want) {
    if (f.is_exact_zero()) return f;
    if (f.is_zero_to_prec())
        throw error(errc::insufficient_precision, "square root of a series with no known leading term");
    const FieldCtx* F = f.ctx();
    const long long v = f.lead_index();
    if (v % 2 != 0) throw error(errc::odd_valuation, "v_inf is odd; sqrt not in F_q((Y^-1))");
    auto r0 = fq_sqrt(f.lead_coeff());
    if (!r0) throw error(errc::non_square_leading_coeff, "leading coefficient is a non-square");
    const long long count = std::max<long long>(1, f.is_exact() ? want - v / 2 : f.prec() - v);
    // coefficient recursion on g^2 = f (p odd, so 2 g_0 is invertible)
    std::vector<Fq> g(size_t(count), F->zero());
    g[0] = *r0;
    Fq half = (F->scalar(2) * g[0]).inverse();
    for (long long k = 1; k < count; ++k) {
        Fq acc = F->zero();
        for (long long i = 1; i < k; ++i) acc = acc + g[size_t(i)] * g[size_t(k - i)];
        Fq ck = f.knows(v + k) ? f.coeff(v + k) : F->zero();
        g[size_t(k)] = (ck - acc) * half;
    }
    long long gprec = f.is_exact() ? (v / 2 + count) : clamp_prec(f.prec() - v / 2);
    return Laurent::from_coeffs(F, v / 2, std::move(g), gprec);
}

IntFrac lau_int_frac(const Laurent& f) {
    const FieldCtx* F = f.ctx();
    if (f.prec() < 1)
        throw error(errc::insufficient_precision, "polynomial part needs prec >= 1");
    if (f.is_zero_to_prec()) return {Poly(F), Laurent::zero_to(F, f.prec())};
    const long long v = f.lead_index();
    if (v >= 1) return {Poly(F), f};
    // indices v..0 give the polynomial part: coefficient of Y^{-k} -> Y^{|k|}
    std::vector<Fq> pc(size_t(-v) + 1, F->zero());
    for (long long k = v; k <= 0; ++k) pc[size_t(-k)] = f.coeff(k);
    Poly integral(F, std::move(pc));
    Laurent frac = f - Laurent::from_poly(integral);
    return {integral, frac};
}

bool lau_agree(const Laurent& a, const Laurent& b) {
    long long prec = std::min(a.prec(), b.prec());
    if (a.is_zero_to_prec() && b.is_zero_to_prec()) return true;
    long long lo = std::min(a.is_zero_to_prec() ? prec : a.lead_index(),
                            b.is_zero_to_prec() ? prec : b.lead_index());
    // exact-exact: the union of the stored supports covers everything
    long long hi = (prec == kPrecExact) ? std::max(a.end_index(), b.end_index()) : prec;
    for (long long k = lo; k < hi; ++k) {
        if (a.coeff(k) != b.coeff(k)) return false;
    }
    return true;
}

std::string Laurent::str() const {
    std::ostringstream out;
    bool first = true;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        long long k = v_ + (long long)i;
        long long e = -k;
        if (!first) out << " + ";
        first = false;
        if (e == 0) {
            out << c_[i].value();
        } else {
            if (!c_[i].is_one()) out << c_[i].value() << "*";
            out << "Y";
            if (e != 1) out << "^" << e;
        }
    }
    if (!is_exact()) {
        if (!first) out << " + ";
        out << "O(Y^" << -prec_ << ")";
        first = false;
    }
    if (first) out << "0";
    return out.str();
}

}  // namespace ffcf
