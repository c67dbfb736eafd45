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

#include "ffcf/poly.hpp"

#include <algorithm>
#include <sstream>

namespace ffcf {

Poly Poly::constant(Fq a) {
    Poly r(a.ctx());
    if (!a.is_zero()) r.c_.push_back(a);
    return r;
}

Poly Poly::y(const FieldCtx* F) {
    Poly r(F);
    r.c_ = {F->zero(), F->one()};
    return r;
}

Poly Poly::from_values(const FieldCtx* F, const std::vector<uint64_t>& vals) {
    std::vector<Fq> c;
    c.reserve(vals.size());
    for (uint64_t v : vals) c.push_back(F->elem(v));
    return Poly(F, std::move(c));
}

Poly Poly::operator-() const {
    Poly r(F_);
    r.c_.reserve(c_.size());
    for (Fq a : c_) r.c_.push_back(-a);
    return r;
}

Poly operator+(const Poly& a, const Poly& b) {
    assert(a.F_ == b.F_);
    Poly r(a.F_);
    r.c_.resize(std::max(a.c_.size(), b.c_.size()), a.F_->zero());
    for (size_t i = 0; i < r.c_.size(); ++i) {
        Fq x = i < a.c_.size() ? a.c_[i] : a.F_->zero();
        Fq y = i < b.c_.size() ? b.c_[i] : a.F_->zero();
        r.c_[i] = x + y;
    }
    r.trim();
    return r;
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

namespace {

// schoolbook product of coefficient spans
std::vector<Fq> mul_school(const FieldCtx* F, const Fq* a, size_t na, const Fq* b, size_t nb) {
    std::vector<Fq> out(na + nb - 1, F->zero());
    for (size_t i = 0; i < na; ++i) {
        if (a[i].is_zero()) continue;
        for (size_t j = 0; j < nb; ++j) out[i + j] = out[i + j] + a[i] * b[j];
    }
    return out;
}

constexpr size_t kKaratsubaCutoff = 64;

std::vector<Fq> mul_rec(const FieldCtx* F, const Fq* a, size_t na, const Fq* b, size_t nb) {
    if (na == 0 || nb == 0) return {};
    if (std::min(na, nb) <= kKaratsubaCutoff) return mul_school(F, a, na, b, nb);
    // Karatsuba; scans can produce large-degree operands
    size_t h = std::max(na, nb) / 2;
    size_t la = std::min(na, h), lb = std::min(nb, h);
    std::vector<Fq> a0(a, a + la), a1(a + la, a + na);
    std::vector<Fq> b0(b, b + lb), b1(b + lb, b + nb);
    if (a1.empty() || b1.empty()) {
        // lopsided split; fall back to distributing over the halves
        std::vector<Fq> out(na + nb - 1, F->zero());
        auto add_shift = [&](const std::vector<Fq>& part, size_t shift) {
            for (size_t i = 0; i < part.size(); ++i) out[i + shift] = out[i + shift] + part[i];
        };
        if (!a1.empty()) {
            add_shift(mul_rec(F, a0.data(), a0.size(), b, nb), 0);
            add_shift(mul_rec(F, a1.data(), a1.size(), b, nb), la);
        } else {
            add_shift(mul_rec(F, a, na, b0.data(), b0.size()), 0);
            add_shift(mul_rec(F, a, na, b1.data(), b1.size()), lb);
        }
        return out;
    }
    auto z0 = mul_rec(F, a0.data(), a0.size(), b0.data(), b0.size());
    auto z2 = mul_rec(F, a1.data(), a1.size(), b1.data(), b1.size());
    std::vector<Fq> sa(std::max(a0.size(), a1.size()), F->zero());
    std::vector<Fq> sb(std::max(b0.size(), b1.size()), F->zero());
    for (size_t i = 0; i < sa.size(); ++i) {
        Fq x = i < a0.size() ? a0[i] : F->zero();
        Fq y = i < a1.size() ? a1[i] : F->zero();
        sa[i] = x + y;
    }
    for (size_t i = 0; i < sb.size(); ++i) {
        Fq x = i < b0.size() ? b0[i] : F->zero();
        Fq y = i < b1.size() ? b1[i] : F->zero();
        sb[i] = x + y;
    }
    auto z1 = mul_rec(F, sa.data(), sa.size(), sb.data(), sb.size());
    std::vector<Fq> out(na + nb - 1, F->zero());
    auto axpy = [&](const std::vector<Fq>& src, size_t shift, bool negate) {
        for (size_t i = 0; i < src.size(); ++i) {
            Fq t = negate ? -src[i] : src[i];
            if (i + shift < out.size()) out[i + shift] = out[i + shift] + t;
        }
    };
    axpy(z0, 0, false);
    axpy(z2, 2 * h, false);
    axpy(z1, h, false);
    axpy(z0, h, true);
    axpy(z2, h, true);
    return out;
}

}  // namespace

Poly operator*(const Poly& a, const Poly& b) {
    assert(a.F_ == b.F_);
    if (a.is_zero() || b.is_zero()) return Poly(a.F_);
    Poly r(a.F_, mul_rec(a.F_, a.c_.data(), a.c_.size(), b.c_.data(), b.c_.size()));
    return r;
}

Poly Poly::operator*(Fq s) const {
    if (s.is_zero()) return Poly(F_);
    Poly r(F_);
    r.c_.reserve(c_.size());
    for (Fq a : c_) r.c_.push_back(a * s);
    r.trim();
    return r;
}

bool operator==(const Poly& a, const Poly& b) {
    if (a.F_ != b.F_ || a.c_.size() != b.c_.size()) return false;
    for (size_t i = 0; i < a.c_.size(); ++i)
        if (a.c_[i] != b.c_[i]) return false;
    return true;
}

Poly Poly::monic() const {
    assert(!c_.empty());
    if (c_.back().is_one()) return *this;
    return *this * c_.back().inverse();
}

Poly Poly::derivative() const {
    Poly r(F_);
    for (size_t i = 1; i < c_.size(); ++i) r.c_.push_back(c_[i] * F_->scalar(int64_t(i)));
    r.trim();
    return r;
}

Poly Poly::shifted(int k) const {
    assert(k >= 0);
    if (is_zero()) return *this;
    Poly r(F_);
    r.c_.assign(size_t(k), F_->zero());
    r.c_.insert(r.c_.end(), c_.begin(), c_.end());
    return r;
}

int Poly::compare(const Poly& a, const Poly& b) {
    if (a.c_.size() != b.c_.size()) return a.c_.size() < b.c_.size() ? -1 : 1;
    for (size_t i = a.c_.size(); i-- > 0;) {
        if (a.c_[i].value() != b.c_[i].value())
            return a.c_[i].value() < b.c_[i].value() ? -1 : 1;
    }
    return 0;
}

DivModResult poly_divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw error(errc::division_by_zero, "polynomial division by zero");
    const FieldCtx* F = a.ctx();
    if (a.is_zero() || a.deg() < b.deg()) return {Poly(F), a};
    Fq ilc = b.lc().inverse();
    std::vector<Fq> rem(a.coeffs());
    int db = b.deg();
    std::vector<Fq> quo(size_t(a.deg() - db) + 1, F->zero());
    for (int i = a.deg(); i >= db; --i) {
        Fq c = rem[size_t(i)];
        if (c.is_zero()) continue;
        Fq f = c * ilc;
        quo[size_t(i - db)] = f;
        for (int j = 0; j <= db; ++j)
            rem[size_t(i - db + j)] = rem[size_t(i - db + j)] - f * b.coeff(j);
    }
    return {Poly(F, std::move(quo)), Poly(F, std::move(rem))};
}

Poly poly_exact_div(const Poly& a, const Poly& b) {
    auto [q, r] = poly_divmod(a, b);
    if (!r.is_zero()) throw error(errc::invalid_argument, "inexact polynomial division");
    return q;
}

Poly poly_gcd(const Poly& a, const Poly& b) {
    if (a.is_zero() && b.is_zero()) throw error(errc::both_zero, "gcd(0, 0) is undefined");
    Poly x = a, y = b;
    while (!y.is_zero()) {
        Poly r = poly_divmod(x, y).remainder;
        x = y;
        y = r;
    }
    return x.monic();
}

namespace {

// g^n mod m in F_q[Y]
Poly powmod(const Poly& g, uint64_t n, const Poly& m) {
    Poly r = Poly::one(g.ctx());
    Poly base = poly_divmod(g, m).remainder;
    while (n) {
        if (n & 1) r = poly_divmod(r * base, m).remainder;
        base = poly_divmod(base * base, m).remainder;
        n >>= 1;
    }
    return r;
}

std::vector<int> prime_factors(int n) {
    std::vector<int> out;
    for (int d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

}  // namespace

bool poly_is_irreducible(const Poly& P) {
    if (P.is_zero() || P.deg() < 1)
        throw error(errc::constant_input, "irreducibility needs deg >= 1");
    const FieldCtx* F = P.ctx();
    Poly m = P.monic();
    int n = m.deg();
    if (n == 1) return true;
    const uint64_t q = F->q();
    const Poly y = Poly::y(F);
    // Rabin: x^{q^n} == x mod P, and gcd(x^{q^{n/r}} - x, P) = 1 for prime r | n.
    // Frobenius powers are iterated q-th powers in the quotient ring.
    std::vector<Poly> frob(size_t(n) + 1, Poly(F));
    frob[0] = poly_divmod(y, m).remainder;
    for (int k = 1; k <= n; ++k) frob[size_t(k)] = powmod(frob[size_t(k - 1)], q, m);
    if (frob[size_t(n)] != poly_divmod(y, m).remainder) return false;
    for (int r : prime_factors(n)) {
        Poly h = frob[size_t(n / r)] - poly_divmod(y, m).remainder;
        if (h.is_zero()) return false;
        if (poly_gcd(h, m).deg() != 0) return false;
    }
    return true;
}

namespace {

// p-th root of a monic polynomial whose derivative vanishes
Poly pth_root(const Poly& D) {
    const FieldCtx* F = D.ctx();
    const uint32_t p = F->p();
    const uint32_t e = F->e();
    std::vector<Fq> out;
    for (int i = 0; i <= D.deg(); ++i) {
        Fq c = D.coeff(i);
        if (i % int(p) != 0) {
            if (!c.is_zero()) throw error(errc::internal, "pth_root: not a p-th power");
            continue;
        }
        // root of c under Frobenius: c^{p^{e-1}}
        uint64_t ex = 1;
        for (uint32_t k = 0; k + 1 < e; ++k) ex *= p;
        out.push_back(Fq(F->pow(c.value(), ex), F));
    }
    return Poly(F, std::move(out));
}

// D monic; returns (S, m) with D = S * m^2, S monic squarefree
std::pair<Poly, Poly> sqsplit_monic(const Poly& D) {
    const FieldCtx* F = D.ctx();
    const Poly one = Poly::one(F);
    if (D.deg() == 0) return {one, one};
    Poly Dp = D.derivative();
    if (Dp.is_zero()) {
        // D = H^p with p odd: H^p = s^p m^{2p} = s * (s^{(p-1)/2} m^p)^2
        Poly H = pth_root(D);
        auto [s, m] = sqsplit_monic(H);
        Poly extra = one;
        for (uint32_t i = 0; i < (F->p() - 1) / 2; ++i) extra = extra * s;
        Poly mp = one;
        for (uint32_t i = 0; i < F->p(); ++i) mp = mp * m;
        return {s, extra * mp};
    }
    Poly g = poly_gcd(D, Dp);
    if (g.deg() == 0) return {D, one};
    Poly w = poly_exact_div(D, g);
    auto [s2, m2] = sqsplit_monic(g);
    Poly t = poly_gcd(w, s2);
    Poly S = poly_exact_div(w, t) * poly_exact_div(s2, t);
    return {S, m2 * t};
}

}  // namespace

SquarefreeSplit poly_squarefree_split(const Poly& D) {
    if (D.is_zero()) throw error(errc::zero_input, "squarefree split of zero");
    Fq u = D.lc();
    auto [s, m] = sqsplit_monic(D.monic());
    return {s, m, u};
}

Poly parse_poly(const FieldCtx* F, const std::string& text) {
    std::vector<uint64_t> vals;
    std::string tok;
    std::istringstream in(text);
    while (std::getline(in, tok, ',')) {
        size_t b = tok.find_first_not_of(" \t");
        size_t e = tok.find_last_not_of(" \t");
        if (b == std::string::npos) throw error(errc::parse_error, "empty coefficient in '" + text + "'");
        tok = tok.substr(b, e - b + 1);
        uint64_t v = 0;
        for (char ch : tok) {
            if (ch < '0' || ch > '9')
                throw error(errc::parse_error, "bad coefficient '" + tok + "'");
            v = v * 10 + uint64_t(ch - '0');
            if (v >= F->q() * 10) break;  // avoid overflow while scanning junk
        }
        if (v >= F->q())
            throw error(errc::parse_error, "coefficient " + tok + " out of range for q=" +
                                               std::to_string(F->q()));
        vals.push_back(v);
    }
    if (vals.empty()) throw error(errc::parse_error, "empty polynomial literal");
    return Poly::from_values(F, vals);
}

std::string Poly::str() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int i = deg(); i >= 0; --i) {
        Fq c = coeff(i);
        if (c.is_zero()) continue;
        if (!first) out << "+";
        first = false;
        if (i == 0) {
            out << c.value();
        } else {
            if (!c.is_one()) out << c.value() << "*";
            out << "Y";
            if (i > 1) out << "^" << i;
        }
    }
    return out.str();
}

}  // namespace ffcf
