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

#include "ffcf/surd.hpp"

#include <map>
#include <mutex>
#include <sstream>

namespace ffcf {

namespace {

/**
 * Shared memo of sqrt(S) series, one entry per kernel S, extended
 * monotonically. Hecke rays reuse a single kernel, so the recursion state
 * is kept and resumed instead of recomputed. Extensions happen under the
 * mutex; callers receive value copies, so readers never observe a partial
 * coefficient window.
 */
class SqrtCache {
   public:
    Laurent get(const Poly& S, long long count) {
        std::lock_guard<std::mutex> lock(mu_);
        Key key{S.ctx(), packed(S)};
        Entry& e = map_[key];
        const FieldCtx* F = S.ctx();
        const long long d = S.deg() / 2;
        if (e.g.empty()) {
            e.g.push_back(*fq_sqrt(S.lc()));
            e.half = (F->scalar(2) * e.g[0]).inverse();
        }
        while ((long long)e.g.size() < count) {
            // next coefficient of g in g^2 = S (indices relative to -deg S)
            long long k = (long long)e.g.size();
            Fq acc = F->zero();
            for (long long i = 1; i < k; ++i) acc = acc + e.g[size_t(i)] * e.g[size_t(k - i)];
            // S coefficient at series index -2d + k is the Y^{2d-k} coefficient
            Fq ck = S.coeff(int(2 * d - k));
            e.g.push_back((ck - acc) * e.half);
        }
        std::vector<Fq> window(e.g.begin(), e.g.begin() + long(count));
        return Laurent::from_coeffs(F, -d, std::move(window), -d + count);
    }

   private:
    using Key = std::pair<const FieldCtx*, std::vector<uint64_t>>;
    struct Entry {
        std::vector<Fq> g;
        Fq half;
    };

    static std::vector<uint64_t> packed(const Poly& S) {
        std::vector<uint64_t> out;
        out.reserve(S.coeffs().size());
        for (Fq c : S.coeffs()) out.push_back(c.value());
        return out;
    }

    std::mutex mu_;
    std::map<Key, Entry> map_;
};

SqrtCache& sqrt_cache() {
    static SqrtCache cache;
    return cache;
}

Laurent sqrt_s_series(const Poly& S, long long prec) {
    const long long d = S.deg() / 2;
    long long count = std::max<long long>(1, prec + d);
    return sqrt_cache().get(S, count);
}

}  // namespace

bool operator<(const Surd& x, const Surd& y) {
    if (int c = Poly::compare(x.s(), y.s())) return c < 0;
    if (int c = Poly::compare(x.c(), y.c())) return c < 0;
    if (int c = Poly::compare(x.a(), y.a())) return c < 0;
    return Poly::compare(x.b(), y.b()) < 0;
}

Surd surd_canonicalize(const Poly& A, const Poly& B, const Poly& C, const Poly& D) {
    const FieldCtx* F = C.ctx();
    if (C.is_zero()) throw error(errc::division_by_zero, "surd with zero denominator");
    if (B.is_zero() || D.is_zero())
        throw error(errc::square_discriminant, "element is rational (no surd part)");
    auto split = poly_squarefree_split(D);
    const Poly& S = split.s;
    if (!F->is_square(split.unit.value()))
        throw error(errc::not_in_laurent_field, "sqrt(D) not in F_q((Y^-1)): leading unit is a non-square");
    if (S.deg() == 0)
        throw error(errc::square_discriminant, "discriminant is a perfect square");
    if (S.deg() % 2 != 0)
        throw error(errc::not_in_laurent_field, "sqrt(D) not in F_q((Y^-1)): odd kernel degree");
    Poly B2 = B * split.m * Poly::constant(*fq_sqrt(split.unit));
    Poly A2 = A, C2 = C;
    Poly g = poly_gcd(poly_gcd(A2, B2), C2);
    if (g.deg() > 0) {
        A2 = poly_exact_div(A2, g);
        B2 = poly_exact_div(B2, g);
        C2 = poly_exact_div(C2, g);
    }
    Fq u = C2.lc();
    if (!u.is_one()) {
        Fq iu = u.inverse();
        A2 = A2 * iu;
        B2 = B2 * iu;
        C2 = C2 * iu;
    }
    return Surd(std::move(A2), std::move(B2), std::move(C2), S);
}

Surd surd_conjugate(const Surd& f) { return Surd(f.a(), -f.b(), f.c(), f.s()); }

Surd surd_moebius(const Moebius& M, const Surd& f) {
    if (M.det().is_zero()) throw error(errc::singular_matrix, "Moebius matrix is singular");
    // (a*f + b)/(c*f + d) with f = (A + B*sqrt(S))/C, rationalized by the
    // conjugate of the denominator; the kernel S is preserved.
    const Poly N1 = M.a * f.a() + M.b * f.c();
    const Poly N2 = M.a * f.b();
    const Poly D1 = M.c * f.a() + M.d * f.c();
    const Poly D2 = M.c * f.b();
    Poly A = N1 * D1 - N2 * D2 * f.s();
    Poly B = N2 * D1 - N1 * D2;
    Poly C = D1 * D1 - D2 * D2 * f.s();
    return surd_canonicalize(A, B, C, f.s());
}

Laurent surd_to_laurent(const Surd& f, long long prec) {
    const long long degB = f.b().is_zero() ? 0 : f.b().deg();
    const long long degC = f.c().deg();
    long long slack = degC + degB + f.s().deg() / 2 + 8;
    for (int attempt = 0; attempt < 48; ++attempt) {
        long long need = prec + slack;
        Laurent sq = sqrt_s_series(f.s(), need);
        Laurent num = Laurent::from_poly(f.a()) + Laurent::from_poly(f.b()) * sq;
        Laurent res;
        if (f.c().deg() == 0) {
            res = num;  // C is monic constant 1
        } else {
            Laurent ic = lau_inv(Laurent::from_poly(f.c()), need + degC + degB + 2);
            res = num * ic;
        }
        if (res.prec() >= prec) return res.truncated(prec);
        slack *= 2;
    }
    throw error(errc::internal, "surd_to_laurent failed to reach requested precision");
}

long long surd_vinf(const Surd& f) {
    for (long long p = 8; p <= (1LL << 24); p *= 2) {
        Laurent L = surd_to_laurent(f, p);
        if (!L.is_zero_to_prec()) return L.lead_index();
    }
    throw error(errc::internal, "surd valuation did not resolve; element may be rational");
}

bool is_in_m(const Surd& f) { return surd_vinf(f) >= 1; }
bool is_in_co(const Surd& f) { return surd_vinf(f) < 0; }

Poly surd_integral_part(const Surd& f) {
    Laurent L = surd_to_laurent(f, 1);
    if (L.is_zero_to_prec()) return Poly(f.ctx());
    return lau_int_frac(L).integral;
}

namespace {

FracPoly reduce_fraction(Poly num, Poly den) {
    if (den.is_zero()) throw error(errc::division_by_zero, "fraction with zero denominator");
    if (num.is_zero()) return {num, Poly::one(den.ctx())};
    Poly g = poly_gcd(num, den);
    num = poly_exact_div(num, g);
    den = poly_exact_div(den, g);
    Fq u = den.lc();
    if (!u.is_one()) {
        Fq iu = u.inverse();
        num = num * iu;
        den = den * iu;
    }
    return {num, den};
}

}  // namespace

TraceNorm surd_trace_norm(const Surd& f) {
    const FieldCtx* F = f.ctx();
    Poly two = Poly::constant(F->scalar(2));
    FracPoly trace = reduce_fraction(two * f.a(), f.c());
    FracPoly norm = reduce_fraction(f.a() * f.a() - f.b() * f.b() * f.s(), f.c() * f.c());
    return {trace, norm};
}

Moebius Moebius::identity(const FieldCtx* F) {
    return {Poly::one(F), Poly(F), Poly(F), Poly::one(F)};
}
Moebius Moebius::inversion(const FieldCtx* F) {
    return {Poly(F), Poly::one(F), Poly::one(F), Poly(F)};
}
Moebius Moebius::translation(const Poly& t) {
    const FieldCtx* F = t.ctx();
    return {Poly::one(F), t, Poly(F), Poly::one(F)};
}
Moebius Moebius::scaling(const Poly& P) {
    const FieldCtx* F = P.ctx();
    return {P, Poly(F), Poly(F), Poly::one(F)};
}
Moebius Moebius::add_div(const Poly& b, const Poly& P) {
    const FieldCtx* F = P.ctx();
    return {Poly::one(F), b, Poly(F), P};
}

std::string Surd::str() const {
    std::ostringstream out;
    out << "(" << A_.str() << " + (" << B_.str() << ")*sqrt(" << S_.str() << "))/(" << C_.str()
        << ")";
    return out.str();
}

namespace {

std::string poly_literal(const Poly& P) {
    if (P.is_zero()) return "0";
    std::ostringstream out;
    for (int i = 0; i <= P.deg(); ++i) {
        if (i) out << ",";
        out << P.coeff(i).value();
    }
    return out.str();
}

}  // namespace

std::string Surd::literal() const {
    return poly_literal(A_) + "|" + poly_literal(B_) + "|" + poly_literal(C_) + "|" +
           poly_literal(S_);
}

Surd parse_surd(const FieldCtx* F, const std::string& text) {
    std::vector<std::string> parts;
    std::string tok;
    std::istringstream in(text);
    while (std::getline(in, tok, '|')) parts.push_back(tok);
    if (parts.size() != 4)
        throw error(errc::parse_error, "surd literal must be A|B|C|S");
    Poly A = parse_poly(F, parts[0]);
    Poly B = parse_poly(F, parts[1]);
    Poly C = parse_poly(F, parts[2]);
    Poly S = parse_poly(F, parts[3]);
    return surd_canonicalize(A, B, C, S);
}

}  // namespace ffcf
