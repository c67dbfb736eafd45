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

#ifndef FFCF_SURD_HPP
#define FFCF_SURD_HPP

#include <string>

#include "ffcf/laurent.hpp"
#include "ffcf/poly.hpp"

namespace ffcf {

/**
 * Canonical quadratic irrational f = (A + B*sqrt(S))/C over K = F_q(Y),
 * realized inside K^ = F_q((Y^-1)).
 *
 * Canonical form: S monic squarefree of even degree >= 2 (hence not a
 * square), B != 0, C monic, gcd(A, B, C) = 1. sqrt(S) always denotes the
 * Laurent branch with leading coefficient 1; since F_q carries no
 * positivity, some branch must be fixed, and this one is basis-free.
 * Galois conjugation is B -> -B.
 */
class Surd {
   public:
    Surd() = default;

    const Poly& a() const noexcept { return A_; }
    const Poly& b() const noexcept { return B_; }
    const Poly& c() const noexcept { return C_; }
    const Poly& s() const noexcept { return S_; }
    const FieldCtx* ctx() const noexcept { return A_.ctx(); }

    friend bool operator==(const Surd& x, const Surd& y) {
        return x.A_ == y.A_ && x.B_ == y.B_ && x.C_ == y.C_ && x.S_ == y.S_;
    }
    friend bool operator!=(const Surd& x, const Surd& y) { return !(x == y); }
    friend bool operator<(const Surd& x, const Surd& y);

    /// Pretty form "(A + B*sqrt(S))/C".
    std::string str() const;
    /// Machine literal "A|B|C|S" (comma coefficient lists).
    std::string literal() const;

   private:
    friend Surd surd_canonicalize(const Poly&, const Poly&, const Poly&, const Poly&);
    friend Surd surd_conjugate(const Surd&);
    Surd(Poly A, Poly B, Poly C, Poly S)
        : A_(std::move(A)), B_(std::move(B)), C_(std::move(C)), S_(std::move(S)) {}

    Poly A_, B_, C_, S_;
};

/// 2x2 matrix over R acting projectively; PGL_2(K) elements are used after
/// clearing denominators to polynomial entries.
struct Moebius {
    Poly a, b, c, d;

    Poly det() const { return a * d - b * c; }

    static Moebius identity(const FieldCtx* F);
    /// z -> 1/z
    static Moebius inversion(const FieldCtx* F);
    /// z -> z + t
    static Moebius translation(const Poly& t);
    /// z -> P*z
    static Moebius scaling(const Poly& P);
    /// z -> (z + b)/P
    static Moebius add_div(const Poly& b, const Poly& P);

    friend Moebius operator*(const Moebius& m, const Moebius& n) {
        return {m.a * n.a + m.b * n.c, m.a * n.b + m.b * n.d, m.c * n.a + m.d * n.c,
                m.c * n.b + m.d * n.d};
    }
};

/// Normal form of (A + B*sqrt(D))/C: extracts the squarefree kernel of D,
/// absorbs the square part and the canonical root of the leading unit into
/// B, reduces the common gcd, and makes C monic.
/// Throws SquareDiscriminant when the element is rational, and
/// NotInLaurentField when sqrt(D) does not exist in F_q((Y^-1)).
Surd surd_canonicalize(const Poly& A, const Poly& B, const Poly& C, const Poly& D);

/// Galois conjugate (A - B*sqrt(S))/C; an involution.
Surd surd_conjugate(const Surd& f);

/// Projective action (a*f + b)/(c*f + d); throws SingularMatrix.
Surd surd_moebius(const Moebius& M, const Surd& f);

/// Series embedding to the requested precision (exclusive coefficient
/// index). Extends the shared sqrt(S) series on demand.
Laurent surd_to_laurent(const Surd& f, long long prec);

/// [f], computed exactly from a sufficient-precision embedding.
Poly surd_integral_part(const Surd& f);

/// Exact valuation v_inf(f); finite since f is irrational.
long long surd_vinf(const Surd& f);

/// f in M (v_inf >= 1).
bool is_in_m(const Surd& f);
/// f in the complement of O (v_inf < 0).
bool is_in_co(const Surd& f);

/// Reduced fraction of polynomials (denominator monic).
struct FracPoly {
    Poly num;
    Poly den;

    friend bool operator==(const FracPoly& x, const FracPoly& y) {
        return x.num == y.num && x.den == y.den;
    }
};

struct TraceNorm {
    FracPoly trace;  // f + f^sigma
    FracPoly norm;   // f * f^sigma
};

/// Trace and norm over K; f is a root of x^2 - trace*x + norm.
TraceNorm surd_trace_norm(const Surd& f);

/// Parses "A|B|C|S" with comma coefficient lists and canonicalizes.
Surd parse_surd(const FieldCtx* F, const std::string& text);

}  // namespace ffcf

#endif  // FFCF_SURD_HPP
