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

#include "ffcf/field.hpp"

#include <algorithm>

namespace ffcf {

const char* errc_name(errc c) noexcept {
    switch (c) {
        case errc::not_prime: return "NotPrime";
        case errc::even_characteristic: return "EvenCharacteristic";
        case errc::reducible_modulus: return "ReducibleModulus";
        case errc::division_by_zero: return "DivisionByZero";
        case errc::both_zero: return "BothZero";
        case errc::constant_input: return "ConstantInput";
        case errc::zero_input: return "ZeroInput";
        case errc::zero_divisor: return "ZeroDivisor";
        case errc::odd_valuation: return "OddValuation";
        case errc::non_square_leading_coeff: return "NonSquareLeadingCoeff";
        case errc::insufficient_precision: return "InsufficientPrecision";
        case errc::square_discriminant: return "SquareDiscriminant";
        case errc::not_in_laurent_field: return "NotInLaurentField";
        case errc::singular_matrix: return "SingularMatrix";
        case errc::not_in_m: return "NotInM";
        case errc::not_reduced: return "NotReduced";
        case errc::iteration_budget_exceeded: return "IterationBudgetExceeded";
        case errc::reducible_p: return "ReducibleP";
        case errc::constant_digit: return "ConstantDigit";
        case errc::parse_error: return "ParseError";
        case errc::invalid_argument: return "InvalidArgument";
        case errc::internal: return "InternalError";
    }
    return "UnknownError";
}

bool is_prime_u64(uint64_t n) noexcept {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

namespace {

// F_p[t] helpers on plain digit vectors (ascending), used for modulus
// validation and extension-field arithmetic.

void fp_trim(std::vector<uint32_t>& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

std::vector<uint32_t> fp_mul(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b,
                             uint32_t p) {
    if (a.empty() || b.empty()) return {};
    std::vector<uint64_t> acc(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) acc[i + j] = (acc[i + j] + uint64_t(a[i]) * b[j]) % p;
    std::vector<uint32_t> out(acc.begin(), acc.end());
    fp_trim(out);
    return out;
}

uint32_t fp_inv_scalar(uint32_t a, uint32_t p) {
    // extended Euclid on integers
    int64_t t = 0, nt = 1, r = p, nr = a % p;
    while (nr != 0) {
        int64_t qq = r / nr;
        std::swap(t -= qq * nt, nt);
        std::swap(r -= qq * nr, nr);
    }
    if (t < 0) t += p;
    return uint32_t(t);
}

// a mod m, m monic
std::vector<uint32_t> fp_mod(std::vector<uint32_t> a, const std::vector<uint32_t>& m, uint32_t p) {
    fp_trim(a);
    const size_t dm = m.size() - 1;
    while (a.size() > dm) {
        uint32_t lead = a.back();
        size_t shift = a.size() - 1 - dm;
        if (lead != 0) {
            for (size_t i = 0; i <= dm; ++i) {
                uint64_t sub = (uint64_t(m[i]) * lead) % p;
                uint64_t cur = a[shift + i];
                a[shift + i] = uint32_t((cur + p - sub) % p);
            }
        }
        a.pop_back();
        fp_trim(a);
        if (a.size() <= dm) break;
    }
    return a;
}

bool fp_is_zero(const std::vector<uint32_t>& a) { return a.empty(); }

// Exhaustive trial division by monic polynomials of degree <= deg(m)/2.
// Fine for the small extension degrees this library targets.
bool fp_irreducible(const std::vector<uint32_t>& m, uint32_t p) {
    const size_t deg = m.size() - 1;
    if (deg == 1) return true;
    // iterate monic divisors of degree d = 1..deg/2
    for (size_t d = 1; 2 * d <= deg; ++d) {
        std::vector<uint32_t> div(d + 1, 0);
        div[d] = 1;
        uint64_t count = 1;
        for (size_t i = 0; i < d; ++i) count *= p;
        for (uint64_t k = 0; k < count; ++k) {
            uint64_t t = k;
            for (size_t i = 0; i < d; ++i) {
                div[i] = uint32_t(t % p);
                t /= p;
            }
            if (fp_is_zero(fp_mod(m, div, p))) return false;
        }
    }
    return true;
}

}  // namespace

FieldCtxPtr FieldCtx::make(uint32_t p, uint32_t e, const std::vector<uint32_t>& modulus) {
    if (p == 2) throw error(errc::even_characteristic, "characteristic 2 is not supported");
    if (!is_prime_u64(p)) throw error(errc::not_prime, "p = " + std::to_string(p) + " is not prime");
    if (e < 1) throw error(errc::invalid_argument, "extension degree must be >= 1");
    std::vector<uint32_t> mod = modulus;
    if (e == 1) {
        if (!mod.empty())
            throw error(errc::invalid_argument, "modulus must be absent for a prime field");
    } else {
        fp_trim(mod);
        if (mod.size() != size_t(e) + 1)
            throw error(errc::invalid_argument, "modulus degree must equal the extension degree");
        for (uint32_t c : mod)
            if (c >= p) throw error(errc::invalid_argument, "modulus coefficient out of range");
        if (mod.back() != 1) throw error(errc::invalid_argument, "modulus must be monic");
        if (!fp_irreducible(mod, p))
            throw error(errc::reducible_modulus, "modulus is reducible over F_p");
    }
    uint64_t q = 1;
    for (uint32_t i = 0; i < e; ++i) {
        if (q > UINT64_MAX / p) throw error(errc::invalid_argument, "q = p^e overflows");
        q *= p;
    }
    return FieldCtxPtr(new FieldCtx(p, e, std::move(mod), q));
}

void FieldCtx::decode(uint64_t v, uint32_t* digits) const {
    for (uint32_t i = 0; i < e_; ++i) {
        digits[i] = uint32_t(v % p_);
        v /= p_;
    }
}

uint64_t FieldCtx::encode(const uint32_t* digits) const {
    uint64_t v = 0;
    for (uint32_t i = e_; i-- > 0;) v = v * p_ + digits[i];
    return v;
}

uint64_t FieldCtx::add(uint64_t a, uint64_t b) const {
    if (e_ == 1) return (a + b) % p_;
    uint32_t da[64], db[64], dc[64];
    decode(a, da);
    decode(b, db);
    for (uint32_t i = 0; i < e_; ++i) dc[i] = (da[i] + db[i]) % p_;
    return encode(dc);
}

uint64_t FieldCtx::sub(uint64_t a, uint64_t b) const {
    if (e_ == 1) return (a + p_ - b % p_) % p_;
    uint32_t da[64], db[64], dc[64];
    decode(a, da);
    decode(b, db);
    for (uint32_t i = 0; i < e_; ++i) dc[i] = (da[i] + p_ - db[i]) % p_;
    return encode(dc);
}

uint64_t FieldCtx::neg(uint64_t a) const { return sub(0, a); }

uint64_t FieldCtx::mul(uint64_t a, uint64_t b) const {
    if (e_ == 1) return (a * b) % p_;
    uint32_t da[64], db[64];
    decode(a, da);
    decode(b, db);
    std::vector<uint32_t> va(da, da + e_), vb(db, db + e_);
    fp_trim(va);
    fp_trim(vb);
    std::vector<uint32_t> prod = fp_mod(fp_mul(va, vb, p_), mod_, p_);
    prod.resize(e_, 0);
    return encode(prod.data());
}

uint64_t FieldCtx::pow(uint64_t a, uint64_t n) const {
    uint64_t r = 1, base = a;
    while (n) {
        if (n & 1) r = mul(r, base);
        base = mul(base, base);
        n >>= 1;
    }
    return r;
}

uint64_t FieldCtx::inv(uint64_t a) const {
    if (a == 0) throw error(errc::division_by_zero, "inverse of zero in F_q");
    if (e_ == 1) return fp_inv_scalar(uint32_t(a), p_);
    return pow(a, q_ - 2);
}

bool FieldCtx::is_square(uint64_t a) const {
    if (a == 0) return true;
    return pow(a, (q_ - 1) / 2) == 1;
}

std::optional<uint64_t> FieldCtx::sqrt(uint64_t a) const {
    if (a == 0) return 0;
    if (!is_square(a)) return std::nullopt;
    uint64_t r;
    if (e_ == 1 && p_ % 4 == 3) {
        r = pow(a, (p_ + 1) / 4);
    } else {
        // small fields: scan in canonical order
        r = 0;
        for (uint64_t x = 1; x < q_; ++x) {
            if (mul(x, x) == a) {
                r = x;
                break;
            }
        }
    }
    uint64_t r2 = neg(r);
    return std::min(r, r2);
}

Fq FieldCtx::elem(uint64_t packed) const {
    if (packed >= q_) throw error(errc::invalid_argument, "element value out of range");
    return Fq(packed, this);
}

Fq FieldCtx::scalar(int64_t n) const {
    int64_t m = n % int64_t(p_);
    if (m < 0) m += p_;
    return Fq(uint64_t(m), this);
}

Fq FieldCtx::zero() const { return Fq(0, this); }
Fq FieldCtx::one() const { return Fq(1, this); }

std::optional<Fq> fq_sqrt(Fq x) {
    auto r = x.ctx()->sqrt(x.value());
    if (!r) return std::nullopt;
    return Fq(*r, x.ctx());
}

}  // namespace ffcf
