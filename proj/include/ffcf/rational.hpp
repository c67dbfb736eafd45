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

#ifndef FFCF_RATIONAL_HPP
#define FFCF_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>

namespace ffcf {

using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// "num/den", or just "num" when the denominator is 1.
inline std::string rat_str(const Rat& r) {
    BigInt n = boost::multiprecision::numerator(r);
    BigInt d = boost::multiprecision::denominator(r);
    std::string out = n.str();
    if (d != 1) out += "/" + d.str();
    return out;
}

/// q^e as an exact rational; e may be negative.
inline Rat rat_pow(uint64_t q, long long e) {
    BigInt num = 1;
    for (long long i = 0; i < (e < 0 ? -e : e); ++i) num *= q;
    if (e >= 0) return Rat(num);
    return Rat(1, num);
}

}  // namespace ffcf

#endif  // FFCF_RATIONAL_HPP
