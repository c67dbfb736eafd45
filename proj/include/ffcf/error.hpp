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

#ifndef FFCF_ERROR_HPP
#define FFCF_ERROR_HPP

#include <stdexcept>
#include <string>

namespace ffcf {

enum class errc {
    not_prime,
    even_characteristic,
    reducible_modulus,
    division_by_zero,
    both_zero,
    constant_input,
    zero_input,
    zero_divisor,
    odd_valuation,
    non_square_leading_coeff,
    insufficient_precision,
    square_discriminant,
    not_in_laurent_field,
    singular_matrix,
    not_in_m,
    not_reduced,
    iteration_budget_exceeded,
    reducible_p,
    constant_digit,
    parse_error,
    invalid_argument,
    internal,
};

const char* errc_name(errc c) noexcept;

/// Library-wide exception carrying a machine-checkable error code.
class error : public std::runtime_error {
   public:
    error(errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    errc code() const noexcept { return code_; }

   private:
    errc code_;
};

}  // namespace ffcf

#endif  // FFCF_ERROR_HPP
