// Copyright 2023 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace matcor {

using BigInt = mpz_class;
using BigRational = mpq_class;

// Parses "p/q", "-p/q" or a plain integer. The result is canonical.
// Throws InputError on malformed text or a zero denominator.
BigRational parse_rational(std::string_view text);

// Always "p/q", including "n/1" for integers.
std::string to_ratio_string(const BigRational& value);

std::string to_decimal_string(const BigInt& value);

BigInt to_big(std::uint64_t value);

BigInt factorial(unsigned n);

BigInt binomial(unsigned n, unsigned k);

BigInt power(const BigInt& base, unsigned exponent);

// Nearest double. Reporting only; never feeds an exact comparison.
double to_double(const BigRational& value);

// Rational approximation with denominator at most max_denominator
// (best approximation by continued fractions).
BigRational approximate_rational(double value, std::uint64_t max_denominator);

}  // namespace matcor
