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

#include "matcor/bigint.hpp"

#include <cctype>
#include <cmath>

#include "matcor/errors.hpp"

namespace matcor {
namespace {

bool is_integer_text(std::string_view text) {
  if (text.empty()) return false;
  std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (start == text.size()) return false;
  for (std::size_t k = start; k < text.size(); ++k) {
    if (!std::isdigit(static_cast<unsigned char>(text[k]))) return false;
  }
  return true;
}

BigInt parse_integer(std::string_view text) {
  if (!is_integer_text(text)) {
    throw InputError("malformed integer '" + std::string(text) + "'");
  }
  if (text[0] == '+') text.remove_prefix(1);
  return BigInt(std::string(text), 10);
}

}  // namespace

BigRational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return BigRational(parse_integer(text));
  }
  BigInt num = parse_integer(text.substr(0, slash));
  BigInt den = parse_integer(text.substr(slash + 1));
  if (den == 0) {
    throw InputError("zero denominator in '" + std::string(text) + "'");
  }
  BigRational value(num, den);
  value.canonicalize();
  return value;
}

std::string to_ratio_string(const BigRational& value) {
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

std::string to_decimal_string(const BigInt& value) { return value.get_str(); }

BigInt to_big(std::uint64_t value) {
  BigInt out;
  mpz_import(out.get_mpz_t(), 1, -1, sizeof(value), 0, 0, &value);
  return out;
}

BigInt factorial(unsigned n) {
  BigInt out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

BigInt binomial(unsigned n, unsigned k) {
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

BigInt power(const BigInt& base, unsigned exponent) {
  BigInt out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
  return out;
}

double to_double(const BigRational& value) { return value.get_d(); }

BigRational approximate_rational(double value, std::uint64_t max_denominator) {
  if (!std::isfinite(value)) throw InputError("cannot approximate a non-finite value");
  bool negative = value < 0;
  double x = std::fabs(value);
  // Convergents h/k of the continued fraction; stop before k exceeds the cap.
  BigInt h_prev = 1, h = static_cast<unsigned long>(std::floor(x));
  BigInt k_prev = 0, k = 1;
  double frac = x - std::floor(x);
  for (int iter = 0; iter < 64 && frac > 1e-15; ++iter) {
    double inv = 1.0 / frac;
    BigInt a = static_cast<unsigned long>(std::floor(inv));
    frac = inv - std::floor(inv);
    BigInt h_next = a * h + h_prev;
    BigInt k_next = a * k + k_prev;
    if (k_next > to_big(max_denominator)) break;
    h_prev = h;
    h = h_next;
    k_prev = k;
    k = k_next;
  }
  BigRational out(h, k);
  out.canonicalize();
  return negative ? BigRational(-out) : out;
}

}  // namespace matcor
