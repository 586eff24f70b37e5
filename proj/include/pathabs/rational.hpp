// Copyright (c) pathabs contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>

namespace pathabs {

/// Exact arbitrary-precision fraction, always kept in lowest terms with a
/// positive denominator. Expression templates are off so the type composes
/// with Eigen's own expression machinery.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;

/// Renders `p/q`, including `q = 1`.
std::string to_string(const Rational& r);

/// True when gcd(|num|, den) = 1 and den > 0.
bool is_canonical(const Rational& r);

/// Parses `<num>/<den>` (decimal digits, den > 0) or a bare non-negative
/// integer. Returns false on anything else; signs are not accepted.
bool parse_rational(std::string_view text, Rational& out);

}  // namespace pathabs
