// Copyright 2026 The polyattain Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>

namespace polyattain {

/// Exact rational scalar. GMP keeps it in lowest terms with a positive
/// denominator after every arithmetic operation; division by zero throws.
using Rat = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                          boost::multiprecision::et_off>;
using Int = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                          boost::multiprecision::et_off>;

/// Parses "a", "-a" or "a/b" (decimal integers). Rejects floats, blanks,
/// zero denominators. The result is canonicalized.
Rat parse_rat(std::string_view text);

/// "a" when the denominator is 1, else "a/b".
std::string to_string(const Rat& r);

double to_double(const Rat& r);

inline int sign(const Rat& r) { return r.sign(); }

}  // namespace polyattain
