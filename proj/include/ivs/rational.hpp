// Copyright 2026 The ivs Authors
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

#ifndef IVS_RATIONAL_HPP
#define IVS_RATIONAL_HPP

#include <boost/rational.hpp>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace ivs {

// Exact rational scalar. All geometry in the library is done in Q; there is
// no floating point anywhere on a semantic path.
using Q = boost::rational<long long>;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParseError : Error {
  using Error::Error;
};

inline Q q_abs(const Q& x) { return x < Q(0) ? -x : x; }
inline const Q& q_min(const Q& a, const Q& b) { return b < a ? b : a; }
inline const Q& q_max(const Q& a, const Q& b) { return a < b ? b : a; }

inline int q_sign(const Q& x) {
  if (x < Q(0)) return -1;
  if (Q(0) < x) return 1;
  return 0;
}

// Canonical text form: reduced "p/q", with "/1" omitted.
inline std::string q_str(const Q& x) {
  std::string s = std::to_string(x.numerator());
  if (x.denominator() != 1) {
    s += '/';
    s += std::to_string(x.denominator());
  }
  return s;
}

// Parses "-3", "7/2", "-1/5". Leading '+' is accepted.
inline Q parse_q(const std::string& s) {
  if (s.empty()) throw ParseError("empty rational");
  std::size_t slash = s.find('/');
  try {
    if (slash == std::string::npos) {
      return Q(std::stoll(s));
    }
    long long num = std::stoll(s.substr(0, slash));
    long long den = std::stoll(s.substr(slash + 1));
    if (den == 0) throw ParseError("zero denominator in '" + s + "'");
    return Q(num, den);
  } catch (const std::invalid_argument&) {
    throw ParseError("bad rational '" + s + "'");
  } catch (const std::out_of_range&) {
    throw ParseError("rational out of range '" + s + "'");
  }
}

}  // namespace ivs

#endif  // IVS_RATIONAL_HPP
