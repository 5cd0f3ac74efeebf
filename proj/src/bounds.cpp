// Copyright 2026 The domgame Authors.
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

#include "domgame/bounds.hpp"

#include <gmp.h>
#include <mpfr.h>

#include <cmath>

#include "domgame/errors.hpp"
#include "domgame/params.hpp"

namespace domgame {

namespace {

// RAII holders for the MPFR/GMP values used in the certified comparisons.
class Mpfr {
 public:
  explicit Mpfr(mpfr_prec_t prec) { mpfr_init2(v_, prec); }
  ~Mpfr() { mpfr_clear(v_); }
  Mpfr(const Mpfr&) = delete;
  Mpfr& operator=(const Mpfr&) = delete;
  mpfr_ptr get() { return v_; }

 private:
  mpfr_t v_;
};

class Mpq {
 public:
  explicit Mpq(const Rational& q) {
    mpq_init(v_);
    mpz_t num, den;
    mpz_init(num);
    mpz_init(den);
    mpz_set_si(num, q.numerator());
    mpz_set_si(den, q.denominator());
    mpq_set_num(v_, num);
    mpq_set_den(v_, den);
    mpq_canonicalize(v_);
    mpz_clear(num);
    mpz_clear(den);
  }
  ~Mpq() { mpq_clear(v_); }
  Mpq(const Mpq&) = delete;
  Mpq& operator=(const Mpq&) = delete;
  mpq_srcptr get() const { return v_; }

 private:
  mpq_t v_;
};

// 2 (1 + ln(delta+1)) / (delta+1), rounded in direction `rnd`. Every step is
// monotone in its input, so rounding each step the same way bounds the
// result from that side.
void LogCoefficient(mpfr_ptr out, int delta, mpfr_rnd_t rnd) {
  mpfr_set_si(out, delta + 1, rnd);
  mpfr_log(out, out, rnd);
  mpfr_add_si(out, out, 1, rnd);
  mpfr_mul_si(out, out, 2, rnd);
  mpfr_div_si(out, out, delta + 1, rnd);
}

void RequireDelta(int delta) {
  if (delta < 2) throw InvalidInput("log bound needs delta >= 2, got " + std::to_string(delta));
}

}  // namespace

std::string ToString(BoundFamily f) {
  switch (f) {
    case BoundFamily::kGeneral23:
      return "general23";
    case BoundFamily::kDeg3:
      return "deg3";
    case BoundFamily::kDeg3StallerStart:
      return "deg3-staller-start";
    case BoundFamily::kMinDeg:
      return "mindeg";
    case BoundFamily::kMinDegStallerStart:
      return "mindeg-staller-start";
    case BoundFamily::kLogBound:
      return "log";
    case BoundFamily::kSandwich:
      return "sandwich";
  }
  return "?";
}

std::string ToString(Winner w) {
  switch (w) {
    case Winner::kPolynomial:
      return "polynomial";
    case Winner::kLog:
      return "log";
    case Winner::kUndecided:
      return "undecided";
  }
  return "?";
}

std::string BoundValue::label() const {
  switch (family) {
    case BoundFamily::kMinDeg:
      return "mindeg(" + std::to_string(param) + ")";
    case BoundFamily::kMinDegStallerStart:
      return "mindeg-staller-start(" + std::to_string(param) + ")";
    case BoundFamily::kLogBound:
      return "log(" + std::to_string(param) + ")";
    default:
      return ToString(family);
  }
}

std::int64_t floor_of(const Rational& q) {
  const std::int64_t n = q.numerator();
  const std::int64_t d = q.denominator();  // always positive
  std::int64_t f = n / d;
  if (n % d != 0 && n < 0) --f;
  return f;
}

Rational polynomial_coefficient(BoundFamily family, int d) {
  switch (family) {
    case BoundFamily::kGeneral23:
      return Rational(2, 3);
    case BoundFamily::kDeg3:
    case BoundFamily::kDeg3StallerStart:
      return Rational(34, 61);
    case BoundFamily::kMinDeg:
    case BoundFamily::kMinDegStallerStart: {
      const Params p = scheme_params(d);
      return Rational(p.a, p.s);
    }
    default:
      throw InvalidInput(ToString(family) + " has no polynomial coefficient");
  }
}

int compare_with_log_coefficient(const Rational& q, int delta, int max_precision_bits) {
  RequireDelta(delta);
  const Mpq mq(q);
  for (mpfr_prec_t prec = 64; prec <= max_precision_bits; prec *= 2) {
    Mpfr lo(prec), hi(prec);
    LogCoefficient(lo.get(), delta, MPFR_RNDD);
    LogCoefficient(hi.get(), delta, MPFR_RNDU);
    if (mpfr_cmp_q(lo.get(), mq.get()) > 0) return -1;
    if (mpfr_cmp_q(hi.get(), mq.get()) < 0) return +1;
  }
  return 0;
}

std::pair<double, double> log_coefficient_enclosure(int delta) {
  RequireDelta(delta);
  Mpfr lo(128), hi(128);
  LogCoefficient(lo.get(), delta, MPFR_RNDD);
  LogCoefficient(hi.get(), delta, MPFR_RNDU);
  return {mpfr_get_d(lo.get(), MPFR_RNDD), mpfr_get_d(hi.get(), MPFR_RNDU)};
}

BoundValue bound_value(BoundFamily family, std::int64_t n, int param) {
  if (n < 1) throw InvalidInput("bound needs n >= 1, got " + std::to_string(n));
  BoundValue b;
  b.family = family;
  b.n = n;
  b.param = param;
  switch (family) {
    case BoundFamily::kGeneral23:
    case BoundFamily::kDeg3:
      b.exact = polynomial_coefficient(family, 0) * n;
      break;
    case BoundFamily::kDeg3StallerStart:
      b.exact = Rational(34 * n - 27, 61);
      break;
    case BoundFamily::kMinDeg:
    case BoundFamily::kMinDegStallerStart: {
      if (param < 4 || param > kMaxParamD) {
        throw InvalidInput("MinDeg bound needs 4 <= d <= 64, got " + std::to_string(param));
      }
      const Params p = scheme_params(param);
      const Points excess = family == BoundFamily::kMinDeg ? 0 : staller_opening_excess(param);
      b.exact = Rational(p.a * n - excess, p.s);
      break;
    }
    case BoundFamily::kSandwich:
      if (param < 1) throw InvalidInput("sandwich bound needs gamma >= 1");
      b.exact = Rational(2 * static_cast<std::int64_t>(param) - 1);
      break;
    case BoundFamily::kLogBound: {
      RequireDelta(param);
      b.strict = true;
      const auto [lo, hi] = log_coefficient_enclosure(param);
      b.lo = std::nextafter(lo * static_cast<double>(n), -INFINITY);
      b.hi = std::nextafter(hi * static_cast<double>(n), INFINITY);
      // Largest L with L < coefficient * n, confirmed for L and refuted for
      // L + 1.
      const auto guess = static_cast<std::int64_t>(std::floor(b.hi));
      for (std::int64_t cand = guess + 1; cand >= std::max<std::int64_t>(guess - 2, 0); --cand) {
        const int below = compare_with_log_coefficient(Rational(cand, n), param);
        if (below == 0) break;
        if (below < 0) {
          if (compare_with_log_coefficient(Rational(cand + 1, n), param) > 0) b.floor = cand;
          break;
        }
      }
      return b;
    }
  }
  b.lo = boost::rational_cast<double>(*b.exact);
  b.hi = b.lo;
  b.floor = floor_of(*b.exact);
  return b;
}

std::vector<BoundComparison> compare_bounds(int lo, int hi) {
  if (lo < 3 || hi > kMaxParamD || lo > hi) {
    throw InvalidInput("d range must lie within [3, 64], got " + std::to_string(lo) + ".." +
                       std::to_string(hi));
  }
  std::vector<BoundComparison> rows;
  for (int d = lo; d <= hi; ++d) {
    BoundComparison row;
    row.d = d;
    row.polynomial = d == 3 ? polynomial_coefficient(BoundFamily::kDeg3, 3)
                            : polynomial_coefficient(BoundFamily::kMinDeg, d);
    std::tie(row.log_lo, row.log_hi) = log_coefficient_enclosure(d);
    const int sign = compare_with_log_coefficient(row.polynomial, d);
    row.winner = sign < 0 ? Winner::kPolynomial : sign > 0 ? Winner::kLog : Winner::kUndecided;
    rows.push_back(row);
  }
  return rows;
}

Rational parse_decimal(const std::string& text) {
  const auto dot = text.find('.');
  const std::string whole = text.substr(0, dot);
  const std::string frac = dot == std::string::npos ? "" : text.substr(dot + 1);
  auto digits = [](const std::string& s) {
    return !s.empty() && s.find_first_not_of("0123456789") == std::string::npos;
  };
  if (!digits(whole) || (dot != std::string::npos && !digits(frac)) || frac.size() > 15) {
    throw InvalidInput("not a plain decimal: '" + text + "'");
  }
  std::int64_t den = 1;
  for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
  const std::int64_t num = std::stoll(whole) * den + (frac.empty() ? 0 : std::stoll(frac));
  return Rational(num, den);
}

}  // namespace domgame
