/*
   Copyright 2026 The gwa-skew Authors

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


#ifndef GWASKEW_RATIONAL_HPP
#define GWASKEW_RATIONAL_HPP

#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace gwa {

/// Raised when an operation's precondition fails (zero divisor, bad
/// parameter range, inadmissible data).
class DomainError : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

/// Raised by the parsers on malformed textual input.
class ParseError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/**
 * Exact rational number backed by GMP.
 *
 * Always kept in lowest terms with a positive denominator, so structural
 * equality is value equality and the textual form is canonical.
 */
class Rat {
  public:
    Rat() = default;
    Rat(long value) : value_(value) {}
    Rat(int value) : value_(value) {}
    Rat(long num, long den);
    explicit Rat(mpq_class value);

    /// Accepts "n" or "n/d" with an optional leading sign; d must be nonzero.
    static Rat parse(std::string_view text);

    const mpq_class& raw() const noexcept { return value_; }
    mpz_class numerator() const { return value_.get_num(); }
    mpz_class denominator() const { return value_.get_den(); }

    bool is_zero() const noexcept { return sgn(value_) == 0; }
    bool is_one() const noexcept { return value_ == 1; }
    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const noexcept { return sgn(value_); }

    /// "n" for integers, otherwise "n/d" in lowest terms.
    std::string str() const { return value_.get_str(); }

    Rat inverse() const;
    Rat pow(long exponent) const;

    Rat operator-() const { return Rat(mpq_class(-value_)); }
    Rat& operator+=(const Rat& other);
    Rat& operator-=(const Rat& other);
    Rat& operator*=(const Rat& other);
    Rat& operator/=(const Rat& other);

    friend Rat operator+(Rat lhs, const Rat& rhs) { return lhs += rhs; }
    friend Rat operator-(Rat lhs, const Rat& rhs) { return lhs -= rhs; }
    friend Rat operator*(Rat lhs, const Rat& rhs) { return lhs *= rhs; }
    friend Rat operator/(Rat lhs, const Rat& rhs) { return lhs /= rhs; }

    friend bool operator==(const Rat& lhs, const Rat& rhs) { return lhs.value_ == rhs.value_; }
    friend std::strong_ordering operator<=>(const Rat& lhs, const Rat& rhs) {
        int c = cmp(lhs.value_, rhs.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

  private:
    mpq_class value_;
};

/// A rational number is a root of unity iff it is 1 or -1.
bool is_root_of_unity(const Rat& q);

}  // namespace gwa

#endif  // GWASKEW_RATIONAL_HPP
