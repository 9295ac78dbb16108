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


#include "gwaskew/rational.hpp"

#include <cctype>

namespace gwa {

Rat::Rat(long num, long den) {
    if (den == 0) throw DomainError("rational with zero denominator");
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

Rat::Rat(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

namespace {

bool is_integer_literal(std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

mpz_class parse_integer(std::string_view s) {
    std::string text(s);
    if (!text.empty() && text.front() == '+') text.erase(0, 1);
    return mpz_class(text, 10);
}

}  // namespace

Rat Rat::parse(std::string_view text) {
    auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    if (!is_integer_literal(num)) throw ParseError("malformed rational: '" + std::string(text) + "'");
    if (slash == std::string_view::npos) return Rat(mpq_class(parse_integer(num)));
    std::string_view den = text.substr(slash + 1);
    if (!is_integer_literal(den) || den.front() == '-' || den.front() == '+')
        throw ParseError("malformed rational: '" + std::string(text) + "'");
    mpz_class d = parse_integer(den);
    if (d == 0) throw ParseError("rational with zero denominator: '" + std::string(text) + "'");
    return Rat(mpq_class(parse_integer(num), d));
}

Rat Rat::inverse() const {
    if (is_zero()) throw DomainError("inverse of zero");
    return Rat(mpq_class(1) / value_);
}

Rat Rat::pow(long exponent) const {
    if (exponent < 0) return inverse().pow(-exponent);
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), value_.get_num_mpz_t(), static_cast<unsigned long>(exponent));
    mpz_pow_ui(den.get_mpz_t(), value_.get_den_mpz_t(), static_cast<unsigned long>(exponent));
    return Rat(mpq_class(num, den));
}

Rat& Rat::operator+=(const Rat& other) {
    value_ += other.value_;
    return *this;
}

Rat& Rat::operator-=(const Rat& other) {
    value_ -= other.value_;
    return *this;
}

Rat& Rat::operator*=(const Rat& other) {
    value_ *= other.value_;
    return *this;
}

Rat& Rat::operator/=(const Rat& other) {
    if (other.is_zero()) throw DomainError("division by zero");
    value_ /= other.value_;
    return *this;
}

bool is_root_of_unity(const Rat& q) {
    if (q.is_zero()) throw DomainError("is_root_of_unity: q must be nonzero");
    return q == Rat(1) || q == Rat(-1);
}

}  // namespace gwa
