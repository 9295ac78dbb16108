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


#ifndef GWASKEW_LINALG_HPP
#define GWASKEW_LINALG_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "gwaskew/rational.hpp"

namespace gwa {

/// Dense row-major matrix over the rationals, sized for the small exact
/// systems that arise in witness searches and dimension counts.
class RatMatrix {
  public:
    RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Rat& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rat& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Rat> data_;
};

/// Reduced row echelon form in place; returns the pivot column of each pivot row.
std::vector<std::size_t> rref(RatMatrix& m);

std::size_t rank(RatMatrix m);

inline std::size_t nullity(const RatMatrix& m) { return m.cols() - rank(m); }

/// Some x with m x = rhs (free variables set to zero), or nullopt if inconsistent.
std::optional<std::vector<Rat>> solve(const RatMatrix& m, const std::vector<Rat>& rhs);

}  // namespace gwa

#endif  // GWASKEW_LINALG_HPP
