// Copyright 2026 The pfcodes Authors
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

#ifndef PFCODES_ZMOD_MATRIX_HPP
#define PFCODES_ZMOD_MATRIX_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace pfcodes {

using Residue = std::int64_t;
using BigCount = boost::multiprecision::cpp_int;

// Moduli are kept below 2^31 so that products of two residues fit in 64 bits.
inline constexpr Residue kMaxModulus = Residue{1} << 31;

/// Least nonnegative residue of `a` modulo `n`.
inline Residue mod(Residue a, Residue n) {
    Residue r = a % n;
    return r < 0 ? r + n : r;
}

struct ExtendedGcd {
    Residue g;
    Residue s;
    Residue t;
};

/// s*a + t*b = g = gcd(a, b) >= 0.
ExtendedGcd extended_gcd(Residue a, Residue b);

/// A unit u of Z_n with u*a = gcd(a, n) (mod n). Multiplying a row by u keeps
/// its span and turns the entry `a` into a divisor of n.
Residue unit_normalizer(Residue a, Residue n);

/// Multiplicative inverse of a unit; throws std::domain_error otherwise.
Residue inverse_mod(Residue a, Residue n);

BigCount big_pow(Residue base, std::size_t exponent);

/// Dense r x c matrix over Z_D with entries stored as least nonnegative residues.
class ZModMatrix {
public:
    ZModMatrix() = default;
    ZModMatrix(Residue modulus, std::size_t rows, std::size_t cols);

    /// Entries are reduced modulo `modulus`; all rows must have length `cols`.
    static ZModMatrix from_rows(Residue modulus, std::size_t cols,
                                const std::vector<std::vector<Residue>>& rows);
    static ZModMatrix identity(Residue modulus, std::size_t n);

    Residue modulus() const { return modulus_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0; }

    Residue operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    void set(std::size_t r, std::size_t c, Residue value) { data_[r * cols_ + c] = mod(value, modulus_); }

    std::span<const Residue> row(std::size_t r) const {
        return {data_.data() + r * cols_, cols_};
    }
    std::vector<Residue> row_vector(std::size_t r) const {
        auto s = row(r);
        return {s.begin(), s.end()};
    }
    std::vector<std::vector<Residue>> to_rows() const;

    /// Appends a row (reduced modulo D). Throws on length mismatch.
    void append_row(std::span<const Residue> values);

    ZModMatrix transpose() const;
    /// Matrix product (this * rhs) over Z_D.
    ZModMatrix operator*(const ZModMatrix& rhs) const;
    /// Row vector times matrix: v * this.
    std::vector<Residue> left_multiply(std::span<const Residue> v) const;

    /// Columns `keep` (in the given order) of this matrix.
    ZModMatrix select_columns(std::span<const std::size_t> keep) const;

    bool operator==(const ZModMatrix& other) const = default;

    std::string to_string() const;

private:
    Residue modulus_ = 2;
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Residue> data_;
};

/// Howell canonical form: the unique echelon basis of the row span over Z_D
/// whose pivots divide D, whose entries above each pivot are reduced below it,
/// and whose rows with k leading zeros span every span element with k leading
/// zeros. Zero rows are dropped, so the result has at most cols() rows.
ZModMatrix howell_form(const ZModMatrix& m);

/// Row span of a matrix held in Howell form, for repeated membership and
/// coset-reduction queries.
class RowSpan {
public:
    RowSpan(Residue modulus, std::size_t cols);
    explicit RowSpan(const ZModMatrix& generators);

    const ZModMatrix& basis() const { return basis_; }
    Residue modulus() const { return basis_.modulus(); }
    std::size_t cols() const { return basis_.cols(); }

    /// Canonical representative of v + span: pivot entries reduced below the pivot.
    std::vector<Residue> reduce(std::span<const Residue> v) const;
    bool contains(std::span<const Residue> v) const;
    /// |span|, the product of D / pivot over the basis rows.
    BigCount order() const;

private:
    ZModMatrix basis_;
    std::vector<std::size_t> pivot_cols_;
};

/// True iff v lies in the row span of m. Throws std::invalid_argument if
/// v.size() != m.cols().
bool in_row_span(const ZModMatrix& m, std::span<const Residue> v);

/// Number of distinct vectors in the row span of m.
BigCount span_order(const ZModMatrix& m);

/// Basis K (in Howell form) of the left kernel {x : x * m = 0 mod D}; K has
/// m.rows() columns and possibly zero rows.
ZModMatrix kernel_basis(const ZModMatrix& m);

/// Some x with x * m = b (mod D), or nullopt if none exists.
std::optional<std::vector<Residue>> solve_left(const ZModMatrix& m, std::span<const Residue> b);

}  // namespace pfcodes

#endif  // PFCODES_ZMOD_MATRIX_HPP
