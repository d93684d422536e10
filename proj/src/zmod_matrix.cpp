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

#include "pfcodes/zmod_matrix.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace pfcodes {

namespace {

void check_modulus(Residue n) {
    if (n < 2 || n >= kMaxModulus) {
        throw std::invalid_argument("modulus must satisfy 2 <= D < 2^31, got " + std::to_string(n));
    }
}

using Row = std::vector<Residue>;

// row_a <- s*a + t*b, row_b <- -(b/g)*a + (a/g)*b; the 2x2 transform has
// determinant 1, so the pair spans the same module and row_b[col] becomes 0.
void gcd_combine(Row& a, Row& b, std::size_t col, Residue n) {
    const Residue x = a[col];
    const Residue y = b[col];
    const auto [g, s, t] = extended_gcd(x, y);
    const Residue u = x / g;
    const Residue v = y / g;
    for (std::size_t j = col; j < a.size(); ++j) {
        const Residue aj = a[j];
        const Residue bj = b[j];
        a[j] = mod(mod(s, n) * aj + mod(t, n) * bj, n);
        b[j] = mod(mod(-v, n) * aj + mod(u, n) * bj, n);
    }
}

void scale_row(Row& r, Residue factor, Residue n, std::size_t from = 0) {
    for (std::size_t j = from; j < r.size(); ++j) r[j] = mod(r[j] * factor, n);
}

// r <- r - q*p
void subtract_multiple(Row& r, const Row& p, Residue q, Residue n, std::size_t from = 0) {
    if (q == 0) return;
    for (std::size_t j = from; j < r.size(); ++j) r[j] = mod(r[j] - q * p[j], n);
}

bool is_zero(std::span<const Residue> v) {
    return std::all_of(v.begin(), v.end(), [](Residue x) { return x == 0; });
}

}  // namespace

ExtendedGcd extended_gcd(Residue a, Residue b) {
    Residue old_r = a, r = b;
    Residue old_s = 1, s = 0;
    Residue old_t = 0, t = 1;
    while (r != 0) {
        const Residue q = old_r / r;
        old_r = std::exchange(r, old_r - q * r);
        old_s = std::exchange(s, old_s - q * s);
        old_t = std::exchange(t, old_t - q * t);
    }
    if (old_r < 0) return {-old_r, -old_s, -old_t};
    return {old_r, old_s, old_t};
}

Residue unit_normalizer(Residue a, Residue n) {
    a = mod(a, n);
    if (a == 0) return 1;
    const auto [g, s, t] = extended_gcd(a, n);
    const Residue step = n / g;
    // s is determined modulo n/g; one lift in s + k*(n/g), 0 <= k < g, is a unit.
    for (Residue k = 0; k < g; ++k) {
        const Residue u = mod(s + k * step, n);
        if (std::gcd(u, n) == 1) return u;
    }
    throw std::logic_error("unit_normalizer: no unit lift found");
}

Residue inverse_mod(Residue a, Residue n) {
    const auto [g, s, t] = extended_gcd(mod(a, n), n);
    if (g != 1) throw std::domain_error("inverse_mod: " + std::to_string(a) + " is not a unit mod " + std::to_string(n));
    return mod(s, n);
}

BigCount big_pow(Residue base, std::size_t exponent) {
    BigCount result = 1;
    for (std::size_t i = 0; i < exponent; ++i) result *= base;
    return result;
}

ZModMatrix::ZModMatrix(Residue modulus, std::size_t rows, std::size_t cols)
    : modulus_(modulus), rows_(rows), cols_(cols), data_(rows * cols, 0) {
    check_modulus(modulus);
}

ZModMatrix ZModMatrix::from_rows(Residue modulus, std::size_t cols, const std::vector<std::vector<Residue>>& rows) {
    ZModMatrix m(modulus, 0, cols);
    for (const auto& r : rows) m.append_row(r);
    return m;
}

ZModMatrix ZModMatrix::identity(Residue modulus, std::size_t n) {
    ZModMatrix m(modulus, n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

std::vector<std::vector<Residue>> ZModMatrix::to_rows() const {
    std::vector<std::vector<Residue>> out;
    out.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out.push_back(row_vector(r));
    return out;
}

void ZModMatrix::append_row(std::span<const Residue> values) {
    if (values.size() != cols_) {
        throw std::invalid_argument("append_row: expected " + std::to_string(cols_) + " entries, got " +
                                    std::to_string(values.size()));
    }
    for (Residue v : values) data_.push_back(mod(v, modulus_));
    ++rows_;
}

ZModMatrix ZModMatrix::transpose() const {
    ZModMatrix t(modulus_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t.data_[c * rows_ + r] = (*this)(r, c);
    return t;
}

ZModMatrix ZModMatrix::operator*(const ZModMatrix& rhs) const {
    if (modulus_ != rhs.modulus_ || cols_ != rhs.rows_) {
        throw std::invalid_argument("matrix product: incompatible operands");
    }
    ZModMatrix out(modulus_, rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t k = 0; k < cols_; ++k) {
            const Residue a = (*this)(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j) {
                Residue& o = out.data_[i * rhs.cols_ + j];
                o = (o + a * rhs(k, j)) % modulus_;
            }
        }
    }
    return out;
}

std::vector<Residue> ZModMatrix::left_multiply(std::span<const Residue> v) const {
    if (v.size() != rows_) throw std::invalid_argument("left_multiply: dimension mismatch");
    std::vector<Residue> out(cols_, 0);
    for (std::size_t i = 0; i < rows_; ++i) {
        const Residue a = mod(v[i], modulus_);
        if (a == 0) continue;
        for (std::size_t j = 0; j < cols_; ++j) out[j] = (out[j] + a * (*this)(i, j)) % modulus_;
    }
    return out;
}

ZModMatrix ZModMatrix::select_columns(std::span<const std::size_t> keep) const {
    ZModMatrix out(modulus_, rows_, keep.size());
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t j = 0; j < keep.size(); ++j) out.data_[r * keep.size() + j] = (*this)(r, keep[j]);
    return out;
}

std::string ZModMatrix::to_string() const {
    std::ostringstream os;
    os << "Z_" << modulus_ << " " << rows_ << "x" << cols_ << "\n";
    for (std::size_t r = 0; r < rows_; ++r) {
        os << "[";
        for (std::size_t c = 0; c < cols_; ++c) os << (c ? " " : "") << (*this)(r, c);
        os << "]\n";
    }
    return os.str();
}

ZModMatrix howell_form(const ZModMatrix& m) {
    const Residue n = m.modulus();
    const std::size_t cols = m.cols();
    std::vector<Row> work;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        if (!is_zero(m.row(r))) work.push_back(m.row_vector(r));
    }

    std::size_t pivot = 0;
    for (std::size_t col = 0; col < cols && pivot < work.size(); ++col) {
        for (std::size_t i = pivot; i < work.size(); ++i) {
            if (work[i][col] == 0) continue;
            if (i == pivot) continue;
            if (work[pivot][col] == 0) {
                std::swap(work[pivot], work[i]);
                continue;
            }
            gcd_combine(work[pivot], work[i], col, n);
        }
        Row& p = work[pivot];
        if (p[col] == 0) continue;

        scale_row(p, unit_normalizer(p[col], n), n, col);
        const Residue g = p[col];
        for (std::size_t r = 0; r < pivot; ++r) subtract_multiple(work[r], p, work[r][col] / g, n, col);

        // (D/g)*p vanishes at col; keeping it as a later row gives the Howell property.
        if (g != 1) {
            Row ann = p;
            scale_row(ann, n / g, n, col);
            if (!is_zero(ann)) work.push_back(std::move(ann));
        }
        ++pivot;
    }

    ZModMatrix out(n, 0, cols);
    for (std::size_t r = 0; r < pivot; ++r) out.append_row(work[r]);
    return out;
}

RowSpan::RowSpan(Residue modulus, std::size_t cols) : basis_(modulus, 0, cols) {}

RowSpan::RowSpan(const ZModMatrix& generators) : basis_(howell_form(generators)) {
    for (std::size_t r = 0; r < basis_.rows(); ++r) {
        auto row = basis_.row(r);
        const auto it = std::find_if(row.begin(), row.end(), [](Residue x) { return x != 0; });
        pivot_cols_.push_back(static_cast<std::size_t>(it - row.begin()));
    }
}

std::vector<Residue> RowSpan::reduce(std::span<const Residue> v) const {
    if (v.size() != cols()) {
        throw std::invalid_argument("span membership: vector has " + std::to_string(v.size()) +
                                    " entries, matrix has " + std::to_string(cols()) + " columns");
    }
    const Residue n = modulus();
    std::vector<Residue> w(v.size());
    for (std::size_t j = 0; j < v.size(); ++j) w[j] = mod(v[j], n);
    for (std::size_t r = 0; r < basis_.rows(); ++r) {
        const std::size_t pc = pivot_cols_[r];
        const Residue q = w[pc] / basis_(r, pc);
        if (q == 0) continue;
        auto row = basis_.row(r);
        for (std::size_t j = pc; j < w.size(); ++j) w[j] = mod(w[j] - q * row[j], n);
    }
    return w;
}

bool RowSpan::contains(std::span<const Residue> v) const { return is_zero(reduce(v)); }

BigCount RowSpan::order() const {
    BigCount total = 1;
    for (std::size_t r = 0; r < basis_.rows(); ++r) total *= modulus() / basis_(r, pivot_cols_[r]);
    return total;
}

bool in_row_span(const ZModMatrix& m, std::span<const Residue> v) { return RowSpan(m).contains(v); }

BigCount span_order(const ZModMatrix& m) { return RowSpan(m).order(); }

ZModMatrix kernel_basis(const ZModMatrix& m) {
    const std::size_t r = m.rows();
    const std::size_t c = m.cols();
    // Span of [M | I] is {(xM, x)}; its Howell rows with c leading zeros span the kernel.
    ZModMatrix aug(m.modulus(), 0, c + r);
    Row buf(c + r);
    for (std::size_t i = 0; i < r; ++i) {
        std::fill(buf.begin(), buf.end(), 0);
        for (std::size_t j = 0; j < c; ++j) buf[j] = m(i, j);
        buf[c + i] = 1;
        aug.append_row(buf);
    }
    const ZModMatrix h = howell_form(aug);
    ZModMatrix k(m.modulus(), 0, r);
    for (std::size_t i = 0; i < h.rows(); ++i) {
        auto row = h.row(i);
        if (!is_zero(row.first(c))) continue;
        k.append_row(row.subspan(c));
    }
    return k;
}

std::optional<std::vector<Residue>> solve_left(const ZModMatrix& m, std::span<const Residue> b) {
    if (b.size() != m.cols()) throw std::invalid_argument("solve_left: right-hand side has wrong length");
    const Residue n = m.modulus();
    const std::size_t r = m.rows();
    // y * [ -b ; M ] = 0 with y_0 = 1 gives x = y_1..y_r.
    ZModMatrix stacked(n, 0, m.cols());
    Row neg_b(b.size());
    for (std::size_t j = 0; j < b.size(); ++j) neg_b[j] = mod(-b[j], n);
    stacked.append_row(neg_b);
    for (std::size_t i = 0; i < r; ++i) stacked.append_row(m.row(i));

    const ZModMatrix h = howell_form(kernel_basis(stacked));
    if (h.rows() == 0 || h(0, 0) != 1) return std::nullopt;
    std::vector<Residue> x(h.row(0).begin() + 1, h.row(0).end());
    // Canonical representative modulo the homogeneous solutions.
    return RowSpan(kernel_basis(m)).reduce(x);
}

}  // namespace pfcodes
