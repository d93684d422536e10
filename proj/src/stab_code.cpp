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

#include "pfcodes/stab_code.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "pfcodes/kernels.hpp"

namespace pfcodes {

namespace {

bool all_zero(std::span<const Residue> v) {
    return std::all_of(v.begin(), v.end(), [](Residue x) { return x == 0; });
}

// Product of g_j^{x_j}; the caller guarantees the generators commute.
PfOperator relation_product(const std::vector<PfOperator>& gens, std::span<const Residue> x, Residue d,
                            std::size_t num_modes) {
    PfOperator acc(d, num_modes);
    for (std::size_t j = 0; j < gens.size(); ++j) {
        if (x[j] != 0) acc = multiply(acc, power(gens[j], static_cast<std::uint64_t>(mod(x[j], d))));
    }
    return acc;
}

ModeLayout chain_layout(std::size_t num_modes) {
    ModeLayout out(num_modes);
    for (std::size_t i = 0; i < num_modes; ++i) out[i] = {static_cast<std::int64_t>(i)};
    return out;
}

}  // namespace

PfCode::PfCode(Residue modulus, std::size_t num_modes, std::vector<PfOperator> generators, ModeLayout layout)
    : modulus_(modulus), num_modes_(num_modes), generators_(std::move(generators)), layout_(std::move(layout)) {
    // Validates D and 2n.
    PfOperator probe(modulus, num_modes);
    for (const auto& g : generators_) {
        if (g.modulus() != modulus || g.num_modes() != num_modes) {
            throw std::invalid_argument("generator " + to_string(g) + " is not in PF(" + std::to_string(modulus) + "," +
                                        std::to_string(num_modes) + ")");
        }
    }
    if (!layout_.empty()) {
        if (layout_.size() != num_modes) throw std::invalid_argument("mode layout must list one coordinate per mode");
        const std::size_t dim = layout_.front().size();
        if (dim == 0) throw std::invalid_argument("mode layout coordinates must be nonempty");
        for (const auto& c : layout_)
            if (c.size() != dim) throw std::invalid_argument("mode layout coordinates must share one dimension");
    }
}

ZModMatrix PfCode::stabilizer_matrix() const {
    ZModMatrix s(modulus_, 0, num_modes_);
    for (const auto& g : generators_) s.append_row(g.alpha());
    return s;
}

ZModMatrix PfCode::check_matrix() const {
    ZModMatrix s(modulus_, 0, num_modes_);
    for (const auto& g : generators_) s.append_row(lambda_row(g.alpha(), modulus_));
    return s;
}

ValidationFlags validate(const PfCode& code) {
    ValidationFlags flags;
    const auto& gens = code.generators();
    const Residue d = code.modulus();

    flags.abelian = true;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        for (std::size_t j = i + 1; j < gens.size(); ++j) {
            const Residue c = commutation_exponent(gens[i], gens[j]);
            if (c != 0) {
                flags.abelian = false;
                flags.problems.push_back("generators " + std::to_string(i + 1) + " and " + std::to_string(j + 1) +
                                         " do not commute (exponent " + std::to_string(c) + ")");
            }
        }
    }

    flags.parity_ok = true;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        const Residue p = charge(gens[i]);
        if (p != 0) {
            flags.parity_ok = false;
            flags.problems.push_back("generator " + std::to_string(i + 1) + " (" + to_string(gens[i]) +
                                     ") is not parity-preserving: charge " + std::to_string(p) +
                                     " (stabilizer elements must have zero Z_D charge)");
        }
    }

    flags.phase_ok = true;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        const PfOperator g_d = power(gens[i], static_cast<std::uint64_t>(d));
        if (!g_d.is_identity()) {
            flags.phase_ok = false;
            flags.problems.push_back("generator " + std::to_string(i + 1) + " raised to the power D is " +
                                     to_string(g_d) + ", not the identity");
        }
    }
    if (!flags.abelian) {
        flags.phase_ok = false;
        flags.problems.emplace_back("phase consistency is undefined for a non-abelian generating set");
    } else if (flags.phase_ok) {
        const ZModMatrix relations = kernel_basis(code.stabilizer_matrix());
        for (std::size_t r = 0; r < relations.rows(); ++r) {
            const PfOperator p = relation_product(gens, relations.row(r), d, code.num_modes());
            if (!p.is_identity()) {
                flags.phase_ok = false;
                flags.problems.push_back("the stabilizer group contains the nontrivial scalar " + to_string(p));
            }
        }
    }
    return flags;
}

void require_valid(const PfCode& code) {
    const auto flags = validate(code);
    if (flags.all()) return;
    std::ostringstream os;
    os << "invalid parafermion stabilizer code:";
    for (const auto& p : flags.problems) os << "\n  " << p;
    throw InvalidCodeError(os.str());
}

BigCount group_order(const PfCode& code) {
    require_valid(code);
    return span_order(code.stabilizer_matrix());
}

BigCount codespace_dim(const PfCode& code) {
    const BigCount order = group_order(code);
    const BigCount total = big_pow(code.modulus(), code.num_pairs());
    if (total % order != 0) {
        throw std::logic_error("|S| = " + order.str() + " does not divide D^n = " + total.str());
    }
    return total / order;
}

std::optional<std::size_t> logical_qudits(const PfCode& code) {
    BigCount dim = codespace_dim(code);
    std::size_t k = 0;
    while (dim > 1) {
        if (dim % code.modulus() != 0) return std::nullopt;
        dim /= code.modulus();
        ++k;
    }
    return k;
}

ZModMatrix centralizer_basis(const PfCode& code) {
    require_valid(code);
    // x centralizes iff (S Lambda) x^T = 0 iff x (S Lambda)^T = 0.
    return kernel_basis(code.check_matrix().transpose());
}

bool is_logical(const PfCode& code, const PfOperator& op) {
    if (op.modulus() != code.modulus() || op.num_modes() != code.num_modes()) {
        throw std::invalid_argument("operator does not match the code's PF(D, 2n)");
    }
    require_valid(code);
    if (!all_zero(syndrome(code, op))) return false;
    return !in_row_span(code.stabilizer_matrix(), op.alpha());
}

std::vector<PfOperator> logical_basis(const PfCode& code) {
    const ZModMatrix central = centralizer_basis(code);
    ZModMatrix accumulated = code.stabilizer_matrix();
    RowSpan span(accumulated);
    std::vector<PfOperator> out;
    for (std::size_t r = 0; r < central.rows(); ++r) {
        auto rep = span.reduce(central.row(r));
        if (all_zero(rep)) continue;
        out.emplace_back(code.modulus(), 0, rep);
        accumulated.append_row(rep);
        span = RowSpan(accumulated);
    }
    return out;
}

std::vector<Residue> syndrome(const PfCode& code, const PfOperator& error) {
    std::vector<Residue> out;
    out.reserve(code.generators().size());
    for (const auto& g : code.generators()) out.push_back(commutation_exponent(g, error));
    return out;
}

PfCode canonical_phases(const PfCode& code) {
    const auto& gens = code.generators();
    const Residue d = code.modulus();
    const std::size_t m = gens.size();
    for (std::size_t i = 0; i < m; ++i) {
        if (gens[i].is_scalar() && gens[i].mu() != 0) {
            throw PhaseAssignmentError("no consistent phase assignment: generator " + std::to_string(i + 1) +
                                       " is the scalar " + to_string(gens[i]));
        }
    }
    const auto flags = validate(code);
    if (!flags.abelian || !flags.parity_ok) {
        throw InvalidCodeError("phases can only be assigned to abelian, parity-preserving generators");
    }

    std::vector<PfOperator> bare;
    for (const auto& g : gens) bare.push_back(g.with_phase(0));

    // Unknowns mu_j in Z_{2D}; one column per equation of A^T mu = b.
    // g_j^D = 1:             D mu_j + phase(bare_j^D) = 0
    // relation x (x S = 0):  sum_j x_j mu_j + phase(prod bare_j^{x_j}) = 0
    const Residue two_d = 2 * d;
    std::vector<std::vector<Residue>> columns;
    std::vector<Residue> rhs;
    for (std::size_t j = 0; j < m; ++j) {
        std::vector<Residue> col(m, 0);
        col[j] = d;
        columns.push_back(std::move(col));
        rhs.push_back(-power(bare[j], static_cast<std::uint64_t>(d)).mu());
    }
    const ZModMatrix relations = kernel_basis(code.stabilizer_matrix());
    for (std::size_t r = 0; r < relations.rows(); ++r) {
        auto x = relations.row_vector(r);
        rhs.push_back(-relation_product(bare, x, d, code.num_modes()).mu());
        columns.push_back(std::move(x));
    }
    ZModMatrix system(two_d, m, columns.size());
    for (std::size_t e = 0; e < columns.size(); ++e)
        for (std::size_t j = 0; j < m; ++j) system.set(j, e, columns[e][j]);

    const auto mu = solve_left(system, rhs);
    if (!mu) throw PhaseAssignmentError("no consistent phase assignment exists for these generators");
    std::vector<PfOperator> fixed;
    for (std::size_t j = 0; j < m; ++j) fixed.push_back(bare[j].with_phase((*mu)[j]));
    return code.with_generators(std::move(fixed));
}

namespace {

std::size_t resolve_cap(const PfCode& code, const DistanceOptions& options) {
    if (options.max_weight) return std::min(*options.max_weight, code.num_modes());
    if (code.num_modes() > DistanceOptions::kFullSearchModes) {
        throw std::invalid_argument("codes with more than " + std::to_string(DistanceOptions::kFullSearchModes) +
                                    " modes need an explicit weight cap for the distance search");
    }
    return code.num_modes();
}

template <typename Scan>
DistanceResult run_distance(const PfCode& code, const DistanceOptions& options, Scan scan) {
    require_valid(code);
    if (codespace_dim(code) == 1) throw InvalidCodeError("the code encodes nothing; distance is undefined");
    const std::size_t cap = resolve_cap(code, options);
    const kernels::LogicalPredicate pred(code);
    DistanceResult result;
    for (std::size_t w = 1; w <= cap; ++w) {
        const auto scanned = scan(pred, w);
        result.candidates += scanned.candidates;
        result.searched_weight = w;
        if (scanned.hit) {
            result.distance = w;
            result.certificate = PfOperator(code.modulus(), 0, *scanned.hit);
            return result;
        }
    }
    return result;
}

}  // namespace

DistanceResult distance(const PfCode& code, const DistanceOptions& options) {
    return run_distance(code, options, [&](const kernels::LogicalPredicate& pred, std::size_t w) {
        return kernels::scan_weight_parallel(pred, w, options.threads);
    });
}

DistanceResult distance_serial(const PfCode& code, const DistanceOptions& options) {
    return run_distance(code, options,
                        [](const kernels::LogicalPredicate& pred, std::size_t w) { return kernels::scan_weight_serial(pred, w); });
}

bool has_logical_below(const PfCode& code, std::size_t bound) {
    const kernels::LogicalPredicate pred(code);
    for (std::size_t w = 1; w < bound && w <= code.num_modes(); ++w) {
        if (kernels::scan_weight_serial(pred, w).hit) return true;
    }
    return false;
}

std::size_t layout_diameter(const PfCode& code, std::span<const Residue> alpha) {
    const ModeLayout layout = code.has_layout() ? code.layout() : chain_layout(code.num_modes());
    std::size_t best = 0;
    const std::size_t dim = layout.front().size();
    for (std::size_t axis = 0; axis < dim; ++axis) {
        bool any = false;
        std::int64_t lo = 0, hi = 0;
        for (std::size_t i = 0; i < alpha.size(); ++i) {
            if (alpha[i] == 0) continue;
            const std::int64_t c = layout[i][axis];
            if (!any) lo = hi = c;
            lo = std::min(lo, c);
            hi = std::max(hi, c);
            any = true;
        }
        if (any) best = std::max(best, static_cast<std::size_t>(hi - lo + 1));
    }
    return best;
}

LconResult l_con(const PfCode& code) {
    require_valid(code);
    LconResult result;
    result.metric = code.has_layout() ? "chebyshev" : "chain";
    const ModeLayout layout = code.has_layout() ? code.layout() : chain_layout(code.num_modes());
    const std::size_t dim = layout.front().size();
    const std::size_t n_modes = code.num_modes();
    const Residue d = code.modulus();

    std::vector<std::vector<std::int64_t>> axis_values(dim);
    std::int64_t extent = 0;
    for (std::size_t axis = 0; axis < dim; ++axis) {
        std::set<std::int64_t> vals;
        for (const auto& c : layout) vals.insert(c[axis]);
        axis_values[axis].assign(vals.begin(), vals.end());
        extent = std::max(extent, *vals.rbegin() - *vals.begin() + 1);
    }

    const ZModMatrix checks = code.check_matrix();
    const RowSpan stabilizer(code.stabilizer_matrix());

    for (std::int64_t side = 1; side <= extent; ++side) {
        std::set<std::vector<std::size_t>> seen;
        std::vector<std::size_t> corner(dim, 0);
        while (true) {
            std::vector<std::size_t> region;
            for (std::size_t i = 0; i < n_modes; ++i) {
                bool inside = true;
                for (std::size_t axis = 0; axis < dim && inside; ++axis) {
                    const std::int64_t lo = axis_values[axis][corner[axis]];
                    inside = layout[i][axis] >= lo && layout[i][axis] < lo + side;
                }
                if (inside) region.push_back(i);
            }
            if (!region.empty() && seen.insert(region).second) {
                // Parity-conserving centralizer elements supported on the region:
                // x * [checks restricted | 1] = 0.
                ZModMatrix constraints(d, region.size(), checks.rows() + 1);
                for (std::size_t t = 0; t < region.size(); ++t) {
                    for (std::size_t g = 0; g < checks.rows(); ++g) constraints.set(t, g, checks(g, region[t]));
                    constraints.set(t, checks.rows(), 1);
                }
                const ZModMatrix local = kernel_basis(constraints);
                for (std::size_t r = 0; r < local.rows(); ++r) {
                    std::vector<Residue> alpha(n_modes, 0);
                    for (std::size_t t = 0; t < region.size(); ++t) alpha[region[t]] = local(r, t);
                    if (!stabilizer.contains(alpha)) {
                        result.l_con = static_cast<std::size_t>(side);
                        result.certificate = PfOperator(d, 0, stabilizer.reduce(alpha));
                        // The reduced representative may leave the region; keep the local one.
                        if (layout_diameter(code, result.certificate->alpha()) > static_cast<std::size_t>(side)) {
                            result.certificate = PfOperator(d, 0, alpha);
                        }
                        return result;
                    }
                }
            }
            std::size_t axis = 0;
            while (axis < dim && ++corner[axis] == axis_values[axis].size()) corner[axis++] = 0;
            if (axis == dim) break;
        }
    }
    return result;
}

CodeReport analyze(const PfCode& code, const AnalyzeOptions& options) {
    CodeReport report;
    report.flags = validate(code);
    report.num_modes = code.num_modes();
    report.modulus = code.modulus();
    if (!report.flags.all()) return report;

    report.group_order = group_order(code);
    report.codespace_dim = codespace_dim(code);
    report.k = logical_qudits(code);
    for (auto& op : logical_basis(code)) {
        const Residue c = charge(op);
        report.logicals.push_back({std::move(op), c});
    }

    if (report.codespace_dim == 1) {
        report.distance_note = "no logical operators";
    } else if (options.compute_distance) {
        if (!options.distance.max_weight && code.num_modes() > DistanceOptions::kFullSearchModes) {
            report.distance_note = "skipped: more than " + std::to_string(DistanceOptions::kFullSearchModes) +
                                   " modes requires an explicit weight cap";
        } else {
            report.distance = distance(code, options.distance);
        }
    }
    if (options.compute_l_con && report.codespace_dim > 1) report.l_con = l_con(code);
    return report;
}

}  // namespace pfcodes
