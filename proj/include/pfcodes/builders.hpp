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

#ifndef PFCODES_BUILDERS_HPP
#define PFCODES_BUILDERS_HPP

#include <vector>

#include "pfcodes/qudit_code.hpp"
#include "pfcodes/stab_code.hpp"

namespace pfcodes {

/// Clock-model chain on n pairs: generators g_{2j}^{-1} g_{2j+1} (1-based
/// modes 2j, 2j+1) for j = 1..n-1, with canonical phases.
PfCode build_clock_chain(Residue modulus, std::size_t num_pairs);

// Four modes per qudit. Qudit j (0-based) owns modes 4j .. 4j+3.

/// g_1^-1 g_2 on the modes of `site`.
PfOperator embedded_z(Residue modulus, std::size_t num_qudits, std::size_t site);
/// g_1^-1 g_3 on the modes of `site`.
PfOperator embedded_x(Residue modulus, std::size_t num_qudits, std::size_t site);
/// g_1^-1 g_2 g_3^-1 g_4 on the modes of `site`; commutes with the embedded X and Z.
PfOperator embedded_q(Residue modulus, std::size_t num_qudits, std::size_t site);

/// Parafermion code on 4n modes: the local charges Q_j plus each check row
/// (u | v) mapped to prod_j X_j^{u_j} Z_j^{v_j}, with canonical phases.
/// Logical content and distance carry over from the qudit code.
PfCode embed_qudit_code(const QuditCheckMatrix& qudit_code);

/// CSS qudit code on 2n qudits with X checks S Lambda and Z checks S. It has
/// twice as many logical qudits as the parafermion code.
QuditCheckMatrix double_to_css(const PfCode& code);

/// Square of a D = 3 operator viewed in PF(6, 2n): exponents doubled, phase 0.
PfOperator lift_square_d6(const PfOperator& op);

/// D = 6 code from a D = 3 code: the cubes g_{2j-1}^3 g_{2j}^3 plus the lifted
/// squares of the D = 3 generators, with canonical phases.
PfCode double_code_d6(const PfCode& code3);

/// Toric code parameters: D = p^{2l}, lattice of a x b vertices on the torus.
struct ToricSpec {
    Residue p = 2;
    unsigned l = 1;
    std::size_t a = 2;
    std::size_t b = 2;

    /// P = p^l.
    Residue root() const;
    /// D = P^2.
    Residue modulus() const;
};

/// Site operators of a toric qudit (modes 4j..4j+3):
///   Z = g_1^{P-1} g_2,  X = g_1^{P-1} g_3,  Q = g_1^-1 g_2^{P+1} g_3^{-(P+1)} g_4.
/// X and Z have charge P; Q is neutral and commutes with both.
PfOperator toric_site_z(const ToricSpec& spec, std::size_t num_qudits, std::size_t site);
PfOperator toric_site_x(const ToricSpec& spec, std::size_t num_qudits, std::size_t site);
PfOperator toric_site_q(const ToricSpec& spec, std::size_t num_qudits, std::size_t site);

/// Edge qudit indices on the a x b torus, rows first: within row y the a
/// horizontal edges (x,y)-(x+1,y) come first, then the a vertical edges (x,y)-(x,y+1).
std::size_t toric_h_edge(const ToricSpec& spec, std::size_t x, std::size_t y);
std::size_t toric_v_edge(const ToricSpec& spec, std::size_t x, std::size_t y);

struct ToricLogical {
    enum class Direction { Horizontal, Vertical };
    PfOperator op;
    Residue charge;
    Direction direction;
};

struct ToricCode {
    ToricSpec spec;
    PfCode code;
    /// Every star and plaquette, including the dependent last ones left out of `code`.
    std::vector<PfOperator> stars;
    std::vector<PfOperator> plaquettes;
    /// Logical coset representatives supported in the y = 0 row strip
    /// (Horizontal) and the x = 0 column strip (Vertical).
    std::vector<ToricLogical> logicals;
};

/// Generators: Q on every edge, all stars and all plaquettes but the last
/// of each. The layout puts edge h(x,y) at (2x+1, 2y) and v(x,y) at (2x, 2y+1).
ToricCode build_toric(const ToricSpec& spec);

}  // namespace pfcodes

#endif  // PFCODES_BUILDERS_HPP
