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

// Reference codes used across the unit tests.

#ifndef PFCODES_TESTS_LISTED_CODES_HPP
#define PFCODES_TESTS_LISTED_CODES_HPP

#include "pfcodes/pf_operator.hpp"
#include "pfcodes/stab_code.hpp"

namespace fixtures {

/// [[8,1,3]]_3: g1^-1 g2 g4^-1 g6, g2^-1 g3 g5^-1 g7, g3^-1 g4 g6^-1 g8.
inline pfcodes::PfCode code_8_1_3() {
    using pfcodes::PfOperator;
    return pfcodes::canonical_phases(pfcodes::PfCode(
        3, 8,
        {PfOperator(3, 0, {2, 1, 0, 2, 0, 1, 0, 0}), PfOperator(3, 0, {0, 2, 1, 0, 2, 0, 1, 0}),
         PfOperator(3, 0, {0, 0, 2, 1, 0, 2, 0, 1})}));
}

/// Logical pair of the [[8,1,3]]_3 code: g1^-1 g2 g3 g7 and g2^-1 g3^-1 g6.
inline pfcodes::PfOperator logical_8_1_3_a() { return {3, 0, {2, 1, 1, 0, 0, 0, 1, 0}}; }
inline pfcodes::PfOperator logical_8_1_3_b() { return {3, 0, {0, 2, 2, 0, 0, 1, 0, 0}}; }

/// [[6,1,3]]_7: g1 g2 g5^5, g1 g4^5 g6.
inline pfcodes::PfCode code_6_1_3() {
    using pfcodes::PfOperator;
    return pfcodes::canonical_phases(
        pfcodes::PfCode(7, 6, {PfOperator(7, 0, {1, 1, 0, 0, 5, 0}), PfOperator(7, 0, {1, 0, 0, 5, 0, 1})}));
}

/// Logical pair of the [[6,1,3]]_7 code: g1^3 g2^6 g6 and g1^2 g2^5 g3.
inline pfcodes::PfOperator logical_6_1_3_a() { return {7, 0, {3, 6, 0, 0, 0, 1}}; }
inline pfcodes::PfOperator logical_6_1_3_b() { return {7, 0, {2, 5, 1, 0, 0, 0}}; }

}  // namespace fixtures

#endif  // PFCODES_TESTS_LISTED_CODES_HPP
