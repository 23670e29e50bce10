// SPDX-License-Identifier: Apache-2.0
//
// risdm: double-RIS two-way directional modulation simulator
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef RISDM_BEAMFORMING_HPP
#define RISDM_BEAMFORMING_HPP

#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "risdm/channel.hpp"

namespace risdm {

enum class Method { MaxSv, Leakage };

std::string_view method_name(Method method) noexcept;
std::optional<Method> method_from_name(std::string_view name) noexcept;

enum class Side { Alice, Bob };

struct BeamformingFlags {
    bool an_fallback_alice = false;
    bool an_fallback_bob = false;
    std::vector<int> dropped_eve_branches;    // 0-based branch indices
    std::vector<int> dropped_bob_branches;
    std::vector<int> dropped_alice_branches;
};

struct BeamformerSet {
    ComplexVector v_at, v_bt;  // CM transmit
    ComplexVector w_a, w_b;    // AN transmit
    ComplexVector v_ar, v_br, v_er;
    Method method = Method::MaxSv;
    BeamformingFlags flags;
};

struct MaxSvDesign {
    ComplexVector v_at, v_br;  // from H_b
    ComplexVector v_bt, v_ar;  // from H_a
};

/// Dominant singular pairs of H_b and H_a.
MaxSvDesign max_sv_design(const EffectiveChannels& eff);

struct AnDesign {
    ComplexVector w;
    bool fallback = false;  // Eve direction inside the CM subspace
};

/// AN confined to the orthogonal complement of v_cm, steered toward h_eve.
AnDesign an_nullspace_design(const ComplexVector& v_cm, const ComplexVector& h_eve);

struct ZfMrcCombiner {
    ComplexVector v;                       // unit-norm assembled combiner
    std::vector<ComplexVector> branches;   // ZF sub-beamformers v_i (unnormalized)
    std::vector<Complex> weights;          // MRC weights w_i, 0 for dropped branches
    std::vector<int> dropped;
};

/// Generic ZF-MRC: branch i nulls every arrival direction except its own and
/// is weighted by conj(v_i^H s_i) / |v_i^H s_i|. The combiner satisfies
/// v^H = sum_i w_i v_i^H and is normalized to unit norm.
ZfMrcCombiner zf_mrc_combine(const std::vector<ComplexVector>& arrivals, const std::vector<ComplexVector>& signals);

/// Four-branch combiner at Eve (RIS-1, RIS-2, Alice, Bob). The MRC weights use
/// the config's beta1/beta2.
ZfMrcCombiner zf_mrc_eve(const ChannelSet& channels, const RisReflection& theta1, const RisReflection& theta2,
                         const ComplexVector& v_at, const ComplexVector& v_bt, const ScenarioConfig& config);

/// Three-branch combiner at Bob (side = Bob, v_t = v_at) or Alice (side = Alice, v_t = v_bt).
ZfMrcCombiner zf_mrc_three_way(const ChannelSet& channels, const RisReflection& theta1, const RisReflection& theta2,
                               const ComplexVector& v_t_other_side, Side side);

struct QuotientPair {
    ComplexMatrix numerator;
    ComplexMatrix denominator;
};

/// Matrices whose generalized Rayleigh quotient is the SLNR of the side's CM beamformer.
QuotientPair slnr_matrices(const ChannelSet& channels, const ScenarioConfig& config, Side side);
/// Matrices whose generalized Rayleigh quotient is the LANSR of the side's AN beamformer.
QuotientPair lansr_matrices(const ChannelSet& channels, const ScenarioConfig& config, Side side);

ComplexVector slnr_transmit(const ChannelSet& channels, const ScenarioConfig& config, Side side);
ComplexVector lansr_an(const ChannelSet& channels, const ScenarioConfig& config, Side side);

double rayleigh_quotient(const QuotientPair& pair, const ComplexVector& v);

BeamformerSet design_beamformers(const ChannelSet& channels, const RisReflection& theta1, const RisReflection& theta2,
                                 const EffectiveChannels& eff, const ScenarioConfig& config, Method method);

} // namespace risdm

#endif
