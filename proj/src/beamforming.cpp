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

#include "risdm/beamforming.hpp"

#include <cmath>
#include <string>

#include "risdm/error.hpp"
#include "risdm/tolerances.hpp"

namespace risdm {

std::string_view method_name(Method method) noexcept {
    return method == Method::MaxSv ? "max-sv" : "leakage";
}

std::optional<Method> method_from_name(std::string_view name) noexcept {
    if (name == "max-sv") return Method::MaxSv;
    if (name == "leakage") return Method::Leakage;
    return std::nullopt;
}

MaxSvDesign max_sv_design(const EffectiveChannels& eff) {
    if (eff.h_b.norm() == 0.0 || eff.h_a.norm() == 0.0)
        fail(ErrorCode::DegenerateChannel, "max_sv_design: effective channel is zero");
    const SvdResult sb = svd(eff.h_b);
    const SvdResult sa = svd(eff.h_a);
    return {sb.v.col(0), sb.u.col(0), sa.v.col(0), sa.u.col(0)};
}

AnDesign an_nullspace_design(const ComplexVector& v_cm, const ComplexVector& h_eve) {
    const Eigen::Index n = v_cm.size();
    if (n != h_eve.size() || n == 0) fail(ErrorCode::InvalidInput, "an_nullspace_design: dimension mismatch");
    if (n < 2) fail(ErrorCode::InsufficientAntennas, "an_nullspace_design: a single antenna has no AN null space");

    const ComplexMatrix t = ComplexMatrix::Identity(n, n) - v_cm * v_cm.adjoint();
    const ComplexVector th = t.adjoint() * h_eve;
    AnDesign out;
    if (th.norm() < Tolerances::an_projection_norm) {
        // any unit vector orthogonal to v_cm: project the weakest coordinate axis
        Eigen::Index k = 0;
        v_cm.cwiseAbs().minCoeff(&k);
        ComplexVector e = ComplexVector::Zero(n);
        e(k) = 1.0;
        out.w = t * e;
        out.fallback = true;
    } else {
        out.w = t * (th / th.norm());
    }
    out.w.normalize();
    return out;
}

ZfMrcCombiner zf_mrc_combine(const std::vector<ComplexVector>& arrivals, const std::vector<ComplexVector>& signals) {
    const std::size_t k = arrivals.size();
    if (k == 0 || signals.size() != k) fail(ErrorCode::InvalidInput, "zf_mrc_combine: branch count mismatch");
    const Eigen::Index n = arrivals.front().size();

    ZfMrcCombiner out;
    out.branches.resize(k);
    out.weights.assign(k, Complex(0.0, 0.0));
    ComplexVector v = ComplexVector::Zero(n);
    for (std::size_t i = 0; i < k; ++i) {
        ComplexMatrix others(static_cast<Eigen::Index>(k - 1), n);
        Eigen::Index row = 0;
        for (std::size_t j = 0; j < k; ++j)
            if (j != i) others.row(row++) = arrivals[j].adjoint();
        // I - A^+ A through an orthonormal basis of the interfering span, applied twice
        ComplexVector b = arrivals[i];
        if (k > 1) {
            const SvdResult d = svd(others.adjoint());
            Eigen::Index rank = 0;
            const double cutoff = d.s.size() > 0 ? d.s(0) * static_cast<double>(n) * 2.220446049250313e-16 : 0.0;
            while (rank < d.s.size() && d.s(rank) > cutoff) ++rank;
            const ComplexMatrix q = d.u.leftCols(rank);
            b -= q * (q.adjoint() * b);
            b -= q * (q.adjoint() * b);
        }
        out.branches[i] = b;
        if (out.branches[i].norm() < Tolerances::zf_branch_norm) {
            out.dropped.push_back(static_cast<int>(i));
            continue;
        }
        const Complex x = out.branches[i].dot(signals[i]);  // v_i^H s_i
        if (std::abs(x) <= Tolerances::mrc_branch_magnitude) {
            out.dropped.push_back(static_cast<int>(i));
            continue;
        }
        out.weights[i] = std::conj(x) / std::abs(x);
        v += std::conj(out.weights[i]) * out.branches[i];
    }

    if (v.norm() == 0.0) {
        // nothing to combine coherently: fall back to the first usable branch
        for (std::size_t i = 0; i < k && v.norm() == 0.0; ++i)
            if (out.branches[i].norm() >= Tolerances::zf_branch_norm) v = out.branches[i];
        if (v.norm() == 0.0) v = arrivals.front();
    }
    out.v = v / v.norm();
    return out;
}

ZfMrcCombiner zf_mrc_eve(const ChannelSet& ch, const RisReflection& theta1, const RisReflection& theta2,
                         const ComplexVector& v_at, const ComplexVector& v_bt, const ScenarioConfig& config) {
    if (ch.ne() < 4) fail(ErrorCode::InsufficientAntennas, "zf_mrc_eve: Eve needs at least 4 antennas");
    const ComplexVector t1 = theta1.coefficients();
    const ComplexVector t2 = theta2.coefficients();
    const CompositeGains& g = ch.composite;
    const double pa1 = config.beta1 * config.pa_mw();
    const double pb2 = config.beta2 * config.pb_mw();
    auto mat = [&](Link l) -> const ComplexMatrix& { return ch[l].matrix; };

    const ComplexVector via1 = mat(Link::I1E) * t1.cwiseProduct(std::sqrt(pa1 * g.ai1e) * (mat(Link::AI1) * v_at) +
                                                                std::sqrt(pb2 * g.bi1e) * (mat(Link::BI1) * v_bt));
    const ComplexVector via2 = mat(Link::I2E) * t2.cwiseProduct(std::sqrt(pa1 * g.ai2e) * (mat(Link::AI2) * v_at) +
                                                                std::sqrt(pb2 * g.bi2e) * (mat(Link::BI2) * v_bt));
    const ComplexVector direct_a = mat(Link::AE) * v_at;
    const ComplexVector direct_b = mat(Link::BE) * v_bt;

    return zf_mrc_combine({ch[Link::I1E].rx_steer, ch[Link::I2E].rx_steer, ch[Link::AE].rx_steer, ch[Link::BE].rx_steer},
                          {via1, via2, direct_a, direct_b});
}

ZfMrcCombiner zf_mrc_three_way(const ChannelSet& ch, const RisReflection& theta1, const RisReflection& theta2,
                               const ComplexVector& v_t, Side side) {
    const bool bob = side == Side::Bob;
    if ((bob ? ch.nb() : ch.na()) < 3)
        fail(ErrorCode::InsufficientAntennas, "zf_mrc_three_way: receiver needs at least 3 antennas");
    const ComplexVector t1 = theta1.coefficients();
    const ComplexVector t2 = theta2.coefficients();
    const Link r1 = bob ? Link::I1B : Link::I1A;
    const Link r2 = bob ? Link::I2B : Link::I2A;
    const Link d = bob ? Link::AB : Link::BA;
    const Link in1 = bob ? Link::AI1 : Link::BI1;
    const Link in2 = bob ? Link::AI2 : Link::BI2;

    const ComplexVector s1 = ch[r1].matrix * t1.cwiseProduct(ch[in1].matrix * v_t);
    const ComplexVector s2 = ch[r2].matrix * t2.cwiseProduct(ch[in2].matrix * v_t);
    const ComplexVector s3 = ch[d].matrix * v_t;
    return zf_mrc_combine({ch[r1].rx_steer, ch[r2].rx_steer, ch[d].rx_steer}, {s1, s2, s3});
}

namespace {

ComplexMatrix gram(const LinkChannel& link) { return link.gain * (link.matrix.adjoint() * link.matrix); }

ComplexMatrix desired_gram(const ChannelSet& ch, Side side) {
    if (side == Side::Alice) return gram(ch[Link::AI1]) + gram(ch[Link::AI2]) + gram(ch[Link::AB]);
    // Bob's leakage terms weight the RIS links with g_{i_k b} and the direct link with g_ab
    return ch[Link::I1B].gain * (ch[Link::BI1].matrix.adjoint() * ch[Link::BI1].matrix) +
           ch[Link::I2B].gain * (ch[Link::BI2].matrix.adjoint() * ch[Link::BI2].matrix) +
           ch[Link::AB].gain * (ch[Link::BA].matrix.adjoint() * ch[Link::BA].matrix);
}

ComplexMatrix eve_gram(const ChannelSet& ch, Side side) {
    return side == Side::Alice ? gram(ch[Link::AE]) : gram(ch[Link::BE]);
}

} // namespace

QuotientPair slnr_matrices(const ChannelSet& ch, const ScenarioConfig& config, Side side) {
    const bool alice = side == Side::Alice;
    const double beta = alice ? config.beta1 : config.beta2;
    if (!(beta > 0.0)) fail(ErrorCode::InvalidInput, "slnr_transmit: CM power fraction must be positive");
    const double power = beta * (alice ? config.pa_mw() : config.pb_mw());
    const Eigen::Index n = alice ? ch.na() : ch.nb();
    return {desired_gram(ch, side),
            eve_gram(ch, side) + (config.sigma2_e() / power) * ComplexMatrix::Identity(n, n)};
}

QuotientPair lansr_matrices(const ChannelSet& ch, const ScenarioConfig& config, Side side) {
    const bool alice = side == Side::Alice;
    const double beta = alice ? config.beta1 : config.beta2;
    if (!(beta < 1.0)) fail(ErrorCode::InvalidInput, "lansr_an: AN power fraction must be positive");
    const double power = (1.0 - beta) * (alice ? config.pa_mw() : config.pb_mw());
    // Alice's AN leaks into Bob's receiver (sigma2_b) and vice versa
    const double noise = alice ? config.sigma2_b() : config.sigma2_a();
    const Eigen::Index n = alice ? ch.na() : ch.nb();
    return {eve_gram(ch, side), desired_gram(ch, side) + (noise / power) * ComplexMatrix::Identity(n, n)};
}

ComplexVector slnr_transmit(const ChannelSet& ch, const ScenarioConfig& config, Side side) {
    const QuotientPair p = slnr_matrices(ch, config, side);
    return dominant_generalized_eigvec(p.numerator, p.denominator);
}

ComplexVector lansr_an(const ChannelSet& ch, const ScenarioConfig& config, Side side) {
    const QuotientPair p = lansr_matrices(ch, config, side);
    return dominant_generalized_eigvec(p.numerator, p.denominator);
}

double rayleigh_quotient(const QuotientPair& pair, const ComplexVector& v) {
    return pair.numerator.cwiseProduct(v.conjugate() * v.transpose()).sum().real() /
           pair.denominator.cwiseProduct(v.conjugate() * v.transpose()).sum().real();
}

BeamformerSet design_beamformers(const ChannelSet& ch, const RisReflection& theta1, const RisReflection& theta2,
                                 const EffectiveChannels& eff, const ScenarioConfig& config, Method method) {
    BeamformerSet bf;
    bf.method = method;
    if (method == Method::MaxSv) {
        const MaxSvDesign d = max_sv_design(eff);
        bf.v_at = d.v_at;
        bf.v_br = d.v_br;
        bf.v_bt = d.v_bt;
        bf.v_ar = d.v_ar;
        // T_b projects out Bob's own CM beamformer v_bt (dimension Nb)
        const AnDesign an_a = an_nullspace_design(bf.v_at, ch[Link::AE].tx_steer);
        const AnDesign an_b = an_nullspace_design(bf.v_bt, ch[Link::BE].tx_steer);
        bf.w_a = an_a.w;
        bf.w_b = an_b.w;
        bf.flags.an_fallback_alice = an_a.fallback;
        bf.flags.an_fallback_bob = an_b.fallback;
    } else {
        bf.v_at = slnr_transmit(ch, config, Side::Alice);
        bf.v_bt = slnr_transmit(ch, config, Side::Bob);
        bf.w_a = lansr_an(ch, config, Side::Alice);
        bf.w_b = lansr_an(ch, config, Side::Bob);
        const ZfMrcCombiner bob = zf_mrc_three_way(ch, theta1, theta2, bf.v_at, Side::Bob);
        const ZfMrcCombiner alice = zf_mrc_three_way(ch, theta1, theta2, bf.v_bt, Side::Alice);
        bf.v_br = bob.v;
        bf.v_ar = alice.v;
        bf.flags.dropped_bob_branches = bob.dropped;
        bf.flags.dropped_alice_branches = alice.dropped;
    }
    const ZfMrcCombiner eve = zf_mrc_eve(ch, theta1, theta2, bf.v_at, bf.v_bt, config);
    bf.v_er = eve.v;
    bf.flags.dropped_eve_branches = eve.dropped;
    return bf;
}

} // namespace risdm
