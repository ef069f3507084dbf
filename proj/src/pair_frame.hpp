#pragma once

#include "dgli/geometry.hpp"
#include "dgli/gli.hpp"

namespace dgli {
namespace detail {

// One segment pair readied for finite differencing, expressed in a frame
// anchored to the pair itself: first start at the origin, dominant xy
// direction on +x. Inputs differing by a z-rotation or translation collapse
// to the same operands up to roundoff, which the 1/eps in the quotient would
// otherwise amplify.
struct PreparedPair {
    Segment base1, base2;
    Segment plus1, plus2;
    Segment minus1, minus2;
    // Coplanar pair displaced along an in-plane direction stays coplanar, so
    // the integral vanishes along the whole path; the closed form would
    // instead attach a roundoff sign to a degenerate determinant. The test is
    // scale-homogeneous, keeping the decision consistent across scalings and
    // rotations of the input.
    bool zero = false;
};

PreparedPair prepare_difference(const Segment& s1, const Segment& s2,
                                const PerturbationSpec& spec);

DgliValue difference_quotient(double g_plus, double g_minus, double step,
                              const PerturbationSpec& spec);

}  // namespace detail
}  // namespace dgli
