#pragma once

#include <stdexcept>
#include <vector>

#include "hcaff/supermodule.hpp"

namespace hcaff {

struct DegenerateContents : std::domain_error {
    using std::domain_error::domain_error;
};

// kappa_i = +sqrt(q(a+i-1)), i = 1..d
std::vector<Surd> segment_kappas(int a, int d);
// X_S v = prod_{i not in S} (x_i + kappa_i) v, S 1-based
Vec x_selector_apply(const SuperModule& m, const std::vector<int>& S, const std::vector<Surd>& kappas, Vec v);

// Phi_a boxtimes Cl_d; basis phi^delta (x) c^eps, index delta * 2^d + eps
SuperModule big_segment(int a, int b);

struct SegmentModule {
    SuperModule module;
    Vec generator;              // distinguished cyclic vector, module coordinates
    std::vector<Vec> embedding; // basis inside the big segment
};
SegmentModule segment_with_generator(int a, int b);
SuperModule segment(int a, int b);

// zeta_{lambda,mu}: folded weight word of the cyclic vector
std::vector<int> cyclic_weight(const Multisegment& m);

struct StandardModule {
    SuperModule module;
    SuperModule parabolic; // the little parabolic module that gets induced
    Vec generator;         // 1_{lambda,mu} in module coordinates
};
StandardModule standard_module_with_generator(const Multisegment& m);
SuperModule standard_module(const Multisegment& m);
long long standard_dimension(const Multisegment& m);

SuperModule kato_module(int a, int d);
Multisegment kato_multisegment(int a, int d);

// sum over standard fillings L of Cl(d) v_L, basis c^eps v_L at index L * 2^d + eps;
// v_L is rescaled so that every s_i entry stays in Q(sqrt q(c))
SuperModule calibrated_module_full(const ShiftedSkewShape& shape);
// the simple submodule generated by one Clifford-simple piece of Cl(d) v_L
SuperModule calibrated_module(const ShiftedSkewShape& shape);

SuperModule simple_module(const Multisegment& m);

} // namespace hcaff
