#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "hcaff/check.hpp"
#include "hcaff/supermodule.hpp"

namespace hcaff {

struct NotAModule : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Homogeneous operator on a graded space.
struct GradedMatrix {
    Matrix m;
    int parity = 0;
};

// V = C^{n|n} with basis v_{-n}, ..., v_{-1}, v_1, ..., v_n in that order.
int index_of(int n, int i);
std::vector<int> natural_parity(int n);
GradedMatrix unit_matrix(int n, int i, int j); // E_ij

struct QGenerator {
    std::string name; // "e12", "f21", ...
    int i, j;
    bool odd;
    GradedMatrix matrix;
};
// e_ij = E_ij + E_{-i,-j} and f_ij = E_{-i,j} + E_{i,-j}, i, j in 1..n
std::vector<QGenerator> qn_generators(int n);
GradedMatrix qn_e(int n, int i, int j);
GradedMatrix qn_f(int n, int i, int j);
GradedMatrix qn_ebar(int n, int i, int j);
GradedMatrix qn_fbar(int n, int i, int j);
// sum of fbar_ii; squares to -1 and supercommutes with q(n)
GradedMatrix clifford_c(int n);

// x y - (-1)^{p(x)p(y)} y x
GradedMatrix superbracket(const GradedMatrix& x, const GradedMatrix& y);

// (A (x) B)(u (x) v) = (-1)^{p(B)p(u)} Au (x) Bv, u ranging over a space with parity pa
GradedMatrix graded_kron(const GradedMatrix& a, const std::vector<int>& pa, const GradedMatrix& b);
std::vector<int> tensor_parity(const std::vector<int>& pa, const std::vector<int>& pb);

// Operator in A_1 (x) A_2 as a sum of homogeneous pure tensors.
struct TwoTensor {
    std::vector<std::pair<GradedMatrix, GradedMatrix>> terms;
};
TwoTensor omega(int n);
TwoTensor superpermutation(int n);
Matrix assemble(const TwoTensor& t, const std::vector<int>& pa, const std::vector<int>& pb);

// q(n)-module: one matrix per entry of qn_generators(n), same order
struct QModule {
    int n = 0;
    std::vector<int> parity;
    std::vector<Matrix> action;
};
QModule trivial_qmodule(int n);
QModule natural_qmodule(int n);
CheckReport verify_qmodule(const QModule& m);

// Tensor space M (x) V^{(x)d}; slot 0 is M, slots 1..d are copies of V.
class TensorSpace {
public:
    TensorSpace(const QModule& m, int d);
    int dim() const { return static_cast<int>(parity_.size()); }
    const std::vector<int>& parity() const { return parity_; }
    // pi_i(x), with x acting on slot i
    Matrix place(int slot, const GradedMatrix& x) const;
    // pi_ij of a two-tensor; slot 0 takes module matrices of the first factor
    Matrix place(int i, int j, const TwoTensor& t) const;
    Matrix omega_0(int i) const;          // Omega_{0i}
    Matrix diagonal(int generator) const; // action of one q(n) generator on the whole space

private:
    Matrix place_pure(const std::vector<GradedMatrix>& factors) const;
    QModule m_;
    int n_, d_;
    std::vector<int> parity_;
    std::vector<std::vector<int>> slot_parity_;
};

// c_i -> C_i, s_i -> S_{i,i+1}, x_i -> Omega_{0i} + sum_{j<i} (1 - C_j C_i) S_{ji}
SuperModule duality_operators(int n, int d, const QModule& m);

// every generator matrix supercommutes with the diagonal q(n) action
CheckReport check_qn_commutation(const SuperModule& op, const TensorSpace& space, int n_generators);
// transpose identities: C_i^T = -C_i, S^T = S, X_i^T = X_i
CheckReport check_tau_compatibility(const SuperModule& op);
// identities of Omega on V (x) V used for the affine action
CheckReport check_omega(int n);

struct SergeevReport {
    CheckReport checks;
    bool injectivity_tested = false;
    int image_rank = 0;
    long long basis_size = 0;
};
SergeevReport verify_sergeev(int n, int d);

} // namespace hcaff
