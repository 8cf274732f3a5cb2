#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hcaff/check.hpp"
#include "hcaff/combinatorics.hpp"
#include "hcaff/linalg.hpp"

namespace hcaff {

struct BlockMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct NonIntegralWeight : std::domain_error {
    using std::domain_error::domain_error;
};
struct WeightAbsent : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct NormalizationFailure : std::domain_error {
    using std::domain_error::domain_error;
};

// Finite-dimensional graded module given by generator matrices.
// s[i-1] is an empty matrix when i sits on a boundary of the parabolic blocks.
struct SuperModule {
    int rank = 0;
    int dim = 0;
    std::vector<int> parity;
    std::vector<Matrix> s, c, x;
    Composition blocks; // empty: the whole algebra acts

    static SuperModule unit();
    Composition effective_blocks() const;
    bool has_s(int i) const { return !s[i - 1].empty(); }
    const Matrix& S(int i) const { return s[i - 1]; }
    const Matrix& C(int i) const { return c[i - 1]; }
    const Matrix& X(int i) const { return x[i - 1]; }
    int even_dim() const;
};

struct Generator {
    std::string name;
    const Matrix* matrix;
    int parity;
};
std::vector<Generator> module_generators(const SuperModule& m);

int q_value(int a);                     // a(a+1)
std::optional<int> weight_label(const Rational& v); // a >= 0 with q(a) = v

CheckReport verify_module(const SuperModule& m);

SuperModule outer_tensor(const SuperModule& m, const SuperModule& n);
SuperModule induce(const SuperModule& m);
SuperModule sigma_module_twist(const SuperModule& m);
// module on the transposed matrices with c_i -> -c_i^T (the tau-dual)
SuperModule tau_dual(const SuperModule& m);

struct Submodule {
    SuperModule module;
    std::vector<Vec> basis; // graded basis in ambient coordinates
};
// smallest graded submodule containing the seeds
Submodule spin_up(const SuperModule& m, const std::vector<Vec>& seeds);
// restriction to a graded invariant subspace spanned by an echelon basis
SuperModule restrict_to(const SuperModule& m, const Echelon& sub);
bool is_invariant(const SuperModule& m, const Echelon& sub);

struct WeightSpace {
    int gen_dim = 0;
    int plain_dim = 0;
    std::vector<Vec> basis; // generalized weight space, homogeneous vectors
};
struct WeightTable {
    std::map<std::vector<int>, WeightSpace> entries;
    int total() const;
};
WeightTable weight_table(const SuperModule& m);
// generalized weight space dimensions only; read off the diagonal when every x_i^2
// is triangular in the given basis, otherwise taken from weight_table
std::map<std::vector<int>, int> weight_multiplicities(const SuperModule& m);

// common eigenvectors inside a generalized weight space: x_i = +sqrt q(a_i),
// x_i = 0 on zero letters, and c_z c_z' = i on consecutive pairs of zero letters
std::vector<Vec> refined_weight_vectors(const SuperModule& m, const std::vector<int>& zeta, const WeightSpace& w);

enum class Irreducibility { Yes, No, Inconclusive };
enum class ModuleType { M, Q, NA };
std::string to_string(Irreducibility v);
std::string to_string(ModuleType v);

struct Analysis {
    Irreducibility irreducible = Irreducibility::Inconclusive;
    ModuleType type = ModuleType::NA;
    int even_endomorphisms = -1; // -1 when not computed
    int odd_endomorphisms = -1;
    std::string note;
};
Analysis analyze(const SuperModule& m);
Analysis analyze(const SuperModule& m, const WeightTable& table);

// Homomorphisms f : M -> N of parity p, with M cyclic on the seed v.
// Returns the solution space as matrices, or nullopt when v does not generate M.
std::optional<std::vector<Matrix>> cyclic_homs(const SuperModule& m, const Vec& v, const SuperModule& n,
                                               const std::vector<Vec>& targets, int parity);
// all homomorphisms of parity p by the full linear system (small modules only)
std::vector<Matrix> all_homs(const SuperModule& m, const SuperModule& n, int parity);

struct Isomorphism {
    int parity;
    Matrix map;
};
std::optional<Isomorphism> iso_search(const SuperModule& m, const SuperModule& n, std::uint64_t seed = 1);

struct Quotient {
    SuperModule module;
    Matrix projection; // rows: the quotient coordinates
    int radical_dim = 0;
};
Quotient simple_quotient(const SuperModule& m, const std::vector<int>& zeta);
Quotient simple_quotient(const SuperModule& m, const std::vector<int>& zeta, const WeightTable& table);

struct ContravariantForm {
    Matrix gram;
    bool weight_orthogonal = true;
    int dimension = 0; // of the space of contravariant forms
};
std::optional<ContravariantForm> contravariant_form(const SuperModule& m);

enum class StarTag { MTypeProduct, QQSplit };
struct StarProduct {
    SuperModule module;
    StarTag tag;
};
StarProduct star_split(const SuperModule& m, const SuperModule& n);

} // namespace hcaff
