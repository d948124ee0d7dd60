#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "csalg/matrix.hpp"
#include "csalg/qlinalg.hpp"

namespace csalg {

/// Finite-dimensional Q-algebra presented by structure constants:
/// e_u * e_v = sum_w constants(u,v,w) e_w. Nothing is assumed; associativity,
/// unit laws and involution laws are checked, not taken on faith.
class StructureConstantAlgebra {
public:
    StructureConstantAlgebra(int m, std::vector<Rational> constants, std::vector<Rational> unit,
                             std::optional<std::vector<std::vector<Rational>>> involution_rows =
                                 std::nullopt);

    int m() const { return m_; }
    const Rational& c(int u, int v, int w) const {
        return constants_[(static_cast<size_t>(u) * m_ + v) * m_ + w];
    }
    const std::vector<Rational>& unit() const { return unit_; }
    bool has_involution() const { return involution_.has_value(); }
    /// Row u is the coordinate vector of sigma(e_u).
    const std::vector<std::vector<Rational>>& involution_rows() const { return *involution_; }

    std::vector<Rational> mul(const std::vector<Rational>& x,
                              const std::vector<Rational>& y) const;
    std::vector<Rational> apply_involution(const std::vector<Rational>& x) const;
    std::vector<Rational> basis_vector(int u) const;

private:
    int m_;
    std::vector<Rational> constants_;  // m^3, index (u*m + v)*m + w
    std::vector<Rational> unit_;
    std::optional<std::vector<std::vector<Rational>>> involution_;
};

/// The structure constants of M_n(D) over Q in the canonical basis, with the
/// adjoint as involution when requested.
StructureConstantAlgebra matrix_model_algebra(Kind kind, int n, bool with_involution);

/// Change of basis f_u = sum_v g(v,u) e_v; g must be invertible.
StructureConstantAlgebra change_basis(const StructureConstantAlgebra& alg,
                                      const Matrix<Rational>& g);

// --- delta formulas ---------------------------------------------------------

struct DeltaResult {
    bool holds = true;
    std::string failing_clause;
};

namespace detail {

template <class E>
bool elem_is_zero(const E& e) { return e.is_zero(); }

struct UnitTable {
    int count;
    // mult[x][y] = {sign, z} with x*y = sign * z in the unit group
    int sign[4][4];
    int prod[4][4];
};

const UnitTable& unit_table(int case_id);

} // namespace detail

/// Evaluates the quantifier-free basis formula for a family indexed as
/// grids[g][r][s], where g ranges over the scalar units of the case
/// (1 unit, {1,i}, or {1,i,j,k}). Element type needs *, ==, unary -, and
/// is_zero(); matrices and structure-constant elements both qualify.
template <class E>
DeltaResult verify_delta(int case_id, int n, const std::vector<std::vector<std::vector<E>>>& grids) {
    const detail::UnitTable& units = detail::unit_table(case_id);
    if (static_cast<int>(grids.size()) != units.count)
        throw InvalidArgumentError("family has wrong number of unit grids for the case");
    for (const auto& grid : grids)
        if (static_cast<int>(grid.size()) != n)
            throw InvalidArgumentError("family grid has wrong shape");

    auto name = [&](int g, int r, int s) {
        static const char* tags[4] = {"1", "i", "j", "k"};
        std::string out = "X";
        if (units.count > 1) out += std::string("^(") + tags[g] + ")";
        return out + "(" + std::to_string(r + 1) + "," + std::to_string(s + 1) + ")";
    };

    for (int x = 0; x < units.count; ++x)
        for (int y = 0; y < units.count; ++y) {
            const int sign = units.sign[x][y];
            const int z = units.prod[x][y];
            for (int r = 0; r < n; ++r)
                for (int s = 0; s < n; ++s)
                    for (int t = 0; t < n; ++t) {
                        const E lhs = grids[x][r][s] * grids[y][s][t];
                        const E rhs = sign > 0 ? grids[z][r][t] : -grids[z][r][t];
                        if (!(lhs == rhs))
                            return {false, name(x, r, s) + "*" + name(y, s, t) +
                                               " != " + (sign > 0 ? "" : "-") + name(z, r, t)};
                        if (detail::elem_is_zero(lhs))
                            return {false, name(x, r, s) + "*" + name(y, s, t) + " = " +
                                               name(z, r, t) + " is zero"};
                    }
            for (int r = 0; r < n; ++r)
                for (int s = 0; s < n; ++s)
                    for (int t = 0; t < n; ++t) {
                        if (t == s) continue;
                        for (int l = 0; l < n; ++l) {
                            const E lhs = grids[x][r][s] * grids[y][t][l];
                            if (!detail::elem_is_zero(lhs))
                                return {false, name(x, r, s) + "*" + name(y, t, l) + " != 0"};
                        }
                    }
        }
    return {true, ""};
}

/// Structure-constant element with ring operations, for running the delta
/// formulas inside an abstract algebra.
struct AlgElem {
    const StructureConstantAlgebra* alg = nullptr;
    std::vector<Rational> v;

    bool is_zero() const {
        for (const Rational& x : v)
            if (!x.is_zero()) return false;
        return true;
    }
    friend AlgElem operator*(const AlgElem& a, const AlgElem& b) {
        return {a.alg, a.alg->mul(a.v, b.v)};
    }
    AlgElem operator-() const {
        AlgElem r{alg, v};
        for (Rational& x : r.v) x = -x;
        return r;
    }
    friend bool operator==(const AlgElem& a, const AlgElem& b) { return a.v == b.v; }
};

/// Exact rank test: true iff the vectors are linearly independent over Q.
bool check_linear_independence(const std::vector<std::vector<Rational>>& vectors);

/// Basis of the centre {x : x e_u = e_u x for all u}.
std::vector<std::vector<Rational>> center(const StructureConstantAlgebra& alg);

/// Semisimplicity over Q through the regular trace form: the Gram matrix of
/// (x, y) -> tr(L_x L_y) has full rank iff the algebra is semisimple, which
/// for a finite-dimensional algebra with unit over Q is equivalent to von
/// Neumann regularity.
bool is_semisimple(const StructureConstantAlgebra& alg);

enum class Tri { yes, no, inconclusive };
std::string tri_name(Tri t);

struct FieldCheck {
    Tri verdict = Tri::inconclusive;
    std::string note;
};

/// Whether the (commutative) subalgebra spanned by `subspace` is a field.
/// Randomized primitive-element search with certified verdicts only: an
/// irreducible minimal polynomial of full degree proves yes; a factoring or
/// repeated-factor minimal polynomial proves no; a degenerate trace form
/// proves no. A deterministic small-coefficient sweep backs up the random
/// trials; if everything is indecisive the result is Inconclusive, never a
/// guess.
FieldCheck subalgebra_is_field(const StructureConstantAlgebra& alg,
                               const std::vector<std::vector<Rational>>& subspace,
                               uint64_t seed = 0x5eedULL);

FieldCheck center_is_field(const StructureConstantAlgebra& alg, uint64_t seed = 0x5eedULL);

// --- trace functionals ------------------------------------------------------

struct TraceFunctionalCheck {
    bool ok = true;
    std::string reason;
};

/// Checks the two trace axioms for a linear functional on a matrix model,
/// given by its values on the centre-basis (E_rs for the real and complex
/// kinds, the full Q-basis for the quaternion kind): f(xy) = f(yx) on basis
/// pairs and f(1) = deg. When both hold, the functional is checked to agree
/// with the reduced trace on the basis; disagreement would contradict the
/// uniqueness of the reduced trace and raises InternalError.
template <class T>
TraceFunctionalCheck verify_trace_functional_model(int n,
                                                   const std::vector<center_t<T>>& values);

/// Values of the reduced trace on the same basis (what a passing functional
/// must equal).
template <class T>
std::vector<center_t<T>> reduced_trace_basis_values(int n);

/// Structure-constant variant with Q-valued functional and declared degree.
TraceFunctionalCheck verify_trace_functional(const StructureConstantAlgebra& alg,
                                             const std::vector<Rational>& values,
                                             const Rational& declared_deg);

// --- aggregate model checks --------------------------------------------------

struct CsaReport {
    bool associative = false;
    bool unital = false;
    bool semisimple = false;
    int center_dimension = 0;
    Tri center_field = Tri::inconclusive;
    std::string center_field_note;
    bool dimension_consistent = false;  // c | m and m/c a perfect square
    int deg = 0;                        // sqrt(m/c) when consistent

    Tri verdict() const;
    std::string first_failure() const;
};

CsaReport csa_model_check(const StructureConstantAlgebra& alg, uint64_t seed = 0x5eedULL);

enum class InvolutionKindOnly { first, second };

struct CsaiReport {
    CsaReport csa;
    bool involution_present = false;
    bool involutive = false;          // sigma^2 = id
    bool anti_multiplicative = false; // sigma(xy) = sigma(y) sigma(x) on basis pairs
    bool symmetric_center_is_base = false;  // Z(A) cap Sym = Q * 1
    std::optional<InvolutionKindOnly> kind;

    Tri verdict() const;
    std::string first_failure() const;
};

CsaiReport csai_model_check(const StructureConstantAlgebra& alg, uint64_t seed = 0x5eedULL);

} // namespace csalg
