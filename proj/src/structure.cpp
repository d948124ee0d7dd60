#include "csalg/structure.hpp"

#include "csalg/polynomial.hpp"
#include "csalg/random_gen.hpp"

namespace csalg {

StructureConstantAlgebra::StructureConstantAlgebra(
    int m, std::vector<Rational> constants, std::vector<Rational> unit,
    std::optional<std::vector<std::vector<Rational>>> involution_rows)
    : m_(m), constants_(std::move(constants)), unit_(std::move(unit)),
      involution_(std::move(involution_rows)) {
    if (m_ < 1) throw ShapeError("algebra dimension must be positive");
    if (constants_.size() != static_cast<size_t>(m_) * m_ * m_)
        throw ShapeError("structure constant array must have m^3 entries");
    if (unit_.size() != static_cast<size_t>(m_))
        throw ShapeError("unit vector must have m entries");
    if (involution_) {
        if (involution_->size() != static_cast<size_t>(m_))
            throw ShapeError("involution must have m rows");
        for (const auto& row : *involution_)
            if (row.size() != static_cast<size_t>(m_))
                throw ShapeError("involution rows must have m entries");
    }
}

std::vector<Rational> StructureConstantAlgebra::mul(const std::vector<Rational>& x,
                                                    const std::vector<Rational>& y) const {
    std::vector<Rational> out(m_);
    for (int u = 0; u < m_; ++u) {
        if (x[u].is_zero()) continue;
        for (int v = 0; v < m_; ++v) {
            if (y[v].is_zero()) continue;
            const Rational f = x[u] * y[v];
            for (int w = 0; w < m_; ++w) {
                const Rational& cw = c(u, v, w);
                if (!cw.is_zero()) out[w] += f * cw;
            }
        }
    }
    return out;
}

std::vector<Rational> StructureConstantAlgebra::apply_involution(
    const std::vector<Rational>& x) const {
    if (!involution_) throw InvalidArgumentError("algebra carries no involution");
    std::vector<Rational> out(m_);
    for (int u = 0; u < m_; ++u) {
        if (x[u].is_zero()) continue;
        for (int w = 0; w < m_; ++w) out[w] += x[u] * (*involution_)[u][w];
    }
    return out;
}

std::vector<Rational> StructureConstantAlgebra::basis_vector(int u) const {
    std::vector<Rational> out(m_);
    out[u] = Rational(1);
    return out;
}

namespace {

template <class T>
StructureConstantAlgebra model_algebra(int n, bool with_involution) {
    const int m = q_dimension<T>(n);
    std::vector<Matrix<T>> basis;
    basis.reserve(m);
    for (int u = 0; u < m; ++u) basis.push_back(basis_element<T>(n, u));

    std::vector<Rational> constants(static_cast<size_t>(m) * m * m);
    for (int u = 0; u < m; ++u)
        for (int v = 0; v < m; ++v) {
            const auto coords = flatten(basis[u] * basis[v]);
            for (int w = 0; w < m; ++w)
                constants[(static_cast<size_t>(u) * m + v) * m + w] = coords[w];
        }
    std::vector<Rational> unit = flatten(Matrix<T>::identity(n));
    std::optional<std::vector<std::vector<Rational>>> invo;
    if (with_involution) {
        invo.emplace();
        for (int u = 0; u < m; ++u) invo->push_back(flatten(basis[u].adjoint()));
    }
    return StructureConstantAlgebra(m, std::move(constants), std::move(unit), std::move(invo));
}

} // namespace

StructureConstantAlgebra matrix_model_algebra(Kind kind, int n, bool with_involution) {
    switch (kind) {
        case Kind::real: return model_algebra<Rational>(n, with_involution);
        case Kind::complex: return model_algebra<GaussRational>(n, with_involution);
        case Kind::quaternion: return model_algebra<RatQuaternion>(n, with_involution);
    }
    throw InvalidArgumentError("unknown kind");
}

StructureConstantAlgebra change_basis(const StructureConstantAlgebra& alg,
                                      const Matrix<Rational>& g) {
    const int m = alg.m();
    if (g.n() != m) throw ShapeError("basis change must be m x m");
    auto ginv = invert(g);
    if (!ginv) throw InvalidArgumentError("basis change must be invertible");

    // f_u = sum_v g(v,u) e_v; new constants express f_u f_v over the f basis.
    auto old_coords_of = [&](int u) {
        std::vector<Rational> e(m);
        for (int v = 0; v < m; ++v) e[v] = g.at(v, u);
        return e;
    };
    auto to_new = [&](const std::vector<Rational>& x) {
        std::vector<Rational> out(m);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) out[i] += ginv->at(i, j) * x[j];
        return out;
    };

    std::vector<Rational> constants(static_cast<size_t>(m) * m * m);
    for (int u = 0; u < m; ++u)
        for (int v = 0; v < m; ++v) {
            const auto prod = to_new(alg.mul(old_coords_of(u), old_coords_of(v)));
            for (int w = 0; w < m; ++w)
                constants[(static_cast<size_t>(u) * m + v) * m + w] = prod[w];
        }
    std::optional<std::vector<std::vector<Rational>>> invo;
    if (alg.has_involution()) {
        invo.emplace();
        for (int u = 0; u < m; ++u)
            invo->push_back(to_new(alg.apply_involution(old_coords_of(u))));
    }
    return StructureConstantAlgebra(m, std::move(constants), to_new(alg.unit()),
                                    std::move(invo));
}

namespace detail {

const UnitTable& unit_table(int case_id) {
    static const UnitTable one = {1, {{1}}, {{0}}};
    static const UnitTable complex_units = {2, {{1, 1}, {1, -1}}, {{0, 1}, {1, 0}}};
    // 1, i, j, k with ij = -ji = k
    static const UnitTable quat_units = {
        4,
        {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}},
        {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}}};
    switch (case_id) {
        case 1: return one;
        case 2: return complex_units;
        case 3: return quat_units;
    }
    throw InvalidArgumentError("delta case must be 1, 2 or 3");
}

} // namespace detail

bool check_linear_independence(const std::vector<std::vector<Rational>>& vectors) {
    if (vectors.empty()) return true;
    QGrid g(static_cast<int>(vectors.size()), static_cast<int>(vectors[0].size()));
    for (size_t i = 0; i < vectors.size(); ++i) {
        if (vectors[i].size() != vectors[0].size())
            throw ShapeError("vectors must all have the same length");
        for (size_t j = 0; j < vectors[i].size(); ++j)
            g.at(static_cast<int>(i), static_cast<int>(j)) = vectors[i][j];
    }
    return rank(std::move(g)) == static_cast<int>(vectors.size());
}

std::vector<std::vector<Rational>> center(const StructureConstantAlgebra& alg) {
    const int m = alg.m();
    // x e_u - e_u x = 0 for all u: rows indexed by (u, w), unknowns x_v.
    QGrid sys(m * m, m);
    for (int u = 0; u < m; ++u)
        for (int w = 0; w < m; ++w)
            for (int v = 0; v < m; ++v)
                sys.at(u * m + w, v) = alg.c(v, u, w) - alg.c(u, v, w);
    return nullspace_basis(sys);
}

bool is_semisimple(const StructureConstantAlgebra& alg) {
    const int m = alg.m();
    // Gram of the regular trace form: T(u,v) = tr(L_{e_u} L_{e_v}).
    QGrid gram(m, m);
    for (int u = 0; u < m; ++u)
        for (int v = 0; v < m; ++v) {
            Rational t;
            for (int p = 0; p < m; ++p)
                for (int q = 0; q < m; ++q) t += alg.c(u, q, p) * alg.c(v, p, q);
            gram.at(u, v) = t;
        }
    return rank(std::move(gram)) == m;
}

std::string tri_name(Tri t) {
    switch (t) {
        case Tri::yes: return "true";
        case Tri::no: return "false";
        case Tri::inconclusive: return "inconclusive";
    }
    return "?";
}

namespace {

std::vector<Rational> linear_combination(const std::vector<std::vector<Rational>>& basis,
                                         const std::vector<Rational>& coeffs) {
    std::vector<Rational> out(basis[0].size());
    for (size_t i = 0; i < basis.size(); ++i)
        for (size_t j = 0; j < out.size(); ++j) out[j] += coeffs[i] * basis[i][j];
    return out;
}

/// Coefficients expressing target in the span of the rows, or nullopt.
std::optional<std::vector<Rational>> express_in_span(
    const std::vector<std::vector<Rational>>& rows, const std::vector<Rational>& target) {
    const int k = static_cast<int>(rows.size());
    const int m = static_cast<int>(target.size());
    QGrid aug(m, k + 1);
    for (int j = 0; j < k; ++j)
        for (int i = 0; i < m; ++i) aug.at(i, j) = rows[j][i];
    for (int i = 0; i < m; ++i) aug.at(i, k) = target[i];
    const auto pivots = rref(aug);
    for (int p : pivots)
        if (p == k) return std::nullopt;  // inconsistent
    std::vector<Rational> coeffs(k);
    for (size_t r = 0; r < pivots.size(); ++r) coeffs[pivots[r]] = aug.at(static_cast<int>(r), k);
    return coeffs;
}

/// Minimal polynomial of x, monic, computed from the first linear dependence
/// among its powers.
QPoly minimal_polynomial(const StructureConstantAlgebra& alg, const std::vector<Rational>& x) {
    std::vector<std::vector<Rational>> powers{alg.unit()};
    std::vector<Rational> cur = alg.unit();
    for (;;) {
        cur = alg.mul(cur, x);
        if (auto coeffs = express_in_span(powers, cur)) {
            QPoly f(powers.size() + 1);
            for (size_t i = 0; i < coeffs->size(); ++i) f[i] = -(*coeffs)[i];
            f[powers.size()] = Rational(1);
            return f;
        }
        powers.push_back(cur);
        if (powers.size() > static_cast<size_t>(alg.m()) + 1)
            throw InternalError("no linear dependence among powers up to the dimension");
    }
}

/// One element's testimony about the subalgebra it lives in.
enum class Testimony { field_if_full_degree, not_field, silent };

Testimony classify_element(const StructureConstantAlgebra& alg, const std::vector<Rational>& theta,
                           size_t span_dim, std::string& note) {
    const QPoly f = minimal_polynomial(alg, theta);
    switch (classify_factorization(f)) {
        case FactorClass::repeated:
            note = "minimal polynomial has a repeated factor (nilpotent witness)";
            return Testimony::not_field;
        case FactorClass::splits:
            note = "minimal polynomial factors into coprime parts (idempotent witness)";
            return Testimony::not_field;
        case FactorClass::irreducible:
            if (static_cast<size_t>(poly_degree(f)) == span_dim) {
                note = "primitive element with irreducible minimal polynomial of full degree";
                return Testimony::field_if_full_degree;
            }
            return Testimony::silent;
        case FactorClass::unknown:
            return Testimony::silent;
    }
    return Testimony::silent;
}

} // namespace

FieldCheck subalgebra_is_field(const StructureConstantAlgebra& alg,
                               const std::vector<std::vector<Rational>>& subspace,
                               uint64_t seed) {
    const size_t c = subspace.size();
    if (c == 0) return {Tri::no, "zero subalgebra"};
    std::string note;

    // Randomized primitive-element trials: 20 draws, coefficient height <= 10.
    Rng rng(seed);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<Rational> coeffs(c);
        bool nonzero = false;
        for (size_t i = 0; i < c; ++i) {
            coeffs[i] = Rational(rng.uniform(-10, 10));
            nonzero = nonzero || !coeffs[i].is_zero();
        }
        if (!nonzero) continue;
        const auto theta = linear_combination(subspace, coeffs);
        switch (classify_element(alg, theta, c, note)) {
            case Testimony::not_field: return {Tri::no, note};
            case Testimony::field_if_full_degree: return {Tri::yes, note};
            case Testimony::silent: break;
        }
    }

    // Trace form of the subalgebra itself: degenerate means a radical, hence
    // not a field. Requires the subspace to be multiplicatively closed.
    {
        const int ci = static_cast<int>(c);
        std::vector<std::vector<std::vector<Rational>>> table(
            c, std::vector<std::vector<Rational>>(c));
        bool closed = true;
        for (size_t i = 0; i < c && closed; ++i)
            for (size_t j = 0; j < c && closed; ++j) {
                auto coeffs = express_in_span(subspace, alg.mul(subspace[i], subspace[j]));
                if (!coeffs) closed = false;
                else table[i][j] = std::move(*coeffs);
            }
        if (closed) {
            QGrid gram(ci, ci);
            for (int u = 0; u < ci; ++u)
                for (int v = 0; v < ci; ++v) {
                    Rational t;
                    for (int p = 0; p < ci; ++p)
                        for (int q = 0; q < ci; ++q) t += table[u][q][p] * table[v][p][q];
                    gram.at(u, v) = t;
                }
            if (rank(std::move(gram)) != ci)
                return {Tri::no, "regular trace form of the subalgebra is degenerate"};
        }
    }

    // Deterministic sweep with small coefficients as a last resort.
    if (c <= 4) {
        std::vector<long> coeffs(c, -3);
        for (;;) {
            bool nonzero = false;
            for (long v : coeffs) nonzero = nonzero || v != 0;
            if (nonzero) {
                std::vector<Rational> rc(c);
                for (size_t i = 0; i < c; ++i) rc[i] = Rational(coeffs[i]);
                const auto theta = linear_combination(subspace, rc);
                switch (classify_element(alg, theta, c, note)) {
                    case Testimony::not_field: return {Tri::no, note};
                    case Testimony::field_if_full_degree: return {Tri::yes, note};
                    case Testimony::silent: break;
                }
            }
            size_t pos = 0;
            while (pos < c && coeffs[pos] == 3) coeffs[pos++] = -3;
            if (pos == c) break;
            ++coeffs[pos];
        }
    }

    return {Tri::inconclusive,
            "no certified verdict: all sampled minimal polynomials were indecisive"};
}

FieldCheck center_is_field(const StructureConstantAlgebra& alg, uint64_t seed) {
    return subalgebra_is_field(alg, center(alg), seed);
}

// --- trace functionals -------------------------------------------------------

namespace {

// The functional is given on the basis E_rs (real/complex) or E_rs * unit
// (quaternion). Products of basis elements are single-entry matrices, so
// f(e_u e_v) reduces to a signed table lookup.
template <class T>
struct BasisIndex {
    int n;
    int units;  // 1 for the centre-basis kinds, 4 for the quaternion kind

    explicit BasisIndex(int n_) : n(n_), units(kind_of_v<T> == Kind::quaternion ? 4 : 1) {}
    size_t size() const { return static_cast<size_t>(n) * n * units; }
    size_t idx(int r, int s, int unit) const {
        return (static_cast<size_t>(r) * n + s) * units + unit;
    }

    // f(e_u e_v) as (sign, index into values), or nullopt when the product
    // is zero.
    std::optional<std::pair<int, size_t>> product(size_t u, size_t v) const {
        const int unit_u = static_cast<int>(u) % units, unit_v = static_cast<int>(v) % units;
        const int pos_u = static_cast<int>(u) / units, pos_v = static_cast<int>(v) / units;
        const int r = pos_u / n, s = pos_u % n, t = pos_v / n, w = pos_v % n;
        if (s != t) return std::nullopt;
        const detail::UnitTable& table = detail::unit_table(units == 4 ? 3 : 1);
        return std::make_pair(table.sign[unit_u][unit_v],
                              idx(r, w, table.prod[unit_u][unit_v]));
    }
};

template <class T>
center_t<T> signed_value(int sign, const center_t<T>& v) {
    return sign > 0 ? v : -v;
}

} // namespace

template <class T>
std::vector<center_t<T>> reduced_trace_basis_values(int n) {
    const BasisIndex<T> b(n);
    std::vector<center_t<T>> out(b.size());
    for (int r = 0; r < n; ++r)
        for (int s = 0; s < n; ++s)
            for (int u = 0; u < b.units; ++u) {
                Matrix<T> e(n);
                Rational coords[4];
                for (int c = 0; c < ScalarTraits<T>::components; ++c)
                    coords[c] = Rational(0);
                if constexpr (kind_of_v<T> == Kind::quaternion) {
                    coords[u] = Rational(1);
                } else {
                    coords[0] = Rational(1);
                }
                T unit_val{};
                scalar_from_coords(unit_val, coords);
                e.at(r, s) = unit_val;
                out[b.idx(r, s, u)] = reduced_trace(e);
            }
    return out;
}

template <class T>
TraceFunctionalCheck verify_trace_functional_model(int n,
                                                   const std::vector<center_t<T>>& values) {
    const BasisIndex<T> b(n);
    if (values.size() != b.size())
        throw ShapeError("functional must give one value per basis element");

    auto value_of = [&](std::optional<std::pair<int, size_t>> p) {
        return p ? signed_value<T>(p->first, values[p->second]) : center_t<T>{};
    };
    for (size_t u = 0; u < b.size(); ++u)
        for (size_t v = 0; v < b.size(); ++v) {
            if (!(value_of(b.product(u, v)) == value_of(b.product(v, u))))
                return {false, "f(xy) != f(yx) at basis pair (" + std::to_string(u) + ", " +
                                   std::to_string(v) + ")"};
        }

    center_t<T> at_unit{};
    for (int r = 0; r < n; ++r) at_unit += values[b.idx(r, r, 0)];
    const int deg = ScalarTraits<T>::degree_factor * n;
    if (!(at_unit == center_t<T>(Rational(deg))))
        return {false, "f(1) != deg"};

    // Both axioms hold; by uniqueness of the reduced trace the functional
    // must be the reduced trace itself.
    const auto trd = reduced_trace_basis_values<T>(n);
    for (size_t u = 0; u < b.size(); ++u)
        if (!(values[u] == trd[u]))
            throw InternalError("functional passes the trace axioms but differs from the "
                                "reduced trace");
    return {true, ""};
}

template TraceFunctionalCheck verify_trace_functional_model<Rational>(
    int, const std::vector<Rational>&);
template TraceFunctionalCheck verify_trace_functional_model<GaussRational>(
    int, const std::vector<GaussRational>&);
template TraceFunctionalCheck verify_trace_functional_model<RatQuaternion>(
    int, const std::vector<Rational>&);

template std::vector<Rational> reduced_trace_basis_values<Rational>(int);
template std::vector<GaussRational> reduced_trace_basis_values<GaussRational>(int);
// RatQuaternion shares the Rational instantiation of the return type.
template std::vector<Rational> reduced_trace_basis_values<RatQuaternion>(int);

TraceFunctionalCheck verify_trace_functional(const StructureConstantAlgebra& alg,
                                             const std::vector<Rational>& values,
                                             const Rational& declared_deg) {
    const int m = alg.m();
    if (values.size() != static_cast<size_t>(m))
        throw ShapeError("functional must give one value per basis element");
    auto eval = [&](const std::vector<Rational>& x) {
        Rational out;
        for (int u = 0; u < m; ++u) out += x[u] * values[u];
        return out;
    };
    for (int u = 0; u < m; ++u)
        for (int v = 0; v < m; ++v) {
            const auto eu = alg.basis_vector(u), ev = alg.basis_vector(v);
            if (eval(alg.mul(eu, ev)) != eval(alg.mul(ev, eu)))
                return {false, "f(xy) != f(yx) at basis pair (" + std::to_string(u) + ", " +
                                   std::to_string(v) + ")"};
        }
    if (eval(alg.unit()) != declared_deg) return {false, "f(1) != declared deg"};
    return {true, ""};
}

// --- aggregate model checks ---------------------------------------------------

Tri CsaReport::verdict() const {
    if (!associative || !unital || !semisimple || center_field == Tri::no ||
        !dimension_consistent)
        return Tri::no;
    if (center_field == Tri::inconclusive) return Tri::inconclusive;
    return Tri::yes;
}

std::string CsaReport::first_failure() const {
    if (!associative) return "not associative";
    if (!unital) return "unit laws fail";
    if (!semisimple) return "not semisimple (regular trace form degenerate)";
    if (center_field == Tri::no) return "centre is not a field";
    if (!dimension_consistent) return "dimension over the centre is not a perfect square";
    if (center_field == Tri::inconclusive) return "centre field check inconclusive";
    return "";
}

CsaReport csa_model_check(const StructureConstantAlgebra& alg, uint64_t seed) {
    const int m = alg.m();
    CsaReport rep;

    rep.associative = true;
    for (int u = 0; u < m && rep.associative; ++u)
        for (int v = 0; v < m && rep.associative; ++v) {
            const auto uv = alg.mul(alg.basis_vector(u), alg.basis_vector(v));
            for (int w = 0; w < m; ++w) {
                const auto lhs = alg.mul(uv, alg.basis_vector(w));
                const auto rhs =
                    alg.mul(alg.basis_vector(u), alg.mul(alg.basis_vector(v), alg.basis_vector(w)));
                if (lhs != rhs) { rep.associative = false; break; }
            }
        }

    rep.unital = true;
    for (int u = 0; u < m; ++u) {
        const auto e = alg.basis_vector(u);
        if (alg.mul(alg.unit(), e) != e || alg.mul(e, alg.unit()) != e) {
            rep.unital = false;
            break;
        }
    }

    if (!rep.associative || !rep.unital) return rep;

    rep.semisimple = is_semisimple(alg);
    const auto z = center(alg);
    rep.center_dimension = static_cast<int>(z.size());
    const FieldCheck fc = subalgebra_is_field(alg, z, seed);
    rep.center_field = fc.verdict;
    rep.center_field_note = fc.note;

    const int c = rep.center_dimension;
    if (c >= 1 && m % c == 0) {
        const long q = m / c;
        mpz_class qz(q);
        if (mpz_perfect_square_p(qz.get_mpz_t())) {
            rep.dimension_consistent = true;
            mpz_class r;
            mpz_sqrt(r.get_mpz_t(), qz.get_mpz_t());
            rep.deg = static_cast<int>(r.get_si());
        }
    }
    return rep;
}

Tri CsaiReport::verdict() const {
    const Tri base = csa.verdict();
    if (!involution_present || !involutive || !anti_multiplicative || !symmetric_center_is_base)
        return Tri::no;
    return base;
}

std::string CsaiReport::first_failure() const {
    if (!involution_present) return "no involution given";
    const std::string base = csa.first_failure();
    if (!base.empty() && csa.verdict() == Tri::no) return base;
    if (!involutive) return "sigma^2 != id";
    if (!anti_multiplicative) return "sigma(xy) != sigma(y) sigma(x)";
    if (!symmetric_center_is_base) return "symmetric centre is not Q * 1";
    return base;
}

CsaiReport csai_model_check(const StructureConstantAlgebra& alg, uint64_t seed) {
    CsaiReport rep;
    rep.csa = csa_model_check(alg, seed);
    rep.involution_present = alg.has_involution();
    if (!rep.involution_present) return rep;

    const int m = alg.m();
    rep.involutive = true;
    for (int u = 0; u < m; ++u) {
        const auto e = alg.basis_vector(u);
        if (alg.apply_involution(alg.apply_involution(e)) != e) {
            rep.involutive = false;
            break;
        }
    }

    rep.anti_multiplicative = true;
    for (int u = 0; u < m && rep.anti_multiplicative; ++u)
        for (int v = 0; v < m; ++v) {
            const auto eu = alg.basis_vector(u), ev = alg.basis_vector(v);
            if (alg.apply_involution(alg.mul(eu, ev)) !=
                alg.mul(alg.apply_involution(ev), alg.apply_involution(eu))) {
                rep.anti_multiplicative = false;
                break;
            }
        }

    // Z(A) cap Sym(A, sigma) = Q * 1: stack the centre conditions with
    // sigma(x) = x and demand a one-dimensional solution space containing 1.
    {
        QGrid sys(m * m + m, m);
        for (int u = 0; u < m; ++u)
            for (int w = 0; w < m; ++w)
                for (int v = 0; v < m; ++v)
                    sys.at(u * m + w, v) = alg.c(v, u, w) - alg.c(u, v, w);
        for (int w = 0; w < m; ++w)
            for (int v = 0; v < m; ++v) {
                Rational entry = alg.involution_rows()[v][w];
                if (v == w) entry -= Rational(1);
                sys.at(m * m + w, v) = entry;
            }
        const auto fixed = nullspace_basis(sys);
        if (fixed.size() == 1) {
            // the space contains the unit iff the unit is a multiple of the
            // single basis vector
            const auto& b = fixed[0];
            const auto& one = alg.unit();
            int pivot = -1;
            for (int i = 0; i < m; ++i)
                if (!b[i].is_zero()) { pivot = i; break; }
            if (pivot >= 0 && !one[pivot].is_zero()) {
                const Rational f = one[pivot] / b[pivot];
                bool proportional = true;
                for (int i = 0; i < m; ++i)
                    if (one[i] != f * b[i]) { proportional = false; break; }
                rep.symmetric_center_is_base = proportional;
            }
        }
    }

    // First kind iff sigma fixes the centre pointwise.
    {
        bool fixes_center = true;
        for (const auto& zvec : center(alg))
            if (alg.apply_involution(zvec) != zvec) { fixes_center = false; break; }
        rep.kind = fixes_center ? InvolutionKindOnly::first : InvolutionKindOnly::second;
    }
    return rep;
}

} // namespace csalg
