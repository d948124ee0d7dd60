#pragma once

#include <json.hpp>

#include <variant>
#include <vector>

#include "csalg/cones.hpp"
#include "csalg/involution.hpp"
#include "csalg/matrix.hpp"
#include "csalg/structure.hpp"
#include "csalg/words.hpp"

namespace csalg {

using json = nlohmann::json;

/// Runtime-kinded matrix as it crosses the JSON boundary.
using AnyMatrix = std::variant<Matrix<Rational>, Matrix<GaussRational>, Matrix<RatQuaternion>>;
using AnyInvolution =
    std::variant<Involution<Rational>, Involution<GaussRational>, Involution<RatQuaternion>>;

Kind kind_of(const AnyMatrix& m);
Kind parse_kind(const json& j);

// --- scalars ---------------------------------------------------------------
// Rational as "p" or "p/q"; Gaussian rational as [re, im]; quaternion as
// [a, b, c, d], components rational strings. Integer JSON numbers are
// accepted on input; output is always strings.

Rational rational_from_json(const json& j);
json rational_to_json(const Rational& r);

json scalar_to_json(const Rational& x);
json scalar_to_json(const GaussRational& x);
json scalar_to_json(const RatQuaternion& x);

void scalar_from_json(const json& j, Rational& out);
void scalar_from_json(const json& j, GaussRational& out);
void scalar_from_json(const json& j, RatQuaternion& out);

// --- matrices ----------------------------------------------------------------

template <class T>
json matrix_to_json(const Matrix<T>& m) {
    json entries = json::array();
    for (int i = 0; i < m.n(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.n(); ++j) row.push_back(scalar_to_json(m.at(i, j)));
        entries.push_back(std::move(row));
    }
    return {{"kind", kind_name(kind_of_v<T>)}, {"n", m.n()}, {"entries", std::move(entries)}};
}

json any_matrix_to_json(const AnyMatrix& m);
AnyMatrix matrix_from_json(const json& j);

template <class T>
Matrix<T> matrix_from_json_as(const json& j) {
    AnyMatrix any = matrix_from_json(j);
    if (auto* m = std::get_if<Matrix<T>>(&any)) return std::move(*m);
    throw ParseError("matrix has kind " + kind_name(kind_of(any)) + ", expected " +
                     kind_name(kind_of_v<T>));
}

// --- involutions ---------------------------------------------------------------

json any_involution_to_json(const AnyInvolution& inv);
AnyInvolution involution_from_json(const json& j);

// --- certificates ---------------------------------------------------------------

template <class T>
json congruence_to_json(const CongruenceCertificate<T>& c) {
    json d = json::array();
    for (const Rational& x : c.d) d.push_back(rational_to_json(x));
    return {{"P", matrix_to_json(c.P)}, {"d", std::move(d)}};
}

template <class T>
CongruenceCertificate<T> congruence_from_json(const json& j);

template <class T>
json cone_certificate_to_json(const ConeCertificate<T>& c) {
    json terms = json::array();
    for (const auto& [u, x] : c.terms)
        terms.push_back({{"u", rational_to_json(u)}, {"x", matrix_to_json(x)}});
    return {{"p", matrix_to_json(c.p)},
            {"p_certificate", congruence_to_json(c.p_certificate)},
            {"terms", std::move(terms)}};
}

template <class T>
ConeCertificate<T> cone_certificate_from_json(const json& j);

// --- structure-constant algebras --------------------------------------------

StructureConstantAlgebra algebra_from_json(const json& j);
json algebra_to_json(const StructureConstantAlgebra& alg);

// --- helpers -------------------------------------------------------------------

const json& require_field(const json& j, const char* name);

} // namespace csalg
