#include "csalg/json_io.hpp"

namespace csalg {

const json& require_field(const json& j, const char* name) {
    if (!j.is_object()) throw ParseError(std::string("expected an object with field '") + name + "'");
    auto it = j.find(name);
    if (it == j.end()) throw ParseError(std::string("missing field '") + name + "'");
    return *it;
}

Kind kind_of(const AnyMatrix& m) {
    return std::visit([](const auto& mm) { return mm.kind(); }, m);
}

Kind parse_kind(const json& j) {
    if (!j.is_string()) throw ParseError("kind must be a string");
    const std::string s = j.get<std::string>();
    if (s == "real") return Kind::real;
    if (s == "complex") return Kind::complex;
    if (s == "quaternion") return Kind::quaternion;
    throw ParseError("kind must be real, complex or quaternion, got '" + s + "'");
}

Rational rational_from_json(const json& j) {
    if (j.is_number_integer()) return Rational(static_cast<long>(j.get<int64_t>()));
    if (j.is_string()) {
        auto r = Rational::parse(j.get<std::string>());
        if (!r) throw ParseError("bad rational literal '" + j.get<std::string>() + "'");
        return *r;
    }
    throw ParseError("rational must be a string like \"p/q\" or an integer");
}

json rational_to_json(const Rational& r) { return r.str(); }

json scalar_to_json(const Rational& x) { return rational_to_json(x); }
json scalar_to_json(const GaussRational& x) {
    return json::array({rational_to_json(x.re), rational_to_json(x.im)});
}
json scalar_to_json(const RatQuaternion& x) {
    return json::array({rational_to_json(x.a), rational_to_json(x.b), rational_to_json(x.c),
                        rational_to_json(x.d)});
}

void scalar_from_json(const json& j, Rational& out) { out = rational_from_json(j); }
void scalar_from_json(const json& j, GaussRational& out) {
    if (!j.is_array() || j.size() != 2)
        throw ParseError("complex scalar must be [re, im]");
    out = GaussRational{rational_from_json(j[0]), rational_from_json(j[1])};
}
void scalar_from_json(const json& j, RatQuaternion& out) {
    if (!j.is_array() || j.size() != 4)
        throw ParseError("quaternion scalar must be [a, b, c, d]");
    out = RatQuaternion{rational_from_json(j[0]), rational_from_json(j[1]),
                        rational_from_json(j[2]), rational_from_json(j[3])};
}

namespace {

template <class T>
Matrix<T> typed_matrix_from_json(const json& j, int n) {
    const json& entries = require_field(j, "entries");
    if (!entries.is_array() || static_cast<int>(entries.size()) != n)
        throw ParseError("entries must be an n x n array");
    Matrix<T> m(n);
    for (int i = 0; i < n; ++i) {
        const json& row = entries[i];
        if (!row.is_array() || static_cast<int>(row.size()) != n)
            throw ParseError("entries must be an n x n array");
        for (int k = 0; k < n; ++k) scalar_from_json(row[k], m.at(i, k));
    }
    return m;
}

} // namespace

AnyMatrix matrix_from_json(const json& j) {
    const Kind kind = parse_kind(require_field(j, "kind"));
    const json& nj = require_field(j, "n");
    if (!nj.is_number_integer() || nj.get<int64_t>() < 1 || nj.get<int64_t>() > 64)
        throw ParseError("n must be a positive integer (at most 64)");
    const int n = static_cast<int>(nj.get<int64_t>());
    switch (kind) {
        case Kind::real: return typed_matrix_from_json<Rational>(j, n);
        case Kind::complex: return typed_matrix_from_json<GaussRational>(j, n);
        case Kind::quaternion: return typed_matrix_from_json<RatQuaternion>(j, n);
    }
    throw ParseError("unreachable");
}

json any_matrix_to_json(const AnyMatrix& m) {
    return std::visit([](const auto& mm) { return matrix_to_json(mm); }, m);
}

namespace {

template <class T>
Involution<T> typed_involution_from_json(const json& j, int n) {
    const json& scale = require_field(j, "scale");
    if (scale.is_string() && scale.get<std::string>() == "identity")
        return Involution<T>::adjoint_involution(n);
    Matrix<T> a = matrix_from_json_as<T>(scale);
    if (a.n() != n) throw ParseError("involution scale has wrong dimension");
    try {
        return Involution<T>::make(std::move(a));
    } catch (const InvalidArgumentError& e) {
        throw ParseError(std::string("invalid involution: ") + e.what());
    }
}

} // namespace

AnyInvolution involution_from_json(const json& j) {
    const Kind kind = parse_kind(require_field(j, "kind"));
    const json& nj = require_field(j, "n");
    if (!nj.is_number_integer() || nj.get<int64_t>() < 1 || nj.get<int64_t>() > 64)
        throw ParseError("n must be a positive integer (at most 64)");
    const int n = static_cast<int>(nj.get<int64_t>());
    switch (kind) {
        case Kind::real: return typed_involution_from_json<Rational>(j, n);
        case Kind::complex: return typed_involution_from_json<GaussRational>(j, n);
        case Kind::quaternion: return typed_involution_from_json<RatQuaternion>(j, n);
    }
    throw ParseError("unreachable");
}

json any_involution_to_json(const AnyInvolution& inv) {
    return std::visit(
        [](const auto& v) -> json {
            return {{"kind", kind_name(v.kind())},
                    {"n", v.n()},
                    {"scale", matrix_to_json(v.scale())}};
        },
        inv);
}

template <class T>
CongruenceCertificate<T> congruence_from_json(const json& j) {
    CongruenceCertificate<T> c{matrix_from_json_as<T>(require_field(j, "P")), {}};
    const json& d = require_field(j, "d");
    if (!d.is_array()) throw ParseError("d must be an array of rationals");
    for (const json& x : d) c.d.push_back(rational_from_json(x));
    return c;
}

template CongruenceCertificate<Rational> congruence_from_json<Rational>(const json&);
template CongruenceCertificate<GaussRational> congruence_from_json<GaussRational>(const json&);
template CongruenceCertificate<RatQuaternion> congruence_from_json<RatQuaternion>(const json&);

template <class T>
ConeCertificate<T> cone_certificate_from_json(const json& j) {
    ConeCertificate<T> c{matrix_from_json_as<T>(require_field(j, "p")),
                         congruence_from_json<T>(require_field(j, "p_certificate")),
                         {}};
    const json& terms = require_field(j, "terms");
    if (!terms.is_array()) throw ParseError("terms must be an array");
    for (const json& t : terms)
        c.terms.emplace_back(rational_from_json(require_field(t, "u")),
                             matrix_from_json_as<T>(require_field(t, "x")));
    return c;
}

template ConeCertificate<Rational> cone_certificate_from_json<Rational>(const json&);
template ConeCertificate<GaussRational> cone_certificate_from_json<GaussRational>(const json&);
template ConeCertificate<RatQuaternion> cone_certificate_from_json<RatQuaternion>(const json&);

StructureConstantAlgebra algebra_from_json(const json& j) {
    const json& mj = require_field(j, "m");
    if (!mj.is_number_integer() || mj.get<int64_t>() < 1 || mj.get<int64_t>() > 64)
        throw ParseError("m must be a positive integer (at most 64)");
    const int m = static_cast<int>(mj.get<int64_t>());

    const json& cj = require_field(j, "constants");
    if (!cj.is_array() || static_cast<int>(cj.size()) != m)
        throw ParseError("constants must be an m x m x m array");
    std::vector<Rational> constants(static_cast<size_t>(m) * m * m);
    for (int u = 0; u < m; ++u) {
        if (!cj[u].is_array() || static_cast<int>(cj[u].size()) != m)
            throw ParseError("constants must be an m x m x m array");
        for (int v = 0; v < m; ++v) {
            const json& row = cj[u][v];
            if (!row.is_array() || static_cast<int>(row.size()) != m)
                throw ParseError("constants must be an m x m x m array");
            for (int w = 0; w < m; ++w)
                constants[(static_cast<size_t>(u) * m + v) * m + w] = rational_from_json(row[w]);
        }
    }

    const json& uj = require_field(j, "unit");
    if (!uj.is_array() || static_cast<int>(uj.size()) != m)
        throw ParseError("unit must be a vector of m rationals");
    std::vector<Rational> unit(m);
    for (int u = 0; u < m; ++u) unit[u] = rational_from_json(uj[u]);

    std::optional<std::vector<std::vector<Rational>>> invo;
    if (j.contains("involution") && !j["involution"].is_null()) {
        const json& ij = j["involution"];
        if (!ij.is_array() || static_cast<int>(ij.size()) != m)
            throw ParseError("involution must be an m x m array (rows are images of basis)");
        invo.emplace();
        for (int u = 0; u < m; ++u) {
            const json& row = ij[u];
            if (!row.is_array() || static_cast<int>(row.size()) != m)
                throw ParseError("involution must be an m x m array");
            std::vector<Rational> r(m);
            for (int w = 0; w < m; ++w) r[w] = rational_from_json(row[w]);
            invo->push_back(std::move(r));
        }
    }
    return StructureConstantAlgebra(m, std::move(constants), std::move(unit), std::move(invo));
}

json algebra_to_json(const StructureConstantAlgebra& alg) {
    const int m = alg.m();
    json constants = json::array();
    for (int u = 0; u < m; ++u) {
        json plane = json::array();
        for (int v = 0; v < m; ++v) {
            json row = json::array();
            for (int w = 0; w < m; ++w) row.push_back(rational_to_json(alg.c(u, v, w)));
            plane.push_back(std::move(row));
        }
        constants.push_back(std::move(plane));
    }
    json unit = json::array();
    for (const Rational& x : alg.unit()) unit.push_back(rational_to_json(x));
    json out = {{"m", m}, {"constants", std::move(constants)}, {"unit", std::move(unit)}};
    if (alg.has_involution()) {
        json invo = json::array();
        for (const auto& row : alg.involution_rows()) {
            json r = json::array();
            for (const Rational& x : row) r.push_back(rational_to_json(x));
            invo.push_back(std::move(r));
        }
        out["involution"] = std::move(invo);
    }
    return out;
}

} // namespace csalg
