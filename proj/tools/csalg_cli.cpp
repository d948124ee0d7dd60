// Batch JSON front end: one subcommand per library operation, one JSON
// document on stdout. Exit codes: 0 affirmative verdict, 1 negative verdict
// (with witness or certificate), 2 input error, 3 inconclusive.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "csalg/json_io.hpp"

using namespace csalg;

namespace {

json read_input(const std::string& path) {
    std::string text;
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        text = ss.str();
    } else {
        std::ifstream f(path);
        if (!f) throw ParseError("cannot open input file '" + path + "'");
        std::ostringstream ss;
        ss << f.rdbuf();
        text = ss.str();
    }
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
}

void emit(const json& out) { std::cout << out.dump() << "\n"; }

struct Options {
    std::string input = "-";
    uint64_t seed = 0x5eedULL;
    int max_len = -1;  // -1: take the default or the value from the input
    int threads = 1;
};

int run_trd(const json& in) {
    return std::visit(
        [](const auto& m) {
            emit(json{{"trd", scalar_to_json(reduced_trace(m))}});
            return 0;
        },
        matrix_from_json(in));
}

int run_psd(const json& in) {
    return std::visit(
        [](const auto& m) {
            const auto r = is_psd(m);
            emit(json{{"psd", r.psd}, {"certificate", congruence_to_json(r.certificate)}});
            return r.psd ? 0 : 1;
        },
        matrix_from_json(in));
}

int run_signature(const json& in) {
    return std::visit(
        [](const auto& m) {
            const auto cert = diagonalize_congruence(m);
            SignatureResult s;
            for (const Rational& x : cert.d) {
                if (x.sign() > 0) ++s.positives;
                else if (x.sign() < 0) ++s.negatives;
                else ++s.zeros;
            }
            emit(json{{"positives", s.positives},
                      {"negatives", s.negatives},
                      {"zeros", s.zeros},
                      {"signature", s.signature()},
                      {"certificate", congruence_to_json(cert)}});
            return 0;
        },
        matrix_from_json(in));
}

int run_herm_square(const json& in) {
    return std::visit(
        [](const auto& m) {
            using T = typename std::decay_t<decltype(m)>::value_type;
            const auto r = hermitian_square_certificate(m);
            using Status = typename HermitianSquareResult<T>::Status;
            json out;
            int code = 0;
            switch (r.status) {
                case Status::exact:
                    out = {{"status", "exact"},
                           {"b", matrix_to_json(*r.b)},
                           {"certificate", congruence_to_json(r.certificate)}};
                    break;
                case Status::real_closure:
                    out = {{"status", "real_closure"},
                           {"certificate", congruence_to_json(r.certificate)}};
                    break;
                case Status::not_psd:
                    out = {{"status", "not_psd"},
                           {"certificate", congruence_to_json(r.certificate)}};
                    code = 1;
                    break;
            }
            emit(out);
            return code;
        },
        matrix_from_json(in));
}

int run_invo_classify(const json& in) {
    return std::visit(
        [](const auto& inv) {
            const auto r = classify(inv);
            emit(json{{"kind", involution_kind_name(r.kind)},
                      {"type", involution_type_name(r.type)},
                      {"dim_sym", r.dim_sym},
                      {"degree", degree(inv.scale())}});
            return 0;
        },
        involution_from_json(in));
}

int run_invo_positive(const json& in) {
    return std::visit(
        [](const auto& inv) {
            const auto r = is_positive(inv);
            emit(json{{"positive", r.positive},
                      {"certificate", congruence_to_json(r.certificate)}});
            return r.positive ? 0 : 1;
        },
        involution_from_json(in));
}

template <class T>
int run_solve_scaling_typed(const Involution<T>& sigma, const json& gamma_j) {
    AnyInvolution gamma_any = involution_from_json(gamma_j);
    auto* gamma = std::get_if<Involution<T>>(&gamma_any);
    if (!gamma) throw ParseError("sigma and gamma must have the same kind");
    const auto a = solve_scaling(sigma, *gamma);
    if (!a) {
        emit(json{{"found", false}});
        return 1;
    }
    emit(json{{"found", true}, {"a", matrix_to_json(*a)}});
    return 0;
}

int run_solve_scaling(const json& in) {
    const json& sigma_j = require_field(in, "sigma");
    const json& gamma_j = require_field(in, "gamma");
    return std::visit([&](const auto& sigma) { return run_solve_scaling_typed(sigma, gamma_j); },
                      involution_from_json(sigma_j));
}

template <class T>
int run_cone_verify_typed(const Involution<T>& inv, const json& in) {
    const Matrix<T> a = matrix_from_json_as<T>(require_field(in, "a"));
    const Matrix<T> z = matrix_from_json_as<T>(require_field(in, "z"));
    const auto cert = cone_certificate_from_json<T>(require_field(in, "certificate"));
    const auto r = verify_cone_certificate(a, inv, z, cert);
    if (r.ok) {
        emit(json{{"valid", true}});
        return 0;
    }
    emit(json{{"valid", false}, {"reason", r.failure}});
    return 1;
}

int run_cone_verify(const json& in) {
    return std::visit([&](const auto& inv) { return run_cone_verify_typed(inv, in); },
                      involution_from_json(require_field(in, "involution")));
}

int run_delta_check(const json& in) {
    const StructureConstantAlgebra alg = algebra_from_json(require_field(in, "algebra"));
    const json& cj = require_field(in, "case");
    if (!cj.is_number_integer() || cj.get<int64_t>() < 1 || cj.get<int64_t>() > 3)
        throw ParseError("case must be 1, 2 or 3");
    const int case_id = static_cast<int>(cj.get<int64_t>());
    const json& nj = require_field(in, "n");
    if (!nj.is_number_integer() || nj.get<int64_t>() < 1)
        throw ParseError("n must be a positive integer");
    const int n = static_cast<int>(nj.get<int64_t>());

    const json& gj = require_field(in, "grids");
    if (!gj.is_array()) throw ParseError("grids must be an array of unit grids");
    std::vector<std::vector<std::vector<AlgElem>>> grids;
    for (const json& grid_j : gj) {
        if (!grid_j.is_array() || static_cast<int>(grid_j.size()) != n)
            throw ParseError("each grid must be an n x n array of coordinate vectors");
        std::vector<std::vector<AlgElem>> grid;
        for (const json& row_j : grid_j) {
            if (!row_j.is_array() || static_cast<int>(row_j.size()) != n)
                throw ParseError("each grid must be an n x n array of coordinate vectors");
            std::vector<AlgElem> row;
            for (const json& e_j : row_j) {
                if (!e_j.is_array() || static_cast<int>(e_j.size()) != alg.m())
                    throw ParseError("family elements must be coordinate vectors of length m");
                std::vector<Rational> v(alg.m());
                for (int i = 0; i < alg.m(); ++i) v[i] = rational_from_json(e_j[i]);
                row.push_back(AlgElem{&alg, std::move(v)});
            }
            grid.push_back(std::move(row));
        }
        grids.push_back(std::move(grid));
    }

    const auto r = verify_delta(case_id, n, grids);
    if (r.holds) {
        emit(json{{"holds", true}});
        return 0;
    }
    emit(json{{"holds", false}, {"failing_clause", r.failing_clause}});
    return 1;
}

json csa_report_to_json(const CsaReport& r) {
    const Tri v = r.verdict();
    return {{"verdict", v == Tri::yes ? "pass" : v == Tri::no ? "fail" : "inconclusive"},
            {"associative", r.associative},
            {"unital", r.unital},
            {"semisimple", r.semisimple},
            {"center_dimension", r.center_dimension},
            {"center_is_field", tri_name(r.center_field)},
            {"center_field_note", r.center_field_note},
            {"dimension_consistent", r.dimension_consistent},
            {"deg", r.deg},
            {"first_failure", r.first_failure()}};
}

int tri_exit(Tri v) { return v == Tri::yes ? 0 : v == Tri::no ? 1 : 3; }

int run_csa_check(const json& in, uint64_t seed) {
    const auto rep = csa_model_check(algebra_from_json(in), seed);
    emit(csa_report_to_json(rep));
    return tri_exit(rep.verdict());
}

int run_csai_check(const json& in, uint64_t seed) {
    const auto rep = csai_model_check(algebra_from_json(in), seed);
    json out = csa_report_to_json(rep.csa);
    out["verdict"] = rep.verdict() == Tri::yes    ? "pass"
                     : rep.verdict() == Tri::no   ? "fail"
                                                  : "inconclusive";
    out["first_failure"] = rep.first_failure();
    out["involution"] = {
        {"present", rep.involution_present},
        {"involutive", rep.involutive},
        {"anti_multiplicative", rep.anti_multiplicative},
        {"symmetric_center_is_base", rep.symmetric_center_is_base},
        {"kind", rep.kind ? json(*rep.kind == InvolutionKindOnly::first ? "first" : "second")
                          : json(nullptr)}};
    emit(out);
    return tri_exit(rep.verdict());
}

template <class T>
int run_similar_typed(const json& xj, const json& yj, std::optional<int> max_len, int threads) {
    auto parse_tuple = [](const json& arr) {
        std::vector<Matrix<T>> items;
        for (const json& mj : arr) items.push_back(matrix_from_json_as<T>(mj));
        return MatrixTuple<T>(std::move(items));
    };
    const auto verdict = decide_similarity(parse_tuple(xj), parse_tuple(yj), max_len, threads);
    if (verdict.equivalent) {
        emit(json{{"outcome", "equivalent"}});
        return 0;
    }
    emit(json{{"outcome", "inequivalent"},
              {"witness", verdict.witness->str()},
              {"traces", json::array({scalar_to_json(verdict.traces->first),
                                      scalar_to_json(verdict.traces->second)})}});
    return 1;
}

int run_similar(const json& in, const Options& opt) {
    const json& xj = require_field(in, "X");
    const json& yj = require_field(in, "Y");
    if (!xj.is_array() || xj.empty() || !yj.is_array() || yj.empty())
        throw ParseError("X and Y must be nonempty arrays of matrices");

    std::optional<int> max_len;
    if (in.contains("max_len") && !in["max_len"].is_null()) {
        if (!in["max_len"].is_number_integer() || in["max_len"].get<int64_t>() < 1)
            throw ParseError("max_len must be a positive integer");
        max_len = static_cast<int>(in["max_len"].get<int64_t>());
    }
    if (opt.max_len > 0) max_len = opt.max_len;  // flag overrides the document

    const Kind kind = parse_kind(require_field(xj[0], "kind"));
    switch (kind) {
        case Kind::real: return run_similar_typed<Rational>(xj, yj, max_len, opt.threads);
        case Kind::complex: return run_similar_typed<GaussRational>(xj, yj, max_len, opt.threads);
        case Kind::quaternion:
            return run_similar_typed<RatQuaternion>(xj, yj, max_len, opt.threads);
    }
    throw ParseError("unreachable");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact computations in matrix algebras with involution over Q"};
    app.require_subcommand(1);

    Options opt;
    const std::vector<std::string> names = {"similar",       "psd",          "signature",
                                            "herm-square",   "invo-classify", "invo-positive",
                                            "solve-scaling", "cone-verify",   "delta-check",
                                            "csa-check",     "csai-check",    "trd"};
    for (const auto& name : names) {
        auto* sub = app.add_subcommand(name);
        sub->add_option("input", opt.input, "input JSON file, or - for stdin");
        sub->add_option("--seed", opt.seed, "seed for randomized checks");
        sub->add_option("--max-len", opt.max_len, "word length bound for similar");
        sub->add_option("--threads", opt.threads, "worker threads for similar");
    }

    CLI11_PARSE(app, argc, argv);
    const std::string cmd = app.get_subcommands().front()->get_name();

    try {
        const json in = read_input(opt.input);
        if (cmd == "similar") return run_similar(in, opt);
        if (cmd == "psd") return run_psd(in);
        if (cmd == "signature") return run_signature(in);
        if (cmd == "herm-square") return run_herm_square(in);
        if (cmd == "invo-classify") return run_invo_classify(in);
        if (cmd == "invo-positive") return run_invo_positive(in);
        if (cmd == "solve-scaling") return run_solve_scaling(in);
        if (cmd == "cone-verify") return run_cone_verify(in);
        if (cmd == "delta-check") return run_delta_check(in);
        if (cmd == "csa-check") return run_csa_check(in, opt.seed);
        if (cmd == "csai-check") return run_csai_check(in, opt.seed);
        if (cmd == "trd") return run_trd(in);
        emit(json{{"error", "unknown command"}});
        return 2;
    } catch (const Error& e) {
        emit(json{{"error", e.what()}});
        return 2;
    } catch (const std::exception& e) {
        emit(json{{"error", std::string("unexpected: ") + e.what()}});
        return 2;
    }
}
