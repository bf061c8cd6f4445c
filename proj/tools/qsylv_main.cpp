#include <algorithm>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "qsylv/embed.hpp"
#include "qsylv/roots.hpp"
#include "qsylv/sylvester.hpp"
#include "qsylv/text.hpp"

using nlohmann::ordered_json;
using namespace qsylv;

namespace {

ordered_json quat_json(const Quaternion& q) {
    return ordered_json{{"w", q.w}, {"x", q.x}, {"y", q.y}, {"z", q.z}};
}

Quaternion quat_from_json(const ordered_json& v) {
    Quaternion q;
    if (v.is_string()) {
        q = parse_quaternion(v.get<std::string>());
    } else if (v.is_number()) {
        q = Quaternion::real(v.get<double>());
    } else if (v.is_array() && v.size() == 4) {
        q = {v.at(0).get<double>(), v.at(1).get<double>(), v.at(2).get<double>(),
             v.at(3).get<double>()};
    } else if (v.is_object()) {
        q = {v.value("w", 0.0), v.value("x", 0.0), v.value("y", 0.0),
             v.value("z", 0.0)};
    } else {
        throw ParseError(
            "quaternion must be a literal string, a number, [w,x,y,z] or "
            "{\"w\":...,\"x\":...,\"y\":...,\"z\":...}",
            0);
    }
    if (!is_finite(q)) throw ParseError("quaternion components must be finite", 0);
    return q;
}

struct SolveReport {
    Regime regime{};
    SolutionSet sol{};
    std::optional<double> resid{};
    std::optional<bool> oracle_ok{};
    std::optional<Quaternion> point{};
};

SolveReport run_solve(const SylvesterProblem& p, const std::optional<Quaternion>& qparam,
                      bool with_oracle, const Tolerance& tol) {
    SolveReport r;
    r.regime = classify(p.a, p.b, tol);
    r.sol = solve(p, tol);
    if (r.sol.kind != SolutionKind::Empty) {
        double worst = residual(p, r.sol.particular);
        for (const Quaternion& v : r.sol.basis)
            worst = std::max(worst, residual(p, r.sol.particular + v));
        r.resid = worst;
    }
    if (with_oracle) r.oracle_ok = oracle_agrees(p, r.sol, tol);
    if (qparam && r.regime == Regime::SingularNonreal) {
        if (tol.is_zero(p.c))
            r.point = homogeneous_general(p.a, p.b, *qparam, tol);
        else if (inhomogeneous_solvable(p, tol))
            r.point = inhomogeneous_general(p, *qparam, tol);
    }
    return r;
}

ordered_json solve_json(const SolveReport& r) {
    ordered_json sol;
    sol["kind"] = to_string(r.sol.kind);
    if (r.sol.kind == SolutionKind::Empty)
        sol["particular"] = nullptr;
    else
        sol["particular"] = quat_json(r.sol.particular);
    sol["basis"] = ordered_json::array();
    for (const Quaternion& v : r.sol.basis) sol["basis"].push_back(quat_json(v));
    if (!r.sol.diagnostic.empty()) sol["reason"] = r.sol.diagnostic;

    ordered_json out;
    out["classification"] = to_string(r.regime);
    out["solution"] = sol;
    out["residual"] = r.resid ? ordered_json(*r.resid) : ordered_json(nullptr);
    out["oracle_agrees"] = r.oracle_ok ? ordered_json(*r.oracle_ok) : ordered_json(nullptr);
    if (r.point) out["point"] = quat_json(*r.point);
    return out;
}

void print_solve_human(const SolveReport& r) {
    std::cout << "classification: " << to_string(r.regime) << "\n";
    std::cout << "kind: " << to_string(r.sol.kind) << "\n";
    if (r.sol.kind != SolutionKind::Empty)
        std::cout << "particular: " << format_quaternion(r.sol.particular) << "\n";
    for (std::size_t i = 0; i < r.sol.basis.size(); ++i)
        std::cout << "basis[" << i << "]: " << format_quaternion(r.sol.basis[i])
                  << "\n";
    if (!r.sol.diagnostic.empty()) std::cout << "reason: " << r.sol.diagnostic << "\n";
    if (r.resid) std::cout << "residual: " << shortest_repr(*r.resid) << "\n";
    if (r.point) std::cout << "point(q): " << format_quaternion(*r.point) << "\n";
    if (r.oracle_ok) std::cout << "oracle: " << (*r.oracle_ok ? "agree" : "DISAGREE")
                               << "\n";
}

void print_roots(const RootSet& roots, double resid, bool as_json) {
    if (as_json) {
        ordered_json out;
        out["kind"] = roots.kind == RootKind::PairRoots ? "PairRoots" : "PureSphere";
        out["principal"] = quat_json(roots.principal);
        if (roots.kind == RootKind::PureSphere) out["radius"] = roots.radius;
        out["residual"] = resid;
        std::cout << out.dump() << "\n";
        return;
    }
    if (roots.kind == RootKind::PairRoots) {
        std::cout << "±(" << format_quaternion(roots.principal) << ")\n";
    } else {
        std::cout << "±" << format_quaternion(Quaternion::real(roots.radius))
                  << "·u for any pure unit u (principal: "
                  << format_quaternion(roots.principal) << ")\n";
    }
}

int run_batch(bool with_oracle, const Tolerance& tol) {
    std::string line;
    long lineno = 0;
    bool had_error = false;
    while (std::getline(std::cin, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        try {
            const ordered_json j = ordered_json::parse(line);
            SylvesterProblem p{quat_from_json(j.at("a")), quat_from_json(j.at("b")),
                               j.contains("c") ? quat_from_json(j.at("c"))
                                               : Quaternion{}};
            std::optional<Quaternion> qparam;
            if (j.contains("q")) qparam = quat_from_json(j.at("q"));
            std::cout << solve_json(run_solve(p, qparam, with_oracle, tol)).dump()
                      << "\n";
        } catch (const std::exception& e) {
            std::cout << ordered_json{{"error", e.what()}, {"line", lineno}}.dump()
                      << "\n";
            had_error = true;
        }
    }
    return had_error ? 2 : 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"closed-form quaternion Sylvester equation toolkit"};
    app.require_subcommand(1);

    double rel = 1e-10;
    double abs_floor = 1e-14;
    bool as_json = false;
    bool with_oracle = false;
    std::string arg_a, arg_b, arg_c = "0", arg_q, operand, operand2;
    int exit_code = 0;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--rel", rel, "relative comparison threshold")
            ->envname("QSYLV_TOL_REL")
            ->check(CLI::PositiveNumber);
        sub->add_option("--abs", abs_floor, "absolute comparison floor")
            ->envname("QSYLV_TOL_ABS")
            ->check(CLI::NonNegativeNumber);
        sub->add_flag("--json", as_json, "emit JSON with full-precision numbers");
    };
    auto tolerance = [&] { return Tolerance(rel, abs_floor); };

    CLI::App* sqrt_cmd = app.add_subcommand("sqrt", "square roots of a quaternion");
    sqrt_cmd->add_option("quaternion", operand)->required();
    add_common(sqrt_cmd);
    sqrt_cmd->callback([&] {
        const Quaternion a = parse_quaternion(operand);
        const RootSet roots = qsylv::sqrt(a, tolerance());
        print_roots(roots, norm(roots.principal * roots.principal - a), as_json);
    });

    CLI::App* prod_cmd = app.add_subcommand(
        "roots-of-product", "square roots of a·b for equal-norm a, b");
    prod_cmd->add_option("a", operand)->required();
    prod_cmd->add_option("b", operand2)->required();
    add_common(prod_cmd);
    prod_cmd->callback([&] {
        const Quaternion a = parse_quaternion(operand);
        const Quaternion b = parse_quaternion(operand2);
        const RootSet roots = sqrt_product(a, b, tolerance());
        print_roots(roots, norm(roots.principal * roots.principal - a * b), as_json);
    });

    CLI::App* classify_cmd =
        app.add_subcommand("classify", "solvability regime of a coefficient pair");
    classify_cmd->add_option("a", operand)->required();
    classify_cmd->add_option("b", operand2)->required();
    add_common(classify_cmd);
    classify_cmd->callback([&] {
        const Regime r =
            classify(parse_quaternion(operand), parse_quaternion(operand2), tolerance());
        if (as_json)
            std::cout << ordered_json{{"classification", to_string(r)}}.dump() << "\n";
        else
            std::cout << to_string(r) << "\n";
    });

    CLI::App* similar_cmd =
        app.add_subcommand("similar", "similarity test for nonreal quaternions");
    similar_cmd->add_option("a", operand)->required();
    similar_cmd->add_option("b", operand2)->required();
    add_common(similar_cmd);
    similar_cmd->callback([&] {
        const bool s =
            is_similar(parse_quaternion(operand), parse_quaternion(operand2), tolerance());
        if (as_json)
            std::cout << ordered_json{{"similar", s}}.dump() << "\n";
        else
            std::cout << (s ? "true" : "false") << "\n";
    });

    CLI::App* witness_cmd = app.add_subcommand(
        "witness", "a nonzero p with a·p = p·b for similar nonreal a, b");
    witness_cmd->add_option("a", operand)->required();
    witness_cmd->add_option("b", operand2)->required();
    add_common(witness_cmd);
    witness_cmd->callback([&] {
        const Quaternion a = parse_quaternion(operand);
        const Quaternion b = parse_quaternion(operand2);
        const Quaternion p = similarity_witness(a, b, tolerance());
        if (as_json)
            std::cout << ordered_json{{"witness", quat_json(p)},
                                      {"residual", norm(a * p - p * b)}}
                             .dump()
                      << "\n";
        else
            std::cout << format_quaternion(p) << "\n";
    });

    CLI::App* solve_cmd = app.add_subcommand("solve", "solve a·x − x·b = c");
    solve_cmd->add_option("--a", arg_a, "left coefficient")->required();
    solve_cmd->add_option("--b", arg_b, "right coefficient")->required();
    solve_cmd->add_option("--c", arg_c, "right-hand side (default 0)");
    solve_cmd->add_option("--q", arg_q,
                          "free parameter: also report the parametrized solution");
    solve_cmd->add_flag("--oracle", with_oracle,
                        "cross-check against the real-embedding backend");
    add_common(solve_cmd);
    solve_cmd->callback([&] {
        const SylvesterProblem p{parse_quaternion(arg_a), parse_quaternion(arg_b),
                                 parse_quaternion(arg_c)};
        std::optional<Quaternion> qparam;
        if (!arg_q.empty()) qparam = parse_quaternion(arg_q);
        const SolveReport r = run_solve(p, qparam, with_oracle, tolerance());
        if (as_json)
            std::cout << solve_json(r).dump() << "\n";
        else
            print_solve_human(r);
        if (r.sol.kind == SolutionKind::Empty) exit_code = 1;
    });

    CLI::App* batch_cmd = app.add_subcommand(
        "batch", "read one JSON problem per stdin line, write one JSON result per line");
    batch_cmd->add_flag("--oracle", with_oracle,
                        "cross-check every line against the real-embedding backend");
    add_common(batch_cmd);
    batch_cmd->callback([&] { exit_code = run_batch(with_oracle, tolerance()); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return exit_code;
}
