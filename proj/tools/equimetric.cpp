// equimetric: construct, verify, and search for rational triangle pairs (and
// triangle-parallelogram pairs) with the same area and the same perimeter.

#include "equimetric/json_io.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

namespace {

using namespace equimetric;

std::string show(const Rat& x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", x.approx());
    return x.str() + " (≈ " + buf + ")";
}

Rat parse_rat(const std::string& text, const char* flag) {
    try {
        return Rat(text);
    } catch (const std::exception& e) {
        throw CLI::ValidationError(std::string(flag) + ": " + e.what());
    }
}

int default_threads() {
    if (const char* env = std::getenv("EQUIMETRIC_THREADS")) {
        int n = std::atoi(env);
        if (n >= 1)
            return n;
    }
    return 1;
}

// ---------------------------------------------------------------------------
// pair

struct PairArgs {
    std::string family;
    std::string p, k, m, R, S;
    bool as_json = false;
};

std::optional<FamilyOutput> build_family(const PairArgs& args) {
    const std::string& f = args.family;
    auto need = [&](const std::string& value, const char* flag) {
        if (value.empty())
            throw CLI::ValidationError("family " + f + " requires " + flag);
        return parse_rat(value, flag);
    };
    if (f == "Isosceles1")
        return isosceles_pair(1, need(args.m, "--m"));
    if (f == "Isosceles2")
        return isosceles_pair(2, need(args.m, "--m"));
    if (f == "RightIsosceles") {
        std::optional<Rat> k;
        if (!args.k.empty())
            k = parse_rat(args.k, "--k");
        return right_isosceles(need(args.m, "--m"), k);
    }
    if (f == "Choudhry")
        return choudhry_pair(need(args.R, "--R"), need(args.S, "--S"));
    if (f == "F321base")
        return f321_base(need(args.p, "--p"), need(args.k, "--k"));
    if (f == "F321double")
        return f321_double(need(args.p, "--p"), need(args.k, "--k"));
    if (f == "F321alt1")
        return f321_alternate(1, need(args.p, "--p"), need(args.k, "--k"));
    if (f == "F321alt2")
        return f321_alternate(2, need(args.p, "--p"), need(args.k, "--k"));
    if (f == "F322base")
        return f322_base(need(args.m, "--m"), need(args.p, "--p"));
    if (f == "F322double")
        return f322_double(need(args.m, "--m"), need(args.p, "--p"));
    if (f == "F431base")
        return f431_base(need(args.p, "--p"), need(args.k, "--k"));
    if (f == "F431double")
        return f431_double(need(args.p, "--p"), need(args.k, "--k"));
    if (f == "F432double")
        return f432_double(need(args.m, "--m"), need(args.p, "--p"));
    throw CLI::ValidationError("unknown family \"" + f + "\"");
}

void print_sides(const char* label, const SideTriple& s) {
    std::cout << label << ": " << s[0].str() << ", " << s[1].str() << ", " << s[2].str() << "\n";
}

int run_pair(const PairArgs& args) {
    auto out = build_family(args);
    if (!out) {
        std::cerr << "no pair exists at these parameters\n";
        return 1;
    }
    if (!verify_solution(out->tuple)) {
        std::cerr << "internal verification failure\n";
        return 1;
    }
    if (args.as_json) {
        nlohmann::json j = *out;
        std::cout << j.dump() << "\n";
        return 0;
    }
    std::cout << "family: " << out->family << "\n";
    for (const auto& [name, value] : out->params)
        std::cout << "  " << name << " = " << show(value) << "\n";
    const SolutionTuple& c = out->tuple;
    std::cout << "system: " << to_string(c.system) << "\n";
    std::cout << "a = " << show(c.a) << "\n";
    std::cout << "b = " << show(c.b) << "\n";
    std::cout << "placement (r, s, t) = (" << c.r.str() << ", " << c.s.str() << ", "
              << c.t.str() << ")\n";
    print_sides("triangle sides", out->sides1);
    if (out->sides2)
        print_sides("partner sides", *out->sides2);
    if (out->parallelogram2) {
        const Parallelogram& pg = *out->parallelogram2;
        std::cout << "parallelogram: base " << pg.base.str() << ", offset " << pg.sx.str()
                  << ", height " << pg.sy.str();
        if (auto side = pg.side())
            std::cout << ", side " << side->str();
        std::cout << "\n";
    }
    std::cout << "perimeter: " << show(out->sides1.perimeter()) << "\n";
    std::cout << "area16sq:  " << heron_area_sq16(out->sides1).str() << "\n";
    std::cout << "residuals: all zero\n";
    return 0;
}

// ---------------------------------------------------------------------------
// verify-families

struct GridOutcome {
    std::string family;
    int tested = 0;
    int produced = 0;
    int failures = 0;
};

int run_verify_families(int grid) {
    std::vector<GridOutcome> table;
    auto row = [&](const std::string& name) -> GridOutcome& {
        table.push_back({name, 0, 0, 0});
        return table.back();
    };

    {
        auto& r = row("RightRight");
        for (int i = 1; i <= grid; ++i) {
            Rat m = Rat(1) + Rat(i, 3);
            ++r.tested;
            Triangle tri(Rat(2) * m, Rat(0), sq(m) - Rat(1));
            auto src = sides(tri);
            bool ok = src.has_value();
            for (const Rat& a : right_right_roots(m)) {
                auto img = sides(apply(TransformMatrix(a, Rat(0)), tri));
                ok = ok && img == src;
            }
            if (ok)
                ++r.produced;
            else
                ++r.failures;
        }
    }
    for (int variant : {1, 2}) {
        auto& r = row(variant == 1 ? "Isosceles1" : "Isosceles2");
        for (long u = 2; u <= grid + 1; ++u)
            for (long v = 1; v < u; ++v) {
                if (std::gcd(u, v) != 1)
                    continue;
                ++r.tested;
                auto out = isosceles_pair(variant, Rat(u, v));
                if (!out)
                    continue;
                ++r.produced;
                if (!verify_solution(out->tuple) ||
                    !weakly_equivalent(out->sides1, *out->sides2))
                    ++r.failures;
            }
    }
    {
        auto& r = row("RightIsosceles");
        std::vector<Rat> ms{Rat(16, 11)};
        for (long u = 2; u <= grid + 1; ++u)
            for (long v = 1; v < u; ++v)
                if (std::gcd(u, v) == 1)
                    ms.emplace_back(u, v);
        for (const Rat& m : ms) {
            ++r.tested;
            auto out = right_isosceles(m);
            if (!out)
                continue;
            ++r.produced;
            if (!verify_solution(out->tuple) || !weakly_equivalent(out->sides1, *out->sides2))
                ++r.failures;
        }
    }
    {
        auto& r = row("Choudhry");
        for (int i = 1; i <= grid; ++i)
            for (int j = 1; j <= grid; ++j) {
                ++r.tested;
                auto out = choudhry_pair(Rat(i), Rat(j, 2));
                ++r.produced;
                if (!verify_solution(out.tuple) || !weakly_equivalent(out.sides1, *out.sides2))
                    ++r.failures;
            }
    }
    auto triangle_grid = [&](const std::string& name, auto&& make) {
        auto& r = row(name);
        for (int i = 1; i <= grid; ++i)
            for (int j = 1; j <= grid; ++j) {
                ++r.tested;
                try {
                    FamilyOutput out = make(i, j);
                    ++r.produced;
                    bool ok = verify_solution(out.tuple);
                    if (out.sides2)
                        ok = ok && weakly_equivalent(out.sides1, *out.sides2);
                    if (out.parallelogram2)
                        ok = ok && out.parallelogram2->perimeter() == perimeter(out.sides1) &&
                             out.parallelogram2->area() ==
                                 Triangle(out.tuple.r, out.tuple.s, out.tuple.t).area();
                    if (!ok)
                        ++r.failures;
                } catch (const std::exception&) {
                    ++r.failures;
                }
            }
    };
    triangle_grid("F321base", [](int i, int j) {
        return f321_base(Rat(1) + Rat(i, 3), Rat(j, 2));
    });
    triangle_grid("F321double", [](int i, int j) {
        return f321_double(Rat(1) + Rat(i, 3), Rat(j, 2));
    });
    triangle_grid("F322base", [](int i, int j) {
        return f322_base(Rat(1) + Rat(i, 3), Rat(1) + Rat(j, 4));
    });
    triangle_grid("F322double", [](int i, int j) {
        return f322_double(Rat(1) + Rat(i, 3), Rat(1) + Rat(j, 4));
    });
    for (int variant : {1, 2}) {
        auto& r = row(variant == 1 ? "Rhombus1" : "Rhombus2");
        for (long u = 2; u <= grid + 1; ++u)
            for (long v = 1; v < u; ++v) {
                if (std::gcd(u, v) != 1)
                    continue;
                ++r.tested;
                Rat disc = rhombus_discriminant(variant, Rat(u, v));
                if (disc.sign() >= 0 && is_rational_square(disc))
                    ++r.failures;  // a nondegenerate rhombus pair would be news
            }
    }
    {
        auto& r = row("RightRect");
        for (long u = 2; u <= grid + 1; ++u)
            for (long v = 1; v < u; ++v) {
                if (std::gcd(u, v) != 1)
                    continue;
                ++r.tested;
                if (!right_rectangle_roots(Rat(u, v)).empty())
                    ++r.failures;
            }
    }
    auto window_grid = [&](const std::string& name, auto&& make) {
        auto& r = row(name);
        for (int i = 0; i < grid; ++i) {
            Rat p = Rat(121, 50) + Rat(i % 20, 100);
            ++r.tested;
            try {
                FamilyOutput out = make(p, Rat((i % 3) + 1));
                ++r.produced;
                bool ok = verify_solution(out.tuple) &&
                          out.parallelogram2->perimeter() == perimeter(out.sides1) &&
                          out.parallelogram2->area() ==
                              Triangle(out.tuple.r, out.tuple.s, out.tuple.t).area();
                if (!ok)
                    ++r.failures;
            } catch (const std::exception&) {
                ++r.failures;
            }
        }
    };
    window_grid("F431base", [](const Rat& p, const Rat& k) { return f431_base(p, k); });
    window_grid("F431double", [](const Rat& p, const Rat& k) { return f431_double(p, k); });
    {
        auto& r = row("F432double");
        for (int i = 1; i <= grid; ++i)
            for (int j = 1; j <= grid; ++j) {
                Rat m = Rat(1) + Rat(i, 3);
                Rat p = Rat(1) + Rat((j % 10) + 1, 4);
                ++r.tested;
                try {
                    FamilyOutput out = f432_double(m, p);
                    ++r.produced;
                    bool ok = verify_solution(out.tuple) && out.tuple.a == Rat(1, 2) &&
                              out.parallelogram2->perimeter() == perimeter(out.sides1) &&
                              out.parallelogram2->area() ==
                                  Triangle(out.tuple.r, out.tuple.s, out.tuple.t).area();
                    if (!ok)
                        ++r.failures;
                } catch (const std::exception&) {
                    ++r.failures;
                }
            }
    }

    int total_failures = 0;
    std::printf("%-14s %8s %9s %9s  %s\n", "family", "tested", "produced", "failures", "status");
    for (const auto& r : table) {
        total_failures += r.failures;
        std::printf("%-14s %8d %9d %9d  %s\n", r.family.c_str(), r.tested, r.produced,
                    r.failures, r.failures == 0 ? "pass" : "FAIL");
    }
    return total_failures == 0 ? 0 : 1;
}

// ---------------------------------------------------------------------------
// curve

QuarticModel model_for(CaseId id, const Rat& p, const Rat& m) {
    switch (id) {
        case CaseId::C321: return quartic_321(p);
        case CaseId::C322: return quartic_322(m, p);
        case CaseId::C421: return quartic_421();
        case CaseId::C431: return quartic_431(p);
        case CaseId::C432: return quartic_432(m, p);
    }
    throw std::logic_error("bad case");
}

int run_curve(const std::string& case_name, const std::string& p_str, const std::string& m_str,
              bool check_points, long height, bool as_json) {
    CaseId id = case_from_string(case_name);
    Rat p(0), m(0);
    if (id != CaseId::C421) {
        if (p_str.empty())
            throw CLI::ValidationError("this case requires --p");
        p = parse_rat(p_str, "--p");
    }
    if (id == CaseId::C322 || id == CaseId::C432) {
        if (m_str.empty())
            throw CLI::ValidationError("this case requires --m");
        m = parse_rat(m_str, "--m");
    }
    QuarticModel model = model_for(id, p, m);
    Curve curve = curve_of(model);
    MarkedPoints marked = marked_points(model);
    bool q_ok = on_curve(curve, marked.Q);
    bool p_ok = on_curve(curve, marked.P);

    std::vector<CurvePoint> found;
    if (height > 0)
        found = naive_point_search(curve, height);
    auto param_of = [&](const CurvePoint& pt) -> std::string {
        try {
            return phi_inv(model, pt).str();
        } catch (const excluded_point_error&) {
            return "excluded";
        }
    };

    if (as_json) {
        nlohmann::json j;
        j["case"] = case_name;
        j["curve"] = curve;
        j["cubic_disc"] = curve.cubic_discriminant().str();
        j["Q"] = marked.Q;
        j["P"] = marked.P;
        j["marked_on_curve"] = q_ok && p_ok;
        if (height > 0) {
            nlohmann::json pts = nlohmann::json::array();
            for (const auto& pt : found) {
                nlohmann::json entry;
                entry["point"] = pt;
                entry["param"] = param_of(pt);
                pts.push_back(entry);
            }
            j["points"] = pts;
        }
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "case: " << case_name << "\n";
        std::cout << "curve: Y^2 = X^3 + A X + B, A = " << curve.A.str()
                  << ", B = " << curve.B.str() << "\n";
        std::cout << "disc(X^3 + A X + B) = " << curve.cubic_discriminant().str() << "\n";
        std::cout << "Q = (" << marked.Q.x().str() << ", " << marked.Q.y().str() << ")"
                  << (q_ok ? "  [on curve]" : "  [NOT on curve]") << "\n";
        std::cout << "P = (" << marked.P.x().str() << ", " << marked.P.y().str() << ")"
                  << (p_ok ? "  [on curve]" : "  [NOT on curve]") << "\n";
        if (height > 0) {
            std::cout << "points of height <= " << height << ": " << found.size() << "\n";
            for (const auto& pt : found)
                std::cout << "  (" << pt.x().str() << ", " << pt.y().str() << ")  param "
                          << param_of(pt) << "\n";
        }
    }
    if (check_points && !(q_ok && p_ok))
        return 1;
    return 0;
}

// ---------------------------------------------------------------------------
// residual

int run_residual(const std::string& path) {
    std::ifstream f(path);
    if (!f) {
        std::cerr << "cannot open " << path << "\n";
        return 3;
    }
    nlohmann::json j;
    try {
        f >> j;
    } catch (const std::exception& e) {
        std::cerr << "cannot parse " << path << ": " << e.what() << "\n";
        return 3;
    }
    SolutionTuple tuple = tuple_from_json(j);
    auto res = residuals(tuple);
    bool all_zero = true;
    for (size_t i = 0; i < res.size(); ++i) {
        std::cout << "residual[" << i << "] = " << res[i].str() << "\n";
        all_zero = all_zero && res[i].is_zero();
    }
    std::cout << (all_zero ? "solution: yes" : "solution: no") << "\n";
    return all_zero ? 0 : 1;
}

// ---------------------------------------------------------------------------
// fermat

int run_fermat(const std::string& case_name, const std::string& p_str, const std::string& m_str,
               bool all, bool as_json) {
    CaseId id = case_from_string(case_name);
    Rat p(0), m(0);
    if (id != CaseId::C421) {
        if (p_str.empty())
            throw CLI::ValidationError("this case requires --p");
        p = parse_rat(p_str, "--p");
    }
    if (id == CaseId::C322 || id == CaseId::C432) {
        if (m_str.empty())
            throw CLI::ValidationError("this case requires --m");
        m = parse_rat(m_str, "--m");
    }
    QuarticModel model = model_for(id, p, m);
    std::vector<Rat> found;
    if (all) {
        found = fermat_square_candidates(model.quartic);
    } else if (auto x = fermat_square_point(model.quartic)) {
        found.push_back(*x);
    }
    if (as_json) {
        nlohmann::json j;
        j["case"] = case_name;
        nlohmann::json arr = nlohmann::json::array();
        for (const Rat& x : found)
            arr.push_back(x.str());
        j["found"] = arr;
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "case: " << case_name << "\n";
        if (found.empty())
            std::cout << "no parameter found\n";
        for (const Rat& x : found) {
            Rat value = model.quartic(x);
            std::cout << "parameter " << show(x) << "  quartic value " << value.str() << " = ("
                      << rat_sqrt(value)->str() << ")^2\n";
        }
    }
    return found.empty() ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact toolkit for equal-area equal-perimeter rational triangle pairs"};
    app.require_subcommand(1);

    PairArgs pair_args;
    auto* pair_cmd = app.add_subcommand("pair", "generate one verified family instance");
    pair_cmd->add_option("--family", pair_args.family, "family name")->required();
    pair_cmd->add_option("--p", pair_args.p, "parameter p (num/den)");
    pair_cmd->add_option("--k", pair_args.k, "parameter k (num/den)");
    pair_cmd->add_option("--m", pair_args.m, "parameter m (num/den)");
    pair_cmd->add_option("--R", pair_args.R, "parameter R (num/den)");
    pair_cmd->add_option("--S", pair_args.S, "parameter S (num/den)");
    pair_cmd->add_flag("--json", pair_args.as_json, "emit JSON");

    int grid = 5;
    auto* verify_cmd = app.add_subcommand("verify-families",
                                          "run every family over a parameter grid");
    verify_cmd->add_option("--grid", grid, "grid size per parameter")->check(CLI::Range(1, 100));

    SearchConfig cfg;
    std::string kind_str = "tt";
    cfg.threads = default_threads();
    auto* search_cmd = app.add_subcommand("search", "brute-force pair search");
    search_cmd->add_option("--max-perimeter", cfg.max_perimeter, "perimeter bound")->required();
    search_cmd->add_option("--out", cfg.out, "output JSON-lines path")->required();
    search_cmd->add_option("--threads", cfg.threads, "worker count");
    search_cmd->add_option("--kind", kind_str, "tt (triangle-triangle) or tp")
        ->check(CLI::IsMember({"tt", "tp"}));
    search_cmd->add_flag("--dedup", cfg.dedup, "one pair per similarity class");

    std::string case_name, curve_p, curve_m;
    bool check_points = false, curve_json = false;
    long height = 0;
    auto* curve_cmd = app.add_subcommand("curve", "inspect one constructed curve");
    curve_cmd->add_option("--case", case_name, "C321, C322, C421, C431 or C432")->required();
    curve_cmd->add_option("--p", curve_p, "parameter p");
    curve_cmd->add_option("--m", curve_m, "parameter m");
    curve_cmd->add_flag("--check-points", check_points, "fail unless marked points verify");
    curve_cmd->add_option("--height", height, "naive point search bound");
    curve_cmd->add_flag("--json", curve_json, "emit JSON");

    std::string residual_file;
    auto* residual_cmd = app.add_subcommand("residual", "evaluate a tuple file exactly");
    residual_cmd->add_option("--file", residual_file, "SolutionTuple JSON path")->required();

    std::string fermat_case, fermat_p, fermat_m;
    bool fermat_all = false, fermat_json = false;
    auto* fermat_cmd = app.add_subcommand("fermat", "square-making parameters of a case quartic");
    fermat_cmd->add_option("--case", fermat_case, "C321, C322, C421, C431 or C432")->required();
    fermat_cmd->add_option("--p", fermat_p, "parameter p");
    fermat_cmd->add_option("--m", fermat_m, "parameter m");
    fermat_cmd->add_flag("--all", fermat_all, "enumerate every matching branch");
    fermat_cmd->add_flag("--json", fermat_json, "emit JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (pair_cmd->parsed())
            return run_pair(pair_args);
        if (verify_cmd->parsed())
            return run_verify_families(grid);
        if (search_cmd->parsed()) {
            cfg.kind = kind_str == "tt" ? PairKind::TriangleTriangle
                                        : PairKind::TriangleParallelogram;
            auto records = find_pairs(cfg);
            write_pair_records(cfg.out, records, cfg);
            std::cout << records.size() << " pairs written to " << cfg.out << "\n";
            return 0;
        }
        if (curve_cmd->parsed())
            return run_curve(case_name, curve_p, curve_m, check_points, height, curve_json);
        if (residual_cmd->parsed())
            return run_residual(residual_file);
        if (fermat_cmd->parsed())
            return run_fermat(fermat_case, fermat_p, fermat_m, fermat_all, fermat_json);
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::runtime_error& e) {
        std::cerr << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
