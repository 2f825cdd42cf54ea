#include "kahler/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "kahler/errors.hpp"
#include "kahler/randgen.hpp"

namespace kahler {

namespace {

using Json = nlohmann::ordered_json;

std::string trimmed(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep)) out.push_back(trimmed(item));
    return out;
}

FieldElem require_element(const Value& v, const char* what) {
    if (!v.is_element()) throw TypeMismatch(std::string(what) + " expected");
    return v.a;
}

AbsoluteForm require_form(const Value& v) {
    if (v.kind != Value::Kind::Form)
        throw TypeMismatch("a differential form expected (use d(.))");
    return v.form;
}

DualSymbol require_symbol(const Value& v) {
    if (v.kind != Value::Kind::Symbol)
        throw TypeMismatch("a symbol {.,.} expected");
    return v.symbol;
}

std::string scalar_str(const Scalar& s) { return s.str(); }

Json polar_json(const PolarList& polar, const std::string& var) {
    Json arr = Json::array();
    for (const auto& [n, digit] : polar)
        arr.push_back({{"order", n}, {"numerator", xpoly_str(digit, var)}});
    return arr;
}

Json parts_json(const PrincipalParts& parts, const TowerPtr& tower) {
    std::string var = tower ? tower->var_name() : "x";
    Json arr = Json::array();
    for (const auto& [place, at] : parts.parts) {
        Json entry;
        entry["place"] = place.str(var);
        entry["dx"] = polar_json(at.dx_polar, var);
        Json dt = Json::array();
        for (const auto& l : at.dt_polar) dt.push_back(polar_json(l, var));
        entry["dt"] = dt;
        arr.push_back(std::move(entry));
    }
    return arr;
}

Json diagram_json(const DiagramReport& report) {
    Json checks = Json::array();
    for (const auto& e : report.entries)
        checks.push_back({{"place", e.label},
                          {"lhs", scalar_str(e.lhs)},
                          {"rhs", scalar_str(e.rhs)},
                          {"equal", e.equal}});
    return {{"verdict", report.verdict}, {"checks", std::move(checks)}};
}

Json basis_json(const GlobalSectionBasis& basis) {
    Json names = Json::array();
    const auto& trans = basis.tower ? basis.tower->trans_names()
                                    : std::vector<std::string>{};
    for (std::size_t i = 0; i < basis.forms.size(); ++i)
        names.push_back("d" + trans[i]);
    return {{"basis", std::move(names)},
            {"dimension", basis.forms.size()}};
}

struct SelftestSuite {
    std::string name;
    unsigned cases = 0;
    unsigned passes = 0;
    std::vector<std::string> failures;
};

std::vector<SelftestSuite> run_selftest(const TowerPtr& tower,
                                        std::uint64_t seed, unsigned count) {
    std::vector<SelftestSuite> suites;

    {
        SelftestSuite s{"steinberg-tangent-vanishing"};
        Rng rng(seed);
        for (unsigned i = 0; i < count; ++i) {
            FieldElem f = random_nonzero_elem(rng, tower, 4, 3);
            FieldElem one_minus = FieldElem(1) - f;
            if (one_minus.is_zero()) continue;
            FieldElem f1 = random_elem(rng, tower, 3, 2);
            DualSymbol sym(DualUnit(f, f1), DualUnit(one_minus, -f1));
            ++s.cases;
            if (tan_symbol(sym).is_zero()) ++s.passes;
            else s.failures.push_back(sym.str());
        }
        suites.push_back(std::move(s));
    }
    {
        SelftestSuite s{"residue-theorem"};
        Rng rng(seed + 1);
        for (unsigned i = 0; i < count; ++i) {
            RelativeForm eta(random_elem(rng, tower, 5, 5));
            Scalar total = residue_at(eta, Place::infinity());
            if (eta.dx_coeff.den().degree() > 0)
                for (const auto& [g, mult] :
                     squarefree_decomposition(eta.dx_coeff.den()))
                    total = total + residue_at(eta, Place::finite(g));
            ++s.cases;
            if (total.is_zero()) ++s.passes;
            else s.failures.push_back(eta.str());
        }
        suites.push_back(std::move(s));
    }
    {
        SelftestSuite s{"residue-square"};
        Rng rng(seed + 2);
        for (unsigned i = 0; i < count; ++i) {
            AbsoluteForm beta = random_beta(rng, tower, 3, 3);
            ++s.cases;
            if (verify_square_res(beta).verdict) ++s.passes;
            else s.failures.push_back(beta.str());
        }
        suites.push_back(std::move(s));
    }
    {
        SelftestSuite s{"tangent-square"};
        Rng rng(seed + 3);
        for (unsigned i = 0; i < count; ++i) {
            DualSymbol sym = random_symbol(rng, tower, 3);
            ++s.cases;
            if (verify_square_tan(sym).verdict) ++s.passes;
            else s.failures.push_back(sym.str());
        }
        suites.push_back(std::move(s));
    }
    {
        SelftestSuite s{"cousin-realizability"};
        Rng rng(seed + 4);
        for (unsigned i = 0; i < count; ++i) {
            PrincipalParts family = random_family(rng, tower);
            ObstructionReport r = realize_principal_parts(family, tower);
            bool ok = r.realizable == r.total_residue.is_zero();
            if (r.realizable && r.witness)
                ok = ok && principal_parts(*r.witness) == family;
            ++s.cases;
            if (ok) ++s.passes;
            else s.failures.push_back("family #" + std::to_string(i));
        }
        suites.push_back(std::move(s));
    }
    return suites;
}

RunResult finish(const RunConfig& cfg, Json body, const std::string& text_body,
                 int exit_code, bool json_always = false) {
    RunResult res;
    res.exit_code = exit_code;
    Json ordered;
    ordered["schema"] = 1;
    ordered["command"] = cfg.command;
    for (auto& [k, v] : body.items())
        if (k != "schema") ordered[k] = v;
    if (cfg.format == "json" || json_always || exit_code == 1)
        res.output = ordered.dump() + "\n";
    else
        res.output = text_body + "\n";
    return res;
}

}  // namespace

TowerPtr parse_tower_text(const std::string& text) {
    std::vector<std::string> trans;
    std::string var = "x";
    std::optional<std::string> alg_name;
    std::string minpoly_src;
    std::stringstream ss(text);
    std::string line;
    while (std::getline(ss, line)) {
        line = trimmed(line);
        if (line.empty() || line[0] == '#') continue;
        auto colon = line.find(':');
        if (colon == std::string::npos)
            throw Error("tower config line missing ':': " + line);
        std::string key = trimmed(line.substr(0, colon));
        std::string val = trimmed(line.substr(colon + 1));
        if (key == "trans") {
            if (!val.empty())
                for (const auto& t : split(val, ',')) trans.push_back(t);
        } else if (key == "alg") {
            // "alg: a; minpoly: a^2 - t1"
            auto semi = val.find(';');
            if (semi == std::string::npos)
                throw Error("alg line needs '; minpoly: ...'");
            alg_name = trimmed(val.substr(0, semi));
            std::string rest = trimmed(val.substr(semi + 1));
            auto c2 = rest.find(':');
            if (c2 == std::string::npos || trimmed(rest.substr(0, c2)) != "minpoly")
                throw Error("alg line needs '; minpoly: ...'");
            minpoly_src = trimmed(rest.substr(c2 + 1));
        } else if (key == "var") {
            var = val;
        } else {
            throw Error("unknown tower config key: " + key);
        }
    }
    if (!alg_name) return Tower::create(trans, std::nullopt, var);

    // Parse the minimal polynomial with the algebraic name standing in as
    // the variable of a scratch tower.
    TowerPtr scratch = Tower::create(trans, std::nullopt, *alg_name);
    FieldElem mu = require_element(eval_expression(minpoly_src, scratch),
                                  "minimal polynomial");
    if (!mu.is_polynomial())
        throw Error("minimal polynomial must be polynomial in " + *alg_name);
    std::vector<RatFun> coeffs;
    for (const auto& s : mu.num().coeffs()) {
        if (!s.is_rational())
            throw Error("minimal polynomial coefficients must avoid " + *alg_name);
        coeffs.push_back(s.rat_part());
    }
    Tower::Algebraic alg{*alg_name, UPoly<RatFun>(std::move(coeffs))};
    return Tower::create(trans, std::move(alg), var);
}

Place parse_place(const std::string& text, const TowerPtr& tower) {
    std::string t = trimmed(text);
    if (t == "infinity" || t == "inf") return Place::infinity();
    FieldElem g = require_element(eval_expression(t, tower), "place polynomial");
    if (!g.is_polynomial()) throw Error("place must be a polynomial");
    return Place::finite(g.num());
}

PrincipalParts parse_family_text(const std::string& text, const TowerPtr& tower) {
    std::size_t m = tower ? tower->num_trans() : 0;
    std::map<Place, PrincipalPartAt> parts;
    std::stringstream ss(text);
    std::string line;
    while (std::getline(ss, line)) {
        line = trimmed(line);
        if (line.empty() || line[0] == '#') continue;
        auto cols = split(line, '|');
        if (cols.size() != 4)
            throw Error("family row needs 'place | component | order | numerator'");
        Place place = parse_place(cols[0], tower);
        int comp = -1;  // -1 = dx, otherwise dt index
        if (cols[1] != "dx") {
            if (cols[1].size() < 2 || cols[1][0] != 'd')
                throw Error("component must be dx or d<t-name>");
            auto idx = tower ? tower->trans_index(cols[1].substr(1))
                             : std::nullopt;
            if (!idx) throw Error("unknown component: " + cols[1]);
            comp = static_cast<int>(*idx);
        }
        unsigned long order = std::stoul(cols[2]);
        if (order < 1) throw Error("order must be >= 1");
        FieldElem num = require_element(eval_expression(cols[3], tower),
                                        "numerator");
        if (!num.is_polynomial()) throw Error("numerator must be a polynomial");
        if (place.is_infinity() && !num.is_constant())
            throw Error("numerators at infinity must be constants");

        auto [it, inserted] = parts.try_emplace(place);
        if (inserted) {
            it->second.place = place;
            it->second.dt_polar.resize(m);
        }
        PolarList& list = comp < 0 ? it->second.dx_polar
                                   : it->second.dt_polar[comp];
        XPoly digit = num.num();
        if (!place.is_infinity()) digit = digit % place.poly();
        if (!digit.is_zero())
            list.emplace_back(static_cast<unsigned>(order), digit);
    }
    PrincipalParts family;
    for (auto& [place, at] : parts) {
        auto sort_desc = [](PolarList& l) {
            std::sort(l.begin(), l.end(), [](const auto& a, const auto& b) {
                return a.first > b.first;
            });
        };
        sort_desc(at.dx_polar);
        for (auto& l : at.dt_polar) sort_desc(l);
        family.insert(std::move(at));
    }
    return family;
}

RunResult run_command(const RunConfig& cfg) {
    TowerPtr tower = cfg.tower;
    if (!tower) tower = Tower::create({}, std::nullopt, "x");
    std::string var = tower->var_name();
    auto need_args = [&](std::size_t n) {
        if (cfg.args.size() != n)
            throw Error("command '" + cfg.command + "' takes " +
                        std::to_string(n) + " argument(s)");
    };
    try {
        if (cfg.command == "residue") {
            need_args(2);
            AbsoluteForm w = require_form(eval_expression(cfg.args[0], tower));
            Place p = parse_place(cfg.args[1], tower);
            Scalar r = residue_at(w, p);
            return finish(cfg,
                          {{"place", p.str(var)}, {"value", scalar_str(r)}},
                          scalar_str(r), 0);
        }
        if (cfg.command == "rho") {
            need_args(1);
            AbsoluteForm w = require_form(eval_expression(cfg.args[0], tower));
            PrincipalParts parts = principal_parts(w);
            Json body = {{"principal_parts", parts_json(parts, tower)}};
            return finish(cfg, body, "", 0, /*json_always=*/true);
        }
        if (cfg.command == "tan") {
            need_args(1);
            DualSymbol s = require_symbol(eval_expression(cfg.args[0], tower));
            AbsoluteForm w = tan_symbol(s);
            return finish(cfg, {{"value", w.str()}}, w.str(), 0);
        }
        if (cfg.command == "decompose") {
            need_args(1);
            DualSymbol s = require_symbol(eval_expression(cfg.args[0], tower));
            auto factors = decompose_symbol(s);
            Json arr = Json::array();
            std::string text;
            for (const auto& f : factors) {
                arr.push_back(f.str());
                if (!text.empty()) text += "\n";
                text += f.str();
            }
            return finish(cfg, {{"factors", std::move(arr)}}, text, 0);
        }
        if (cfg.command == "is-exact") {
            need_args(1);
            AbsoluteForm w = require_form(eval_expression(cfg.args[0], tower));
            auto witness = is_exact(project_Rprime(w));
            Json body = {{"exact", witness.has_value()}};
            std::string text = witness ? "exact, witness " + witness->str()
                                       : "not exact";
            if (witness) body["witness"] = witness->str();
            return finish(cfg, body, text, witness ? 0 : 1);
        }
        if (cfg.command == "kernel" || cfg.command == "global-sections") {
            need_args(0);
            GlobalSectionBasis basis = cfg.command == "kernel"
                                           ? kernel_Rprime_basis(tower)
                                           : global_sections_basis(tower);
            Json body = basis_json(basis);
            return finish(cfg, body, "", 0, /*json_always=*/true);
        }
        if (cfg.command == "realize") {
            need_args(1);
            std::ifstream in(cfg.args[0]);
            if (!in) throw Error("cannot open family file: " + cfg.args[0]);
            std::stringstream buf;
            buf << in.rdbuf();
            PrincipalParts family = parse_family_text(buf.str(), tower);
            ObstructionReport r = realize_principal_parts(family, tower);
            Json body = {{"realizable", r.realizable},
                         {"total_residue", scalar_str(r.total_residue)}};
            if (r.witness) body["witness"] = r.witness->str();
            return finish(cfg, body, "", r.realizable ? 0 : 1,
                          /*json_always=*/true);
        }
        if (cfg.command == "verify-res" || cfg.command == "verify-tan") {
            need_args(1);
            DiagramReport report;
            if (cfg.command == "verify-res")
                report = verify_square_res(
                    require_form(eval_expression(cfg.args[0], tower)));
            else
                report = verify_square_tan(
                    require_symbol(eval_expression(cfg.args[0], tower)));
            Json body = diagram_json(report);
            return finish(cfg, body, "", report.verdict ? 0 : 1,
                          /*json_always=*/true);
        }
        if (cfg.command == "selftest") {
            need_args(0);
            auto suites = run_selftest(tower, cfg.seed, cfg.count);
            bool all = true;
            Json arr = Json::array();
            for (const auto& s : suites) {
                all = all && s.passes == s.cases;
                arr.push_back({{"suite", s.name},
                               {"cases", s.cases},
                               {"passes", s.passes},
                               {"failures", s.failures}});
            }
            Json body = {{"seed", cfg.seed},
                         {"count", cfg.count},
                         {"verdict", all},
                         {"suites", std::move(arr)}};
            return finish(cfg, body, "", all ? 0 : 1, /*json_always=*/true);
        }
        RunResult res;
        res.exit_code = 2;
        res.error = "unknown command: " + cfg.command + "\n";
        return res;
    } catch (const SyntaxError& e) {
        return {2, "", std::string(e.what()) + "\n"};
    } catch (const UnknownSymbol& e) {
        return {2, "", std::string(e.what()) + "\n"};
    } catch (const Error& e) {
        return {2, "", std::string(e.what()) + "\n"};
    }
}

int cli_main(int argc, char** argv) {
    CLI::App app{"Exact workbench for differentials, residues and dual-number "
                 "Steinberg symbols on the projective line"};
    std::string tower_file, format = "text";
    std::uint64_t seed = 1;
    unsigned count = 100;
    std::string command;
    std::vector<std::string> args;
    app.add_option("--tower", tower_file, "tower configuration file");
    app.add_option("--format", format, "text | json")
        ->check(CLI::IsMember({"text", "json"}));
    app.add_option("--seed", seed, "seed for the property suites");
    app.add_option("--count", count, "iterations per property suite")
        ->check(CLI::PositiveNumber);
    app.add_option("command", command,
                   "residue | rho | tan | decompose | is-exact | kernel | "
                   "global-sections | realize | verify-res | verify-tan | "
                   "selftest")
        ->required();
    app.add_option("args", args, "command arguments ('-' reads stdin)");
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    RunConfig cfg;
    cfg.command = command;
    cfg.format = format;
    cfg.seed = seed;
    cfg.count = count;
    try {
        if (!tower_file.empty()) {
            std::ifstream in(tower_file);
            if (!in) {
                std::cerr << "cannot open tower file: " << tower_file << "\n";
                return 2;
            }
            std::stringstream buf;
            buf << in.rdbuf();
            cfg.tower = parse_tower_text(buf.str());
        }
        for (auto& a : args) {
            if (a == "-") {
                std::stringstream buf;
                buf << std::cin.rdbuf();
                a = trimmed(buf.str());
            }
        }
        cfg.args = args;
    } catch (const Error& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }
    RunResult res = run_command(cfg);
    if (!res.output.empty()) std::cout << res.output;
    if (!res.error.empty()) std::cerr << res.error;
    return res.exit_code;
}

}  // namespace kahler
