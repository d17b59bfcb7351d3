#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>

#include "oideal/chern.hpp"
#include "oideal/json_io.hpp"
#include "oideal/parse.hpp"
#include "oideal/scenarios.hpp"

using namespace oideal;

namespace {

std::string slurp_arg(const std::string& s) {
    if (s.empty() || s[0] != '@') return s;
    std::ifstream in(s.substr(1));
    if (!in) throw std::invalid_argument("cannot read file " + s.substr(1));
    return std::string((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
}

OrderSpec parse_order_flag(const std::string& s) {
    if (s == "lex") return {OrderKind::lex, 0};
    if (s == "grlex") return {OrderKind::grlex, 0};
    if (s == "grevlex") return {OrderKind::grevlex, 0};
    if (s.rfind("elim(", 0) == 0 && s.back() == ')')
        return {OrderKind::elim, std::stoi(s.substr(5, s.size() - 6))};
    throw std::invalid_argument("unknown order " + s);
}

struct Ctx {
    std::string ring_text;
    std::string order_text;
    std::uint64_t seed = 42;
    bool pretty = false;
    Limits limits;

    Ring ring() const {
        if (ring_text.empty()) throw std::invalid_argument("--ring is required");
        Ring r = parse_ring(slurp_arg(ring_text));
        if (!order_text.empty()) r = r.with_order(parse_order_flag(order_text));
        return r;
    }
};

void emit(const Ctx& ctx, const nlohmann::json& j, const std::string& pretty_note = "") {
    std::cout << j.dump() << "\n";
    if (ctx.pretty) {
        if (!pretty_note.empty()) std::cerr << pretty_note << "\n";
        std::cerr << j.dump(2) << "\n";
    }
}

std::vector<FreeElement> parse_vectors(const Ring& r, const std::string& text) {
    PolyMatrix m = parse_matrix(r, slurp_arg(text));
    std::vector<FreeElement> out;
    for (int i = 0; i < m.rows(); ++i) out.push_back(m.row(i));
    return out;
}

FPModule load_module(const std::string& text) {
    return module_from_json(nlohmann::json::parse(slurp_arg(text)));
}

FreeElement parse_element(const Ring& r, int rank, const std::string& text) {
    std::string t = slurp_arg(text);
    // "[c1, ..., cn]" is one matrix row; wrap it for the matrix grammar.
    PolyMatrix m = parse_matrix(r, "[" + t + "]");
    (void)rank;
    return m.row(0);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact order-ideal and Rees-algebra toolkit"};
    app.require_subcommand(1);

    Ctx ctx;
    long timeout_s = 0;
    app.add_option("--ring", ctx.ring_text, "ring description, e.g. \"QQ[x,y]\"");
    app.add_option("--order", ctx.order_text, "override monomial order: lex|grlex|grevlex|elim(k)");
    app.add_option("--seed", ctx.seed, "random seed (OIDEAL_SEED overrides)");
    app.add_flag("--pretty", ctx.pretty, "human-readable report on stderr");
    app.add_option("--max-pairs", ctx.limits.max_pairs, "S-pair processing limit");
    app.add_option("--max-bits", ctx.limits.max_coeff_bits, "coefficient bit-length limit");
    app.add_option("--max-degree", ctx.limits.max_weighted_degree, "intermediate degree limit");
    app.add_option("--timeout-s", timeout_s, "cooperative deadline in seconds");

    std::string ideal_text, poly_text, by_text, sub_text, module_text, element_text, matrix_text,
        vectors_text, route_text = "both", params_text;
    int block = 0, nmax = 6, fitting_j = 0, gs_s = -1, ext_lo = 1, ext_hi = 2, chern_n = 2, jobs = 1;
    bool list_only = false;
    std::vector<std::string> verify_ids;

    auto* gb = app.add_subcommand("gb", "reduced Groebner basis");
    gb->add_option("--ideal", ideal_text, "comma-separated generators")->required(false);
    gb->add_option("--vectors", vectors_text, "matrix [[..],[..]] of module generators (rows)");

    auto* nf = app.add_subcommand("nf", "normal form");
    nf->add_option("--ideal", ideal_text)->required();
    nf->add_option("--poly", poly_text)->required();

    auto* elim = app.add_subcommand("eliminate", "eliminate the first k variables");
    elim->add_option("--ideal", ideal_text)->required();
    elim->add_option("--block", block)->required();

    auto* syz = app.add_subcommand("syzygies", "syzygy module generators");
    syz->add_option("--ideal", ideal_text);
    syz->add_option("--vectors", vectors_text);

    auto* height = app.add_subcommand("height", "height of an ideal");
    height->add_option("--ideal", ideal_text)->required();
    auto* dim = app.add_subcommand("dim", "Krull dimension of R/I");
    dim->add_option("--ideal", ideal_text)->required();

    auto* colon = app.add_subcommand("colon", "ideal quotient a : b");
    colon->add_option("--ideal", ideal_text)->required();
    colon->add_option("--by", by_text)->required();

    auto* radm = app.add_subcommand("radical-member", "radical membership");
    radm->add_option("--ideal", ideal_text)->required();
    radm->add_option("--poly", poly_text)->required();

    auto* red = app.add_subcommand("reduction", "reduction test J of I");
    red->add_option("--ideal", ideal_text, "the ideal I")->required();
    red->add_option("--sub", sub_text, "the candidate reduction J")->required();
    red->add_option("--nmax", nmax);

    auto* perp = app.add_subcommand("perp", "perpendicular module");
    perp->add_option("--module", module_text)->required();

    auto* oi = app.add_subcommand("order-ideal", "order ideal of an element");
    oi->add_option("--module", module_text)->required();
    oi->add_option("--element", element_text, "[c1,...,cn] over the generators")->required();
    oi->add_option("--route", route_text, "row_ideal|dual_kernel|both");

    auto* fit = app.add_subcommand("fitting", "Fitting ideal of a presentation");
    fit->add_option("--module", module_text);
    fit->add_option("--matrix", matrix_text);
    fit->add_option("--j", fitting_j)->required();

    auto* trace = app.add_subcommand("trace", "trace ideal");
    trace->add_option("--module", module_text)->required();

    auto* rees = app.add_subcommand("rees", "Rees algebra of an ideal or embedded module");
    rees->add_option("--ideal", ideal_text);
    rees->add_option("--vectors", vectors_text, "embedded generators (rows of a matrix)");
    auto* spread = app.add_subcommand("spread", "analytic spread");
    spread->add_option("--ideal", ideal_text);
    spread->add_option("--vectors", vectors_text);

    auto* gs = app.add_subcommand("gs-check", "G_s condition via Fitting heights");
    gs->add_option("--module", module_text)->required();
    gs->add_option("--s", gs_s, "s (negative = infinity)");

    auto* ext = app.add_subcommand("ext", "Ext^i(M,R) vanishing");
    ext->add_option("--module", module_text)->required();
    ext->add_option("--from", ext_lo);
    ext->add_option("--to", ext_hi);

    auto* chern = app.add_subcommand("chern", "top Chern coefficient parity");
    chern->add_option("--n", chern_n)->required();

    auto* verify = app.add_subcommand("verify", "run verification scenarios");
    verify->add_option("ids", verify_ids, "scenario ids or 'all'");
    verify->add_option("--params", params_text, "JSON parameter overrides (or @file)");
    verify->add_option("--jobs", jobs, "run scenarios concurrently");
    verify->add_flag("--list", list_only, "list scenario ids");
    int alpha_override = -1, d_override = -1, s_override = -1, trials_override = -1;
    verify->add_option("--alpha", alpha_override);
    verify->add_option("--d", d_override);
    verify->add_option("--s", s_override);
    verify->add_option("--trials", trials_override);

    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (const char* env_seed = std::getenv("OIDEAL_SEED")) ctx.seed = std::strtoull(env_seed, nullptr, 10);
        if (timeout_s > 0)
            ctx.limits.deadline = std::chrono::steady_clock::now() + std::chrono::seconds(timeout_s);
        default_limits() = ctx.limits;

        auto ideal_of = [&](const std::string& text) {
            Ring r = ctx.ring();
            return Ideal(r, parse_poly_list(r, slurp_arg(text)));
        };

        if (gb->parsed()) {
            Ring r = ctx.ring();
            if (!vectors_text.empty()) {
                auto vecs = parse_vectors(r, vectors_text);
                GroebnerBasis basis = groebner(r, vecs, vecs.empty() ? 0 : vecs[0].rank());
                nlohmann::json arr = nlohmann::json::array();
                for (const auto& e : basis.elements()) arr.push_back(free_element_json(e));
                emit(ctx, {{"ring", r.to_string()}, {"gb", arr}});
            } else {
                Ideal I = ideal_of(ideal_text);
                std::vector<Polynomial> gens;
                for (const auto& e : I.basis().elements()) gens.push_back(e[0]);
                emit(ctx, ring_polys_json(r, gens));
            }
        } else if (nf->parsed()) {
            Ideal I = ideal_of(ideal_text);
            Polynomial p = parse_poly(I.ring(), slurp_arg(poly_text));
            emit(ctx, {{"nf", normal_form(I.basis(), p).to_string()}});
        } else if (elim->parsed()) {
            Ring r = ctx.ring().with_order(OrderSpec{OrderKind::elim, block});
            Ideal I(r, parse_poly_list(r, slurp_arg(ideal_text)));
            nlohmann::json arr = nlohmann::json::array();
            for (const auto& e : eliminate(I.basis(), block)) arr.push_back(e[0].to_string());
            emit(ctx, {{"ring", r.to_string()}, {"eliminated", arr}});
        } else if (syz->parsed()) {
            Ring r = ctx.ring();
            SyzygyResult s;
            if (!vectors_text.empty())
                s = syzygies(r, parse_vectors(r, vectors_text));
            else
                s = syzygies_of_polys(r, parse_poly_list(r, slurp_arg(ideal_text)));
            nlohmann::json arr = nlohmann::json::array();
            for (const auto& v : s.generators_of_kernel) arr.push_back(free_element_json(v));
            emit(ctx, {{"syzygies", arr}});
        } else if (height->parsed() || dim->parsed()) {
            emit(ctx, height_json(dimension(ideal_of(ideal_text))));
        } else if (colon->parsed()) {
            Ideal I = ideal_of(ideal_text);
            Ideal B(I.ring(), parse_poly_list(I.ring(), slurp_arg(by_text)));
            Ideal Q = ideal_quotient(I, B);
            emit(ctx, {{"generators", poly_strings(Q.generators())}});
        } else if (radm->parsed()) {
            Ideal I = ideal_of(ideal_text);
            Polynomial p = parse_poly(I.ring(), slurp_arg(poly_text));
            emit(ctx, {{"member", radical_member(p, I)}});
        } else if (red->parsed()) {
            Ideal I = ideal_of(ideal_text);
            Ideal J(I.ring(), parse_poly_list(I.ring(), slurp_arg(sub_text)));
            emit(ctx, reduction_json(is_reduction(J, I, nmax)));
        } else if (perp->parsed()) {
            FPModule N = load_module(module_text);
            PerpResult P = perpendicular(N);
            nlohmann::json emb = nlohmann::json::array();
            for (const auto& v : P.embedding) emb.push_back(free_element_json(v));
            emit(ctx, {{"perp", module_to_json(P.perp)}, {"embedding", emb}});
        } else if (oi->parsed()) {
            FPModule N = load_module(module_text);
            FreeElement x = parse_element(N.ring(), N.n_generators(), element_text);
            if (x.rank() != N.n_generators())
                throw std::invalid_argument("element length must match generator count");
            if (route_text == "both") {
                Ideal a = order_ideal(N, x, OrderIdealRoute::row_ideal).ideal;
                Ideal b = order_ideal(N, x, OrderIdealRoute::dual_kernel).ideal;
                bool agree = ideal_equal(a, b);
                emit(ctx, {{"row_ideal", poly_strings(a.generators())},
                           {"dual_kernel", poly_strings(b.generators())},
                           {"agree", agree},
                           {"height", height_json(dimension(a))}});
                if (!agree) return 1;
            } else {
                OrderIdealRoute rt = route_text == "row_ideal" ? OrderIdealRoute::row_ideal
                                                               : OrderIdealRoute::dual_kernel;
                Ideal a = order_ideal(N, x, rt).ideal;
                emit(ctx, {{"ideal", poly_strings(a.generators())},
                           {"route", route_text},
                           {"height", height_json(dimension(a))}});
            }
        } else if (fit->parsed()) {
            PolyMatrix A;
            if (!module_text.empty()) {
                FPModule N = load_module(module_text);
                A = N.relations();
            } else {
                Ring r = ctx.ring();
                A = parse_matrix(r, slurp_arg(matrix_text));
            }
            Ideal F = fitting_ideal(A, fitting_j);
            emit(ctx, {{"generators", poly_strings(F.generators())}});
        } else if (trace->parsed()) {
            FPModule N = load_module(module_text);
            Ideal t = trace_ideal(N);
            emit(ctx, {{"generators", poly_strings(t.generators())},
                       {"height", height_json(dimension(t))}});
        } else if (rees->parsed() || spread->parsed()) {
            Ring r = ctx.ring();
            ReesPresentation rp;
            if (!vectors_text.empty())
                rp = rees_of_module(r, parse_vectors(r, vectors_text), &ctx.limits);
            else
                rp = rees_of_ideal(Ideal(r, parse_poly_list(r, slurp_arg(ideal_text))), &ctx.limits);
            if (spread->parsed())
                emit(ctx, {{"analytic_spread", rp.analytic_spread}});
            else
                emit(ctx, rees_json(rp));
        } else if (gs->parsed()) {
            FPModule N = load_module(module_text);
            GsReport rep = check_Gs(N, gs_s);
            nlohmann::json rows = nlohmann::json::array();
            for (const auto& row : rep.rows)
                rows.push_back({{"j", row.j},
                                {"fitting_index", row.fitting_index},
                                {"height", height_json(row.height)},
                                {"required", row.required},
                                {"ok", row.ok}});
            emit(ctx, {{"rank", rep.rank},
                       {"s", rep.s ? nlohmann::json(*rep.s) : nlohmann::json("infinity")},
                       {"holds", rep.holds},
                       {"rows", rows}});
        } else if (ext->parsed()) {
            FPModule N = load_module(module_text);
            ExtReport rep = ext_vanishes(N, ext_lo, ext_hi);
            nlohmann::json arr = nlohmann::json::array();
            for (auto [i, v] : rep.vanishes) arr.push_back({{"i", i}, {"vanishes", v}});
            emit(ctx, {{"ext", arr}});
        } else if (chern->parsed()) {
            mpz_class c = chern_top_coefficient(chern_n);
            emit(ctx, {{"n", chern_n}, {"coefficient", c.get_str()}});
        } else if (verify->parsed()) {
            if (list_only) {
                emit(ctx, {{"scenarios", scenario_ids()}});
                return 0;
            }
            std::vector<std::string> ids = verify_ids;
            if (ids.empty() || (ids.size() == 1 && ids[0] == "all")) ids = scenario_ids();
            nlohmann::json params = nlohmann::json::object();
            if (!params_text.empty()) params = nlohmann::json::parse(slurp_arg(params_text));
            if (alpha_override >= 0) params["alpha"] = alpha_override;
            if (d_override >= 0) params["d"] = d_override;
            if (s_override >= 0) params["s"] = s_override;
            if (trials_override >= 0) params["trials"] = trials_override;
            auto reports = run_scenarios(ids, params, ctx.seed, jobs, &ctx.limits);
            nlohmann::json arr = nlohmann::json::array();
            bool any_fail = false, any_resource = false;
            for (const auto& rep : reports) {
                arr.push_back(rep.to_json());
                any_fail = any_fail || !rep.ok();
                any_resource = any_resource || rep.resource_skipped;
                if (ctx.pretty) std::cerr << rep.pretty();
            }
            std::cout << arr.dump() << "\n";
            if (any_fail) return 1;
            if (any_resource) return 3;
        }
        return 0;
    } catch (const ResourceError& e) {
        std::cerr << "resource error: " << e.what() << "\n";
        return 3;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
