#include "quatring/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace quatring {

namespace {

json read_json_file(const std::string& path) {
    std::stringstream buf;
    if (path == "-") {
        buf << std::cin.rdbuf();
    } else {
        std::ifstream in(path);
        if (!in) throw qerror("bad_file", "cannot open " + path);
        buf << in.rdbuf();
    }
    json j = json::parse(buf.str(), nullptr, false);
    if (j.is_discarded()) throw qerror("bad_json", "malformed JSON in " + path);
    return j;
}

Rat parse_rational_arg(const std::string& s) {
    Rat r;
    if (s.empty() || mpq_set_str(r.get_mpq_t(), s.c_str(), 10) != 0)
        throw qerror("bad_argument", "malformed rational '" + s + "'");
    r.canonicalize();
    return r;
}

Int parse_integer_arg(const std::string& s) {
    Rat r = parse_rational_arg(s);
    if (r.get_den() != 1) throw qerror("bad_argument", "expected an integer, got '" + s + "'");
    return r.get_num();
}

std::uint64_t default_seed() {
    if (const char* env = std::getenv("QUATRING_SEED")) {
        try {
            return std::stoull(env);
        } catch (...) {
            throw qerror("bad_argument", "QUATRING_SEED is not an integer");
        }
    }
    return 0;
}

json ok_body(json payload, const trace_log& tr, bool want_trace,
             const char* status = "ok") {
    json body{{"status", status}, {"payload", std::move(payload)}};
    if (want_trace) body["trace"] = tr;
    return body;
}

json vec_json(const qvec& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(rational_str(x));
    return a;
}

json mat2_json(const mat2& m) {
    return json::array({json::array({rational_str(m[0][0]), rational_str(m[0][1])}),
                        json::array({rational_str(m[1][0]), rational_str(m[1][1])})});
}

struct cli_options {
    bool trace = false;
    std::uint64_t seed = 0;

    // per-subcommand inputs
    std::string file;
    std::string a, b;
    std::string v = "all";
    std::string ring = "Q";
    std::string n, arg_a, arg_b;
    std::vector<std::string> coeffs;
    long height = 10000;
    bool standard = false;
};

command_result dispatch(const std::string& cmd, const std::string& sub, const cli_options& opt) {
    trace_log tr;
    trace_log* trp = opt.trace ? &tr : nullptr;

    if (cmd == "recognize") {
        mult_table t = parse_table(read_json_file(opt.file));
        auto res = recognize(t, trp);
        if (std::holds_alternative<recognition>(res)) {
            const auto& rec = std::get<recognition>(res);
            json payload{{"a", rational_str(rec.alg.a)},
                         {"b", rational_str(rec.alg.b)},
                         {"i", vec_json(rec.gen_i)},
                         {"j", vec_json(rec.gen_j)},
                         {"k", vec_json(rec.gen_k)}};
            return {0, ok_body(std::move(payload), tr, opt.trace)};
        }
        const auto& f = std::get<recognize_failure>(res);
        json payload{{"reason", f.why == recognize_failure::no_involution
                                    ? "no_standard_involution"
                                    : "singular_norm"}};
        if (!f.radical.empty()) {
            json rad = json::array();
            for (const auto& v : f.radical) rad.push_back(vec_json(v));
            payload["radical"] = rad;
        }
        return {1, ok_body(std::move(payload), tr, opt.trace, "no")};
    }

    if (cmd == "normalize") {
        quad_form f = parse_form(read_json_file(opt.file));
        local_ring r = opt.ring == "Q" ? local_ring::rationals()
                                       : local_ring::at_prime(parse_integer_arg(opt.ring));
        auto nd = normalize(f, r, trp);
        return {0, ok_body(decomposition_json(nd), tr, opt.trace)};
    }

    if (cmd == "hilbert") {
        Rat a = parse_rational_arg(opt.a), b = parse_rational_arg(opt.b);
        if (opt.v == "all") {
            auto rep = local_symbols(a, b);
            json symbols = json::object();
            for (const auto& [v, h] : rep.symbols) symbols[v.str()] = h;
            json payload{{"symbols", symbols}, {"product", rep.product}};
            return {0, ok_body(std::move(payload), tr, opt.trace)};
        }
        place v = opt.v == "inf" ? place::real() : place::finite(parse_integer_arg(opt.v));
        int h = hilbert(a, b, v, trp);
        return {0, ok_body(json{{"value", h}}, tr, opt.trace)};
    }

    if (cmd == "jacobi") {
        Int a = parse_integer_arg(opt.arg_a), b = parse_integer_arg(opt.arg_b);
        int v = jacobi(a, b, trp);
        return {0, ok_body(json{{"value", v}}, tr, opt.trace)};
    }

    if (cmd == "ramified") {
        quat_alg alg{parse_rational_arg(opt.a), parse_rational_arg(opt.b)};
        auto rs = ramified_set(alg);
        json places = json::array();
        for (const auto& v : rs) places.push_back(place_json(v));
        json payload{{"places", places},
                     {"discriminant", algebra_discriminant(alg).get_str()}};
        return {0, ok_body(std::move(payload), tr, opt.trace)};
    }

    if (cmd == "split") {
        quat_alg alg{parse_rational_arg(opt.a), parse_rational_arg(opt.b)};
        if (!is_matrix_ring_global(alg)) {
            auto rs = ramified_set(alg);
            json places = json::array();
            for (const auto& v : rs) places.push_back(place_json(v));
            return {1, ok_body(json{{"reason", "not_a_matrix_ring"}, {"ramified", places}}, tr,
                               opt.trace, "no")};
        }
        auto pt = find_isotropic_naive(conic_of(alg), opt.height);
        if (!pt)
            throw qerror("bound_exhausted", "no isotropic point within height bound");
        // the point gives a zerodivisor x i + y j + z ij on the trace-zero part
        qvec zd = {Rat(0), Rat((*pt)[0]), Rat((*pt)[1]), Rat((*pt)[2])};
        mult_table t = standard_table(alg);
        auto inv = *has_standard_involution(t);
        qvec e = nilpotent_from_zerodivisor(t, inv, zd, trp);
        splitting s = split_from_nilpotent(alg, e, trp);
        json payload{{"a", rational_str(alg.a)},
                     {"b", rational_str(alg.b)},
                     {"point", json::array({(*pt)[0].get_str(), (*pt)[1].get_str(),
                                            (*pt)[2].get_str()})},
                     {"nilpotent", vec_json(s.nilpotent)},
                     {"i_prime", vec_json(s.i_prime)},
                     {"j_prime", vec_json(s.j_prime)},
                     {"image_i", mat2_json(s.image_i)},
                     {"image_j", mat2_json(s.image_j)}};
        return {0, ok_body(std::move(payload), tr, opt.trace)};
    }

    if (cmd == "conic") {
        quat_alg alg{parse_rational_arg(opt.a), parse_rational_arg(opt.b)};
        conic c = conic_of(alg);
        json payload{{"coefficients",
                      json::array({rational_str(c.form.q[0]), rational_str(c.form.q[1]),
                                   rational_str(c.form.q[2])})}};
        return {0, ok_body(std::move(payload), tr, opt.trace)};
    }

    if (cmd == "conicpoint") {
        if (opt.coeffs.size() != 3) throw qerror("bad_argument", "conicpoint wants c1 c2 c3");
        conic c = conic::diagonal(parse_rational_arg(opt.coeffs[0]),
                                  parse_rational_arg(opt.coeffs[1]),
                                  parse_rational_arg(opt.coeffs[2]));
        Int p = parse_integer_arg(opt.v);
        seeded_rng rng(opt.seed);
        auto pt = conic_point_mod_p(c, p, rng);
        json payload{{"point",
                      json::array({pt[0].get_str(), pt[1].get_str(), pt[2].get_str()})}};
        return {0, ok_body(std::move(payload), tr, opt.trace)};
    }

    if (cmd == "maxorder") {
        order_z o = opt.standard
                        ? standard_order(quat_alg{parse_rational_arg(opt.a),
                                                  parse_rational_arg(opt.b)})
                        : parse_order(read_json_file(opt.file));
        order_z m = max_order(o, trp);
        return {0, ok_body(order_json(m), tr, opt.trace)};
    }

    if (cmd == "ismaximal") {
        order_z o = parse_order(read_json_file(opt.file));
        auto d = discriminant(o);
        Int db = algebra_discriminant(o.algebra());
        json payload{{"reduced", d.reduced.get_str()},
                     {"algebra_discriminant", db.get_str()}};
        bool maximal = d.reduced == db;
        return {maximal ? 0 : 1,
                ok_body(std::move(payload), tr, opt.trace, maximal ? "ok" : "no")};
    }

    if (cmd == "disc") {
        order_z o = parse_order(read_json_file(opt.file));
        auto d = discriminant(o);
        json payload{{"disc", d.disc.get_str()}, {"reduced", d.reduced.get_str()}};
        return {0, ok_body(std::move(payload), tr, opt.trace)};
    }

    if (cmd == "demo" && sub == "factor") {
        Int n = parse_integer_arg(opt.n);
        Int f = factor_via_maxorder(n, opt.seed);
        return {0, ok_body(json{{"factor", f.get_str()}}, tr, opt.trace)};
    }

    if (cmd == "demo" && sub == "residuosity") {
        Int a = parse_integer_arg(opt.arg_a), b = parse_integer_arg(opt.arg_b);
        bool direct = quadratic_residuosity(a, b);
        auto via = residuosity_via_splitting(a, b, opt.seed);
        if (direct != via.value)
            throw internal_error("residuosity routes disagree");
        json payload{{"direct", direct},
                     {"via_splitting", via.value},
                     {"agree", true},
                     {"fallback", via.used_fallback}};
        if (!via.used_fallback) payload["ell"] = via.ell.get_str();
        return {direct ? 0 : 1, ok_body(std::move(payload), tr, opt.trace, direct ? "ok" : "no")};
    }

    throw qerror("usage", "unknown command");
}

}  // namespace

command_result run_cli(const std::vector<std::string>& args) {
    CLI::App app{"exact quaternion algebra toolkit"};
    app.require_subcommand(1);

    cli_options opt;
    opt.seed = default_seed();
    app.add_flag("--trace", opt.trace, "echo algorithm steps");

    auto* recognize_cmd = app.add_subcommand("recognize", "identify a quaternion algebra");
    recognize_cmd->add_option("table", opt.file, "multiplication table JSON")->required();

    auto* normalize_cmd = app.add_subcommand("normalize", "normalize a quadratic form");
    normalize_cmd->add_option("form", opt.file, "form JSON")->required();
    normalize_cmd->add_option("-p", opt.ring, "prime p or Q")->required();

    auto* hilbert_cmd = app.add_subcommand("hilbert", "hilbert symbol");
    hilbert_cmd->add_option("-a", opt.a)->required();
    hilbert_cmd->add_option("-b", opt.b)->required();
    hilbert_cmd->add_option("-v", opt.v, "place: prime, inf, or all");

    auto* jacobi_cmd = app.add_subcommand("jacobi", "jacobi symbol");
    jacobi_cmd->add_option("a", opt.arg_a)->required();
    jacobi_cmd->add_option("b", opt.arg_b)->required();

    auto* ramified_cmd = app.add_subcommand("ramified", "ramified places");
    ramified_cmd->add_option("-a", opt.a)->required();
    ramified_cmd->add_option("-b", opt.b)->required();

    auto* split_cmd = app.add_subcommand("split", "explicit matrix-ring isomorphism");
    split_cmd->add_option("-a", opt.a)->required();
    split_cmd->add_option("-b", opt.b)->required();
    split_cmd->add_option("-H", opt.height, "height bound for the point search");

    auto* conic_cmd = app.add_subcommand("conic", "associated conic");
    conic_cmd->add_option("-a", opt.a)->required();
    conic_cmd->add_option("-b", opt.b)->required();

    auto* conicpoint_cmd = app.add_subcommand("conicpoint", "point on a conic mod p");
    conicpoint_cmd->add_option("-p", opt.v, "prime modulus")->required();
    conicpoint_cmd->add_option("coefficients", opt.coeffs, "c1 c2 c3")->expected(3);
    conicpoint_cmd->add_option("--seed", opt.seed);

    auto* maxorder_cmd = app.add_subcommand("maxorder", "maximal order");
    maxorder_cmd->add_option("order", opt.file, "order JSON");
    maxorder_cmd->add_flag("--standard", opt.standard, "start from the standard order");
    maxorder_cmd->add_option("-a", opt.a);
    maxorder_cmd->add_option("-b", opt.b);

    auto* ismaximal_cmd = app.add_subcommand("ismaximal", "maximality test");
    ismaximal_cmd->add_option("order", opt.file)->required();

    auto* disc_cmd = app.add_subcommand("disc", "order discriminant");
    disc_cmd->add_option("order", opt.file)->required();

    auto* demo_cmd = app.add_subcommand("demo", "complexity reduction demos");
    demo_cmd->require_subcommand(1);
    auto* demo_factor = demo_cmd->add_subcommand("factor", "factor via a maximal order");
    demo_factor->add_option("n", opt.n)->required();
    demo_factor->add_option("--seed", opt.seed);
    auto* demo_res = demo_cmd->add_subcommand("residuosity", "residuosity via splitting");
    demo_res->add_option("a", opt.arg_a)->required();
    demo_res->add_option("b", opt.arg_b)->required();
    demo_res->add_option("--seed", opt.seed);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        return {2, json{{"status", "error"},
                        {"error", {{"code", "usage"}, {"message", e.what()}}}}};
    }

    std::string cmd, sub;
    for (auto* c : {recognize_cmd, normalize_cmd, hilbert_cmd, jacobi_cmd, ramified_cmd,
                    split_cmd, conic_cmd, conicpoint_cmd, maxorder_cmd, ismaximal_cmd,
                    disc_cmd, demo_cmd})
        if (c->parsed()) cmd = c->get_name();
    if (demo_cmd->parsed()) {
        if (demo_factor->parsed()) sub = "factor";
        if (demo_res->parsed()) sub = "residuosity";
    }
    if (maxorder_cmd->parsed() && !opt.standard && opt.file.empty())
        return {2, json{{"status", "error"},
                        {"error",
                         {{"code", "usage"},
                          {"message", "maxorder wants an order file or --standard -a A -b B"}}}}};
    if (maxorder_cmd->parsed() && opt.standard && (opt.a.empty() || opt.b.empty()))
        return {2, json{{"status", "error"},
                        {"error",
                         {{"code", "usage"}, {"message", "--standard wants -a A -b B"}}}}};

    try {
        return dispatch(cmd, sub, opt);
    } catch (const qerror& e) {
        return {3, json{{"status", "error"},
                        {"error", {{"code", e.code}, {"message", e.what()}}}}};
    } catch (const std::exception& e) {
        return {3, json{{"status", "error"},
                        {"error", {{"code", "internal"}, {"message", e.what()}}}}};
    }
}

}  // namespace quatring
