#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "quatring/cli.hpp"

namespace py = pybind11;
using namespace quatring;

namespace {

Rat rat_of(const std::string& s) {
    Rat r;
    if (s.empty() || mpq_set_str(r.get_mpq_t(), s.c_str(), 10) != 0)
        throw std::invalid_argument("malformed rational '" + s + "'");
    r.canonicalize();
    return r;
}

Int int_of(const std::string& s) {
    Rat r = rat_of(s);
    if (r.get_den() != 1) throw std::invalid_argument("expected an integer, got '" + s + "'");
    return r.get_num();
}

place place_of(const std::string& s) {
    return s == "inf" ? place::real() : place::finite(int_of(s));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact quaternion algebra arithmetic over Q";

    py::register_exception<qerror>(m, "QuatringError");

    m.def("legendre", [](const std::string& a, const std::string& p) {
        return legendre(int_of(a), int_of(p));
    });
    m.def("sqrt_mod_p", [](const std::string& a, const std::string& p) {
        return sqrt_mod_p(int_of(a), int_of(p)).get_str();
    });
    m.def("is_prime", [](const std::string& n) { return is_prime(int_of(n)); });
    m.def("factor", [](const std::string& n) {
        auto f = factor(int_of(n));
        std::vector<std::pair<std::string, unsigned>> out;
        for (const auto& e : f.entries) out.emplace_back(e.prime.get_str(), e.exponent);
        return py::make_tuple(f.sign, out);
    });
    m.def("sqrad", [](const std::string& n) { return sqrad(int_of(n)).get_str(); });

    m.def("hilbert", [](const std::string& a, const std::string& b, const std::string& v) {
        return hilbert(rat_of(a), rat_of(b), place_of(v));
    });
    m.def("jacobi", [](const std::string& a, const std::string& b) {
        return jacobi(int_of(a), int_of(b));
    });
    m.def("ramified_set", [](const std::string& a, const std::string& b) {
        std::vector<std::string> out;
        for (const auto& v : ramified_set(quat_alg{rat_of(a), rat_of(b)}))
            out.push_back(v.str());
        return out;
    });
    m.def("algebra_discriminant", [](const std::string& a, const std::string& b) {
        return algebra_discriminant(quat_alg{rat_of(a), rat_of(b)}).get_str();
    });
    m.def("is_matrix_ring", [](const std::string& a, const std::string& b) {
        return is_matrix_ring_global(quat_alg{rat_of(a), rat_of(b)});
    });
    m.def("reciprocity_check", [](const std::string& a, const std::string& b) {
        return reciprocity_check(rat_of(a), rat_of(b));
    });

    // structured operations travel as JSON strings
    m.def("recognize_json", [](const std::string& table) {
        mult_table t = parse_table(json::parse(table));
        auto res = recognize(t);
        if (std::holds_alternative<recognition>(res)) {
            const auto& rec = std::get<recognition>(res);
            json out{{"quaternion", true},
                     {"a", rational_str(rec.alg.a)},
                     {"b", rational_str(rec.alg.b)}};
            return out.dump();
        }
        const auto& f = std::get<recognize_failure>(res);
        json out{{"quaternion", false},
                 {"reason", f.why == recognize_failure::no_involution ? "no_standard_involution"
                                                                      : "singular_norm"}};
        return out.dump();
    });
    m.def("normalize_json", [](const std::string& form, const std::string& ring) {
        quad_form f = parse_form(json::parse(form));
        local_ring r =
            ring == "Q" ? local_ring::rationals() : local_ring::at_prime(int_of(ring));
        return decomposition_json(normalize(f, r)).dump();
    });
    m.def("max_order_json", [](const std::string& order) {
        order_z o = parse_order(json::parse(order));
        return order_json(max_order(o)).dump();
    });
    m.def("standard_order_json", [](const std::string& a, const std::string& b) {
        return order_json(standard_order(quat_alg{rat_of(a), rat_of(b)})).dump();
    });
    m.def("order_reduced_discriminant", [](const std::string& order) {
        return discriminant(parse_order(json::parse(order))).reduced.get_str();
    });
    m.def("is_maximal_json", [](const std::string& order) {
        return is_maximal(parse_order(json::parse(order)));
    });

    m.def("factor_via_maxorder", [](const std::string& n, std::uint64_t seed) {
        return factor_via_maxorder(int_of(n), seed).get_str();
    });
    m.def("quadratic_residuosity", [](const std::string& a, const std::string& b) {
        return quadratic_residuosity(int_of(a), int_of(b));
    });
    m.def("residuosity_via_splitting",
          [](const std::string& a, const std::string& b, std::uint64_t seed) {
              auto r = residuosity_via_splitting(int_of(a), int_of(b), seed);
              return py::make_tuple(r.value, r.used_fallback, r.ell.get_str());
          });
}
