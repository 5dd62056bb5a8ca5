#include "quatring/json_io.hpp"

namespace quatring {

Rat parse_rational(const json& j) {
    std::string s;
    if (j.is_string())
        s = j.get<std::string>();
    else if (j.is_number_integer())
        s = std::to_string(j.get<long long>());
    else
        throw qerror("bad_json", "expected a rational string");
    Rat r;
    if (s.empty() || mpq_set_str(r.get_mpq_t(), s.c_str(), 10) != 0)
        throw qerror("bad_json", "malformed rational '" + s + "'");
    if (r.get_den() == 0) throw qerror("bad_json", "zero denominator in '" + s + "'");
    r.canonicalize();
    return r;
}

json rational_str(const Rat& x) { return x.get_str(); }

Int parse_integer(const json& j) {
    Rat r = parse_rational(j);
    if (r.get_den() != 1) throw qerror("bad_json", "expected an integer");
    return r.get_num();
}

mult_table parse_table(const json& j) {
    if (!j.is_object() || !j.contains("dim") || !j.contains("c"))
        throw qerror("bad_json", "table wants {\"dim\", \"c\"}");
    int n = j.at("dim").get<int>();
    const json& c = j.at("c");
    if (!c.is_array() || static_cast<int>(c.size()) != n)
        throw qerror("bad_json", "table constants must be an n x n x n array");
    std::vector<Rat> constants;
    constants.reserve(static_cast<size_t>(n) * n * n);
    for (const auto& plane : c) {
        if (!plane.is_array() || static_cast<int>(plane.size()) != n)
            throw qerror("bad_json", "table constants must be an n x n x n array");
        for (const auto& row : plane) {
            if (!row.is_array() || static_cast<int>(row.size()) != n)
                throw qerror("bad_json", "table constants must be an n x n x n array");
            for (const auto& v : row) constants.push_back(parse_rational(v));
        }
    }
    return mult_table::create(n, std::move(constants));
}

json table_json(const mult_table& t) {
    int n = t.dim();
    json c = json::array();
    for (int i = 0; i < n; ++i) {
        json plane = json::array();
        for (int j = 0; j < n; ++j) {
            json row = json::array();
            for (int k = 0; k < n; ++k) row.push_back(rational_str(t.c(i, j, k)));
            plane.push_back(row);
        }
        c.push_back(plane);
    }
    return json{{"dim", n}, {"c", c}};
}

quad_form parse_form(const json& j) {
    if (!j.is_object() || !j.contains("rank") || !j.contains("q"))
        throw qerror("bad_json", "form wants {\"rank\", \"q\", \"t\"}");
    int n = j.at("rank").get<int>();
    if (n < 1 || n > 16) throw qerror("bad_json", "form rank out of range");
    quad_form f = quad_form::zero(n);
    const json& q = j.at("q");
    if (!q.is_array() || static_cast<int>(q.size()) != n)
        throw qerror("bad_json", "q must list the rank diagonal values");
    for (int i = 0; i < n; ++i) f.q[i] = parse_rational(q[i]);
    if (j.contains("t")) {
        for (const auto& [key, val] : j.at("t").items()) {
            auto comma = key.find(',');
            if (comma == std::string::npos) throw qerror("bad_json", "t keys look like \"i,j\"");
            int a = std::stoi(key.substr(0, comma)), b = std::stoi(key.substr(comma + 1));
            if (a < 1 || b < 1 || a > n || b > n || a == b)
                throw qerror("bad_json", "t index out of range");
            f.set_t(a - 1, b - 1, parse_rational(val));
        }
    }
    return f;
}

json form_json(const quad_form& f) {
    json q = json::array();
    for (const auto& v : f.q) q.push_back(rational_str(v));
    json t = json::object();
    for (int i = 0; i < f.rank; ++i)
        for (int j = i + 1; j < f.rank; ++j)
            if (f.tval(i, j) != 0)
                t[std::to_string(i + 1) + "," + std::to_string(j + 1)] = rational_str(f.tval(i, j));
    return json{{"rank", f.rank}, {"q", q}, {"t", t}};
}

order_z parse_order(const json& j) {
    if (!j.is_object() || !j.contains("algebra") || !j.contains("den") || !j.contains("basis"))
        throw qerror("bad_json", "order wants {\"algebra\", \"den\", \"basis\"}");
    const json& alg = j.at("algebra");
    quat_alg a{parse_rational(alg.at("a")), parse_rational(alg.at("b"))};
    Int den = parse_integer(j.at("den"));
    const json& basis = j.at("basis");
    if (!basis.is_array() || basis.size() != 4) throw qerror("bad_json", "basis must be 4 rows");
    zmat rows;
    for (const auto& row : basis) {
        if (!row.is_array() || row.size() != 4)
            throw qerror("bad_json", "basis rows must have 4 entries");
        zvec v;
        for (const auto& e : row) v.push_back(parse_integer(e));
        rows.push_back(std::move(v));
    }
    return order_z::create(a, den, std::move(rows));
}

json order_json(const order_z& o) {
    json basis = json::array();
    for (const auto& row : o.rows()) {
        json r = json::array();
        for (const auto& v : row) r.push_back(v.get_str());
        basis.push_back(r);
    }
    return json{{"algebra",
                 {{"a", rational_str(o.algebra().a)}, {"b", rational_str(o.algebra().b)}}},
                {"den", o.den().get_str()},
                {"basis", basis}};
}

json decomposition_json(const normal_decomp& nd) {
    json basis = json::array();
    for (const auto& row : nd.basis) {
        json r = json::array();
        for (const auto& v : row) r.push_back(rational_str(v));
        basis.push_back(r);
    }
    json blocks = json::array();
    for (const auto& b : nd.blocks) {
        json blk;
        blk["e"] = b.e == ord_infinity ? json("inf") : json(b.e);
        if (b.binary) {
            blk["kind"] = "binary";
            blk["a"] = rational_str(b.a);
            blk["b"] = rational_str(b.b);
            blk["c"] = rational_str(b.c);
        } else {
            blk["kind"] = "unary";
            blk["u"] = rational_str(b.u);
        }
        blocks.push_back(blk);
    }
    return json{{"change_of_basis", basis}, {"blocks", blocks}};
}

json place_json(const place& v) { return v.str(); }

}  // namespace quatring
