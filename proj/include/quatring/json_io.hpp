#ifndef QUATRING_JSON_IO_HPP_
#define QUATRING_JSON_IO_HPP_

#include <json.hpp>

#include "quatring/orders.hpp"

namespace quatring {

using json = nlohmann::json;

/* Rationals travel as strings "num/den" (denominator omitted when 1),
 * integers as decimal strings. */
Rat parse_rational(const json& j);
json rational_str(const Rat& x);
Int parse_integer(const json& j);

/* {"dim": n, "c": [[[rat x n] x n] x n]} with (i, j, k) indexing */
mult_table parse_table(const json& j);
json table_json(const mult_table& t);

/* {"rank": n, "q": [...], "t": {"i,j": rat}} with 1-based i < j */
quad_form parse_form(const json& j);
json form_json(const quad_form& f);

/* {"algebra": {"a": ..., "b": ...}, "den": ..., "basis": [[4 ints] x 4]} */
order_z parse_order(const json& j);
json order_json(const order_z& o);

json decomposition_json(const normal_decomp& nd);
json place_json(const place& v);

}  // namespace quatring

#endif  // QUATRING_JSON_IO_HPP_
