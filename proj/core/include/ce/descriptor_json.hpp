#ifndef CE_DESCRIPTOR_JSON_HPP
#define CE_DESCRIPTOR_JSON_HPP

#include <string>

#include "ce/expr.hpp"

namespace ce {

/// Recursive function-descriptor schema:
///   {"dim": n, "node": "eigen", "k": k}
///   {"dim": n, "node": "sum", "terms": [[coeff, node], ...]}
///   {"dim": n, "node": "dilate", "c": c, "inner": node}
///   {"dim": n, "node": "autocorr", "balls": {"radius": rho, "centers": [[..], ...]}}
///   {"dim": n, "node": "ftsq", "balls": {...}}
///   {"dim": n, "node": "fourier", "inner": node}
/// parse(serialize(f)) is the identity.
std::string serialize_descriptor(const ExprPtr& f);
ExprPtr parse_descriptor(const std::string& json_text);

std::string serialize_ball_union(const BallUnion& s);
BallUnion parse_ball_union(const std::string& json_text);

} // namespace ce

#endif
