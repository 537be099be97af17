#include "ce/descriptor_json.hpp"

#include <json.hpp>

namespace ce {

using nlohmann::json;

namespace {

json balls_to_json(const BallUnion& s) {
    json centers = json::array();
    for (const auto& c : s.centers()) centers.push_back(c);
    return json{{"radius", s.radius()}, {"centers", centers}};
}

BallUnion balls_from_json(int dim, const json& j) {
    if (!j.is_object() || !j.contains("radius") || !j.contains("centers"))
        throw InvalidInputError("descriptor: ball union needs radius and centers");
    double rho = j.at("radius").get<double>();
    std::vector<Point> centers;
    for (const auto& c : j.at("centers")) centers.push_back(c.get<Point>());
    return BallUnion(dim, rho, std::move(centers));
}

json node_to_json(const ExprPtr& f) {
    json j;
    j["dim"] = f->dim();
    std::visit(
        [&](const auto& node) {
            using T = std::decay_t<decltype(node)>;
            if constexpr (std::is_same_v<T, Expr::Eigen>) {
                j["node"] = "eigen";
                j["k"] = node.k;
            } else if constexpr (std::is_same_v<T, Expr::Sum>) {
                j["node"] = "sum";
                json terms = json::array();
                for (const auto& [coeff, g] : node.terms)
                    terms.push_back(json::array({coeff, node_to_json(g)}));
                j["terms"] = terms;
            } else if constexpr (std::is_same_v<T, Expr::Dilation>) {
                j["node"] = "dilate";
                j["c"] = node.c;
                j["inner"] = node_to_json(node.inner);
            } else if constexpr (std::is_same_v<T, Expr::Autocorr>) {
                j["node"] = "autocorr";
                j["balls"] = balls_to_json(node.balls);
            } else if constexpr (std::is_same_v<T, Expr::FtSquared>) {
                j["node"] = "ftsq";
                j["balls"] = balls_to_json(node.balls);
            } else {
                j["node"] = "fourier";
                j["inner"] = node_to_json(node.inner);
            }
        },
        f->node());
    return j;
}

ExprPtr node_from_json(const json& j) {
    if (!j.is_object() || !j.contains("dim") || !j.contains("node"))
        throw InvalidInputError("descriptor: node needs dim and node fields");
    int dim = j.at("dim").get<int>();
    std::string kind = j.at("node").get<std::string>();
    if (kind == "eigen") return Expr::eigen(dim, j.at("k").get<int>());
    if (kind == "sum") {
        std::vector<std::pair<double, ExprPtr>> terms;
        for (const auto& t : j.at("terms")) {
            if (!t.is_array() || t.size() != 2)
                throw InvalidInputError("descriptor: sum term must be [coeff, node]");
            terms.emplace_back(t[0].get<double>(), node_from_json(t[1]));
        }
        return Expr::sum(std::move(terms));
    }
    if (kind == "dilate")
        return Expr::dilated(j.at("c").get<double>(), node_from_json(j.at("inner")));
    if (kind == "autocorr") return Expr::autocorr(balls_from_json(dim, j.at("balls")));
    if (kind == "ftsq") return Expr::ft_squared(balls_from_json(dim, j.at("balls")));
    if (kind == "fourier") return Expr::fourier_node(node_from_json(j.at("inner")));
    throw InvalidInputError("descriptor: unknown node kind '" + kind + "'");
}

} // namespace

std::string serialize_descriptor(const ExprPtr& f) { return node_to_json(f).dump(2); }

ExprPtr parse_descriptor(const std::string& json_text) {
    json j = json::parse(json_text, nullptr, false);
    if (j.is_discarded()) throw InvalidInputError("descriptor: malformed JSON");
    try {
        return node_from_json(j);
    } catch (const json::exception& e) {
        throw InvalidInputError(std::string("descriptor: ") + e.what());
    }
}

std::string serialize_ball_union(const BallUnion& s) {
    json j = balls_to_json(s);
    j["dim"] = s.dim();
    return j.dump(2);
}

BallUnion parse_ball_union(const std::string& json_text) {
    json j = json::parse(json_text, nullptr, false);
    if (j.is_discarded()) throw InvalidInputError("ball union: malformed JSON");
    try {
        int dim = j.at("dim").get<int>();
        return balls_from_json(dim, j);
    } catch (const json::exception& e) {
        throw InvalidInputError(std::string("ball union: ") + e.what());
    }
}

} // namespace ce
