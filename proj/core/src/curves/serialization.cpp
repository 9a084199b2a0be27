#include "koszul/curves/serialization.hpp"

#include <cstdio>
#include <memory>

#include "koszul/error.hpp"

namespace koszul::curves {

using nlohmann::json;
using linalg::format_rat;
using linalg::parse_rat;

namespace {

json branch_to_json(const PointOnCurve& p) {
  return json::array({p.component, json::array({format_rat(p.point.a), format_rat(p.point.b)})});
}

PointOnCurve branch_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number_unsigned() || !j[1].is_array() ||
      j[1].size() != 2) {
    throw ModelError("node branch must be [component, [a, b]]");
  }
  return PointOnCurve{j[0].get<std::size_t>(),
                      make_point(parse_rat(j[1][0].get<std::string>()),
                                 parse_rat(j[1][1].get<std::string>()))};
}

}  // namespace

json model_to_json(const LineBundle& bundle) {
  const auto& curve = bundle.curve();
  json nodes = json::array();
  for (std::size_t n = 0; n < curve.nodes().size(); ++n) {
    const auto& node = curve.nodes()[n];
    nodes.push_back({{"a", branch_to_json(node.a)},
                     {"b", branch_to_json(node.b)},
                     {"gluing", format_rat(bundle.gluings()[n])}});
  }
  return json{{"components", curve.component_count()},
              {"nodes", std::move(nodes)},
              {"degrees", bundle.degrees()},
              {"seed", curve.seed()}};
}

LineBundle model_from_json(const json& doc) {
  try {
    const auto components = doc.at("components").get<std::size_t>();
    std::vector<Node> nodes;
    std::vector<Rat> gluings;
    for (const auto& n : doc.at("nodes")) {
      nodes.push_back(Node{branch_from_json(n.at("a")), branch_from_json(n.at("b"))});
      gluings.push_back(parse_rat(n.at("gluing").get<std::string>()));
    }
    auto degrees = doc.at("degrees").get<std::vector<long>>();
    const auto seed = doc.contains("seed") ? doc.at("seed").get<std::uint64_t>() : 0;
    auto curve = std::make_shared<const NodalCurve>(components, std::move(nodes), seed);
    return LineBundle(std::move(curve), std::move(degrees), std::move(gluings));
  } catch (const json::exception& e) {
    throw ModelError(std::string("malformed model document: ") + e.what());
  }
}

std::string serialize_model(const LineBundle& bundle) { return model_to_json(bundle).dump(); }

LineBundle parse_model(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw ModelError(std::string("model is not valid JSON: ") + e.what());
  }
  return model_from_json(doc);
}

std::uint64_t fnv1a(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::uint64_t model_hash(const LineBundle& bundle) { return fnv1a(serialize_model(bundle)); }

std::string hash_hex(std::uint64_t hash) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(hash));
  return buf;
}

}  // namespace koszul::curves
