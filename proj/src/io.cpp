#include "parlearn/io.hpp"

#include <fstream>
#include <sstream>

#include "parlearn/errors.hpp"

namespace parlearn {

Json to_json(const Rational& r) { return to_string(r); }

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(std::to_string(j.get<long long>()));
  throw ParseError("expected rational string, got " + j.dump());
}

Json to_json(const LabeledMultigraph& g) {
  Json edges = Json::array();
  for (const auto& e : g.edges()) edges.push_back({e.u, e.v});
  Json labels = Json::object();
  std::size_t top = 0;
  for (std::size_t l = 1; l <= g.arity(); ++l) {
    if (auto v = g.labeled_vertex(l)) {
      labels[std::to_string(l)] = *v;
      top = l;
    }
  }
  Json out{{"n", g.num_vertices()}, {"edges", edges}, {"labels", labels}};
  // "k" only when it cannot be inferred from the largest label.
  if (top != g.arity()) out["k"] = g.arity();
  return out;
}

LabeledMultigraph graph_from_json(const Json& j) {
  try {
    const auto n = j.at("n").get<std::size_t>();
    std::vector<Edge> edges;
    for (const auto& e : j.value("edges", Json::array())) {
      if (!e.is_array() || e.size() != 2) throw ParseError("edge must be [u,v]");
      edges.emplace_back(e[0].get<std::size_t>(), e[1].get<std::size_t>());
    }
    std::vector<std::optional<Vertex>> labels;
    std::size_t max_label = 0;
    const Json label_obj = j.value("labels", Json::object());
    for (const auto& [key, value] : label_obj.items()) {
      const auto l = std::stoul(key);
      if (l == 0) throw ParseError("labels are 1-based");
      max_label = std::max<std::size_t>(max_label, l);
      if (labels.size() < l) labels.resize(l);
      labels[l - 1] = value.get<std::size_t>();
    }
    const std::size_t arity = j.value("k", max_label);
    return LabeledMultigraph(n, std::move(edges), arity, std::move(labels));
  } catch (const Json::exception& e) {
    throw ParseError(std::string("graph json: ") + e.what());
  } catch (const std::invalid_argument&) {
    throw ParseError("graph json: label keys must be integers");
  }
}

Json to_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json to_json(const WeightedGraph& h) {
  Json alpha = Json::array();
  for (const auto& a : h.alpha()) alpha.push_back(to_json(a));
  return Json{{"alpha", alpha}, {"beta", to_json(h.beta())}};
}

WeightedGraph weighted_graph_from_json(const Json& j) {
  try {
    Vector alpha;
    for (const auto& a : j.at("alpha")) alpha.push_back(rational_from_json(a));
    std::vector<Vector> rows;
    for (const auto& r : j.at("beta")) {
      Vector row;
      for (const auto& x : r) row.push_back(rational_from_json(x));
      rows.push_back(std::move(row));
    }
    return WeightedGraph(std::move(alpha), Matrix::from_rows(rows));
  } catch (const Json::exception& e) {
    throw ParseError(std::string("weighted graph json: ") + e.what());
  } catch (const DimensionMismatch& e) {
    throw ParseError(std::string("weighted graph json: ") + e.what());
  }
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path.string());
  out << text;
}

}  // namespace parlearn
