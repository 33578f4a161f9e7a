#include "extrainv/io.hpp"

#include <charconv>
#include <fstream>
#include <iostream>
#include <limits>

namespace extrainv::io {

namespace {

std::string trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return std::string(s);
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    parts.push_back(trim(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

Integer parse_integer_text(const std::string& s) {
  if (s.empty()) throw ParseError("empty integer");
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) throw ParseError("malformed integer '" + s + "'");
  for (std::size_t j = i; j < s.size(); ++j)
    if (!std::isdigit(static_cast<unsigned char>(s[j]))) throw ParseError("malformed integer '" + s + "'");
  return Integer(s[0] == '+' ? s.substr(1) : s);
}

Integer parse_integer(const json& j) {
  if (j.is_number_integer()) return Integer(j.get<std::int64_t>());
  if (j.is_number_unsigned()) return Integer(j.get<std::uint64_t>());
  if (j.is_string()) return parse_integer_text(j.get<std::string>());
  throw ParseError("expected an integer, got " + j.dump());
}

Rational parse_rational_text(const std::string& s) {
  const auto slash = s.find('/');
  if (slash == std::string::npos) return Rational(parse_integer_text(trim(s)));
  const Integer num = parse_integer_text(trim(std::string_view(s).substr(0, slash)));
  const Integer den = parse_integer_text(trim(std::string_view(s).substr(slash + 1)));
  if (den == 0) throw ParseError("zero denominator in '" + s + "'");
  return Rational(num, den);
}

std::int64_t parse_int64(const std::string& s) {
  std::int64_t v = 0;
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc() || ptr != end) throw ParseError("malformed integer '" + s + "'");
  return v;
}

RatVector parse_rational_vector(const json& j, std::size_t dim) {
  if (!j.is_array()) throw ParseError("expected a vector, got " + j.dump());
  RatVector v;
  for (const auto& e : j) v.push_back(parse_rational(e));
  if (v.size() != dim)
    throw ParseError("vector " + j.dump() + " has length " + std::to_string(v.size()) + ", expected " +
                     std::to_string(dim));
  return v;
}

const json& require(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  return j.at(key);
}

}  // namespace

Rational parse_rational(const json& j) {
  if (j.is_number_integer() || j.is_number_unsigned()) return Rational(parse_integer(j));
  if (j.is_string()) return parse_rational_text(j.get<std::string>());
  if (j.is_array() && j.size() == 2) {
    const Integer num = parse_integer(j[0]);
    const Integer den = parse_integer(j[1]);
    if (den == 0) throw ParseError("zero denominator in " + j.dump());
    return Rational(num, den);
  }
  throw ParseError("expected a rational [num, den], got " + j.dump());
}

json integer_to_json(const Integer& x) {
  if (x <= std::numeric_limits<std::int64_t>::max() && x >= std::numeric_limits<std::int64_t>::min())
    return x.convert_to<std::int64_t>();
  return x.str();
}

json rational_to_json(const Rational& r) {
  return json::array({integer_to_json(boost::multiprecision::numerator(r)),
                      integer_to_json(boost::multiprecision::denominator(r))});
}

json columns_to_json(const IntMatrix& m) {
  json cols = json::array();
  for (std::size_t j = 0; j < m.cols(); ++j) {
    json col = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) col.push_back(integer_to_json(m(i, j)));
    cols.push_back(std::move(col));
  }
  return cols;
}

SubgroupSpec parse_subgroup_spec(const json& j) {
  SubgroupSpec spec;
  const json& d = require(j, "d");
  if (!d.is_number_integer() || d.get<std::int64_t>() <= 0) throw ParseError("'d' must be a positive integer");
  spec.dim = d.get<std::size_t>();
  for (const char* key : {"discrete", "continuous"}) {
    if (!j.contains(key)) continue;
    const json& list = j.at(key);
    if (!list.is_array()) throw ParseError(std::string("'") + key + "' must be a list of vectors");
    auto& target = std::string_view(key) == "discrete" ? spec.discrete : spec.continuous;
    for (const auto& v : list) target.push_back(parse_rational_vector(v, spec.dim));
  }
  return spec;
}

json spec_to_json(const SubgroupSpec& spec) {
  auto vectors = [](const std::vector<RatVector>& vs) {
    json out = json::array();
    for (const auto& v : vs) {
      json jv = json::array();
      for (const auto& e : v) jv.push_back(rational_to_json(e));
      out.push_back(std::move(jv));
    }
    return out;
  };
  return json{{"d", spec.dim}, {"discrete", vectors(spec.discrete)}, {"continuous", vectors(spec.continuous)}};
}

json canonical_to_json(const SubgroupSpec& spec, const ClosedSubgroup& m) {
  json out = spec_to_json(spec);
  out["q"] = m.discrete_rank();
  json factors = json::array();
  for (const auto& a : m.factors()) factors.push_back(integer_to_json(a));
  out["factors"] = std::move(factors);
  out["V"] = columns_to_json(m.basis());
  out["W"] = columns_to_json(m.dual_basis());
  return out;
}

FiberedGenerator parse_generator(const json& j) {
  const json& d = require(j, "d");
  if (!d.is_number_integer() || d.get<std::int64_t>() <= 0) throw ParseError("'d' must be a positive integer");
  const auto dim = d.get<std::size_t>();
  const json& grid_json = require(j, "grid");
  if (!grid_json.is_array()) throw ParseError("'grid' must be a list");
  std::vector<std::size_t> grid;
  for (const auto& n : grid_json) {
    if (!n.is_number_integer() || n.get<std::int64_t>() <= 0) throw ParseError("grid counts must be positive integers");
    grid.push_back(n.get<std::size_t>());
  }
  try {
    FiberedGenerator g(dim, std::move(grid));
    const json& tiles = require(j, "tiles");
    if (!tiles.is_array()) throw ParseError("'tiles' must be a list");
    for (const auto& t : tiles) {
      const json& k = require(t, "k");
      if (!k.is_array()) throw ParseError("tile 'k' must be a list of integers");
      Tile key;
      for (const auto& e : k) {
        if (!e.is_number_integer()) throw ParseError("tile 'k' must be a list of integers");
        key.push_back(e.get<std::int64_t>());
      }
      const json& re = require(t, "re");
      if (!re.is_array()) throw ParseError("tile 're' must be a list");
      std::vector<Complex> values;
      for (const auto& x : re) {
        if (!x.is_number()) throw ParseError("tile values must be numbers");
        values.emplace_back(x.get<double>(), 0.0);
      }
      if (t.contains("im")) {
        const json& im = t.at("im");
        if (!im.is_array() || im.size() != values.size()) throw ParseError("'im' must match 're' in length");
        for (std::size_t i = 0; i < values.size(); ++i) {
          if (!im[i].is_number()) throw ParseError("tile values must be numbers");
          values[i].imag(im[i].get<double>());
        }
      }
      if (g.tiles().contains(key)) throw ParseError("duplicate tile " + k.dump());
      g.set_tile(key, std::move(values));
    }
    return g;
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

json generator_to_json(const FiberedGenerator& g) {
  json tiles = json::array();
  for (const auto& [k, values] : g.tiles()) {
    json re = json::array(), im = json::array();
    for (const auto& v : values) {
      re.push_back(v.real());
      im.push_back(v.imag());
    }
    tiles.push_back(json{{"k", k}, {"re", std::move(re)}, {"im", std::move(im)}});
  }
  return json{{"d", g.dim()}, {"grid", g.grid()}, {"tiles", std::move(tiles)}};
}

std::vector<FiberedGenerator> parse_generators(const json& j) {
  std::vector<FiberedGenerator> out;
  const json* list = nullptr;
  if (j.is_array()) list = &j;
  else if (j.is_object() && j.contains("generators")) list = &j.at("generators");
  if (list == nullptr) {
    out.push_back(parse_generator(j));
    return out;
  }
  if (!list->is_array() || list->empty()) throw ParseError("'generators' must be a nonempty list");
  for (const auto& g : *list) out.push_back(parse_generator(g));
  return out;
}

json generators_to_json(const std::vector<FiberedGenerator>& gs) {
  json list = json::array();
  for (const auto& g : gs) list.push_back(generator_to_json(g));
  return json{{"generators", std::move(list)}};
}

json report_to_json(const InvarianceReport& report) {
  json cells = json::array();
  for (const auto& c : report.cells)
    cells.push_back(json{{"index", c.index},
                         {"rank_total", c.rank_total},
                         {"ranks_by_class", c.ranks_by_class},
                         {"defect", c.defect},
                         {"residual", c.residual}});
  return json{{"method", to_string(report.method)},
              {"verdict", report.verdict},
              {"tol", report.tol},
              {"classes", report.classes},
              {"worst_residual", report.worst_residual},
              {"worst_defect", report.worst_defect},
              {"cells", std::move(cells)}};
}

json support_to_json(const SupportReport& r) {
  return json{{"ell", r.ell},
              {"cell_volume", r.cell_volume},
              {"support_cells", r.support_cells},
              {"support_measure", r.support_measure},
              {"level_cells", r.level_cells},
              {"level_measure", r.level_measure},
              {"dimension_cells", r.dimension_cells},
              {"dimension_integral", r.dimension_integral},
              {"bound_holds", r.bound_holds}};
}

RatVector parse_point(std::string_view text) {
  RatVector v;
  for (const auto& part : split(text, ',')) v.push_back(parse_rational_text(part));
  return v;
}

std::vector<RatVector> parse_points(std::string_view text) {
  std::vector<RatVector> out;
  for (const auto& part : split(text, ';'))
    if (!part.empty()) out.push_back(parse_point(part));
  return out;
}

std::vector<Tile> parse_window(std::string_view text) {
  std::vector<std::pair<std::int64_t, std::int64_t>> ranges;
  for (const auto& part : split(text, ',')) {
    const auto dots = part.find("..");
    if (dots == std::string::npos) {
      const auto v = parse_int64(part);
      ranges.emplace_back(v, v);
      continue;
    }
    const auto lo = parse_int64(trim(std::string_view(part).substr(0, dots)));
    const auto hi = parse_int64(trim(std::string_view(part).substr(dots + 2)));
    if (hi < lo) throw ParseError("empty window range '" + part + "'");
    if (hi - lo > 1000) throw ParseError("window range '" + part + "' is too large");
    ranges.emplace_back(lo, hi);
  }
  std::vector<Tile> tiles;
  Tile k(ranges.size());
  for (std::size_t i = 0; i < ranges.size(); ++i) k[i] = ranges[i].first;
  while (true) {
    tiles.push_back(k);
    std::size_t pos = ranges.size();
    while (pos-- > 0) {
      if (k[pos] < ranges[pos].second) {
        ++k[pos];
        break;
      }
      k[pos] = ranges[pos].first;
      if (pos == 0) return tiles;
    }
  }
}

std::vector<std::size_t> parse_grid(std::string_view text) {
  std::vector<std::size_t> grid;
  for (const auto& part : split(text, ',')) {
    const auto v = parse_int64(part);
    if (v <= 0) throw ParseError("grid counts must be positive");
    grid.push_back(static_cast<std::size_t>(v));
  }
  return grid;
}

json read_json(const std::string& path) {
  try {
    if (path == "-") return json::parse(std::cin);
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    return json::parse(in);
  } catch (const json::exception& e) {
    throw ParseError("invalid JSON in '" + path + "': " + e.what());
  }
}

}  // namespace extrainv::io
