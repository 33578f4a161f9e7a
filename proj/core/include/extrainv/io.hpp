#pragma once

// JSON documents exchanged by the command-line tool.
//
//   subgroup:  {"d": 2, "discrete": [[[1,3],[0,1]]], "continuous": [[[-1,1],[1,1]]]}
//              entries are [numerator, denominator] pairs (integers and "p/q"
//              strings are accepted too); canonical output adds "q", "factors",
//              "V" and "W" (integer matrices as lists of columns).
//   generator: {"d": 1, "grid": [4], "tiles": [{"k": [0], "re": [...], "im": [...]}]}
//              with cell arrays row-major in W-coordinates.
//   report:    {"method", "verdict", "tol", "cells": [{"index", "rank_total",
//              "ranks_by_class", "defect", "residual"}], ...}

#include "extrainv/fibered.hpp"
#include "extrainv/subgroup.hpp"

#include <nlohmann/json.hpp>

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace extrainv::io {

using json = nlohmann::json;

/// Malformed input document or argument.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Rational parse_rational(const json& j);
json rational_to_json(const Rational& r);
/// Integers that fit in 64 bits become JSON numbers, larger ones decimal strings.
json integer_to_json(const Integer& x);
json columns_to_json(const IntMatrix& m);

SubgroupSpec parse_subgroup_spec(const json& j);
json spec_to_json(const SubgroupSpec& spec);
/// The input spec plus "q", "factors", "V", "W".
json canonical_to_json(const SubgroupSpec& spec, const ClosedSubgroup& m);

FiberedGenerator parse_generator(const json& j);
json generator_to_json(const FiberedGenerator& g);
/// Accepts a single generator object, an array of them, or {"generators": [...]}.
std::vector<FiberedGenerator> parse_generators(const json& j);
json generators_to_json(const std::vector<FiberedGenerator>& gs);

json report_to_json(const InvarianceReport& report);
json support_to_json(const SupportReport& report);

/// "1/3,0,-2" -> rational vector.
RatVector parse_point(std::string_view text);
/// ";"-separated list of points.
std::vector<RatVector> parse_points(std::string_view text);
/// "lo..hi,lo..hi" (one inclusive range per axis) -> all tiles of the box.
std::vector<Tile> parse_window(std::string_view text);
/// "4,4" -> per-axis subdivision counts.
std::vector<std::size_t> parse_grid(std::string_view text);

/// Reads a JSON document from a path, or stdin for "-".
json read_json(const std::string& path);

}  // namespace extrainv::io
