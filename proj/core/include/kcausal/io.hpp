#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "kcausal/measure.hpp"
#include "kcausal/models.hpp"
#include "kcausal/relation.hpp"
#include "kcausal/time_function.hpp"

namespace kcausal::io {

// Text formats, UTF-8 JSON documents. Rationals are written as reduced "a/b"
// strings; readers also accept plain integers and "a" strings.
//
//   ground / relation   {"n": 3, "pairs": [[0,1],[1,2]]}
//   measure             {"n": 3, "weights": ["1/2","1/2","0/1"]}
//   time function       {"n": 3, "values": ["1/4","1/2","3/4"]}
//   family              {"n": 3, "functions": [["1/4","1/2","3/4"], ...]}
//   coupling            [[0,1,"1/2"],[1,2,"1/2"]]
//   minkowski points    {"n": 2, "points": [["0/1","1/2"], ...]}   (t, x)
//
// Malformed documents raise ParseError; syntax errors carry line and column.

Relation parse_relation(std::string_view text);
std::string write_relation(const Relation& r);

CausalGround parse_ground(std::string_view text);

Measure parse_measure(std::string_view text);
std::string write_measure(const Measure& m);

TimeFunction parse_time_function(std::string_view text, const CausalGround& ground);
std::string write_time_function(const TimeFunction& t);

// Accepts a family document or a single time-function document.
std::vector<TimeFunction> parse_family(std::string_view text, const CausalGround& ground);
std::string write_family(std::span<const TimeFunction> fns);

Coupling parse_coupling(std::string_view text, std::size_t n);
std::string write_coupling(const Coupling& w);

MinkowskiSample parse_minkowski_points(std::string_view text);
std::string write_minkowski_points(const MinkowskiSample& sample);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view contents);

}  // namespace kcausal::io
