#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pjohnson/context.hpp"
#include "pjohnson/endo.hpp"
#include "pjohnson/iwasawa.hpp"
#include "pjohnson/massey.hpp"

namespace pjohnson {

// Optional "p=<prime> r=<rank> N=<trunc>" line at the top of an input file.
struct ContextHeader {
  std::optional<std::uint32_t> p;
  std::optional<int> rank;
  std::optional<int> trunc;
};

// Automorphism file: "xj -> <word>" per line, '#' comments, optional header.
// Images stay as text until the rank is known.
struct AutomorphismSpec {
  ContextHeader header;
  struct Image {
    int gen;
    std::string text;
    int line;
  };
  std::vector<Image> images;
};

AutomorphismSpec parse_automorphism_text(std::string_view text);
// Generators without a line map to themselves.
GroupEndo build_endo(const AutomorphismSpec& spec, const GroupContext& ctx);

// Defining-system file: lines "a k l i value", optionally "m <length>", '#'
// comments. Without an "m" line the length is the largest l minus one.
DefiningSystem parse_defining_system(std::string_view text, const PrimeField& field,
                                     int generator_count);

// Degree file: "p=<prime>" header, then one positive integer per line.
LambdaModuleDesc parse_degree_file(std::string_view text);
// "4" or "2,3,3".
std::vector<int> parse_degree_list(std::string_view text);

std::string read_text_file(const std::string& path);

}  // namespace pjohnson
