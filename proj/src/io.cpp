#include "pjohnson/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

#include "pjohnson/errors.hpp"

namespace pjohnson {

namespace {

std::string_view trim(std::string_view s) {
  const char* ws = " \t\r\n";
  auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

std::string_view strip_comment(std::string_view s) {
  auto h = s.find('#');
  return trim(h == std::string_view::npos ? s : s.substr(0, h));
}

std::vector<std::string_view> lines_of(std::string_view text) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto nl = text.find('\n', start);
    if (nl == std::string_view::npos) {
      out.push_back(text.substr(start));
      break;
    }
    out.push_back(text.substr(start, nl - start));
    start = nl + 1;
  }
  return out;
}

std::vector<std::string_view> fields_of(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t b = i;
    while (i < s.size() && s[i] != ' ' && s[i] != '\t') ++i;
    if (i > b) out.push_back(s.substr(b, i - b));
  }
  return out;
}

std::string at_line(int line, const std::string& what) {
  return "line " + std::to_string(line) + ": " + what;
}

template <typename T>
T parse_int(std::string_view s, int line, const char* what) {
  T v{};
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw UsageError(at_line(line, std::string("bad ") + what + " '" + std::string(s) + "'"));
  }
  return v;
}

bool is_header(std::string_view s) {
  return s.rfind("p=", 0) == 0 || s.rfind("r=", 0) == 0 || s.rfind("N=", 0) == 0;
}

ContextHeader parse_header(std::string_view s, int line) {
  ContextHeader h;
  for (std::string_view f : fields_of(s)) {
    auto eq = f.find('=');
    if (eq == std::string_view::npos) throw UsageError(at_line(line, "bad header field"));
    std::string_view key = f.substr(0, eq);
    std::string_view val = f.substr(eq + 1);
    if (key == "p") {
      h.p = parse_int<std::uint32_t>(val, line, "prime");
    } else if (key == "r") {
      h.rank = parse_int<int>(val, line, "rank");
    } else if (key == "N") {
      h.trunc = parse_int<int>(val, line, "truncation order");
    } else {
      throw UsageError(at_line(line, "unknown header key '" + std::string(key) + "'"));
    }
  }
  return h;
}

}  // namespace

AutomorphismSpec parse_automorphism_text(std::string_view text) {
  AutomorphismSpec spec;
  std::set<int> seen;
  bool body_started = false;
  int line_no = 0;
  for (std::string_view raw : lines_of(text)) {
    ++line_no;
    std::string_view s = strip_comment(raw);
    if (s.empty()) continue;
    if (is_header(s)) {
      if (body_started) throw UsageError(at_line(line_no, "context header after images"));
      ContextHeader h = parse_header(s, line_no);
      if (h.p) spec.header.p = h.p;
      if (h.rank) spec.header.rank = h.rank;
      if (h.trunc) spec.header.trunc = h.trunc;
      continue;
    }
    body_started = true;
    auto arrow = s.find("->");
    if (arrow == std::string_view::npos) throw UsageError(at_line(line_no, "expected 'xj -> word'"));
    std::string_view lhs = trim(s.substr(0, arrow));
    std::string_view rhs = trim(s.substr(arrow + 2));
    if (lhs.size() < 2 || lhs[0] != 'x') {
      throw UsageError(at_line(line_no, "left side must be a generator xj"));
    }
    int gen = parse_int<int>(lhs.substr(1), line_no, "generator index");
    if (gen < 1) throw UsageError(at_line(line_no, "generator index must be positive"));
    if (!seen.insert(gen).second) {
      throw UsageError(at_line(line_no, "generator x" + std::to_string(gen) + " given twice"));
    }
    if (rhs.empty()) throw UsageError(at_line(line_no, "empty image"));
    spec.images.push_back({gen, std::string(rhs), line_no});
  }
  return spec;
}

GroupEndo build_endo(const AutomorphismSpec& spec, const GroupContext& ctx) {
  std::vector<Word> images;
  for (int j = 1; j <= ctx.rank; ++j) images.push_back(Word::generator(j));
  for (const auto& img : spec.images) {
    if (img.gen > ctx.rank) {
      throw UsageError(at_line(img.line, "generator x" + std::to_string(img.gen) +
                                             " outside rank " + std::to_string(ctx.rank)));
    }
    try {
      images[static_cast<std::size_t>(img.gen - 1)] = parse_word(img.text, ctx.rank);
    } catch (const ParseError& e) {
      throw UsageError(at_line(img.line, e.what()));
    }
  }
  return GroupEndo::from_images(ctx, std::move(images));
}

DefiningSystem parse_defining_system(std::string_view text, const PrimeField& field,
                                     int generator_count) {
  struct Row {
    int k, l, i;
    std::int64_t value;
    int line;
  };
  std::vector<Row> rows;
  std::optional<int> length;
  int line_no = 0;
  for (std::string_view raw : lines_of(text)) {
    ++line_no;
    std::string_view s = strip_comment(raw);
    if (s.empty()) continue;
    auto f = fields_of(s);
    if (f[0] == "m") {
      if (f.size() != 2) throw UsageError(at_line(line_no, "expected 'm <length>'"));
      if (length) throw UsageError(at_line(line_no, "length given twice"));
      length = parse_int<int>(f[1], line_no, "length");
    } else if (f[0] == "a") {
      if (f.size() != 5) throw UsageError(at_line(line_no, "expected 'a k l i value'"));
      rows.push_back({parse_int<int>(f[1], line_no, "row"), parse_int<int>(f[2], line_no, "column"),
                      parse_int<int>(f[3], line_no, "generator index"),
                      parse_int<std::int64_t>(f[4], line_no, "value"), line_no});
    } else {
      throw UsageError(at_line(line_no, "expected an 'a' or 'm' line"));
    }
  }
  if (!length) {
    if (rows.empty()) throw UsageError("defining system is empty and gives no length");
    int top = 0;
    for (const Row& r : rows) top = std::max(top, r.l);
    length = top - 1;
  }
  DefiningSystem ds(field, *length, generator_count);
  std::set<std::tuple<int, int, int>> seen;
  for (const Row& r : rows) {
    if (!seen.insert({r.k, r.l, r.i}).second) {
      throw UsageError(at_line(r.line, "entry given twice"));
    }
    try {
      ds.set(r.k, r.l, r.i, field.reduce(r.value));
    } catch (const UsageError& e) {
      throw UsageError(at_line(r.line, e.what()));
    }
  }
  return ds;
}

LambdaModuleDesc parse_degree_file(std::string_view text) {
  LambdaModuleDesc desc;
  bool have_p = false;
  int line_no = 0;
  for (std::string_view raw : lines_of(text)) {
    ++line_no;
    std::string_view s = strip_comment(raw);
    if (s.empty()) continue;
    if (s.rfind("p=", 0) == 0) {
      if (have_p || !desc.degrees.empty()) throw UsageError(at_line(line_no, "misplaced p= header"));
      desc.p = parse_int<std::uint32_t>(s.substr(2), line_no, "prime");
      have_p = true;
      continue;
    }
    desc.degrees.push_back(parse_int<int>(s, line_no, "degree"));
  }
  if (!have_p) throw UsageError("degree file lacks a p= header");
  desc.validate();
  return desc;
}

std::vector<int> parse_degree_list(std::string_view text) {
  std::vector<int> out;
  std::size_t start = 0;
  while (true) {
    auto comma = text.find(',', start);
    std::string_view piece = trim(text.substr(start, comma == std::string_view::npos
                                                          ? std::string_view::npos
                                                          : comma - start));
    int v{};
    auto [ptr, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), v);
    if (piece.empty() || ec != std::errc() || ptr != piece.data() + piece.size()) {
      throw UsageError("bad degree '" + std::string(piece) + "' in list");
    }
    out.push_back(v);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace pjohnson
