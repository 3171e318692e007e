#include "format.hpp"

#include <sstream>

#include "json.hpp"

namespace pjohnson::cli {

namespace {

using Json = nlohmann::ordered_json;

std::string d_of_m_text(const MonodromySequences& s, int m) {
  auto d = s.d_at(m);
  return d ? std::to_string(*d) : "not found <= " + std::to_string(s.d_max);
}

}  // namespace

std::string format_table(const JohnsonTable& t) {
  std::ostringstream out;
  out << "# " << t.context().describe() << " m=" << t.level() << '\n';
  for (const auto& e : t.entries()) {
    out << 'X' << e.j << '\t' << e.mono.digits() << '\t' << e.value << '\n';
  }
  return out.str();
}

std::string format_table_json(const JohnsonTable& t) {
  std::ostringstream out;
  const GroupContext& ctx = t.context();
  out << Json{{"p", ctx.p()}, {"r", ctx.rank}, {"N", ctx.trunc}, {"m", t.level()}}.dump() << '\n';
  for (const auto& e : t.entries()) {
    out << Json{{"j", e.j}, {"mono", e.mono.digits()}, {"value", e.value}}.dump() << '\n';
  }
  return out.str();
}

std::string format_sequences(const MonodromySequences& s, const GroupContext& ctx) {
  std::ostringstream out;
  out << "# " << ctx.describe() << " mMax=" << s.m_max << " dMax=" << s.d_max << '\n';
  out << "m\td(m)\n";
  for (int m = 1; m <= s.m_max; ++m) out << m << '\t' << d_of_m_text(s, m) << '\n';
  out << "d\tm(d)\n";
  for (int d = 0; d <= s.d_max; ++d) out << d << '\t' << s.m_at(d).to_string(ctx.trunc) << '\n';
  return out.str();
}

std::string format_sequences_json(const MonodromySequences& s, const GroupContext& ctx) {
  std::ostringstream out;
  out << Json{{"p", ctx.p()}, {"r", ctx.rank}, {"N", ctx.trunc}, {"mMax", s.m_max},
              {"dMax", s.d_max}}
             .dump()
      << '\n';
  for (int m = 1; m <= s.m_max; ++m) {
    Json row{{"m", m}};
    if (auto d = s.d_at(m)) {
      row["d"] = *d;
    } else {
      row["d"] = nullptr;
    }
    out << row.dump() << '\n';
  }
  for (int d = 0; d <= s.d_max; ++d) {
    const AjDepth& depth = s.m_at(d);
    Json row{{"d", d}};
    if (depth.exceeds) {
      row["m"] = depth.to_string(ctx.trunc);
    } else {
      row["m"] = depth.value;
    }
    out << row.dump() << '\n';
  }
  return out.str();
}

std::string format_report_json(const std::vector<RelatorCheckReport>& reports) {
  std::ostringstream out;
  for (const auto& r : reports) {
    out << Json{{"d", r.d},
                {"j", r.j},
                {"mono", r.mono.digits()},
                {"lhs", r.lhs},
                {"rhs", r.rhs},
                {"equal", r.equal}}
               .dump()
        << '\n';
  }
  return out.str();
}

}  // namespace pjohnson::cli
