#include "cli.hpp"

#include <algorithm>
#include <filesystem>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "format.hpp"
#include "pjohnson/autom.hpp"
#include "pjohnson/errors.hpp"
#include "pjohnson/fox.hpp"
#include "pjohnson/io.hpp"
#include "pjohnson/iwasawa.hpp"
#include "pjohnson/magnus.hpp"
#include "pjohnson/massey.hpp"

namespace pjohnson::cli {

namespace {

constexpr int kCheckDMax = 4;

struct ContextFlags {
  std::uint32_t p = 3;
  int r = 2;
  int n = 6;
  CLI::Option* p_opt = nullptr;
  CLI::Option* r_opt = nullptr;
  CLI::Option* n_opt = nullptr;

  void attach(CLI::App& app) {
    p_opt = app.add_option("--p", p, "prime (default 3)");
    r_opt = app.add_option("--r", r, "rank (default 2)");
    n_opt = app.add_option("--N", n, "truncation order (default 6)");
  }

  // Flags win over defaults; a header that disagrees with an explicit flag is an error.
  GroupContext resolve(const ContextHeader& h, const std::string& source) const {
    auto pick = [&](auto flag, CLI::Option* opt, auto header, const char* name) {
      using T = decltype(flag);
      if (!header) return flag;
      if (opt->count() > 0 && static_cast<T>(*header) != flag) {
        throw UsageError(std::string("--") + name + " " + std::to_string(flag) + " conflicts with " +
                         name + "=" + std::to_string(*header) + " in " + source);
      }
      return static_cast<T>(*header);
    };
    return GroupContext(pick(p, p_opt, h.p, "p"), pick(r, r_opt, h.rank, "r"),
                        pick(n, n_opt, h.trunc, "N"));
  }

  GroupContext resolve() const { return GroupContext(p, r, n); }
};

struct EndoSource {
  std::string phi_path;
  std::string inner;

  void attach(CLI::App& app) {
    auto* a = app.add_option("--phi", phi_path, "automorphism file");
    auto* b = app.add_option("--inner", inner, "conjugating word for an inner automorphism");
    a->excludes(b);
    b->excludes(a);
  }

  GroupEndo load(const ContextFlags& flags) const {
    if (!phi_path.empty()) {
      AutomorphismSpec spec = parse_automorphism_text(read_text_file(phi_path));
      return build_endo(spec, flags.resolve(spec.header, phi_path));
    }
    if (!inner.empty()) {
      GroupContext ctx = flags.resolve();
      return GroupEndo::inner(ctx, parse_word(inner, ctx.rank));
    }
    throw UsageError("an automorphism is required: give --phi <file> or --inner <word>");
  }
};

// Each verb registers its options on `app` and returns the action to run after parsing.
using VerbSetup = std::function<std::function<void()>(CLI::App&, std::ostream&)>;

std::map<std::string, VerbSetup> verbs() {
  std::map<std::string, VerbSetup> v;

  v["expand"] = [](CLI::App& app, std::ostream& out) {
    auto flags = std::make_shared<ContextFlags>();
    auto word = std::make_shared<std::string>();
    flags->attach(app);
    app.add_option("word", *word, "free-group word")->required();
    return [=, &out] {
      GroupContext ctx = flags->resolve();
      out << to_string(magnus_embed(parse_word(*word, ctx.rank), ctx)) << '\n';
    };
  };

  v["eps"] = [](CLI::App& app, std::ostream& out) {
    auto flags = std::make_shared<ContextFlags>();
    auto mono = std::make_shared<std::string>();
    auto word = std::make_shared<std::string>();
    flags->attach(app);
    app.add_option("mono", *mono, "monomial, e.g. 12 or 1,2")->required();
    app.add_option("word", *word, "free-group word")->required();
    return [=, &out] {
      GroupContext ctx = flags->resolve();
      Monomial m = Monomial::parse(*mono, ctx.rank);
      out << magnus_coefficient(m, parse_word(*word, ctx.rank), ctx) << '\n';
    };
  };

  v["degree"] = [](CLI::App& app, std::ostream& out) {
    auto flags = std::make_shared<ContextFlags>();
    auto word = std::make_shared<std::string>();
    flags->attach(app);
    app.add_option("word", *word, "free-group word")->required();
    return [=, &out] {
      GroupContext ctx = flags->resolve();
      out << zassenhaus_degree(parse_word(*word, ctx.rank), ctx).to_string(ctx.trunc) << '\n';
    };
  };

  v["depth"] = [](CLI::App& app, std::ostream& out) {
    auto flags = std::make_shared<ContextFlags>();
    auto src = std::make_shared<EndoSource>();
    flags->attach(app);
    src->attach(app);
    return [=, &out] {
      GroupEndo phi = src->load(*flags);
      out << aj_depth(phi).to_string(phi.context().trunc) << '\n';
    };
  };

  auto table_verb = [](bool kawazumi) {
    return [kawazumi](CLI::App& app, std::ostream& out) -> std::function<void()> {
      auto flags = std::make_shared<ContextFlags>();
      auto src = std::make_shared<EndoSource>();
      auto m = std::make_shared<int>(0);
      auto json = std::make_shared<bool>(false);
      flags->attach(app);
      src->attach(app);
      app.add_option("--m", *m, "level m")->required();
      app.add_flag("--json", *json, "JSON lines");
      return [=, &out] {
        GroupEndo phi = src->load(*flags);
        JohnsonTable t = kawazumi ? johnson_map(phi, *m) : johnson_hom(phi, *m);
        out << (*json ? format_table_json(t) : format_table(t));
      };
    };
  };
  v["johnson"] = table_verb(false);
  v["jmap"] = table_verb(true);

  v["massey"] = [](CLI::App& app, std::ostream& out) {
    auto flags = std::make_shared<ContextFlags>();
    auto ds_path = std::make_shared<std::string>();
    auto word = std::make_shared<std::string>();
    flags->attach(app);
    app.add_option("--ds", *ds_path, "defining-system file")->required();
    app.add_option("relator", *word, "relator word")->required();
    return [=, &out] {
      GroupContext ctx = flags->resolve();
      ctx.require_odd_prime("Massey evaluation");
      DefiningSystem ds = parse_defining_system(read_text_file(*ds_path), ctx.field, ctx.rank);
      out << massey_eval(ds, parse_word(*word, ctx.rank)) << '\n';
    };
  };

  v["relators"] = [](CLI::App& app, std::ostream& out) {
    auto flags = std::make_shared<ContextFlags>();
    auto src = std::make_shared<EndoSource>();
    auto d = std::make_shared<int>(0);
    flags->attach(app);
    src->attach(app);
    app.add_option("--d", *d, "iterate exponent d (phi^(p^d))");
    return [=, &out] {
      GroupEndo phi = src->load(*flags);
      RelatorSet rs = build_relators(phi, *d);
      if (!rs.relators) {
        throw ResourceError("relator words exceed the word length guard");
      }
      out << "# " << phi.context().describe() << " d=" << *d << '\n';
      for (std::size_t j = 0; j < rs.relators->size(); ++j) {
        out << (j + 1) << '\t' << to_string((*rs.relators)[j]) << '\t'
            << to_string((*rs.reduced)[j]) << '\n';
      }
    };
  };

  v["check522"] = [](CLI::App& app, std::ostream& out) {
    auto flags = std::make_shared<ContextFlags>();
    auto src = std::make_shared<EndoSource>();
    auto d = std::make_shared<int>(0);
    flags->attach(app);
    src->attach(app);
    auto* d_opt = app.add_option("--d", *d, "iterate exponent d; all d <= 4 when omitted");
    return [=, &out] {
      GroupEndo phi = src->load(*flags);
      std::vector<RelatorCheckReport> all;
      int lo = d_opt->count() ? *d : 0;
      int hi = d_opt->count() ? *d : kCheckDMax;
      for (int k = lo; k <= hi; ++k) {
        auto grid = relator_check_grid(phi, k);
        all.insert(all.end(), grid.begin(), grid.end());
      }
      out << format_report_json(all);
    };
  };

  v["period"] = [](CLI::App& app, std::ostream& out) {
    auto flags = std::make_shared<ContextFlags>();
    auto degrees = std::make_shared<std::string>();
    flags->attach(app);
    app.add_option("--degrees", *degrees, "degree list like 2,3 or a degree file")->required();
    return [=, &out] {
      LambdaModuleDesc desc;
      if (std::filesystem::is_regular_file(*degrees)) {
        desc = parse_degree_file(read_text_file(*degrees));
        if (flags->p_opt->count() && desc.p != flags->p) {
          throw UsageError("--p " + std::to_string(flags->p) + " conflicts with p=" +
                           std::to_string(desc.p) + " in " + *degrees);
        }
      } else {
        desc.p = flags->p;
        desc.degrees = parse_degree_list(*degrees);
      }
      out << p_period(desc) << '\n';
    };
  };

  v["sequences"] = [](CLI::App& app, std::ostream& out) {
    auto flags = std::make_shared<ContextFlags>();
    auto src = std::make_shared<EndoSource>();
    auto m_max = std::make_shared<int>(0);
    auto d_max = std::make_shared<int>(kDefaultMonodromyDMax);
    auto json = std::make_shared<bool>(false);
    flags->attach(app);
    src->attach(app);
    auto* m_opt = app.add_option("--m", *m_max, "largest level m (default N-1)");
    app.add_option("--d", *d_max, "largest exponent d (default 4)");
    app.add_flag("--json", *json, "JSON lines");
    return [=, &out] {
      GroupEndo phi = src->load(*flags);
      const GroupContext& ctx = phi.context();
      int mm = m_opt->count() ? *m_max : ctx.trunc - 1;
      MonodromySequences s = monodromy_sequences(phi, mm, *d_max);
      out << (*json ? format_sequences_json(s, ctx) : format_sequences(s, ctx));
    };
  };

  return v;
}

std::string usage(const std::map<std::string, VerbSetup>& table) {
  std::string s = "usage: pjohnson <verb> [options]\nverbs:";
  for (const auto& [name, _] : table) s += " " + name;
  return s + "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  auto table = verbs();
  if (args.empty()) {
    err << usage(table);
    return 2;
  }
  if (args[0] == "--help" || args[0] == "-h") {
    out << usage(table);
    return 0;
  }
  auto it = table.find(args[0]);
  if (it == table.end()) {
    err << "error: unknown verb '" << args[0] << "'\n" << usage(table);
    return 2;
  }

  CLI::App app("pjohnson " + args[0], "pjohnson " + args[0]);
  std::ostringstream buffer;
  std::function<void()> action = it->second(app, buffer);
  std::vector<std::string> rest(args.rbegin(), args.rend() - 1);
  try {
    app.parse(rest);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  try {
    action();
  } catch (const ResourceError& e) {
    err << "error: " << e.what() << '\n';
    return 3;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return 1;
  }
  out << buffer.str();
  return 0;
}

}  // namespace pjohnson::cli
