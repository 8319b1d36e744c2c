#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "fg/burnside.hpp"
#include "fg/classes.hpp"
#include "fg/constructions.hpp"
#include "fg/errors.hpp"
#include "fg/io.hpp"
#include "fg/spectrum.hpp"

namespace fg {

namespace {

using nlohmann::json;
namespace fs = std::filesystem;

constexpr const char* kVersion = "fg-1";

struct Ctx {
  std::optional<ResultCache> cache;
  std::optional<fs::path> a7_cache;
  std::uint64_t cap = kDefaultEnumerationCap;
};

struct NamedGroup {
  std::string spec;  // "builtin:A5" or "file:/path"
  Group group;
};

NamedGroup load_group(const std::string& raw, bool force_builtin, bool force_file, Ctx& ctx) {
  if (!force_file && is_builtin_name(raw)) {
    Group g = *builtin_group(raw, ctx.a7_cache);
    return {"builtin:" + raw, Group(g.degree(), g.generators(), ctx.cap)};
  }
  if (force_builtin) throw UsageError("unknown builtin '" + raw + "'");
  Group g = read_group_file(raw);
  return {"file:" + raw, Group(g.degree(), g.generators(), ctx.cap)};
}

// ---- cached computations --------------------------------------------------

json order_eq_to_json(const OrderEquation& eq) {
  json counts = json::object();
  for (const auto& [n, c] : eq.counts) counts[std::to_string(n)] = c;
  return json{{"counts", counts}, {"total", eq.total}};
}

OrderEquation order_eq_from_json(const json& j) {
  OrderEquation eq;
  eq.total = j.at("total").get<std::uint64_t>();
  for (const auto& [k, v] : j.at("counts").items())
    eq.counts[std::stoull(k)] = v.get<std::uint64_t>();
  return eq;
}

OrderEquation cached_order_equation(Ctx& ctx, const Group& g) {
  std::string key;
  if (ctx.cache) {
    key = canonical_group_key(g) + "-ordereq";
    if (auto hit = ctx.cache->get(key)) return order_eq_from_json(json::parse(*hit));
  }
  OrderEquation eq = order_equation(g);
  if (ctx.cache) ctx.cache->put(key, order_eq_to_json(eq).dump());
  return eq;
}

json cyclic_table_to_json(const CyclicClassTable& t) {
  json rows = json::array();
  for (const CyclicClassRow& r : t.rows)
    rows.push_back(json{{"n", r.n},
                        {"representative", format_cycles(r.representative)},
                        {"class_size", r.class_size},
                        {"normalizer_order", r.normalizer_order}});
  return json{{"rows", rows}};
}

CyclicClassTable cyclic_table_from_json(const json& j, int degree) {
  CyclicClassTable t;
  for (const json& r : j.at("rows")) {
    CyclicClassRow row;
    row.n = r.at("n").get<std::uint64_t>();
    row.representative = parse_cycles(r.at("representative").get<std::string>(), degree);
    row.class_size = r.at("class_size").get<std::uint64_t>();
    row.normalizer_order = r.at("normalizer_order").get<std::uint64_t>();
    t.rows.push_back(std::move(row));
  }
  return t;
}

CyclicClassTable cached_cyclic_classes(Ctx& ctx, const Group& g) {
  std::string key;
  if (ctx.cache) {
    key = canonical_group_key(g) + "-cyclic";
    if (auto hit = ctx.cache->get(key)) return cyclic_table_from_json(json::parse(*hit), g.degree());
  }
  CyclicClassTable t = cyclic_subgroup_classes(g);
  if (ctx.cache) ctx.cache->put(key, cyclic_table_to_json(t).dump());
  return t;
}

json certificate_to_json(const SearchCertificate& c) {
  auto hist = [](const std::map<std::uint64_t, std::uint64_t>& m) {
    json h = json::object();
    for (const auto& [k, v] : m) h[std::to_string(k)] = v;
    return h;
  };
  return json{{"strategy", c.strategy},
              {"target", c.target},
              {"sylow_prime", c.sylow_prime},
              {"cofactor_prime", c.cofactor_prime},
              {"cofactor_exponent", c.cofactor_exponent},
              {"sylow_generators", c.sylow_generators},
              {"normalizer_order", c.normalizer_order},
              {"single_candidates", c.single_candidates},
              {"single_candidates_deduped", c.single_candidates_deduped},
              {"single_closure_orders", hist(c.single_closure_orders)},
              {"pair_closures", c.pair_closures},
              {"pair_closure_orders", hist(c.pair_closure_orders)},
              {"found", c.found}};
}

SearchCertificate certificate_from_json(const json& j) {
  SearchCertificate c;
  c.strategy = j.at("strategy").get<std::string>();
  c.target = j.at("target").get<std::uint64_t>();
  c.sylow_prime = j.at("sylow_prime").get<std::uint64_t>();
  c.cofactor_prime = j.at("cofactor_prime").get<std::uint64_t>();
  c.cofactor_exponent = j.at("cofactor_exponent").get<int>();
  c.sylow_generators = j.at("sylow_generators").get<std::vector<std::string>>();
  c.normalizer_order = j.at("normalizer_order").get<std::uint64_t>();
  c.single_candidates = j.at("single_candidates").get<std::uint64_t>();
  c.single_candidates_deduped = j.at("single_candidates_deduped").get<std::uint64_t>();
  for (const auto& [k, v] : j.at("single_closure_orders").items())
    c.single_closure_orders[std::stoull(k)] = v.get<std::uint64_t>();
  c.pair_closures = j.at("pair_closures").get<std::uint64_t>();
  for (const auto& [k, v] : j.at("pair_closure_orders").items())
    c.pair_closure_orders[std::stoull(k)] = v.get<std::uint64_t>();
  c.found = j.at("found").get<bool>();
  return c;
}

SubgroupSearchResult cached_find_subgroup(Ctx& ctx, const Group& g, std::uint64_t m) {
  std::string key;
  if (ctx.cache) {
    key = canonical_group_key(g) + "-find-" + std::to_string(m);
    if (auto hit = ctx.cache->get(key)) {
      const json j = json::parse(*hit);
      SubgroupSearchResult r;
      r.certificate = certificate_from_json(j.at("certificate"));
      r.solvable = j.at("solvable").get<bool>();
      if (j.at("found").get<bool>()) {
        std::vector<Perm> gens;
        for (const std::string& s : j.at("generators").get<std::vector<std::string>>())
          gens.push_back(parse_cycles(s, g.degree()));
        r.subgroup = subgroup_of(g, std::move(gens));
      }
      return r;
    }
  }
  SubgroupSearchResult r = find_subgroup_of_order(g, m);
  if (ctx.cache) {
    json j{{"found", r.subgroup.has_value()},
           {"solvable", r.solvable},
           {"certificate", certificate_to_json(r.certificate)}};
    std::vector<std::string> gens;
    if (r.subgroup)
      for (const Perm& p : r.subgroup->generators()) gens.push_back(format_cycles(p));
    j["generators"] = gens;
    ctx.cache->put(key, j.dump());
  }
  return r;
}

// ---- invariant assembly with caching --------------------------------------

BurnsideInvariant assemble_invariants(Ctx& ctx, const Group& g,
                                      const std::vector<std::uint64_t>& probes) {
  BurnsideInvariant inv;
  inv.group_order = g.order();
  inv.order_eq = cached_order_equation(ctx, g);
  for (const auto& [n, c] : inv.order_eq.counts) inv.spectrum.insert(n);
  for (const CyclicClassRow& row : cached_cyclic_classes(ctx, g).rows)
    inv.cyclic_class_multiset.emplace(row.n, row.class_size);
  if (inv.group_order <= kDefaultLatticeCap) {
    ClassMultiset solvable, nilpotent;
    for (const SubgroupClassRow& row : subgroup_lattice(g)) {
      if (row.is_solvable) solvable.emplace(row.order, row.class_size);
      if (row.is_nilpotent) nilpotent.emplace(row.order, row.class_size);
    }
    inv.solvable_classes = std::move(solvable);
    inv.nilpotent_classes = std::move(nilpotent);
  }
  for (std::uint64_t m : probes) {
    const SubgroupSearchResult r = cached_find_subgroup(ctx, g, m);
    inv.probes[m] = !r.subgroup  ? ProbeResult::Absent
                    : r.solvable ? ProbeResult::FoundSolvable
                                 : ProbeResult::FoundNonsolvable;
  }
  return inv;
}

// ---- report emission ------------------------------------------------------

struct Report {
  json body;
  std::string text;
};

void emit(const Report& report, const std::optional<fs::path>& json_path, std::ostream& out) {
  out << report.text;
  if (json_path) {
    std::ofstream f(*json_path);
    if (!f) throw Error("cannot write " + json_path->string());
    f << report.body.dump(2) << "\n";
  }
}

json make_body(const std::string& command, const std::vector<std::string>& inputs, json results) {
  return json{{"command", command}, {"inputs", inputs}, {"results", std::move(results)},
              {"version", kVersion}};
}

std::string describe_verdict(const TypeVerdict& v) {
  if (v.equal) return "equal";
  std::ostringstream out;
  out << "not equal";
  if (v.order_type_witness)
    out << " (least d=" << v.order_type_witness->d << ": " << v.order_type_witness->count_a
        << " vs " << v.order_type_witness->count_b << ")";
  if (v.total_witness)
    out << " (orders " << v.total_witness->first << " vs " << v.total_witness->second << ")";
  if (v.spectrum_witness) {
    out << " (element orders only in A:";
    for (std::uint64_t n : v.spectrum_witness->first) out << " " << n;
    out << "; only in B:";
    for (std::uint64_t n : v.spectrum_witness->second) out << " " << n;
    out << ")";
  }
  return out.str();
}

json verdict_to_json(const TypeVerdict& v) {
  json j{{"equal", v.equal}};
  if (v.order_type_witness)
    j["witness"] = json{{"d", v.order_type_witness->d},
                        {"count_a", v.order_type_witness->count_a},
                        {"count_b", v.order_type_witness->count_b}};
  if (v.total_witness)
    j["order_witness"] = json{{"a", v.total_witness->first}, {"b", v.total_witness->second}};
  if (v.spectrum_witness)
    j["spectrum_witness"] = json{{"only_in_a", v.spectrum_witness->first},
                                 {"only_in_b", v.spectrum_witness->second}};
  return j;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"finite-group order-equation and Burnside-invariant toolkit"};
  app.require_subcommand(1);

  std::optional<std::string> json_path_raw;
  std::optional<std::string> cache_dir_raw;
  bool no_cache = false;
  std::uint64_t cap = kDefaultEnumerationCap;
  app.add_option("--json", json_path_raw, "write the JSON report to this path")->expected(1);
  app.add_option("--cache-dir", cache_dir_raw, "result cache directory")->expected(1);
  app.add_flag("--no-cache", no_cache, "disable the result cache");
  app.add_option("--cap", cap, "enumeration cap (elements)");

  struct SubArgs {
    std::vector<std::string> positional;
    std::vector<std::string> builtins;
    std::vector<std::string> files;
  };

  auto add_group_opts = [](CLI::App* sub, SubArgs& sa, int count) {
    sub->add_option("group", sa.positional, "builtin name or group file path")
        ->expected(0, count);
    sub->add_option("--builtin", sa.builtins, "builtin group name");
    sub->add_option("--file", sa.files, "group file path");
  };

  SubArgs spectrum_args, ordereq_args, ordertype_args, twoorders_args, cyclic_args, verify_args,
      find_args, lattice_args, marks_args, burnside_args;
  std::uint64_t find_order = 0;
  std::vector<std::uint64_t> probe_orders;
  std::string construct_name, construct_out;

  CLI::App* c_spectrum = app.add_subcommand("spectrum", "set of element orders");
  add_group_opts(c_spectrum, spectrum_args, 1);
  CLI::App* c_ordereq = app.add_subcommand("order-eq", "order equation");
  add_group_opts(c_ordereq, ordereq_args, 1);
  CLI::App* c_ordertype = app.add_subcommand("order-type", "same order type comparison");
  add_group_opts(c_ordertype, ordertype_args, 2);
  CLI::App* c_twoorders = app.add_subcommand("two-orders", "same two orders type comparison");
  add_group_opts(c_twoorders, twoorders_args, 2);
  CLI::App* c_cyclic = app.add_subcommand("cyclic-classes", "conjugacy classes of cyclic subgroups");
  add_group_opts(c_cyclic, cyclic_args, 1);
  CLI::App* c_verify = app.add_subcommand("verify-t8", "cyclic class counting identity check");
  add_group_opts(c_verify, verify_args, 1);
  CLI::App* c_find = app.add_subcommand("find-subgroup", "exhaustive subgroup-of-order search");
  add_group_opts(c_find, find_args, 1);
  c_find->add_option("--order", find_order, "target subgroup order")->required();
  CLI::App* c_lattice = app.add_subcommand("lattice", "subgroup classes (small groups)");
  add_group_opts(c_lattice, lattice_args, 1);
  CLI::App* c_marks = app.add_subcommand("marks", "table of marks (small groups)");
  add_group_opts(c_marks, marks_args, 1);
  CLI::App* c_burnside = app.add_subcommand("burnside-check", "Burnside-ring obstruction report");
  add_group_opts(c_burnside, burnside_args, 2);
  c_burnside->add_option("--probe", probe_orders, "subgroup order to probe in both groups");
  CLI::App* c_construct = app.add_subcommand("construct", "write a builtin group to a file");
  c_construct->add_option("builtin", construct_name, "builtin group name")->required();
  c_construct->add_option("-o,--output", construct_out, "output path")->required();

  std::vector<const char*> argv;
  argv.push_back("fg");
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      out << app.help();
      return 0;
    }
    err << "usage error: " << e.what() << "\n";
    return 1;
  }

  try {
    Ctx ctx;
    ctx.cap = cap;
    if (!no_cache) {
      fs::path dir;
      if (cache_dir_raw) {
        dir = *cache_dir_raw;
      } else if (const char* env = std::getenv("FG_CACHE_DIR")) {
        dir = env;
      } else if (const char* home = std::getenv("HOME")) {
        dir = fs::path(home) / ".cache" / "fg";
      } else {
        dir = ".fg-cache";
      }
      ctx.cache.emplace(dir);
      ctx.a7_cache = dir / "a7-gl42.txt";
    }
    std::optional<fs::path> json_path;
    if (json_path_raw) json_path = *json_path_raw;

    auto load_all = [&](const SubArgs& sa, std::size_t want) {
      std::vector<NamedGroup> gs;
      for (const std::string& s : sa.positional) gs.push_back(load_group(s, false, false, ctx));
      for (const std::string& s : sa.builtins) gs.push_back(load_group(s, true, false, ctx));
      for (const std::string& s : sa.files) gs.push_back(load_group(s, false, true, ctx));
      if (gs.size() != want)
        throw UsageError("expected " + std::to_string(want) + " group(s), got " +
                         std::to_string(gs.size()));
      return gs;
    };
    auto input_names = [](const std::vector<NamedGroup>& gs) {
      std::vector<std::string> names;
      for (const NamedGroup& g : gs) names.push_back(g.spec);
      return names;
    };

    if (*c_spectrum) {
      auto gs = load_all(spectrum_args, 1);
      const OrderEquation eq = cached_order_equation(ctx, gs[0].group);
      std::vector<std::uint64_t> orders;
      for (const auto& [n, c] : eq.counts) orders.push_back(n);
      std::ostringstream text;
      text << "group order: " << eq.total << "\nspectrum:";
      for (std::uint64_t n : orders) text << " " << n;
      text << "\n";
      emit({make_body("spectrum", input_names(gs),
                      json{{"order", eq.total}, {"spectrum", orders}}),
            text.str()},
           json_path, out);
      return 0;
    }

    if (*c_ordereq) {
      auto gs = load_all(ordereq_args, 1);
      const OrderEquation eq = cached_order_equation(ctx, gs[0].group);
      std::ostringstream text;
      text << "group order: " << eq.total << "\norder equation:";
      for (const auto& [n, c] : eq.counts) text << " " << n << ":" << c;
      text << "\n";
      emit({make_body("order-eq", input_names(gs), order_eq_to_json(eq)), text.str()}, json_path,
           out);
      return 0;
    }

    if (*c_ordertype || *c_twoorders) {
      const bool order_type = static_cast<bool>(*c_ordertype);
      auto gs = load_all(order_type ? ordertype_args : twoorders_args, 2);
      TypeVerdict v;
      if (order_type) {
        v = same_order_type(cached_order_equation(ctx, gs[0].group),
                            cached_order_equation(ctx, gs[1].group));
      } else {
        v = same_two_orders_type(gs[0].group, gs[1].group);
      }
      std::ostringstream text;
      text << "verdict: " << describe_verdict(v) << "\n";
      emit({make_body(order_type ? "order-type" : "two-orders", input_names(gs),
                      verdict_to_json(v)),
            text.str()},
           json_path, out);
      return v.equal ? 0 : 2;
    }

    if (*c_cyclic) {
      auto gs = load_all(cyclic_args, 1);
      const CyclicClassTable t = cached_cyclic_classes(ctx, gs[0].group);
      std::ostringstream text;
      for (const CyclicClassRow& r : t.rows)
        text << "n=" << r.n << " class_size=" << r.class_size
             << " normalizer_order=" << r.normalizer_order
             << " rep=" << format_cycles(r.representative) << "\n";
      emit({make_body("cyclic-classes", input_names(gs), cyclic_table_to_json(t)), text.str()},
           json_path, out);
      return 0;
    }

    if (*c_verify) {
      auto gs = load_all(verify_args, 1);
      const CountIdentityReport r = verify_cyclic_count_identity(
          cached_cyclic_classes(ctx, gs[0].group), cached_order_equation(ctx, gs[0].group));
      std::ostringstream text;
      json rows = json::array();
      for (const CountIdentityRow& row : r.rows) {
        text << "n=" << row.n << " lhs=" << row.lhs << " rhs=" << row.rhs
             << (row.ok ? " ok" : " MISMATCH") << "\n";
        rows.push_back(json{{"n", row.n}, {"lhs", row.lhs}, {"rhs", row.rhs}, {"ok", row.ok}});
      }
      text << (r.all_ok ? "identity holds for every n\n" : "identity FAILED\n");
      emit({make_body("verify-t8", input_names(gs), json{{"rows", rows}, {"all_ok", r.all_ok}}),
            text.str()},
           json_path, out);
      return 0;
    }

    if (*c_find) {
      auto gs = load_all(find_args, 1);
      const SubgroupSearchResult r = cached_find_subgroup(ctx, gs[0].group, find_order);
      std::ostringstream text;
      json results{{"order", find_order}, {"found", r.subgroup.has_value()},
                   {"certificate", certificate_to_json(r.certificate)}};
      if (r.subgroup) {
        std::vector<std::string> gens;
        for (const Perm& p : r.subgroup->generators()) gens.push_back(format_cycles(p));
        results["generators"] = gens;
        results["solvable"] = r.solvable;
        text << "found subgroup of order " << find_order << " (solvable: "
             << (r.solvable ? "yes" : "no") << ")\ngenerators:";
        for (const std::string& s : gens) text << " " << s;
        text << "\n";
      } else {
        std::uint64_t singles = 0;
        for (const auto& [o, c] : r.certificate.single_closure_orders) singles += c;
        text << "NONE: no subgroup of order " << find_order << " (strategy "
             << r.certificate.strategy << ", " << singles << " single closures, "
             << r.certificate.pair_closures << " pair closures)\n";
      }
      emit({make_body("find-subgroup", input_names(gs), std::move(results)), text.str()},
           json_path, out);
      return 0;
    }

    if (*c_lattice) {
      auto gs = load_all(lattice_args, 1);
      const std::vector<SubgroupClassRow> rows = subgroup_lattice(gs[0].group);
      std::ostringstream text;
      json jrows = json::array();
      std::uint64_t total = 0;
      for (const SubgroupClassRow& r : rows) {
        total += r.class_size;
        std::vector<std::string> gens;
        for (const Perm& p : r.representative_gens) gens.push_back(format_cycles(p));
        text << "order=" << r.order << " class_size=" << r.class_size
             << (r.is_cyclic ? " cyclic" : "") << (r.is_nilpotent ? " nilpotent" : "")
             << (r.is_solvable ? " solvable" : "") << " rep=<";
        for (std::size_t i = 0; i < gens.size(); ++i) text << (i ? "," : "") << gens[i];
        text << ">\n";
        jrows.push_back(json{{"order", r.order},
                             {"class_size", r.class_size},
                             {"is_cyclic", r.is_cyclic},
                             {"is_nilpotent", r.is_nilpotent},
                             {"is_solvable", r.is_solvable},
                             {"representative", gens}});
      }
      text << rows.size() << " classes, " << total << " subgroups\n";
      emit({make_body("lattice", input_names(gs),
                      json{{"rows", jrows}, {"class_count", rows.size()},
                           {"subgroup_count", total}}),
            text.str()},
           json_path, out);
      return 0;
    }

    if (*c_marks) {
      auto gs = load_all(marks_args, 1);
      const MarksTable t = table_of_marks(gs[0].group);
      std::ostringstream text;
      json jclasses = json::array();
      for (const SubgroupClassRow& r : t.classes)
        jclasses.push_back(json{{"order", r.order}, {"class_size", r.class_size}});
      for (std::size_t i = 0; i < t.marks.size(); ++i) {
        text << "[" << t.classes[i].order << "]";
        for (std::uint64_t v : t.marks[i]) text << " " << v;
        text << "\n";
      }
      emit({make_body("marks", input_names(gs), json{{"classes", jclasses}, {"marks", t.marks}}),
            text.str()},
           json_path, out);
      return 0;
    }

    if (*c_burnside) {
      auto gs = load_all(burnside_args, 2);
      const ObstructionReport rep =
          compare_invariants(assemble_invariants(ctx, gs[0].group, probe_orders),
                             assemble_invariants(ctx, gs[1].group, probe_orders));
      std::ostringstream text;
      text << "verdict: " << (rep.obstructed ? "OBSTRUCTED" : "COMPATIBLE") << "\n";
      json jwitnesses = json::array();
      for (const ObstructionWitness& w : rep.witnesses) {
        text << "  " << w.check << ": " << w.detail << "\n";
        jwitnesses.push_back(json{{"check", w.check}, {"detail", w.detail}});
      }
      if (!rep.obstructed)
        text << "(all implemented necessary conditions passed; this does not assert a ring "
                "isomorphism)\n";
      emit({make_body("burnside-check", input_names(gs),
                      json{{"obstructed", rep.obstructed}, {"witnesses", jwitnesses}}),
            text.str()},
           json_path, out);
      return rep.obstructed ? 2 : 0;
    }

    if (*c_construct) {
      if (!is_builtin_name(construct_name))
        throw UsageError("unknown builtin '" + construct_name + "'");
      Group g = *builtin_group(construct_name, ctx.a7_cache);
      write_group_file(construct_out, g);
      std::ostringstream text;
      text << "wrote " << construct_out << " (degree " << g.degree() << ", order " << g.order()
           << ")\n";
      emit({make_body("construct", {"builtin:" + construct_name},
                      json{{"path", construct_out}, {"degree", g.degree()}, {"order", g.order()}}),
            text.str()},
           json_path, out);
      return 0;
    }

    throw UsageError("no command given");
  } catch (const Error& e) {
    err << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace fg
