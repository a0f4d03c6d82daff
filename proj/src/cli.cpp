#include "dcmp/cli.hpp"

#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "dcmp/axioms.hpp"
#include "dcmp/builders.hpp"
#include "dcmp/coalgebra.hpp"
#include "dcmp/intervals.hpp"
#include "dcmp/io.hpp"
#include "dcmp/universal.hpp"

namespace dcmp {

namespace {

struct Reporter {
  std::ostream& out;
  bool as_json;
  json reports = json::array();
  bool pass = true;

  void add(const AxiomReport& r) {
    pass = pass && r.pass;
    if (as_json) {
      reports.push_back(to_json(r));
      return;
    }
    out << r.summary() << "\n";
  }
  int finish(json extra = {}) {
    if (as_json) {
      json j = extra.is_null() ? json::object() : extra;
      j["reports"] = reports;
      j["verdict"] = pass ? "pass" : "fail";
      out << dump_canonical(j);
    }
    return pass ? 0 : 1;
  }
};

json terms_json(const Coalgebra& C, CellIndex f) {
  const auto& X = C.space();
  json arr = json::array();
  for (const auto& t : C.comult(f)) arr.push_back({{"left", X.name(1, t.left)}, {"right", X.name(1, t.right)}, {"mult", t.mult}});
  return arr;
}

void print_terms(std::ostream& out, const Coalgebra& C, CellIndex f) {
  const auto& X = C.space();
  const auto& terms = C.comult(f);
  out << "delta(" << X.name(1, f) << "): " << terms.size() << " term" << (terms.size() == 1 ? "" : "s") << "\n";
  for (const auto& t : terms)
    out << "  " << t.mult << " * " << X.name(1, t.left) << " (x) " << X.name(1, t.right) << "\n";
}

}  // namespace

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"dcmp: decomposition sets, incidence coalgebras and intervals"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "machine-readable output");

  std::string input, output, axiom = "all", element, verify, at, edge, src, dst, map_path, kind;
  int dim = 3, maxdeg = 2;
  bool table = false;

  auto* check = app.add_subcommand("check", "check simplicial and decomposition axioms");
  check->add_option("sset", input, "simplicial set JSON")->required();
  check->add_option("--axiom", axiom)->check(
      CLI::IsMember({"simplicial", "segal", "decomposition", "complete", "unital", "all"}));

  auto* build = app.add_subcommand("build", "build a nerve from a poset, category, monoid or tree file");
  build->add_option("kind", kind)->required()->check(CLI::IsMember({"poset", "category", "monoid", "rpt"}));
  build->add_option("input", input)->required();
  build->add_option("--dim", dim)->required()->check(CLI::Range(0, 12));
  build->add_option("-o,--output", output)->required();

  auto* coal = app.add_subcommand("coalgebra", "incidence comultiplication");
  coal->add_option("sset", input)->required();
  auto* el = coal->add_option("--element", element);
  auto* tb = coal->add_flag("--table", table);
  el->excludes(tb);
  coal->add_option("--verify", verify)->check(CLI::IsMember({"coassoc", "counit"}));

  auto* moeb = app.add_subcommand("moebius", "Moebius function");
  moeb->add_option("sset", input)->required();
  moeb->add_option("--at", at);

  auto* intv = app.add_subcommand("interval", "interval of an edge");
  intv->add_option("sset", input)->required();
  intv->add_option("--edge", edge)->required();
  intv->add_option("-o,--output", output)->required();

  auto* fact = app.add_subcommand("factorize", "stretched / CULF factorisation of an interval map");
  fact->add_option("--src", src)->required();
  fact->add_option("--dst", dst)->required();
  fact->add_option("--map", map_path)->required();
  fact->add_option("-o,--output", output);

  auto* univ = app.add_subcommand("universal", "build and verify the local universal groupoid");
  univ->add_option("sset", input)->required();
  univ->add_option("--maxdeg", maxdeg)->required()->check(CLI::Range(0, 10));
  univ->add_option("--verify", verify)->default_val("all")->check(
      CLI::IsMember({"strict", "decomposition", "complete", "classifying", "modifications", "all"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  Reporter rep{out, as_json};
  try {
    if (*check) {
      TruncSSet X = sset_from_json(read_json_file(input));
      auto want = [&](const char* a) { return axiom == a || axiom == "all"; };
      if (want("simplicial")) {
        auto r = validate_simplicial(X);
        rep.add(r);
        if (!r.pass) return rep.finish();
      }
      if (want("segal")) rep.add(is_segal(X));
      if (want("decomposition")) rep.add(is_decomposition(X));
      if (want("complete")) rep.add(is_complete(X));
      if (want("unital")) {
        rep.add(check_unital(X, Side::Upper));
        rep.add(check_unital(X, Side::Lower));
      }
      return rep.finish();
    }
    if (*build) {
      TruncSSet X;
      if (kind == "poset") X = poset_nerve(poset_from_json(read_json_file(input)), dim);
      else if (kind == "category") X = category_nerve(category_from_json(read_json_file(input)), dim);
      else if (kind == "monoid") X = monoid_nerve(monoid_from_json(read_json_file(input)), dim);
      else X = rpt_from_forests(read_forest_file(input), dim);
      save_sset(X, output);
      if (as_json) {
        json j{{"output", output}, {"dim", dim}};
        json counts = json::array();
        for (int k = 0; k <= dim; ++k) counts.push_back(X.size(k));
        j["cells"] = counts;
        out << dump_canonical(j);
      } else {
        out << "wrote " << output << " (";
        for (int k = 0; k <= dim; ++k) out << (k ? ", " : "") << X.size(k);
        out << " cells)\n";
      }
      return 0;
    }
    if (*coal) {
      TruncSSet X = load_sset(input);
      if (X.dim() < 2) throw InputError("coalgebra needs dim >= 2");
      Coalgebra C(X);
      json extra = json::object();
      if (!element.empty()) {
        CellIndex f = X.at(1, element);
        if (as_json) extra["delta"] = {{element, terms_json(C, f)}};
        else print_terms(out, C, f);
      } else if (table) {
        json t = json::object();
        for (CellIndex f = 0; f < static_cast<CellIndex>(X.size(1)); ++f) {
          if (as_json) t[X.name(1, f)] = terms_json(C, f);
          else print_terms(out, C, f);
        }
        if (as_json) extra["delta"] = t;
      }
      if (verify == "coassoc") rep.add(C.coassoc_check());
      if (verify == "counit") rep.add(C.counit_check());
      return rep.finish(extra);
    }
    if (*moeb) {
      TruncSSet X = load_sset(input);
      if (X.dim() < 2) throw InputError("moebius needs dim >= 2");
      if (!is_decomposition(X).pass || !is_complete(X).pass)
        throw InputError("moebius needs a complete decomposition set");
      Coalgebra C(X);
      Functional mu;
      try {
        mu = C.moebius();
      } catch (const InvariantError& e) {
        throw InputError(e.what());
      }
      json values = json::object();
      if (!at.empty()) {
        CellIndex f = X.at(1, at);
        values[at] = to_string(mu[f]);
        if (!as_json) out << "mu(" << at << ") = " << to_string(mu[f]) << "\n";
      } else {
        for (CellIndex f = 0; f < static_cast<CellIndex>(X.size(1)); ++f) {
          values[X.name(1, f)] = to_string(mu[f]);
          if (!as_json) out << "mu(" << X.name(1, f) << ") = " << to_string(mu[f]) << "\n";
        }
      }
      rep.add(C.moebius_check(mu));
      return rep.finish({{"moebius", values}});
    }
    if (*intv) {
      TruncSSet X = load_sset(input);
      if (!is_decomposition(X).pass) throw InputError("interval needs a decomposition set");
      if (X.dim() < 3) throw InputError("interval needs dim >= 3");
      auto I = interval_of(X, X.at(1, edge));
      write_text_file(output, dump_canonical(to_json(I.interval)));
      rep.add(I.interval.validate());
      rep.add(is_culf(I.M));
      if (!as_json) out << "wrote " << output << "\n";
      return rep.finish({{"output", output}});
    }
    if (*fact) {
      Interval C = interval_from_json(read_json_file(src));
      Interval D = interval_from_json(read_json_file(dst));
      SimpMap F = map_from_json(read_json_file(map_path), C.X(), D.X());
      auto res = factorize(F, C);
      rep.add(res.report);
      if (!output.empty())
        write_text_file(output, dump_canonical({{"middle", to_json(res.middle.interval)}, {"S", map_to_json(res.S)}}));
      return rep.finish();
    }
    if (*univ) {
      TruncSSet X = load_sset(input);
      UXGroupoid U(X, maxdeg);
      auto want = [&](const char* a) { return verify == a || verify == "all"; };
      json levels = json::array();
      for (int n = 0; n <= maxdeg; ++n)
        levels.push_back({{"level", n}, {"objects", U.object_count(n)}, {"morphisms", U.morphisms(n).size()}});
      if (!as_json)
        for (int n = 0; n <= maxdeg; ++n)
          out << "level " << n << ": " << U.object_count(n) << " objects, " << U.morphisms(n).size() << " morphisms\n";
      if (want("strict")) {
        rep.add(check_strict(U));
        rep.add(check_objects(U));
        rep.add(check_all_active(U));
      }
      if (want("decomposition")) rep.add(check_decomposition_grpd(U));
      if (want("complete")) rep.add(check_complete_grpd(U));
      if (want("classifying")) rep.add(classifying_map(U));
      json extra{{"levels", levels}, {"maxdeg", maxdeg}};
      if (want("modifications")) {
        if (maxdeg < 3 && !as_json) out << "note: maxdeg < 3, modification count may be a truncation artifact\n";
        auto mods = enumerate_modifications(U);
        bool identity_only = mods.found.size() == 1 && mods.found[0].identity;
        AxiomReport r("modifications");
        r.touch(maxdeg);
        if (!identity_only) {
          for (const auto& m : mods.found)
            if (!m.identity)
              for (int n = 0; n <= maxdeg; ++n)
                for (CellIndex l = 0; l < static_cast<CellIndex>(m.gamma[n].size()); ++l)
                  if (m.gamma[n][l] != U.identity(n, l)) {
                    r.fail("non-identity", "nontrivial component at '" + X.name(n, l) + "'");
                    n = maxdeg + 1;
                    break;
                  }
          if (mods.found.empty()) r.fail("count", "no modification found");
        }
        if (!as_json) {
          out << "modifications found: " << mods.found.size() << (mods.truncated ? "+" : "");
          if (identity_only) out << " (identity)";
          out << "\n";
        }
        extra["modifications"] = {{"count", mods.found.size()}, {"identityOnly", identity_only}, {"truncated", mods.truncated}};
        rep.add(r);
      }
      return rep.finish(extra);
    }
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return 2;
  } catch (const InvariantError& e) {
    err << "invariant violated: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

int run(int argc, char** argv) { return run(argc, argv, std::cout, std::cerr); }

}  // namespace dcmp
