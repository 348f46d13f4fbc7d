#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "treesec/treesec.hpp"

namespace ts = treesec;

namespace {

std::string edge_names(const ts::RootedTree& tree, const ts::Attack& a) {
  if (a.edges.empty()) return "-";
  std::string out;
  for (size_t i = 0; i < a.edges.size(); ++i) {
    if (i) out += ' ';
    out += tree.name(a.edges[i]);
  }
  return out;
}

template <class Vec>
std::string assignment_line(const ts::RootedTree& tree, const Vec& values) {
  std::string out;
  for (int v = 1; v <= tree.size(); ++v) {
    if (v > 1) out += ' ';
    out += tree.name(v) + "=" + ts::format_rational(values[v]);
  }
  return out;
}

std::string map_path(const std::string& out) {
  const std::string suffix = ".json";
  if (out.size() > suffix.size() && out.ends_with(suffix))
    return out.substr(0, out.size() - suffix.size()) + ".map.json";
  return out + ".map.json";
}

void write_json_file(const nlohmann::json& j, const std::string& path) {
  std::ofstream os(path);
  if (!os) throw ts::ParseError("cannot write " + path);
  os << j.dump(2) << '\n';
}

void emit_result(const ts::Document& doc, const std::string& out) {
  if (out.empty())
    std::cout << ts::write_document(doc);
  else
    ts::write_document_file(doc, out);
}

int run_maxp(const std::string& file, const std::string& budget, bool profile, int max_n) {
  if (budget.empty() == !profile) {
    std::cerr << "error: pass exactly one of --budget and --profile\n";
    return 2;
  }
  ts::SecuritySystem ss = ts::document_ss(ts::read_document(file));
  ts::SolverLimits limits;
  limits.max_enum_n = max_n;
  if (profile) {
    const ts::MaxPrizeProfile prof = ts::maxp_profile(ss, limits);
    for (const auto& pt : prof.points())
      std::cout << ts::format_rational(pt.threshold) << '\t' << ts::format_rational(pt.value) << '\t'
                << (pt.witness ? edge_names(ss.tree, *pt.witness) : "-") << '\n';
    return 0;
  }
  ts::MaxPrizeResult r = ts::solve_maxp(ss, ts::parse_rational(budget), limits);
  std::cout << ts::format_rational(r.value) << '\n';
  std::cout << "attack: " << edge_names(ss.tree, r.witness) << '\n';
  return 0;
}

int run_classify(const std::string& file) {
  const ts::RootedTree tree = ts::read_document(file).tree;
  const ts::TreeClass cls = ts::classify(tree);
  std::cout << ts::tree_tag_name(cls.tag);
  if (cls.tag == ts::TreeTag::Rooted3Caterpillar || cls.tag == ts::TreeTag::Rooted4Spider)
    std::cout << " k=" << cls.k;
  std::cout << '\n';
  if (cls.recognized()) {
    std::cout << "relabeling:";
    for (int i = 1; i <= tree.size(); ++i) std::cout << ' ' << tree.name(cls.canonical_to_input[i]);
    std::cout << '\n';
  }
  for (ts::Pattern p : {ts::Pattern::T2, ts::Pattern::T3}) {
    std::cout << "contains " << (p == ts::Pattern::T2 ? "T2" : "T3") << ": ";
    if (auto phi = ts::contains_rooted_pattern(tree, p)) {
      std::cout << "yes (";
      for (size_t i = 1; i < phi->size(); ++i) {
        if (i > 1) std::cout << ' ';
        std::cout << tree.name((*phi)[i]);
      }
      std::cout << ")\n";
    } else {
      std::cout << "no\n";
    }
  }
  return 0;
}

int run_build_ss(const std::string& file, const std::string& mode, const std::string& out) {
  const ts::Model model = ts::document_model(ts::read_document(file));
  auto build = [&]() -> ts::SecuritySystem {
    if (mode == "good") return ts::good_ss(model);
    switch (ts::classify(model.tree).tag) {
      case ts::TreeTag::RootedPath:
        return ts::optimal_ss_path(model);
      case ts::TreeTag::RootedStar:
        return ts::optimal_ss_star(model);
      case ts::TreeTag::Rooted3Caterpillar:
        if (model.unit_costs()) return ts::optimal_ss_caterpillar_p(model);
        if (model.unit_prizes()) return ts::optimal_ss_caterpillar_c(model);
        throw ts::NotUnitCost("a 3-caterpillar needs unit costs or unit prizes; try check-optimal");
      case ts::TreeTag::Rooted4Spider:
        if (model.unit_costs()) return ts::optimal_ss_spider_p(model);
        if (model.unit_prizes()) return ts::optimal_ss_spider_c(model);
        throw ts::NotUnitCost("a 4-spider needs unit costs or unit prizes; try check-optimal");
      default:
        throw ts::WrongTreeClass("no constructor; try check-optimal");
    }
  };
  emit_result(ts::document_of(build()), out);
  return 0;
}

int run_check_optimal(const std::string& file, int max_n, int jobs) {
  const ts::Model model = ts::document_model(ts::read_document(file));
  ts::OracleOptions opts;
  opts.max_assign_n = max_n;
  opts.jobs = jobs;
  const ts::OptimalityVerdict v = ts::find_optimal_ss(model, opts);
  if (v.status == ts::OptimalityStatus::InconclusiveGuard) {
    std::cerr << "error: model has " << model.tree.size()
              << " non-root vertices, assignment guard is " << max_n << " (raise --max-n)\n";
    return 3;
  }
  const ts::RootedTree& tree = model.tree;
  if (v.status == ts::OptimalityStatus::OptimalExists) {
    std::cout << "optimal-exists\n";
    std::cout << "costs: " << assignment_line(tree, v.witness->costs) << '\n';
    std::cout << "prizes: " << assignment_line(tree, v.witness->prizes) << '\n';
    return 0;
  }
  std::cout << "no-optimal; budgets " << ts::format_rational(v.counter->first_better_at) << " and "
            << ts::format_rational(v.counter->second_better_at) << '\n';
  std::cout << "first costs: " << assignment_line(tree, v.counter->first.costs) << '\n';
  std::cout << "first prizes: " << assignment_line(tree, v.counter->first.prizes) << '\n';
  std::cout << "second costs: " << assignment_line(tree, v.counter->second.costs) << '\n';
  std::cout << "second prizes: " << assignment_line(tree, v.counter->second.prizes) << '\n';
  return 0;
}

nlohmann::json name_map(const ts::RootedTree& from, const ts::RootedTree& to,
                        const std::vector<int>& map) {
  nlohmann::json obj = nlohmann::json::object();
  for (int v = 1; v < from.vertex_count(); ++v) obj[from.name(v)] = to.name(map[v]);
  return obj;
}

int run_to_p(const std::string& file, const std::string& out) {
  ts::SecuritySystem ss = ts::document_ss(ts::read_document(file));
  ts::PModelResult r = ts::to_pmodel(ss);
  emit_result(ts::document_of(r.ss), out);
  if (!out.empty()) {
    nlohmann::json m;
    m["vertices"] = name_map(ss.tree, r.ss.tree, r.vertex_map);
    write_json_file(m, map_path(out));
  }
  return 0;
}

int run_to_c(const std::string& file, const std::string& out) {
  ts::SecuritySystem ss = ts::document_ss(ts::read_document(file));
  ts::CModelResult r = ts::to_cmodel(ss);
  emit_result(ts::document_of(r.ss), out);
  if (!out.empty()) {
    nlohmann::json m;
    m["vertices"] = name_map(ss.tree, r.ss.tree, r.vertex_map);
    m["edges"] = name_map(ss.tree, r.ss.tree, r.edge_map);
    write_json_file(m, map_path(out));
  }
  return 0;
}

int run_dual(const std::string& file, const std::string& out) {
  ts::SecuritySystem ss = ts::document_ss(ts::read_document(file));
  auto [dual, map] = [&]() -> std::pair<ts::SecuritySystem, ts::AffineMap> {
    if (ss.unit_costs()) {
      ts::ScaledPrizes sp = ts::scale_prizes(ss.prizes);
      return {ts::dual_p_to_c(ts::SecuritySystem(ss.tree, ss.costs, sp.prizes)), sp.map};
    }
    if (ss.unit_prizes()) {
      ts::Rational mx = 0;
      for (const ts::Rational& c : ss.costs.values()) mx = std::max(mx, c);
      ts::AffineMap scaling = mx == 0 ? ts::AffineMap::identity() : ts::AffineMap(1 / mx, 0);
      return {ts::dual_c_to_p(ss), scaling};
    }
    throw ts::NotUnitCost("dualizing needs unit costs or unit prizes");
  }();
  emit_result(ts::document_of(dual), out);
  if (!out.empty()) {
    nlohmann::json m;
    m["a"] = ts::detail::rational_json(map.a);
    m["b"] = ts::detail::rational_json(map.b);
    write_json_file(m, map_path(out));
  }
  return 0;
}

int run_compare(const std::string& file1, const std::string& file2) {
  ts::SecuritySystem a = ts::document_ss(ts::read_document(file1));
  ts::SecuritySystem b = ts::document_ss(ts::read_document(file2));
  if (!(ts::model_of(a) == ts::model_of(b)))
    throw ts::MultisetMismatch("the two systems describe different models");
  const ts::ProfileComparison cmp = ts::profile_leq(ts::maxp_profile(a), ts::maxp_profile(b));
  switch (cmp.order) {
    case ts::ProfileOrder::Equal:
      std::cout << "equal\n";
      break;
    case ts::ProfileOrder::FirstLower:
      std::cout << "first improved; better at " << ts::format_rational(*cmp.first_lower_at) << '\n';
      break;
    case ts::ProfileOrder::SecondLower:
      std::cout << "second improved; better at " << ts::format_rational(*cmp.second_lower_at) << '\n';
      break;
    case ts::ProfileOrder::Crossing:
      std::cout << "incomparable; first better at " << ts::format_rational(*cmp.first_lower_at)
                << ", second better at " << ts::format_rational(*cmp.second_lower_at) << '\n';
      break;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Layered security systems on rooted trees"};
  app.require_subcommand(1);

  auto* maxp = app.add_subcommand("maxp", "maximum prize capturable within a budget");
  std::string maxp_file, maxp_budget;
  bool maxp_prof = false;
  int maxp_max_n = 20;
  maxp->add_option("file", maxp_file, "system document (JSON)")->required();
  maxp->add_option("--budget", maxp_budget, "attacker budget, an integer or num/den");
  maxp->add_flag("--profile", maxp_prof, "print every breakpoint of the budget/prize curve");
  maxp->add_option("--max-n", maxp_max_n, "enumeration guard")->capture_default_str();

  auto* cls = app.add_subcommand("classify", "recognize the tree shape and obstructions");
  std::string cls_file;
  cls->add_option("file", cls_file, "document (JSON)")->required();

  auto* build = app.add_subcommand("build-ss", "assign the multisets onto the tree");
  std::string build_file, build_mode, build_out;
  build->add_option("file", build_file, "model document (JSON)")->required();
  build->add_option("--mode", build_mode, "good or optimal")
      ->required()
      ->check(CLI::IsMember({"good", "optimal"}));
  build->add_option("--out", build_out, "write the result here instead of stdout");

  auto* chk = app.add_subcommand("check-optimal", "exhaustively decide whether an optimal assignment exists");
  std::string chk_file;
  int chk_max_n = 6, chk_jobs = 1;
  chk->add_option("file", chk_file, "model document (JSON)")->required();
  chk->add_option("--max-n", chk_max_n, "assignment enumeration guard")->capture_default_str();
  chk->add_option("--jobs", chk_jobs, "worker threads")->capture_default_str();

  auto* top = app.add_subcommand("to-p", "expand costs into unit-cost chains");
  std::string top_file, top_out;
  top->add_option("file", top_file, "system document (JSON)")->required();
  top->add_option("--out", top_out, "write the result here plus a .map.json sibling");

  auto* toc = app.add_subcommand("to-c", "expand prizes into unit-prize chains");
  std::string toc_file, toc_out;
  toc->add_option("file", toc_file, "system document (JSON)")->required();
  toc->add_option("--out", toc_out, "write the result here plus a .map.json sibling");

  auto* dual = app.add_subcommand("dual", "swap the roles of costs and prizes");
  std::string dual_file, dual_out;
  dual->add_option("file", dual_file, "system document (JSON)")->required();
  dual->add_option("--out", dual_out, "write the result here plus a .map.json sibling");

  auto* cmp = app.add_subcommand("compare", "order two assignments of the same model");
  std::string cmp_file1, cmp_file2;
  cmp->add_option("first", cmp_file1, "system document (JSON)")->required();
  cmp->add_option("second", cmp_file2, "system document (JSON)")->required();

  CLI11_PARSE(app, argc, argv);

  const bool class_mode = build->parsed();
  try {
    if (maxp->parsed()) return run_maxp(maxp_file, maxp_budget, maxp_prof, maxp_max_n);
    if (cls->parsed()) return run_classify(cls_file);
    if (build->parsed()) return run_build_ss(build_file, build_mode, build_out);
    if (chk->parsed()) return run_check_optimal(chk_file, chk_max_n, chk_jobs);
    if (top->parsed()) return run_to_p(top_file, top_out);
    if (toc->parsed()) return run_to_c(toc_file, toc_out);
    if (dual->parsed()) return run_dual(dual_file, dual_out);
    if (cmp->parsed()) return run_compare(cmp_file1, cmp_file2);
  } catch (const ts::TooLarge& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const ts::BudgetCeilingExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const ts::WrongTreeClass& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 4;
  } catch (const ts::NotUnitCost& e) {
    std::cerr << "error: " << e.what() << '\n';
    return class_mode ? 4 : 5;
  } catch (const ts::NotUnitPrize& e) {
    std::cerr << "error: " << e.what() << '\n';
    return class_mode ? 4 : 5;
  } catch (const ts::NonIntegerCost& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 5;
  } catch (const ts::NonIntegerPrize& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 5;
  } catch (const ts::ZeroCost& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 5;
  } catch (const ts::NotScaled& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 5;
  } catch (const ts::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
