// hlq: Hall-Littlewood expansion coefficients L_{lambda,mu}(q) for the root
// systems A_n, B_n, C_n.
//
// Subcommands:
//   compute   L_{lambda,mu}(q) via the tableau formula (all mu if --mu omitted)
//   tableaux  list SSYT(lambda[, mu]) with their c(T) contributions
//   tree      Graphviz DOT dump of the folding tree of one column pair
//   verify    cross-check the expansion against the definitional Weyl-group
//             sum at exact rational points, and (type A) against the
//             Macdonald formula
//
// Exit codes: 0 success, 1 verification mismatch, 2 usage error, 3 internal
// invariant violation.

#include <cctype>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hl/errors.hpp"
#include "hl/gl_formula.hpp"
#include "hl/macdonald.hpp"
#include "hl/oracle.hpp"
#include "hl/root_system.hpp"
#include "hl/tableaux.hpp"
#include "hl/text_io.hpp"

namespace {

using namespace hl;

struct CommonArgs {
  std::string family;
  int rank = 0;
  std::string omega_csv;
  std::string eps_csv;
  std::string format = "text";
  CLI::Option* omega_opt = nullptr;
  CLI::Option* eps_opt = nullptr;
};

void add_common(CLI::App* cmd, CommonArgs& a) {
  cmd->add_option("family", a.family, "Root-system family: A, B, or C")
      ->required()
      ->check(CLI::IsMember({"A", "B", "C"}));
  cmd->add_option("rank", a.rank, "Rank n >= 1")->required()->check(CLI::PositiveNumber);
  a.omega_opt = cmd->add_option("--omega", a.omega_csv,
                                "lambda as fundamental-coweight coefficients a1,...,an");
  a.eps_opt = cmd->add_option("--eps", a.eps_csv,
                              "lambda in epsilon-coordinates c1,... (n+1 of them for type A)");
  a.omega_opt->excludes(a.eps_opt);
  a.eps_opt->excludes(a.omega_opt);
  cmd->add_option("--format", a.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->default_val("text");
}

Shape shape_of(const CommonArgs& a) {
  const RootDatum d{family_from_letter(a.family[0]), a.rank};
  const bool have_omega = a.omega_opt->count() > 0;
  const bool have_eps = a.eps_opt->count() > 0;
  if (have_omega == have_eps) throw usage_error("exactly one of --omega/--eps must be given");
  if (have_eps) return Shape::from_lambda(d, parse_coords(d, a.eps_csv));

  std::vector<int> coeffs;
  std::istringstream in(a.omega_csv);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    const Rat r = parse_coord(tok);
    if (r.get_den() != 1 || r < 0) throw usage_error("--omega coefficients must be nonnegative integers");
    coeffs.push_back((int)r.get_num().get_si());
  }
  if ((int)coeffs.size() != d.rank) {
    throw usage_error("--omega needs exactly " + std::to_string(d.rank) + " coefficients");
  }
  return Shape::from_omega(d, coeffs);
}

Json header_json(const Shape& s) {
  return Json{{"family", std::string(1, family_letter(s.datum.family))},
              {"rank", s.datum.rank},
              {"lambda", coweight_to_json(s.lambda())}};
}

int run_compute(const CommonArgs& a, const CLI::Option* mu_opt, const std::string& mu_csv) {
  const Shape s = shape_of(a);
  const RootDatum& d = s.datum;
  if (mu_opt->count() > 0) {
    const Vec mu = parse_coords(d, mu_csv);
    const HalfLaurent L = L_poly(d, s.lambda(), mu);
    if (a.format == "json") {
      Json out = header_json(s);
      out["mu"] = coweight_to_json(mu);
      out["L"] = poly_to_json(L);
      std::cout << out.dump(2) << "\n";
    } else {
      std::cout << L.str() << "\n";
    }
    return 0;
  }

  const std::map<Vec, HalfLaurent> table = L_table(d, s);
  if (a.format == "json") {
    Json arr = Json::array();
    for (const auto& [mu, L] : table) {
      Json out = header_json(s);
      out["mu"] = coweight_to_json(mu);
      out["L"] = poly_to_json(L);
      arr.push_back(std::move(out));
    }
    std::cout << arr.dump(2) << "\n";
  } else {
    for (const auto& [mu, L] : table) {
      std::cout << "mu = " << coords_str(mu) << ": " << L.str() << "\n";
    }
  }
  return 0;
}

int run_tableaux(const CommonArgs& a, const CLI::Option* mu_opt, const std::string& mu_csv) {
  const Shape s = shape_of(a);
  const std::vector<Tableau> list =
      mu_opt->count() > 0 ? enumerate_ssyt(s, parse_coords(s.datum, mu_csv)) : enumerate_all_ssyt(s);

  if (a.format == "json") {
    Json arr = Json::array();
    for (const Tableau& t : list) {
      arr.push_back(Json{{"tableau", tableau_to_json(t)},
                         {"content", coweight_to_json(content(t))},
                         {"c", poly_to_json(c_tableau(t))}});
    }
    std::cout << arr.dump(2) << "\n";
    return 0;
  }
  for (size_t i = 0; i < list.size(); ++i) {
    if (i) std::cout << "\n";
    const std::string body = tableau_to_text(list[i]);
    std::cout << (body.empty() ? "(empty)\n" : body);
    std::cout << "content: " << coords_str(content(list[i])) << "\n";
    std::cout << "c: " << c_tableau(list[i]).str() << "\n";
  }
  std::cout << (list.empty() ? "" : "\n") << list.size() << " tableau(x)\n";
  return 0;
}

int run_tree(const CommonArgs& a, const std::string& inline_tab, const std::string& tab_file,
             int pair_index) {
  const Shape s = shape_of(a);
  std::string text;
  if (!inline_tab.empty() && !tab_file.empty()) {
    throw usage_error("give the tableau either inline or as a file, not both");
  }
  if (!inline_tab.empty()) {
    text = inline_tab;
    for (char& ch : text) {
      if (ch == '/') ch = '\n';
    }
  } else if (!tab_file.empty()) {
    std::ifstream in(tab_file);
    if (!in) throw usage_error("cannot open tableau file '" + tab_file + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  } else {
    throw usage_error("a tableau is required (--tableau or --tableau-file)");
  }

  const Tableau t = tableau_from_text(s, text);
  if (!is_semistandard(t)) throw usage_error("tableau is not semistandard");
  if (pair_index < 0 || pair_index + 1 >= s.num_columns()) {
    throw usage_error("--pair must name a vertex between adjacent columns (0.." +
                      std::to_string(s.num_columns() - 2) + ")");
  }
  const FoldingTree tree =
      build_tree(t.cols[pair_index], t.cols[pair_index + 1], vertex_context(t, pair_index));
  const std::string dot = tree_to_dot(tree);
  if (a.format == "json") {
    Json out = header_json(s);
    out["pair"] = pair_index;
    out["c"] = poly_to_json(c_pair(t.cols[pair_index], t.cols[pair_index + 1],
                                   vertex_context(t, pair_index)));
    out["dot"] = dot;
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << dot;
  }
  return 0;
}

int run_verify(const CommonArgs& a, int points, const std::string& against, std::uint64_t seed) {
  const Shape s = shape_of(a);
  const RootDatum& d = s.datum;
  const bool check_def = against == "definition" || against == "both";
  const bool check_mac = against == "macdonald" || against == "both";
  if (check_mac && d.family != Family::A) {
    throw usage_error("--against macdonald requires type A");
  }

  const std::map<Vec, HalfLaurent> table = L_table(d, s);
  bool pass = true;
  Json out = header_json(s);
  std::ostringstream text;

  if (check_def) {
    const VerifyReport rep = verify(d, s.lambda(), table, points, seed);
    pass = pass && rep.pass;
    Json pts = Json::array();
    for (size_t i = 0; i < rep.points.size(); ++i) {
      const PointCheck& pc = rep.points[i];
      Json y = Json::array();
      text << "point " << i + 1 << ": y = (";
      for (size_t k = 0; k < pc.point.y.size(); ++k) {
        y.push_back(pc.point.y[k].get_str());
        text << (k ? "," : "") << pc.point.y[k].get_str();
      }
      text << "), v0 = " << pc.point.v0.get_str() << ": expansion = definitional is "
           << (pc.ok ? "true" : "FALSE") << "\n";
      pts.push_back(Json{{"y", y},
                         {"v0", pc.point.v0.get_str()},
                         {"expansion", pc.expansion.get_str()},
                         {"definitional", pc.definitional.get_str()},
                         {"ok", pc.ok}});
    }
    out["points"] = pts;
    out["definition_pass"] = rep.pass;
    text << "definitional check: " << (rep.pass ? "PASS" : "FAIL") << "\n";
  }

  if (check_mac) {
    bool mac_ok = true;
    Json bad = Json::array();
    for (const auto& [mu, L] : table) {
      if (macdonald_L(d, s.lambda(), mu) != L) {
        mac_ok = false;
        bad.push_back(coweight_to_json(mu));
        text << "macdonald mismatch at mu = " << coords_str(mu) << "\n";
      }
    }
    pass = pass && mac_ok;
    out["macdonald_pass"] = mac_ok;
    if (!mac_ok) out["macdonald_mismatches"] = bad;
    text << "macdonald cross-check: " << (mac_ok ? "PASS" : "FAIL") << " (" << table.size()
         << " coefficients)\n";
  }

  out["pass"] = pass;
  text << "verify: " << (pass ? "PASS" : "FAIL") << "\n";
  if (a.format == "json") {
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << text.str();
  }
  return pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hall-Littlewood expansion coefficients L_{lambda,mu}(q) for types A, B, C"};
  app.require_subcommand(1);

  CommonArgs compute_args, tableaux_args, tree_args, verify_args;
  std::string compute_mu, tableaux_mu;
  std::string tree_inline, tree_file;
  int tree_pair = 0;
  int verify_points = 5;
  std::string verify_against = "definition";
  std::uint64_t verify_seed = 0x48616c6c;

  CLI::App* compute = app.add_subcommand("compute", "Expansion coefficients L_{lambda,mu}(q)");
  add_common(compute, compute_args);
  CLI::Option* compute_mu_opt =
      compute->add_option("--mu", compute_mu, "Dominant mu in epsilon-coordinates (default: all)");

  CLI::App* tableaux = app.add_subcommand("tableaux", "List SSYT(lambda[, mu]) with c(T)");
  add_common(tableaux, tableaux_args);
  CLI::Option* tableaux_mu_opt =
      tableaux->add_option("--mu", tableaux_mu, "Content filter in epsilon-coordinates");

  CLI::App* tree = app.add_subcommand("tree", "DOT dump of one column pair's folding tree");
  add_common(tree, tree_args);
  tree->add_option("--tableau", tree_inline, "Tableau inline, rows separated by '/'");
  tree->add_option("--tableau-file", tree_file, "File with one row per line");
  tree->add_option("--pair", tree_pair, "Vertex index i for the pair (C_i, C_{i+1})")->required();

  CLI::App* verify = app.add_subcommand("verify", "Cross-validate the expansion");
  add_common(verify, verify_args);
  verify->add_option("--points", verify_points, "Number of random evaluation points")
      ->check(CLI::PositiveNumber)
      ->default_val(5);
  verify->add_option("--against", verify_against, "Reference to check against")
      ->check(CLI::IsMember({"definition", "macdonald", "both"}))
      ->default_val("definition");
  verify->add_option("--seed", verify_seed, "RNG seed for the sample points");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (compute->parsed()) return run_compute(compute_args, compute_mu_opt, compute_mu);
    if (tableaux->parsed()) return run_tableaux(tableaux_args, tableaux_mu_opt, tableaux_mu);
    if (tree->parsed()) return run_tree(tree_args, tree_inline, tree_file, tree_pair);
    if (verify->parsed()) return run_verify(verify_args, verify_points, verify_against, verify_seed);
  } catch (const usage_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const invariant_error& e) {
    std::cerr << "invariant violation: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
  return 2;
}
