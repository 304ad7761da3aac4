#include "filiform/audit.hpp"
#include "filiform/catalog.hpp"
#include "filiform/derivation.hpp"
#include "filiform/gradation.hpp"
#include "filiform/json_io.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace filiform;

constexpr int kExitParse = 2;       // malformed documents / unreadable input
constexpr int kExitConstraint = 3;  // parameter or precondition violations
constexpr int kExitCheck = 4;       // a mathematical check failed on valid input

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream os;
    os << std::cin.rdbuf();
    return os.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw document_error("cannot read input file '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  parts.push_back(cur);
  return parts;
}

std::int64_t parse_int(const std::string& s, const std::string& what) {
  try {
    std::size_t pos = 0;
    const long long v = std::stoll(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(what);
    return v;
  } catch (const std::exception&) {
    throw std::invalid_argument(what + ": '" + s + "' is not an integer");
  }
}

WeightVector parse_weights(const std::string& s) {
  const auto parts = split(s, ',');
  WeightVector w(static_cast<Index>(parts.size()));
  Index t = 0;
  for (const auto& p : parts) w(t++) = parse_int(p, "--weights");
  return w;
}

std::vector<Rat> parse_rational_list(const std::string& s) {
  if (s.empty()) return {};
  std::vector<Rat> out;
  for (const auto& p : split(s, ',')) out.push_back(parse_rational(p));
  return out;
}

Json rational_list_json(const std::vector<Rat>& v) {
  Json a = Json::array();
  for (const Rat& q : v) a.push_back(to_string(q));
  return a;
}

void print_defects(const std::vector<DefectEntry>& defects, std::ostream& os) {
  for (const auto& d : defects) {
    os << "  (" << d.i + 1 << "," << d.j + 1 << "," << d.k + 1 << ") -> " << d.m + 1 << ": "
       << to_string(d.residual) << "\n";
  }
}

// -------- catalog --------

struct CatalogOptions {
  std::string family;
  Index n = 0;
  Index k = -1;
  std::string alpha;   // integer for NGF3/F3, rational for M2
  std::string alphas;  // F1
  std::string theta = "0";
  std::string betas;  // F2
  std::string gamma = "0";
  std::string theta1 = "0", theta2 = "0", theta3 = "0";
  std::vector<std::string> tail;  // F3, "i,j,k,value" 1-based
};

int run_catalog(const CatalogOptions& opt) {
  const Family fam = parse_family(opt.family);
  AlgebraDocument doc{[&]() -> Algebra {
    switch (fam) {
      case Family::NGF1:
        return make_ngf1(opt.n);
      case Family::NGF2:
        return make_ngf2(opt.n);
      case Family::NGF3: {
        if (opt.alpha.empty()) throw std::invalid_argument("NGF3 requires --alpha 0|1");
        return make_ngf3(opt.n, static_cast<int>(parse_int(opt.alpha, "--alpha")));
      }
      case Family::F1:
        return make_f1(opt.n, parse_rational_list(opt.alphas), parse_rational(opt.theta));
      case Family::F2:
        return make_f2(opt.n, parse_rational_list(opt.betas), parse_rational(opt.gamma));
      case Family::F3: {
        const int alpha = opt.alpha.empty() ? 0 : static_cast<int>(parse_int(opt.alpha, "--alpha"));
        std::vector<TailEntry> tail;
        for (const auto& t : opt.tail) {
          const auto parts = split(t, ',');
          if (parts.size() != 4) {
            throw std::invalid_argument("--tail expects i,j,k,value (1-based indices)");
          }
          tail.push_back(TailEntry{parse_int(parts[0], "--tail i") - 1,
                                   parse_int(parts[1], "--tail j") - 1,
                                   parse_int(parts[2], "--tail k") - 1, parse_rational(parts[3])});
        }
        return make_f3(opt.n, parse_rational(opt.theta1), parse_rational(opt.theta2),
                       parse_rational(opt.theta3), alpha, tail);
      }
      case Family::M1: {
        if (opt.k < 0) throw std::invalid_argument("M1 requires --k");
        return make_m1(opt.n, opt.k);
      }
      case Family::M2: {
        if (opt.alpha.empty()) throw std::invalid_argument("M2 requires --alpha (nonzero rational)");
        return make_m2(opt.n, parse_rational(opt.alpha));
      }
      case Family::M3:
        return make_m3(opt.n);
      case Family::M4:
        return make_m4(opt.n);
    }
    throw std::invalid_argument("unknown family");
  }()};

  doc.name = family_name(fam);
  Json params = Json::object();
  switch (fam) {
    case Family::NGF3:
      params["alpha"] = parse_int(opt.alpha, "--alpha");
      break;
    case Family::M1:
      params["k"] = opt.k;
      break;
    case Family::M2:
      params["alpha"] = to_string(parse_rational(opt.alpha));
      break;
    case Family::F1:
      params["alphas"] = rational_list_json(parse_rational_list(opt.alphas));
      params["theta"] = to_string(parse_rational(opt.theta));
      break;
    case Family::F2:
      params["betas"] = rational_list_json(parse_rational_list(opt.betas));
      params["gamma"] = to_string(parse_rational(opt.gamma));
      break;
    case Family::F3: {
      params["theta1"] = to_string(parse_rational(opt.theta1));
      params["theta2"] = to_string(parse_rational(opt.theta2));
      params["theta3"] = to_string(parse_rational(opt.theta3));
      params["alpha"] = opt.alpha.empty() ? 0 : parse_int(opt.alpha, "--alpha");
      Json tail = Json::array();
      for (const auto& t : opt.tail) {
        const auto parts = split(t, ',');
        Json e;
        e["i"] = parse_int(parts[0], "i");
        e["j"] = parse_int(parts[1], "j");
        e["k"] = parse_int(parts[2], "k");
        e["value"] = to_string(parse_rational(parts[3]));
        tail.push_back(std::move(e));
      }
      params["tail"] = std::move(tail);
      break;
    }
    default:
      break;
  }
  if (!params.empty()) doc.params = std::move(params);
  std::cout << serialize_document(doc);
  return 0;
}

// -------- check --------

int run_check(const std::string& input) {
  const AlgebraDocument doc = parse_document(read_input(input));
  const Algebra& a = doc.algebra;
  const auto defects = leibniz_defect(a);
  if (!defects.empty()) {
    std::cout << "leibniz: violated (" << defects.size() << " tuple"
              << (defects.size() == 1 ? "" : "s") << ")\n";
    print_defects(defects, std::cout);
    std::cout << "left annihilator dim: " << left_annihilator(a).dim() << "\n";
    std::cout << "right annihilator dim: " << right_annihilator(a).dim() << "\n";
    return kExitCheck;
  }
  std::cout << "leibniz: ok\n";
  const auto series = lower_central_series(a);
  const bool nilpotent = series.back().dim() == 0;
  std::cout << "nilpotent: " << (nilpotent ? "yes" : "no") << "\n";
  std::cout << "filiform: " << (is_filiform(a) ? "yes" : "no") << "\n";
  std::cout << "lie: " << (is_lie(a) ? "yes" : "no") << "\n";
  std::cout << "lower central dims:";
  for (const auto& s : series) std::cout << " " << s.dim();
  std::cout << "\n";
  std::cout << "left annihilator dim: " << left_annihilator(a).dim() << "\n";
  std::cout << "right annihilator dim: " << right_annihilator(a).dim() << "\n";
  return 0;
}

// -------- der --------

int run_der(const std::string& input, const std::string& weights) {
  const AlgebraDocument doc = parse_document(read_input(input));
  const Algebra& a = doc.algebra;
  require_leibniz(a, "der");
  const Index n = a.dim();
  const DerivationBasis der = derivation_space(a);
  const DerivationBasis inn = inner_derivations(a);
  Json out;
  out["dim"] = n;
  out["dim_der"] = der.dim();
  out["dim_inn"] = inn.dim();
  out["h1_dim"] = der.dim() - inn.dim();
  out["b2_dim"] = n * n - der.dim();
  out["b2_identity_ok"] = (n * n - der.dim()) + der.dim() == n * n;
  Json basis = Json::array();
  for (const auto& m : der.maps) basis.push_back(matrix_to_json(m));
  out["der_basis"] = std::move(basis);
  if (!weights.empty()) {
    const WeightVector w = parse_weights(weights);
    const GradationReport rep = verify_weights(a, w);
    if (!rep.connected) {
      throw gradation_error("graded decomposition requires a connected gradation", 0, 0, 0);
    }
    const GradedDerDecomposition dec = graded_der_decomposition(a, w);
    Json graded;
    graded["length"] = rep.length;
    Json shifts = Json::array();
    for (const auto& [s, maps] : dec.levels) {
      Json level;
      level["shift"] = s;
      level["dim"] = maps.size();
      Json mats = Json::array();
      for (const auto& m : maps) mats.push_back(matrix_to_json(m));
      level["maps"] = std::move(mats);
      shifts.push_back(std::move(level));
    }
    graded["shifts"] = std::move(shifts);
    graded["sum_ok"] = dec.total_dim() == der.dim();
    out["graded"] = std::move(graded);
  }
  std::cout << out.dump(2) << "\n";
  return 0;
}

// -------- grade --------

int run_grade_verify(const std::string& input, const std::string& weights) {
  const AlgebraDocument doc = parse_document(read_input(input));
  const WeightVector w = parse_weights(weights);
  Json out;
  try {
    const GradationReport rep = verify_weights(doc.algebra, w);
    out["admissible"] = true;
    out["weights"] = weights_to_json(w);
    out["levels"] = rep.nonempty_levels;
    out["connected"] = rep.connected;
    out["length"] = rep.length;
  } catch (const gradation_error& e) {
    out["admissible"] = false;
    Json v;
    v["i"] = e.i + 1;
    v["j"] = e.j + 1;
    v["k"] = e.k + 1;
    out["violation"] = std::move(v);
    std::cout << out.dump(2) << "\n";
    std::cerr << e.what() << "\n";
    return kExitCheck;
  }
  std::cout << out.dump(2) << "\n";
  return 0;
}

int run_grade_search(const std::string& input, Index bound) {
  const AlgebraDocument doc = parse_document(read_input(input));
  const auto [w, rep] = best_diagonal_gradation(doc.algebra, bound);
  Json out;
  out["weights"] = weights_to_json(w);
  out["levels"] = rep.nonempty_levels;
  out["connected"] = rep.connected;
  out["length"] = rep.length;
  std::cout << out.dump(2) << "\n";
  return 0;
}

int run_grade_natural(const std::string& input) {
  const AlgebraDocument doc = parse_document(read_input(input));
  const auto [gr, w] = natural_grading(doc.algebra);
  AlgebraDocument out(gr);
  if (doc.name) out.name = "gr(" + *doc.name + ")";
  Json j;
  j["document"] = document_to_json(out);
  j["weights"] = weights_to_json(w);
  std::cout << j.dump(2) << "\n";
  return 0;
}

// -------- audit --------

int run_audit_cmd(const std::string& range, const std::string& format) {
  Index lo = 0, hi = 0;
  const auto pos = range.find("..");
  if (pos == std::string::npos) {
    lo = hi = parse_int(range, "--n");
  } else {
    lo = parse_int(range.substr(0, pos), "--n");
    hi = parse_int(range.substr(pos + 2), "--n");
  }
  const auto rows = run_audit(lo, hi);
  if (format == "json") {
    std::cout << audit_json(rows);
  } else {
    std::cout << audit_markdown(rows);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact structure-constant toolkit for filiform Leibniz algebras"};
  app.require_subcommand(1);

  CatalogOptions cat;
  auto* catalog = app.add_subcommand("catalog", "Emit a catalog algebra as a JSON document");
  catalog->add_option("family", cat.family, "Family tag: NGF1 NGF2 NGF3 F1 F2 F3 M1 M2 M3 M4")
      ->required();
  catalog->add_option("--n", cat.n, "Dimension")->required();
  catalog->add_option("--k", cat.k, "Parameter k (M1)");
  catalog->add_option("--alpha", cat.alpha, "Parameter alpha (NGF3/F3: 0|1, M2: rational)");
  catalog->add_option("--alphas", cat.alphas, "F1 parameters a_4..a_n, comma separated");
  catalog->add_option("--theta", cat.theta, "F1 parameter theta");
  catalog->add_option("--betas", cat.betas, "F2 parameters b_3..b_{n-1}, comma separated");
  catalog->add_option("--gamma", cat.gamma, "F2 parameter gamma");
  catalog->add_option("--theta1", cat.theta1, "F3 parameter theta1");
  catalog->add_option("--theta2", cat.theta2, "F3 parameter theta2");
  catalog->add_option("--theta3", cat.theta3, "F3 parameter theta3");
  catalog->add_option("--tail", cat.tail, "F3 tail entry i,j,k,value (1-based), repeatable");

  std::string check_input = "-";
  auto* check = app.add_subcommand("check", "Report identity/series/annihilator checks");
  check->add_option("input", check_input, "Input document (path or - for stdin)");

  std::string der_input = "-";
  std::string der_weights;
  auto* der = app.add_subcommand("der", "Compute the derivation algebra");
  der->add_option("input", der_input, "Input document (path or - for stdin)");
  der->add_option("--weights", der_weights, "Diagonal weights for the graded decomposition");

  auto* grade = app.add_subcommand("grade", "Gradation tools");
  grade->require_subcommand(1);
  std::string gv_input = "-", gv_weights;
  auto* gverify = grade->add_subcommand("verify", "Verify a diagonal weight vector");
  gverify->add_option("input", gv_input, "Input document");
  gverify->add_option("--weights", gv_weights, "Comma-separated integer weights")->required();
  std::string gs_input = "-";
  Index gs_bound = 3;
  auto* gsearch = grade->add_subcommand("search", "Search for a longest diagonal gradation");
  gsearch->add_option("input", gs_input, "Input document");
  gsearch->add_option("--bound", gs_bound, "Coefficient bound (default 3)");
  std::string gn_input = "-";
  auto* gnatural = grade->add_subcommand("natural", "Associated graded algebra of the series");
  gnatural->add_option("input", gn_input, "Input document");

  std::string audit_range = "4..10";
  std::string audit_format = "md";
  auto* audit = app.add_subcommand("audit", "Run the family battery and report");
  audit->add_option("--n", audit_range, "Range, e.g. 5..9 (within [4, 12])");
  audit->add_option("--format", audit_format, "json|md")
      ->check(CLI::IsMember({"json", "md"}));

  CLI11_PARSE(app, argc, argv);

  try {
    if (catalog->parsed()) return run_catalog(cat);
    if (check->parsed()) return run_check(check_input);
    if (der->parsed()) return run_der(der_input, der_weights);
    if (gverify->parsed()) return run_grade_verify(gv_input, gv_weights);
    if (gsearch->parsed()) return run_grade_search(gs_input, gs_bound);
    if (gnatural->parsed()) return run_grade_natural(gn_input);
    if (audit->parsed()) return run_audit_cmd(audit_range, audit_format);
  } catch (const document_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const leibniz_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    print_defects(e.defects(), std::cerr);
    return kExitCheck;
  } catch (const gradation_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCheck;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConstraint;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
