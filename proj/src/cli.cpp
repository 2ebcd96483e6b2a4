#include "prc/cli.hpp"

#include "prc/generic_prp.hpp"
#include "prc/region_oracle.hpp"
#include "prc/registry.hpp"
#include "prc/so17_prp.hpp"
#include "prc/suite.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>

namespace prc::cli {

using Json = nlohmann::ordered_json;

namespace {

class UsageError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

std::string replace_minus(std::string s) {
  static const std::string kMinus = "\xE2\x88\x92";
  for (std::size_t at; (at = s.find(kMinus)) != std::string::npos;) s.replace(at, kMinus.size(), "-");
  return s;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  return s.substr(b, s.find_last_not_of(" \t") - b + 1);
}

double round12(double x) { return std::isfinite(x) ? std::strtod(fmt12(x).c_str(), nullptr) : x; }

Json num(double x) {
  if (!std::isfinite(x)) return nullptr;
  return round12(x);
}

Json num_list(const std::vector<double>& v) {
  Json a = Json::array();
  for (double x : v) a.push_back(num(x));
  return a;
}

std::string human_value(const Json& v) {
  if (v.is_null()) return "nan";
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  if (v.is_number_float()) return fmt12(v.get<double>());
  if (v.is_number()) return v.dump();
  if (v.is_string()) return v.get<std::string>();
  if (v.is_array()) {
    std::string s;
    for (const auto& e : v) s += (s.empty() ? "" : ";") + human_value(e);
    return s.empty() ? "-" : s;
  }
  return v.dump();
}

struct Emitter {
  std::ostream& out;
  bool json = false;

  // Diagnostics go in "diagnostics"; human mode prints them as note lines.
  void operator()(const Json& rec) const {
    if (json) {
      out << rec.dump() << '\n';
      return;
    }
    std::string line;
    for (const auto& [k, v] : rec.items()) {
      if (k == "diagnostics") continue;
      line += (line.empty() ? "" : " ") + k + "=" + human_value(v);
    }
    out << line << '\n';
    if (rec.contains("diagnostics"))
      for (const auto& d : rec["diagnostics"]) out << "note: " << d.get<std::string>() << '\n';
  }
};

double to_d(const Rational& r) { return static_cast<double>(r); }

TwoSummandParams params_from(const std::string& s) {
  const auto v = parse_list(s, 4);
  for (int i : {0, 1})
    if (denominator(v[i]) != 1) throw UsageError("--params: d1 and d2 must be integers");
  TwoSummandParams p{static_cast<int>(numerator(v[0])), static_cast<int>(numerator(v[1])), v[2], v[3]};
  validate(p);
  return p;
}

std::string exact(const Rational& r) { return r.str(); }

// ---- subcommands ----

struct Common {
  std::string space = "so17";
  std::string params;
  bool json = false;
};

void add_space(CLI::App* sub, Common& c) {
  sub->add_option("--space", c.space, "so17, generic or product")
      ->check(CLI::IsMember({"so17", "generic", "product"}));
  sub->add_option("--params", c.params, "d1,d2,p1,p2 for --space generic");
}

TwoSummandParams generic_params(const Common& c) {
  if (c.params.empty()) throw UsageError("--space generic needs --params d1,d2,p1,p2");
  return params_from(c.params);
}

int cmd_ric(const Common& c, const std::string& xyz, const std::string& abc, const std::string& lambda, bool oracle,
            const Emitter& emit) {
  Json rec;
  if (c.space == "so17") {
    if (xyz.empty() == abc.empty()) throw UsageError("ric --space so17 needs exactly one of --xyz, --abc");
    std::optional<OracleResult<double>> orc;
    RicTriple<Rational> r;
    if (!xyz.empty()) {
      const auto v = parse_list(xyz, 3);
      const PhiParams<Rational> p{v[0], v[1], v[2]};
      check_phi_params(p);
      r = ric_xyz(p);
      if (oracle) orc = ric_oracle_xyz({to_d(v[0]), to_d(v[1]), to_d(v[2])});
    } else {
      const auto v = parse_list(abc, 3);
      const PhiSqrtParams<Rational> q{v[0], v[1], v[2]};
      r = ric_abc(q);
      if (oracle) orc = ric_oracle<double>(to_d(v[0]), to_d(v[1]), to_d(v[2]));
    }
    rec["r1"] = num(to_d(r.r1));
    rec["r2"] = num(to_d(r.r2));
    rec["r3"] = num(to_d(r.r3));
    rec["exact"] = exact(r.r1) + "," + exact(r.r2) + "," + exact(r.r3);
    if (orc) {
      rec["oracle_r1"] = num(orc->ric.r1);
      rec["oracle_r2"] = num(orc->ric.r2);
      rec["oracle_r3"] = num(orc->ric.r3);
      rec["oracle_block_deviation"] = num(orc->max_deviation);
    }
  } else if (c.space == "generic") {
    if (lambda.empty()) throw UsageError("ric --space generic needs --lambda");
    const auto p = generic_params(c);
    const Rational l = parse_rational(lambda);
    if (!(l > 0)) throw UsageError("--lambda must be positive");
    const auto r = ric_diag<Rational>(p, l);
    rec["r1"] = num(to_d(r.t1));
    rec["r2"] = num(to_d(r.t2));
    rec["exact"] = exact(r.t1) + "," + exact(r.t2);
  } else {
    rec["r1"] = num(-0.5);
    rec["r2"] = num(-0.5);
    rec["diagnostics"] = Json::array({"product of symmetric spaces: ric is (-1/2, -1/2) for every metric"});
  }
  emit(rec);
  return 0;
}

int cmd_solve_t(const Common& c, const std::string& t, const std::string& t2s, const Emitter& emit) {
  Json rec;
  if (c.space == "so17") {
    if (t.empty()) throw UsageError("solve-t --space so17 needs --t t1,t2,t3");
    const auto v = parse_list(t, 3);
    const auto r = solve_T_so17({to_d(v[0]), to_d(v[1]), to_d(v[2])});
    rec["member"] = r.member;
    rec["branch"] = branch_name(r.branch);
    rec["expected_t1"] = num(r.expected_t1);
    rec["residual"] = num(r.residual);
    rec["diagnostics"] = r.diagnostics;
  } else if (c.space == "generic") {
    const auto p = generic_params(c);
    if (t.empty() == t2s.empty()) throw UsageError("solve-t --space generic needs exactly one of --t t1,t2 or --t2");
    const bool check = !t.empty();
    const auto v = check ? parse_list(t, 2) : std::vector<Rational>{Rational(0), parse_rational(t2s)};
    try {
      const auto s = solve_T<Rational>(p, v[1]);
      rec["t1"] = num(to_d(s.t1));
      rec["t2"] = num(to_d(v[1]));
      rec["lambda"] = num(to_d(s.lambda));
      rec["exact"] = exact(s.t1) + "," + exact(s.lambda);
      if (check) {
        rec["member"] = s.t1 == v[0] ||
                        std::abs(to_d(s.t1 - v[0])) <= kMembershipTol * std::max(1.0, std::abs(to_d(s.t1)));
      }
    } catch (const NotInImage& e) {
      rec["member"] = false;
      rec["diagnostics"] = Json::array({e.what()});
    }
  } else {
    if (t.empty()) throw UsageError("solve-t --space product needs --t t1,t2");
    const auto v = parse_list(t, 2);
    const auto r = product_case_solve(ProductMode::RicEqualsT, {to_d(v[0]), to_d(v[1])});
    rec["member"] = r.solvable;
    if (!r.note.empty()) rec["diagnostics"] = Json::array({r.note});
  }
  emit(rec);
  return 0;
}

int cmd_solve_ct(const Common& c, const std::string& t, const Emitter& emit) {
  if (t.empty()) throw UsageError("solve-ct needs --t");
  Json rec;
  if (c.space == "so17") {
    const auto v = parse_list(t, 3);
    const auto r = solve_cT_so17({to_d(v[0]), to_d(v[1]), to_d(v[2])});
    rec["solutions"] = static_cast<int>(r.c.size());
    rec["c"] = num_list(r.c);
    rec["l"] = num(r.l);
    rec["m"] = num(r.m);
    rec["diagonal"] = r.diagonal;
    if (!r.diagonal) rec["in_R"] = r.region.contained;
    Json d = r.diagnostics;
    for (const auto& s : r.region.diagnostics) d.push_back(s);
    rec["diagnostics"] = d;
  } else if (c.space == "generic") {
    const auto p = generic_params(c);
    const auto v = parse_list(t, 2);
    const auto a = analyze_cT(p, to_d(v[0]), to_d(v[1]));
    std::vector<double> cs, ls;
    for (const auto& b : {a.plus, a.minus})
      if (b) {
        cs.push_back(b->c);
        ls.push_back(b->lambda);
      }
    rec["solutions"] = a.solution_count;
    rec["c"] = num_list(cs);
    rec["lambda"] = num_list(ls);
    rec["tau"] = num(a.tau);
    rec["boundary"] = a.boundary;
    rec["diagnostics"] = a.diagnostics;
  } else {
    const auto v = parse_list(t, 2);
    const auto r = product_case_solve(ProductMode::RicEqualsCT, {to_d(v[0]), to_d(v[1])});
    rec["solutions"] = r.c ? 1 : 0;
    rec["c"] = r.c ? num_list({*r.c}) : Json::array();
    if (!r.note.empty()) rec["diagnostics"] = Json::array({r.note});
  }
  emit(rec);
  return 0;
}

Json region_record(double l, double m, bool oracle) {
  if (!(m > 0.0)) throw UsageError("--m must be positive");
  const auto v = region_contains(l, m);
  Json rec;
  rec["l"] = num(l);
  rec["m"] = num(m);
  rec["in_R"] = v.contained;
  rec["boundary"] = v.boundary;
  rec["regions"] = v.ids;
  if (oracle) {
    const auto o = region_oracle(l, m);
    rec["oracle"] = verdict_name(o.verdict);
    rec["oracle_residual"] = num(o.residual);
    if (o.verdict == OracleVerdict::Member)
      rec["preimage"] = num_list({o.preimage.x, o.preimage.y, o.preimage.z});
  }
  rec["diagnostics"] = v.diagnostics;
  return rec;
}

std::string csv_list(const std::vector<double>& v) {
  std::string s;
  for (double x : v) s += (s.empty() ? "" : ";") + fmt12(x);
  return s;
}

int cmd_sweep(const std::string& mode, const std::string& a, const std::string& b, const std::string& path,
              std::ostream& out) {
  std::ostringstream csv;
  if (mode == "t") {
    if (a.empty() || b.empty()) throw UsageError("sweep --mode t needs --t2 and --t3 ranges");
    const auto t2s = parse_range(a).points(), t3s = parse_range(b).points();
    csv << "t2,t3,t1,in_image\n";
    for (const auto& t2 : t2s)
      for (const auto& t3 : t3s) {
        const auto r = solve_T_so17({0.0, to_d(t2), to_d(t3)});
        const bool in = r.branch != TBranch::None;
        csv << fmt12(to_d(t2)) << ',' << fmt12(to_d(t3)) << ',' << (in ? fmt12(r.expected_t1) : "") << ','
            << (in ? 1 : 0) << '\n';
      }
  } else {
    if (a.empty() || b.empty()) throw UsageError("sweep --mode region needs --l and --m ranges");
    const auto ls = parse_range(a).points(), ms = parse_range(b).points();
    for (const auto& m : ms)
      if (m < 0) throw UsageError("sweep: m range must be nonnegative");
    csv << "l,m,in_R,region_ids,c_list\n";
    for (const auto& l : ls)
      for (const auto& m : ms) {
        const double ld = to_d(l), md = to_d(m);
        const auto c = solve_cT_so17({1.0, ld, md});
        std::string ids;
        bool in = false;
        if (md > 0.0) {
          const auto v = region_contains(ld, md);
          in = v.contained;
          for (int id : v.ids) ids += (ids.empty() ? "" : ";") + std::to_string(id);
        } else {
          in = !c.c.empty();  // m = 0: the diagonal slice
        }
        csv << fmt12(ld) << ',' << fmt12(md) << ',' << (in ? 1 : 0) << ',' << ids << ',' << csv_list(c.c) << '\n';
      }
  }
  if (path.empty()) {
    out << csv.str();
  } else {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw UsageError("cannot write " + path);
    f << csv.str();
  }
  return 0;
}

int cmd_verify(const SuiteOptions& opt, const Emitter& emit) {
  const auto results = run_invariant_suite(opt);
  int failed = 0;
  for (const auto& r : results) {
    Json rec;
    rec["status"] = r.passed ? "PASS" : "FAIL";
    rec["module"] = r.module;
    rec["check"] = r.name;
    rec["detail"] = r.detail;
    if (emit.json) {
      emit(rec);
    } else {
      emit.out << rec["status"].get<std::string>() << "  [" << r.module << "] " << r.name << ": " << r.detail << '\n';
    }
    failed += r.passed ? 0 : 1;
  }
  if (!emit.json) emit.out << results.size() - failed << "/" << results.size() << " checks passed\n";
  return failed == 0 ? 0 : 1;
}

Json entry_record(const TripleEntry& e) {
  Json rec;
  rec["label"] = e.label;
  rec["table"] = e.table;
  rec["family"] = family_name(e.family);
  rec["g"] = e.g;
  rec["k"] = e.k;
  rec["h"] = e.h;
  rec["constraint"] = e.constraint;
  rec["flags"] = flags_string(e.flags);
  if (!e.note.empty()) rec["note"] = e.note;
  return rec;
}

int cmd_classify(const std::string& data, const std::string& label, const std::string& family,
                 const std::string& flag, bool all, const Emitter& emit) {
  if (static_cast<int>(!label.empty()) + !family.empty() + !flag.empty() + all != 1)
    throw UsageError("classify needs exactly one of --label, --family, --flag, --all");
  const std::string dir = data.empty() ? default_data_dir() : data;
  const auto reg = Registry::load(dir + "/classification.tsv");
  std::vector<TripleEntry> rows;
  if (!label.empty()) {
    rows = reg.lookup_all(label);
    if (rows.empty()) throw UsageError(UnknownLabel(label).what());
  } else if (!family.empty()) {
    const Family f = parse_family(family);
    rows = reg.filter([&](const TripleEntry& e) { return e.family == f; });
  } else if (!flag.empty()) {
    unsigned bit = 0;
    if (flag == "equivalent_summands") bit = kEquivalentSummands;
    else if (flag == "print_defect") bit = kPrintDefect;
    else if (flag == "duplicate_row") bit = kDuplicateRow;
    else throw UsageError("unknown flag: " + flag);
    rows = reg.filter([&](const TripleEntry& e) { return (e.flags & bit) != 0; });
  } else {
    rows = reg.rows();
  }
  for (const auto& e : rows) emit(entry_record(e));
  return 0;
}

}  // namespace

std::string fmt12(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x == 0.0 ? 0.0 : x);  // no "-0"
  return buf;
}

Rational parse_rational(const std::string& raw) {
  const std::string s = trim(replace_minus(raw));
  std::size_t i = 0;
  bool neg = false;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) neg = s[i++] == '-';
  auto digits = [&](std::string& into) {
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) into += s[i++];
  };
  std::string whole, frac, den;
  digits(whole);
  Rational r;
  if (i < s.size() && s[i] == '.') {
    ++i;
    digits(frac);
  }
  if (whole.empty() && frac.empty()) throw std::invalid_argument("not a number: '" + raw + "'");
  BigInt n(whole.empty() ? "0" : whole);
  BigInt scale(1);
  for (char ch : frac) {
    n = n * 10 + (ch - '0');
    scale *= 10;
  }
  r = Rational(n, scale);
  if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
    ++i;
    bool eneg = false;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) eneg = s[i++] == '-';
    std::string e;
    digits(e);
    if (e.empty() || e.size() > 4) throw std::invalid_argument("bad exponent in '" + raw + "'");
    const BigInt p = boost::multiprecision::pow(BigInt(10), std::stoi(e));
    r = eneg ? r / Rational(p) : r * Rational(p);
  }
  if (i < s.size() && s[i] == '/') {
    if (!frac.empty()) throw std::invalid_argument("not a number: '" + raw + "'");
    ++i;
    digits(den);
    if (den.empty()) throw std::invalid_argument("not a number: '" + raw + "'");
    const BigInt d(den);
    if (d == 0) throw std::invalid_argument("zero denominator in '" + raw + "'");
    r /= Rational(d);
  }
  if (i != s.size()) throw std::invalid_argument("not a number: '" + raw + "'");
  return neg ? Rational(-r) : r;
}

std::vector<Rational> parse_list(const std::string& s, std::size_t expected) {
  std::vector<Rational> out;
  std::istringstream is(s);
  std::string cell;
  while (std::getline(is, cell, ',')) out.push_back(parse_rational(cell));
  if (out.size() != expected)
    throw std::invalid_argument("expected " + std::to_string(expected) + " comma-separated values, got '" + s + "'");
  return out;
}

std::vector<Rational> Range::points() const {
  std::vector<Rational> out;
  for (Rational v = lo; v <= hi; v += step) out.push_back(v);
  return out;
}

Range parse_range(const std::string& s) {
  std::vector<std::string> parts;
  std::istringstream is(s);
  std::string cell;
  while (std::getline(is, cell, ':')) parts.push_back(cell);
  if (parts.size() != 3) throw std::invalid_argument("range must be lo:hi:step, got '" + s + "'");
  Range r{parse_rational(parts[0]), parse_rational(parts[1]), parse_rational(parts[2])};
  if (!(r.step > 0)) throw std::invalid_argument("range step must be positive");
  if (r.hi >= r.lo && (r.hi - r.lo) / r.step > 1000000) throw std::invalid_argument("range has too many points");
  return r;
}

int run(const std::vector<std::string>& raw, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (const auto& a : raw) args.push_back(replace_minus(a));

  CLI::App app{"Prescribed Ricci curvature on two-summand noncompact homogeneous spaces", "prc"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "one JSON object per line");

  Common com;
  std::string xyz, abc, lambda, t, t2, t3, l, m, mode = "region", out_path, data, label, family, flag;
  bool oracle = false, all = false;
  SuiteOptions sopt;

  auto* ric = app.add_subcommand("ric", "Ricci values of a metric");
  add_space(ric, com);
  ric->add_option("--xyz", xyz, "x,y,z of Phi = [[x,z],[z,y]] (so17)");
  ric->add_option("--abc", abc, "a,b,c of the square root of Phi (so17)");
  ric->add_option("--lambda", lambda, "x1/x2 (generic)");
  ric->add_flag("--oracle", oracle, "also evaluate the brute-force matrix oracle");

  auto* st = app.add_subcommand("solve-t", "decide ric = T");
  add_space(st, com);
  st->add_option("--t", t, "t1,t2,t3 (so17) or t1,t2");
  st->add_option("--t2", t2, "t2 alone (generic): report t1 and lambda");

  auto* sct = app.add_subcommand("solve-ct", "solve ric = cT for c");
  add_space(sct, com);
  sct->add_option("--t", t, "t1,t2,t3 (so17) or t1,t2")->required();

  auto* reg = app.add_subcommand("region", "membership of (l, m) in the ric = cT region");
  reg->add_option("--l", l, "t2/t1")->required();
  reg->add_option("--m", m, "|t3|/t1")->required();
  reg->add_flag("--oracle", oracle, "also search for a preimage numerically");

  auto* sw = app.add_subcommand("sweep", "grid evaluation to CSV");
  sw->add_option("--mode", mode, "t or region")->check(CLI::IsMember({"t", "region"}));
  sw->add_option("--t2", t2, "lo:hi:step (mode t)");
  sw->add_option("--t3", t3, "lo:hi:step (mode t)");
  sw->add_option("--l", l, "lo:hi:step (mode region)");
  sw->add_option("--m", m, "lo:hi:step (mode region)");
  sw->add_option("--out", out_path, "output file (stdout when absent)");

  auto* ver = app.add_subcommand("verify", "run the invariant suite");
  ver->add_option("--samples", sopt.samples, "random samples per check")->check(CLI::PositiveNumber);
  ver->add_option("--region-samples", sopt.region_samples, "points per side in the region check")
      ->check(CLI::NonNegativeNumber);
  ver->add_option("--seed", sopt.seed, "RNG seed");
  ver->add_option("--data", sopt.data_dir, "directory with classification.tsv");

  auto* cls = app.add_subcommand("classify", "look up the classification tables");
  cls->add_option("--label", label, "row label, e.g. I.16");
  cls->add_option("--family", family, "family name");
  cls->add_option("--flag", flag, "equivalent_summands, print_defect or duplicate_row");
  cls->add_flag("--all", all, "every row");
  cls->add_option("--data", data, "directory with classification.tsv");

  for (auto* sub : {ric, st, sct, reg, sw, ver, cls}) sub->add_flag("--json", json, "one JSON object per line");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  const Emitter emit{out, json};
  try {
    if (ric->parsed()) return cmd_ric(com, xyz, abc, lambda, oracle, emit);
    if (st->parsed()) return cmd_solve_t(com, t, t2, emit);
    if (sct->parsed()) return cmd_solve_ct(com, t, emit);
    if (reg->parsed()) {
      emit(region_record(to_d(parse_rational(l)), to_d(parse_rational(m)), oracle));
      return 0;
    }
    if (sw->parsed()) return cmd_sweep(mode, mode == "t" ? t2 : l, mode == "t" ? t3 : m, out_path, out);
    if (ver->parsed()) return cmd_verify(sopt, emit);
    if (cls->parsed()) return cmd_classify(data, label, family, flag, all, emit);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const NotInImage& e) {
    Json rec;
    rec["member"] = false;
    rec["diagnostics"] = Json::array({e.what()});
    emit(rec);
    return 0;
  } catch (const std::domain_error& e) {
    Json rec;
    rec["verdict"] = "undefined";
    rec["diagnostics"] = Json::array({e.what()});
    emit(rec);
    return 0;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace prc::cli
