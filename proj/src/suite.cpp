#include "prc/suite.hpp"

#include "prc/generic_prp.hpp"
#include "prc/region_oracle.hpp"
#include "prc/registry.hpp"
#include "prc/so17_prp.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <random>
#include <sstream>

namespace prc {

namespace {

using Rng = std::mt19937_64;

double rel_err(double a, double b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

double triple_err(const RicTriple<double>& a, const RicTriple<double>& b) {
  const double scale = std::max({1.0, std::abs(b.r1), std::abs(b.r2), std::abs(b.r3)});
  return std::max({std::abs(a.r1 - b.r1), std::abs(a.r2 - b.r2), std::abs(a.r3 - b.r3)}) / scale;
}

PhiParams<double> random_phi(Rng& rng) {
  std::uniform_real_distribution<double> U(-2.5, 2.5), W(-1.0, 1.0);
  const double u = U(rng), v = U(rng), s = std::exp(W(rng));
  const double x = std::exp(u);
  return {s * x, s * (1.0 + v * v) / x, s * v};
}

PhiSqrtParams<double> random_phi_sqrt(Rng& rng) {
  std::uniform_real_distribution<double> U(-2.0, 2.0);
  while (true) {
    const double a = U(rng), b = U(rng), c = U(rng);
    if (std::abs(a * b - c * c) > 0.05) return {a, b, c};
  }
}

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(3);
  os << x;
  return os.str();
}

struct Runner {
  std::vector<CheckResult>& out;

  void operator()(const std::string& module, const std::string& name,
                  const std::function<std::string()>& body) {
    CheckResult r;
    r.module = module;
    r.name = name;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      r.detail = body();
      r.passed = r.detail.rfind("FAIL", 0) != 0;
    } catch (const std::exception& e) {
      r.passed = false;
      r.detail = std::string("FAIL exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    out.push_back(std::move(r));
  }
};

std::string verdict(bool ok, const std::string& detail) { return (ok ? "" : "FAIL ") + detail; }

void lie_core_checks(Runner& run, const SuiteOptions& opt) {
  run("lie_core", "basis in so(1,7), p1 antisymmetric, p2 symmetric", [] {
    const auto B = build_p_basis<QSqrt3>();
    for (int i = 0; i < kPDim; ++i) {
      if (!in_so17<QSqrt3>(B[i])) return verdict(false, "basis " + std::to_string(i + 1));
      const bool sym = B[i] == B[i].transpose(), anti = B[i] == Mat8<QSqrt3>(-B[i].transpose());
      if (PBasis<QSqrt3>::in_p1(i) ? !anti : !sym) return verdict(false, "symmetry of basis " + std::to_string(i + 1));
    }
    return std::string("14 matrices, exact");
  });
  run("lie_core", "basis orthonormal for the fixed inner product", [] {
    const auto B = build_p_basis<QSqrt3>();
    for (int i = 0; i < kPDim; ++i)
      for (int j = 0; j < kPDim; ++j)
        if (fixed_inner<QSqrt3>(B, B[i], B[j]) != QSqrt3(i == j ? 1 : 0))
          return verdict(false, "pair " + std::to_string(i + 1) + "," + std::to_string(j + 1));
    return std::string("exact in Q(sqrt3)");
  });
  run("lie_core", "Killing form equals the adjoint trace form", [] {
    const auto basis = so17_full_basis<double>();
    for (std::size_t i = 0; i < basis.size(); ++i)
      for (std::size_t j = i; j < basis.size(); ++j)
        if (killing_form<double>(basis[i], basis[j]) != adjoint_trace_form<double>(basis[i], basis[j]))
          return verdict(false, "pair " + std::to_string(i) + "," + std::to_string(j));
    return std::string("406 pairs, integer entries so equality is exact");
  });
  run("lie_core", "Cartan relations and ad symmetry on p", [] {
    const auto B = build_p_basis<double>();
    double worst = 0.0;
    for (int a = 0; a < kPDim; ++a)
      for (int b = 0; b < kPDim; ++b) {
        const Vec14<double> c = project_p<double>(B, bracket<double>(B[a], B[b]));
        const bool pa = a < kSummandDim, pb = b < kSummandDim;
        // [p1,p1] and [p2,p2] have no p2 part; [p1,p2] has no p1 part
        const auto tail = c.tail<kSummandDim>(), head = c.head<kSummandDim>();
        worst = std::max(worst, pa == pb ? tail.cwiseAbs().maxCoeff() : head.cwiseAbs().maxCoeff());
      }
    for (int x = 0; x < kPDim; ++x)
      for (int u = 0; u < kPDim; ++u)
        for (int v = 0; v < kPDim; ++v) {
          const double lhs = fixed_inner<double>(B, from_p_coordinates<double>(B, project_p<double>(B, bracket<double>(B[x], B[u]))), B[v]);
          const double rhs = fixed_inner<double>(B, B[u], from_p_coordinates<double>(B, project_p<double>(B, bracket<double>(B[x], B[v]))));
          worst = std::max(worst, x < kSummandDim ? std::abs(lhs + rhs) : std::abs(lhs - rhs));
        }
    return verdict(worst < 1e-12, "max violation " + fmt(worst));
  });
  run("lie_core", "structure sums (7, 7, 7/6, 7/6), three equal p2 sums", [] {
    const auto s = structure_sums(so17_structure<QSqrt3>());
    const QSqrt3 want(Rational(7, 6));
    const bool ok = s.d1 == 7 && s.d2 == 7 && s.p1_sum == want && s.p2_sum == want &&
                    s.p2_sum_from_p2p2 == want && s.p2_sum_from_p1p2 == want;
    return verdict(ok, "p1 = " + s.p1_sum.str() + ", p2 = " + s.p2_sum.str());
  });
  run("lie_core", "oracle matches ric_abc and ric_xyz", [&] {
    Rng rng(opt.seed);
    double worst = 0.0, dev = 0.0;
    for (int i = 0; i < opt.samples; ++i) {
      const auto q = random_phi_sqrt(rng);
      const auto o = ric_oracle<double>(q.a, q.b, q.c);
      worst = std::max(worst, triple_err(o.ric, ric_abc(q)));
      dev = std::max(dev, o.max_deviation);
      const auto p = random_phi(rng);
      const auto ox = ric_oracle_xyz(p);
      worst = std::max(worst, triple_err(ox.ric, ric_xyz(p)));
      dev = std::max(dev, ox.max_deviation);
    }
    return verdict(worst < 1e-9 && dev < 1e-9, "max rel err " + fmt(worst) + ", block deviation " + fmt(dev));
  });
}

void polyroots_checks(Runner& run, const SuiteOptions& opt) {
  run("polyroots", "sign certificates, Sturm counts, refinement stability", [&] {
    Rng rng(opt.seed + 1);
    std::uniform_int_distribution<int> R(-12, 12), N(1, 5), K(1, 2);
    for (int t = 0; t < opt.samples; ++t) {
      // product of (4x - r)^k over distinct r, times (x^2 + 1)
      std::vector<int> roots;
      QPoly p({Rational(1), Rational(0), Rational(1)});
      const int n = N(rng);
      for (int i = 0; i < n; ++i) {
        const int r = R(rng);
        const int k = K(rng);
        if (std::find(roots.begin(), roots.end(), r) == roots.end()) roots.push_back(r);
        for (int j = 0; j < k; ++j) {
          std::vector<Rational> c(p.coeffs().size() + 1, Rational(0));
          for (std::size_t e = 0; e < p.coeffs().size(); ++e) {
            c[e] -= r * p[e];
            c[e + 1] += 4 * p[e];
          }
          p = QPoly(std::move(c));
        }
      }
      std::sort(roots.begin(), roots.end());
      const auto coarse = real_roots(p, 1e-3), fine = real_roots(p, 1e-13);
      if (count_real_roots(p) != static_cast<int>(roots.size()) || fine.size() != roots.size() ||
          coarse.size() != roots.size())
        return verdict(false, "root count mismatch");
      for (std::size_t i = 0; i < roots.size(); ++i) {
        if (std::abs(fine[i].value - roots[i] / 4.0) > 1e-12) return verdict(false, "root value mismatch");
        if (!(coarse[i].lo <= fine[i].hi && fine[i].lo <= coarse[i].hi)) return verdict(false, "refinement moved a root");
        if (fine[i].multiplicity == 1 && fine[i].width > 0.0) {
          const QPoly sf = square_free_part(p);
          if (sign_at(sf, fine[i].lo) * sign_at(sf, fine[i].hi) >= 0) return verdict(false, "no sign change");
        }
      }
    }
    return std::to_string(opt.samples) + " polynomials";
  });
}

std::vector<TwoSummandParams> param_sets() {
  return {so17_params(),
          {1, 2, Rational(0), Rational(1)},
          {4, 6, Rational(0), Rational(3, 2)},
          {10, 12, Rational(2), Rational(5)},
          {3, 8, Rational(1, 2), Rational(2)}};
}

void generic_checks(Runner& run, const SuiteOptions& opt) {
  run("generic_prp", "image parabola roundtrip", [&] {
    Rng rng(opt.seed + 2);
    std::uniform_real_distribution<double> T(-6.0, -0.5001);
    double worst = 0.0;
    for (const auto& p : param_sets())
      for (int i = 0; i < opt.samples; ++i) {
        const double t2 = T(rng);
        const auto s = solve_T<double>(p, t2);
        const auto r = ric_diag<double>(p, s.lambda);
        worst = std::max({worst, rel_err(r.t1, s.t1), rel_err(r.t2, t2)});
      }
    return verdict(worst < 1e-12, "max rel err " + fmt(worst));
  });
  run("generic_prp", "r1 > 0 and r2 < 0 for all lambda", [&] {
    Rng rng(opt.seed + 3);
    std::uniform_real_distribution<double> L(-6.0, 6.0);
    for (const auto& p : param_sets())
      for (int i = 0; i < opt.samples; ++i) {
        const auto r = ric_diag<double>(p, std::exp(L(rng)));
        if (!(r.t1 > 0.0) || !(r.t2 < 0.0)) return verdict(false, "sign violated");
      }
    return std::string("ok");
  });
  run("generic_prp", "cT quadratic residual, roundtrip and two-solution band", [&] {
    Rng rng(opt.seed + 4);
    std::uniform_real_distribution<double> U(0.0, 1.0);
    double worst = 0.0;
    int two = 0;
    for (const auto& p : param_sets()) {
      if (is_trivial_p1(p)) continue;
      const double tau = ct_threshold(p);
      for (int i = 0; i < opt.samples; ++i) {
        const double t2 = -0.2 - 3.0 * U(rng);
        const double rho = tau - 3.0 * U(rng) * U(rng);
        const double t1 = rho * t2;
        const auto a = analyze_cT(p, t1, t2);
        for (const auto& b : {a.plus, a.minus}) {
          if (!b) continue;
          if (!(b->c > 0.0) || !(b->lambda > 0.0)) return verdict(false, "nonpositive c or lambda");
          const auto r = ric_diag<double>(p, b->lambda);
          worst = std::max({worst, std::abs(ct_quadratic_residual(p, t1, t2, b->c)), rel_err(r.t1, b->c * t1),
                            rel_err(r.t2, b->c * t2)});
        }
        if (a.solution_count == 2) {
          ++two;
          if (!(rho > a.second_band_low)) return verdict(false, "second solution outside the band");
        } else if (rho > a.second_band_low + 1e-9) {
          return verdict(false, "missing second solution inside the band");
        }
      }
    }
    return verdict(worst < 1e-10, "max err " + fmt(worst) + ", " + std::to_string(two) + " two-solution cases");
  });
  run("generic_prp", "threshold matches the z = 0 bound of SO(1,7)/G2", [] {
    const double tau = ct_threshold(so17_params());
    const double e1 = std::abs(tau - (6.0 - 3.0 * std::sqrt(5.0)));
    const double e2 = std::abs(1.0 / tau - diagonal_ct_lower_bound());
    return verdict(e1 < 1e-12 && e2 < 1e-12, "tau = " + fmt(tau));
  });
}

void so17_checks(Runner& run, const SuiteOptions& opt) {
  run("so17_prp", "ric_abc = ric_xyz o phi_square", [&] {
    Rng rng(opt.seed + 5);
    double worst = 0.0;
    for (int i = 0; i < opt.samples; ++i) {
      const auto q = random_phi_sqrt(rng);
      worst = std::max(worst, triple_err(ric_abc(q), ric_xyz(phi_square(q))));
    }
    return verdict(worst < 1e-10, "max rel err " + fmt(worst));
  });
  run("so17_prp", "phi_sqrt roundtrip", [&] {
    Rng rng(opt.seed + 6);
    double worst = 0.0;
    for (int i = 0; i < opt.samples; ++i) {
      const auto p = random_phi(rng);
      const auto q = phi_sqrt(p);
      const auto back = phi_square(q);
      if (!(q.a > 0.0 && q.b > 0.0 && q.a * q.b - q.c * q.c > 0.0)) return verdict(false, "not positive definite");
      worst = std::max({worst, rel_err(back.x, p.x), rel_err(back.y, p.y), rel_err(back.z, p.z)});
    }
    return verdict(worst < 1e-12, "max rel err " + fmt(worst));
  });
  run("so17_prp", "scale invariance, reflection, r1 > 3/8", [&] {
    Rng rng(opt.seed + 7);
    double worst = 0.0, floor = INFINITY;
    for (int i = 0; i < opt.samples; ++i) {
      const auto p = random_phi(rng);
      const auto r = ric_xyz(p);
      const auto s = ric_xyz(PhiParams<double>{2.5 * p.x, 2.5 * p.y, 2.5 * p.z});
      const auto f = ric_xyz(PhiParams<double>{p.x, p.y, -p.z});
      worst = std::max({worst, triple_err(s, r), triple_err(f, {r.r1, r.r2, -r.r3})});
      floor = std::min(floor, r.r1);
    }
    const auto g = ric_xyz(PhiParams<Rational>{Rational(1), Rational(1), Rational(1, 2)});
    const auto gf = ric_xyz(PhiParams<Rational>{Rational(1), Rational(1), Rational(-1, 2)});
    const bool exact = gf.r1 == g.r1 && gf.r2 == g.r2 && gf.r3 == -g.r3;
    return verdict(worst < 1e-12 && floor > 0.375 && exact, "max rel err " + fmt(worst) + ", min r1 " + fmt(floor));
  });
  run("so17_prp", "image satisfies the cubic and t1 = f1(t2, t3)", [&] {
    Rng rng(opt.seed + 8);
    double cubic = 0.0, first = 0.0;
    int skipped = 0;
    for (int i = 0; i < opt.samples; ++i) {
      const auto p = random_phi(rng);
      const auto r = ric_xyz(p);
      cubic = std::max(cubic, std::abs(image_cubic_value(r.r1, r.r2, r.r3)) / image_cubic_scale(r.r1, r.r2, r.r3));
      if (r.r2 > -0.75 && std::abs(std::abs(r.r3) - exceptional_t3(r.r2)) < 1e-6) {
        ++skipped;
        continue;
      }
      first = std::max(first, rel_err(f1(r.r2, r.r3), r.r1));
    }
    const auto g = ric_xyz(PhiParams<Rational>{Rational(1), Rational(1), Rational(1, 2)});
    const bool exact = image_cubic_value(g.r1, g.r2, g.r3) == 0;
    return verdict(cubic < 1e-9 && first < 1e-9 && exact,
                   "cubic " + fmt(cubic) + ", f1 " + fmt(first) + ", exceptional skipped " + std::to_string(skipped));
  });
  run("so17_prp", "solve_cT returns c with cT in the image", [&] {
    Rng rng(opt.seed + 9);
    std::uniform_real_distribution<double> S(0.2, 5.0);
    int found = 0;
    for (int i = 0; i < opt.samples / 4; ++i) {
      const auto r = ric_xyz(random_phi(rng));
      const double s = S(rng);
      const TensorTriple<double> T{r.r1 * s, r.r2 * s, r.r3 * s};
      const auto res = solve_cT_so17(T);
      bool hit = false;
      for (double c : res.c) {
        if (!solve_T_so17({c * T.t1, c * T.t2, c * T.t3}).member) return verdict(false, "returned c not in image");
        hit |= std::abs(c - 1.0 / s) < 1e-9 * std::max(1.0, 1.0 / s);
      }
      if (!hit) return verdict(false, "scale " + fmt(1.0 / s) + " not recovered");
      found += static_cast<int>(res.c.size());
    }
    bool rejected = false;
    try {
      solve_cT_so17({-1.0, -1.0, 0.5});
    } catch (const std::invalid_argument&) {
      rejected = true;
    }
    return verdict(rejected, std::to_string(found) + " c values checked, t1 <= 0 rejected");
  });
  run("so17_prp", "region_contains agrees with the preimage search", [&] {
    Rng rng(opt.seed + 10);
    std::uniform_real_distribution<double> L(-3.0, 1.0), M(0.01, 3.0);
    int bad = 0, inconclusive = 0;
    for (int i = 0; i < opt.region_samples; ++i) {
      const auto r = ric_xyz(random_phi(rng));
      const double l = r.r2 / r.r1, m = std::abs(r.r3) / r.r1;
      if (m == 0.0) continue;
      const auto o = region_oracle(l, m);
      if (!region_contains(l, m).contained || o.verdict == OracleVerdict::NonMember) ++bad;
      if (o.verdict == OracleVerdict::Inconclusive) ++inconclusive;
    }
    for (int n = 0; n < opt.region_samples;) {
      const double l = L(rng), m = M(rng);
      if (region_contains(l, m).contained || region_contains(l + 1e-3, m).contained ||
          region_contains(l - 1e-3, m).contained)
        continue;
      ++n;
      const auto o = region_oracle(l, m);
      if (o.verdict == OracleVerdict::Member) ++bad;
      if (o.verdict == OracleVerdict::Inconclusive) ++inconclusive;
    }
    return verdict(bad == 0, std::to_string(bad) + " disagreements, " + std::to_string(inconclusive) + " inconclusive");
  });
}

void registry_checks(Runner& run, const SuiteOptions& opt) {
  run("classification_registry", "row counts match the manifest, one equivalent-summands row", [&] {
    const std::string dir = opt.data_dir.empty() ? default_data_dir() : opt.data_dir;
    const auto reg = Registry::load(dir + "/classification.tsv");
    const auto manifest = load_manifest(dir + "/classification_manifest.tsv");
    const auto eq = reg.filter([](const TripleEntry& e) { return e.has(kEquivalentSummands); });
    const bool ok = reg.table_counts() == manifest && eq.size() == 1 && eq[0].label == "I.16";
    return verdict(ok, std::to_string(reg.rows().size()) + " rows");
  });
}

}  // namespace

std::vector<CheckResult> run_invariant_suite(const SuiteOptions& opt) {
  std::vector<CheckResult> out;
  Runner run{out};
  lie_core_checks(run, opt);
  polyroots_checks(run, opt);
  generic_checks(run, opt);
  so17_checks(run, opt);
  registry_checks(run, opt);
  return out;
}

}  // namespace prc
