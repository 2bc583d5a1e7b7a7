#include "jbdet/suites.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <numbers>

#include "jbdet/biquat.hpp"
#include "jbdet/c6_auto.hpp"
#include "jbdet/determinant.hpp"
#include "jbdet/errors.hpp"
#include "jbdet/generators.hpp"
#include "jbdet/minproj.hpp"
#include "jbdet/octonion.hpp"
#include "jbdet/reduce.hpp"
#include "jbdet/sampling.hpp"
#include "jbdet/spectral.hpp"

namespace jbdet {

bool SuiteReport::pass() const {
  return std::all_of(properties.begin(), properties.end(), [](const PropertyResult& p) { return p.pass(); });
}

namespace {

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

double rel(cplx a, cplx b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

double mat_diff(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) { return (a - b).cwiseAbs().maxCoeff(); }

class Check {
 public:
  Check(std::string name, int criterion, double tol, const SuiteOptions& o, bool exact) {
    r_.name = std::move(name);
    r_.criterion = criterion;
    r_.tolerance = exact ? 0.0 : o.tolerance.value_or(tol);
  }

  void tick() { ++r_.trials; }
  void observe(double v) {
    if (std::isnan(v)) v = std::numeric_limits<double>::infinity();
    r_.worst = std::max(r_.worst, v);
  }
  void fail(const std::string& why) {
    if (r_.failures++ == 0) r_.note = why;
  }
  void require(bool ok, const std::string& why) {
    if (!ok) fail(why);
  }
  const PropertyResult& result() const { return r_; }

 private:
  PropertyResult r_;
};

class Suite {
 public:
  Suite(std::string_view name, const SuiteOptions& o) : o_(o), stream_(subseed(o.seed, fnv1a(name))) {
    report_.suite = std::string(name);
  }

  Check& add(std::string name, int criterion, double tol, bool exact = false) {
    return checks_.emplace_back(std::move(name), criterion, tol, o_, exact);
  }
  long count(long dflt) const { return o_.trials.value_or(dflt); }

  // Runs f(rng, i) for n trials; an exception fails every listed check.
  template <class F>
  void run(long n, std::initializer_list<Check*> cs, F&& f) {
    const std::uint64_t loop = subseed(stream_, loops_++);
    for (long i = 0; i < n; ++i) {
      Rng rng(subseed(loop, static_cast<std::uint64_t>(i)));
      for (Check* c : cs) c->tick();
      try {
        f(rng, i);
      } catch (const std::exception& e) {
        for (Check* c : cs) c->fail("trial " + std::to_string(i) + ": " + e.what());
      }
    }
  }

  std::map<std::string, long>& coverage() { return report_.coverage; }

  SuiteReport finish() {
    for (const Check& c : checks_) report_.properties.push_back(c.result());
    return std::move(report_);
  }

 private:
  const SuiteOptions& o_;
  std::uint64_t stream_;
  std::uint64_t loops_ = 0;
  std::deque<Check> checks_;
  SuiteReport report_;
};

// e_a e_b = e_c from each scheme abc, cyclically, and the reversed products
// with opposite sign.
struct OctonionTable {
  int index[8][8];
  int sign[8][8];

  OctonionTable() {
    for (int i = 0; i < 8; ++i) {
      index[0][i] = index[i][0] = i;
      sign[0][i] = sign[i][0] = 1;
    }
    for (int i = 1; i < 8; ++i) {
      index[i][i] = 0;
      sign[i][i] = -1;
    }
    static constexpr int kSchemes[7][3] = {{1, 3, 2}, {1, 5, 4}, {1, 6, 7}, {2, 6, 4},
                                           {2, 7, 5}, {3, 5, 6}, {3, 7, 4}};
    for (const auto& s : kSchemes) {
      for (int r = 0; r < 3; ++r) {
        const int a = s[r], b = s[(r + 1) % 3], c = s[(r + 2) % 3];
        index[a][b] = c;
        sign[a][b] = 1;
        index[b][a] = c;
        sign[b][a] = -1;
      }
    }
  }
};

HermMatrix integer_herm(Rng& rng) {
  HermMatrix x(3, 3);
  for (Eigen::Index k = 0; k < x.dim(); ++k) {
    const int re = rng.index(7) - 3;
    x.coords()(k) = cplx(re, rng.index(7) - 3);
  }
  return x;
}

HermMatrix symmetry(Rng& rng, int level) {
  const Frame f = random_frame(rng, level);
  auto sign = [&] { return cplx(rng.index(2) == 0 ? -1.0 : 1.0, 0.0); };
  return combine(f, {sign(), sign(), sign()});
}

std::array<cplx, 3> unimodular(Rng& rng) { return {rng.unit_complex(), rng.unit_complex(), rng.unit_complex()}; }

double sup_rel(const HermMatrix& x, const HermMatrix& ref) {
  return max_abs_diff(x, ref) / std::max(1.0, sup_norm(ref));
}

// ---------------------------------------------------------------------------

SuiteReport cd_laws(const SuiteOptions& o) {
  Suite s("cd-laws", o);
  Check& assoc = s.add("associativity at levels 0..2", 1, 1e-10);
  Check& alt = s.add("alternativity at level 3", 1, 1e-10);
  Check& table = s.add("octonion table matches the scheme list", 2, 0.0, true);
  Check& inv = s.add("involutions: x^^ = x, x** = x, conj = * after ^", 0, 1e-12);
  Check& recur = s.add("table product equals doubling recursion up to level 5", 0, 1e-12);
  Check& adj = s.add("adjoint identities of the octonion product", 0, 1e-10);
  Check& jord = s.add("{x,1,y} is the Jordan product", 0, 1e-10);
  Check& inner = s.add("inner product from x y* + conj(y) x^", 0, 1e-10);
  Check& spin = s.add("spin norm equals Hilbert norm on the real form", 0, 1e-12);

  s.run(s.count(1000), {&assoc}, [&](Rng& rng, long) {
    for (int level = 0; level <= 2; ++level) {
      const CDElement x = random_cd(rng, level), y = random_cd(rng, level), z = random_cd(rng, level);
      assoc.observe(max_abs_diff((x * y) * z, x * (y * z)));
    }
  });
  s.run(s.count(1000), {&alt}, [&](Rng& rng, long) {
    const CDElement x = random_cd(rng, 3), y = random_cd(rng, 3);
    alt.observe(max_abs_diff(x * (x * y), (x * x) * y));
    alt.observe(max_abs_diff((y * x) * x, y * (x * x)));
  });

  table.tick();
  const OctonionTable t;
  for (std::size_t i = 0; i < 8; ++i) {
    for (std::size_t j = 0; j < 8; ++j) {
      const CDElement p = CDElement::basis(3, i) * CDElement::basis(3, j);
      CDElement want(3);
      want[static_cast<std::size_t>(t.index[i][j])] = static_cast<double>(t.sign[i][j]);
      for (std::size_t k = 0; k < 8; ++k) {
        if (p[k] != want[k]) {
          table.fail("e" + std::to_string(i) + " e" + std::to_string(j) + " differs at coordinate " +
                     std::to_string(k));
          table.observe(std::abs(p[k] - want[k]));
        }
      }
    }
  }

  s.run(s.count(1000), {&inv, &recur}, [&](Rng& rng, long) {
    for (int level = 0; level <= 3; ++level) {
      const CDElement x = random_cd(rng, level);
      inv.observe(max_abs_diff(cd_diamond(cd_diamond(x)), x));
      inv.observe(max_abs_diff(cd_star(cd_star(x)), x));
      inv.observe(max_abs_diff(cd_conj(x), cd_star(cd_diamond(x))));
    }
    const int level = 1 + rng.index(5);
    const CDElement x = random_cd(rng, level), y = random_cd(rng, level);
    recur.observe(max_abs_diff(cd_multiply(x, y), cd_multiply_recursive(x, y)));
  });

  s.run(s.count(500), {&adj, &jord, &inner, &spin}, [&](Rng& rng, long) {
    const CDElement x = random_cd(rng, 3), y = random_cd(rng, 3), z = random_cd(rng, 3);
    adj.observe(std::abs(cd_inner(x * cd_star(z), y) - cd_inner(x, y * z)));
    adj.observe(std::abs(cd_inner(cd_star(z) * x, y) - cd_inner(x, z * y)));
    jord.observe(max_abs_diff(cd_triple(x, CDElement::one(3), y), cd_jordan(x, y)));
    const CDElement form = 0.5 * (x * cd_star(y) + cd_conj(y) * cd_diamond(x));
    inner.observe(max_abs_diff(form, CDElement::scalar(3, cd_inner(x, y))));
    const CDElement r = random_cd(rng, 3, true);
    spin.observe(std::abs(cd_spin_norm(r) - cd_norm2(r)));
  });
  return s.finish();
}

SuiteReport hat_suite(const SuiteOptions& o) {
  Suite s("hat", o);
  Check& mult = s.add("hat(x y) = hat(x) hat(y)", 3, 1e-12);
  Check& dia = s.add("hat(x^) is the adjugate of hat(x)", 3, 1e-12);
  Check& st = s.add("hat(x*) is the conjugate transpose of hat(x)", 3, 1e-12);
  Check& cj = s.add("hat(conj x) and the transported involutions", 3, 1e-12);
  Check& round = s.add("unhat inverts hat", 0, 1e-14);
  Check& block = s.add("blockwise hat is multiplicative on matrices", 0, 1e-11);

  s.run(s.count(1000), {&mult, &dia, &st, &cj, &round}, [&](Rng& rng, long) {
    const CDElement x = random_cd(rng, 2), y = random_cd(rng, 2);
    const Mat2C hx = hat(x);
    mult.observe(mat_diff(hat(x * y), hx * hat(y)));
    Mat2C adjugate;
    adjugate << hx(1, 1), -hx(0, 1), -hx(1, 0), hx(0, 0);
    dia.observe(mat_diff(hat(cd_diamond(x)), adjugate));
    dia.observe(mat_diff(hat_diamond(hx), adjugate));
    st.observe(mat_diff(hat(cd_star(x)), hx.adjoint()));
    st.observe(mat_diff(hat_star(hx), hx.adjoint()));
    cj.observe(mat_diff(hat(cd_conj(x)), adjugate.adjoint()));
    cj.observe(mat_diff(hat_conj(hx), adjugate.adjoint()));
    round.observe(max_abs_diff(unhat(hx), x));
  });
  s.run(s.count(200), {&block}, [&](Rng& rng, long) {
    const int n = 1 + rng.index(4);
    CDMatrix a(n, 2), b(n, 2);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        a(i, j) = random_cd(rng, 2);
        b(i, j) = random_cd(rng, 2);
      }
    }
    block.observe(mat_diff(hat_matrix(box_mul(a, b)), hat_matrix(a) * hat_matrix(b)));
    block.observe(max_abs_diff(unhat_matrix(hat_matrix(a)), a));
  });
  return s.finish();
}

SuiteReport t_determinant(const SuiteOptions& o) {
  Suite s("t-determinant", o);
  for (int n = 1; n <= 4; ++n) {
    const std::string tag = " (n = " + std::to_string(n) + ")";
    Check& sq = s.add("dt^2 = det(hat)" + tag, 4, 1e-9);
    Check& hom = s.add("dt(a x) = a^n dt(x)" + tag, 4, 1e-9);
    Check& cp = s.add("characteristic polynomial leading 1, constant (-1)^n dt" + tag, 4, 1e-8);
    Check& pen = s.add("pencil dt(l y + x) has leading dt(y), constant dt(x)" + tag, 4, 1e-8);
    Check& half = s.add("hat eigenvalues have even multiplicity, half product = dt" + tag, 4, 1e-8);
    s.run(s.count(500), {&sq, &hom, &cp, &pen, &half}, [&](Rng& rng, long) {
      const HermMatrix x = random_herm(rng, n, 2);
      const cplx d = dt_value(x, &rng);
      const cplx det = det_lu(hat_matrix(x));
      sq.observe(std::abs(d * d - det) / std::max(1.0, std::abs(det)));

      const cplx a = rng.normal_complex();
      hom.observe(std::abs(dt_value(a * x, &rng) - std::pow(a, n) * d));

      const Polynomial p = char_poly(x);
      const double sign = n % 2 == 0 ? 1.0 : -1.0;
      cp.require(p.degree() == n, "characteristic polynomial has the wrong degree");
      cp.observe(std::abs(p.leading() - 1.0));
      cp.observe(std::abs(p.coeffs[0] - sign * d));

      const HermMatrix y = random_herm(rng, n, 2);
      const Polynomial q = dt_pencil(x, y);
      pen.observe(std::abs(q.leading() - dt_value(y, &rng)));
      pen.observe(std::abs(q.coeffs[0] - d));

      const EigenHalf eh = eigen_half(x);
      half.require(eh.even, "odd eigenvalue cluster in hat");
      half.observe(std::abs(eh.half_product - d));
    });
  }

  Check& sarrus = s.add("Sarrus form equals recursive dt_3", 5, 1e-10);
  Check& route = s.add("tiny leading pivot switches to interpolation", 5, 1e-10);
  const long ns = s.count(1000);
  const long tiny = std::max(1L, ns / 10);
  s.run(ns, {&sarrus}, [&](Rng& rng, long i) {
    HermMatrix x = random_herm(rng, 3, 2);
    const bool small = i >= ns - tiny;
    if (small) x.set_diag(0, 1e-10 * rng.unit_complex());
    const DtResult r = dt_n(x, &rng);
    sarrus.observe(std::abs(dt3_sarrus(x) - r.value));
    if (small) {
      route.tick();
      route.require(r.route == DtRoute::interpolated, "route was " + to_string(r.route));
      route.observe(std::abs(dt3_sarrus(x) - r.value));
    }
  });

  Check& prod = s.add("dt_3(x) = dt_3,e(x) dt_3(e)", 6, 1e-8);
  Check& branch = s.add("square-root branches give the same dt_3,e", 6, 1e-8);
  s.run(s.count(300), {&prod, &branch}, [&](Rng& rng, long) {
    const HermMatrix x = random_herm(rng, 3, 2);
    const HermMatrix e = random_unitary(rng, 2);
    const cplx de = dt_relative(x, e);
    const cplx dx = dt_value(x, &rng);
    prod.observe(std::abs(dx - de * dt_value(e, &rng)));
    const unsigned mask = 1u + static_cast<unsigned>(rng.index(7));
    branch.observe(std::abs(dt_relative(x, e, mask) - de));
  });
  return s.finish();
}

SuiteReport t_minproj(const SuiteOptions& o) {
  Suite s("t-minproj", o);
  Check& suff = s.add("sufficiency: sampled forms are projections with Peirce-2 dimension 1", 7, 1e-10);
  Check& nec_sp = s.add("necessity: spectral components classify", 7, kMinProjClassifyTol);
  Check& nec_aut = s.add("necessity: automorphism scrambles classify", 7, kMinProjClassifyTol);
  Check& rank2 = s.add("hat of a biquaternionic minimal projection has rank 2", 7, 1e-6);
  Check& comp = s.add("complement r of a full form is orthogonal to q", 0, 1e-9);
  Check& cmpl = s.add("1 - q is a rank-2 projection", 0, 1e-9);

  static constexpr MinProjForm kForms[] = {MinProjForm::corner, MinProjForm::lower2x2, MinProjForm::full};
  s.run(s.count(1000), {&suff}, [&](Rng& rng, long) {
    const double u = rng.uniform();
    const MinProjForm f = u < 0.1 ? kForms[0] : (u < 0.3 ? kForms[1] : kForms[2]);
    const HermMatrix q = build_min_projection(random_min_proj_params(rng, f));
    suff.observe(projection_residual(q));
    suff.require(peirce2_dim(q) == 1, "Peirce-2 dimension is not 1");
  });

  const long nn = s.count(500);
  const long half = std::max(1L, nn / 2);
  s.run(half, {&nec_sp}, [&](Rng& rng, long) {
    const HermMatrix x = random_self_adjoint(rng, 3, 3);
    const SpectralResolution sr = spectral_decompose(x);
    const HermMatrix& q = sr.components[static_cast<std::size_t>(rng.index(static_cast<int>(sr.components.size())))];
    nec_sp.observe(classify_min_projection(q).residual);
  });
  s.run(nn - half, {&nec_aut}, [&](Rng& rng, long) {
    HermMatrix q = rng.index(4) == 0 ? HermMatrix::diagonal(std::array<cplx, 3>{1.0, 0.0, 0.0}, 3)
                                     : random_min_projection(rng);
    for (int k = 0; k < 3; ++k) {
      const RandomLift l = random_lift(rng);
      q = apply_lift(l.t, l.variant, q);
    }
    const int k = 1 + rng.index(3);
    const int l = 1 + (k + rng.index(2)) % 3;
    q = exchange(q, k, l);
    const HermMatrix sym = symmetry(rng, 3);
    q = triple(sym, star(q), sym);
    nec_aut.observe(classify_min_projection(q).residual);
  });

  s.run(s.count(500), {&rank2}, [&](Rng& rng, long i) {
    HermMatrix q;
    if (i % 2 == 0) {
      q = random_frame(rng, 2)[static_cast<std::size_t>(rng.index(3))];
    } else {
      const SpectralResolution sr = spectral_decompose(random_self_adjoint(rng, 3, 2));
      q = sr.components[0];
    }
    const std::vector<double> sv = singular_values(hat_matrix(q));
    const int rank = static_cast<int>(std::count_if(sv.begin(), sv.end(), [&](double v) { return v > 1e-6 * sv[0]; }));
    rank2.require(rank == 2, "numerical rank " + std::to_string(rank));
    rank2.require(sv[1] - sv[2] >= 1e-6, "singular-value gap below 1e-6");
    rank2.observe(sv[2] / sv[0]);
  });

  s.run(s.count(300), {&comp, &cmpl}, [&](Rng& rng, long) {
    const MinProjParams p = random_min_proj_params(rng, MinProjForm::full);
    const HermMatrix q = build_min_projection(p);
    const HermMatrix r = min_projection_complement(p);
    comp.observe(projection_residual(r));
    comp.observe(sup_norm(jordan_mul(r, q)));
    comp.require(tripotent_rank(r) == 1, "complement is not minimal");
    const HermMatrix c = c6_identity() - q;
    cmpl.observe(projection_residual(c));
    cmpl.require(tripotent_rank(c) == 2, "1 - q does not have rank 2");
  });
  return s.finish();
}

SuiteReport aut_octonion(const SuiteOptions& o) {
  Suite s("aut-octonion", o);
  Check& p1 = s.add("P1 is an automorphism", 8, 1e-9);
  Check& p2 = s.add("P2 is an automorphism", 8, 1e-9);
  Check& basis = s.add("P1 and P2 preserve all basis products", 2, 0.0, true);
  Check& mult = s.add("pair multipliers: triple isomorphisms, automorphisms when h1 = 1", 0, 1e-9);
  Check& can = s.add("canonicalizations reach their target spans", 0, 1e-9);
  Check& div = s.add("left and right division", 0, 1e-9);

  const OctonionMap mp1 = permutation_auto(Permutation::P1);
  const OctonionMap mp2 = permutation_auto(Permutation::P2);
  s.run(s.count(1), {&p1, &p2}, [&](Rng& rng, long) {
    p1.observe(octonion_automorphism_residual(mp1, rng, 64));
    p1.observe(orthogonality_residual(mp1));
    p2.observe(octonion_automorphism_residual(mp2, rng, 64));
    p2.observe(orthogonality_residual(mp2));
  });

  basis.tick();
  for (const OctonionMap* m : {&mp1, &mp2}) {
    for (std::size_t i = 0; i < 8; ++i) {
      for (std::size_t j = 0; j < 8; ++j) {
        const CDElement x = CDElement::basis(3, i), y = CDElement::basis(3, j);
        const double d = max_abs_diff((*m)(x * y), (*m)(x) * (*m)(y));
        basis.observe(d);
        if (d != 0.0) basis.fail("basis pair e" + std::to_string(i) + " e" + std::to_string(j));
      }
    }
  }

  s.run(s.count(100), {&mult}, [&](Rng& rng, long) {
    const CDElement h1 = random_unit_real(rng, 2);
    const OctonionMap t = pair_multiplier(h1, random_unit_real(rng, 2));
    mult.observe(octonion_triple_iso_residual(t, rng, 16));
    const OctonionMap a = pair_multiplier(CDElement::one(2), random_unit_real(rng, 2));
    mult.observe(octonion_automorphism_residual(a, rng, 16));
  });

  s.run(s.count(200), {&can, &div}, [&](Rng& rng, long) {
    const CDElement u = random_cd(rng, 3, true);
    const OctonionMap ta = canonicalize_a(u);
    CDElement im = ta(u);
    double r = 0.0;
    for (std::size_t k = 1; k < 8; ++k) r = std::max(r, std::abs(im[k]));
    can.observe(r / cd_norm2(u));
    can.observe(octonion_triple_iso_residual(ta, rng, 8));

    const OctonionMap tb = canonicalize_b(u);
    im = tb(u);
    r = 0.0;
    for (std::size_t k = 2; k < 8; ++k) r = std::max(r, std::abs(im[k]));
    can.observe(r / cd_norm2(u));
    can.observe(octonion_automorphism_residual(tb, rng, 8));

    const OctonionMap tc = canonicalize_c(u);
    im = tc(u);
    r = 0.0;
    for (std::size_t k = 3; k < 8; ++k) r = std::max(r, std::abs(im[k]));
    can.observe(r / cd_norm2(u));
    can.observe(max_abs_diff(tc(CDElement::basis(3, 1)), CDElement::basis(3, 1)));
    can.observe(octonion_automorphism_residual(tc, rng, 8));

    const CDElement x = random_cd(rng, 3, true), y = random_cd(rng, 3, true);
    div.observe(max_abs_diff(or_divide_left(x, y) * y, x));
    div.observe(max_abs_diff(y * or_divide_right(x, y), x));
  });
  return s.finish();
}

SuiteReport aut_c6(const SuiteOptions& o) {
  Suite s("aut-c6", o);
  static constexpr LiftVariant kVariants[] = {LiftVariant::base, LiftVariant::T1, LiftVariant::T2, LiftVariant::T3};
  std::array<Check*, 4> lifts{};
  for (std::size_t v = 0; v < 4; ++v) {
    lifts[v] = &s.add("lift " + to_string(kVariants[v]) + " is a Jordan *-automorphism", 8, 1e-9);
  }
  Check& exact = s.add("U_kl equals {u, x*, u} exactly on integer coordinates", 8, 0.0, true);
  Check& gauss = s.add("U_kl oracle on Gaussian inputs", 0, 1e-14);
  Check& conj = s.add("variants are exchange conjugates of the base lift", 0, 1e-13);
  Check& shift = s.add("shifts are triple automorphisms with T(1) = u^2", 0, 1e-9);
  Check& comp = s.add("composition of six lifts is a Jordan *-automorphism", 0, 1e-9);
  Check& pres = s.add("automorphisms preserve dt, projections, rank and orthogonality", 0, 1e-8);
  Check& diag = s.add("lifted maps preserve diagonal matrices", 0, 1e-12);

  s.run(s.count(8), {lifts[0], lifts[1], lifts[2], lifts[3]}, [&](Rng& rng, long i) {
    OctonionMap t;
    if (i == 0) t = permutation_auto(Permutation::P1);
    else if (i == 1) t = permutation_auto(Permutation::P2);
    else t = random_octonion_iso(rng, i % 2 == 0);
    for (std::size_t v = 0; v < 4; ++v) {
      const KindReport k = verify_kind(lift_auto(t, kVariants[v]), rng, 64);
      lifts[v]->observe(std::max({k.jordan_residual, k.star_residual, k.unit_residual}));
      lifts[v]->require(k.derived == AutoKind::jordan_star_auto, "derived kind " + to_string(k.derived));
    }
  });

  s.run(s.count(64), {&exact, &gauss}, [&](Rng& rng, long) {
    const HermMatrix x = integer_herm(rng);
    const HermMatrix g = random_herm(rng, 3, 3);
    for (int k = 1; k <= 3; ++k) {
      for (int l = k + 1; l <= 3; ++l) {
        const HermMatrix u = exchange_symmetry(k, l);
        const HermMatrix want = triple(u, star(x), u);
        const double d = std::max(max_abs_diff(exchange(x, k, l), want), max_abs_diff(exchange_auto(k, l)(x), want));
        exact.observe(d);
        if (d != 0.0) exact.fail("U_" + std::to_string(k) + std::to_string(l) + " differs from its oracle");
        gauss.observe(sup_rel(exchange(g, k, l), triple(u, star(g), u)));
      }
    }
  });

  s.run(s.count(50), {&conj, &diag}, [&](Rng& rng, long) {
    const OctonionMap t = random_octonion_iso(rng);
    const HermMatrix x = random_herm(rng, 3, 3);
    const HermMatrix base = apply_lift(t, LiftVariant::base, exchange(x, 1, 3));
    conj.observe(sup_rel(apply_lift(t, LiftVariant::T1, x), exchange(base, 1, 3)));
    const std::array<cplx, 3> d{rng.normal_complex(), rng.normal_complex(), rng.normal_complex()};
    const HermMatrix dm = HermMatrix::diagonal(d, 3);
    for (LiftVariant v : kVariants) diag.observe(max_abs_diff(apply_lift(t, v, dm), dm));
  });

  s.run(s.count(20), {&shift}, [&](Rng& rng, long) {
    const HermMatrix u = random_unitary(rng);
    const C6Auto a = shift_auto(u);
    const KindReport k = verify_kind(a, rng, 64);
    shift.observe(k.triple_residual);
    shift.observe(max_abs_diff(a(c6_identity()), jordan_mul(u, u)));
  });

  s.run(s.count(10), {&comp}, [&](Rng& rng, long) {
    const C6Auto a = random_lifted_auto(rng, 6);
    const KindReport k = verify_kind(a, rng, 64);
    comp.observe(std::max({k.jordan_residual, k.star_residual, k.unit_residual}));
  });

  s.run(s.count(50), {&pres}, [&](Rng& rng, long) {
    HermMatrix u = random_unitary(rng);
    Frame f = random_frame(rng);
    const cplx before = dt_unitary(u);
    for (int k = 0; k < 3; ++k) {
      const RandomLift l = random_lift(rng);
      u = apply_lift(l.t, l.variant, u);
      for (auto& q : f) q = apply_lift(l.t, l.variant, q);
    }
    pres.observe(rel(dt_unitary(u), before));
    for (const auto& q : f) {
      pres.observe(projection_residual(q));
      pres.require(tripotent_rank(q) == 1, "image of a minimal projection is not minimal");
    }
    pres.observe(sup_norm(jordan_mul(f[0], f[1])));
  });
  return s.finish();
}

SuiteReport t_spectral(const SuiteOptions& o) {
  Suite s("t-spectral", o);
  Check& eig = s.add("eigenvalues of sum a_j q_j are recovered", 0, 1e-8);
  Check& uniq = s.add("repeated eigenvalue: frames differ, spectrum and sum agree across seeds", 0, 1e-8);
  Check& comp = s.add("isotope components are orthogonal tripotents summing to the unit", 0, 1e-7);
  Check& sqr = s.add("unitary square root squares back in the isotope", 0, 1e-7);
  Check& dt3 = s.add("dt of a biquaternionic unitary equals dt_3", 0, 1e-8);
  Check& dte = s.add("isotope dt_e equals dt_3,e on biquaternionic unitaries", 0, 1e-7);
  Check& sa = s.add("self-adjoint elements: real spectrum, projection components", 0, 1e-7);

  s.run(s.count(200), {&eig}, [&](Rng& rng, long) {
    const std::array<cplx, 3> a = unimodular(rng);
    const SpectralResolution sr = spectral_decompose(combine(random_frame(rng), a));
    std::vector<cplx> want(a.begin(), a.end());
    std::vector<cplx> got;
    for (std::size_t j = 0; j < sr.eigenvalues.size(); ++j) {
      for (int m = 0; m < sr.multiplicities[j]; ++m) got.push_back(sr.eigenvalues[j]);
    }
    eig.require(got.size() == 3, "multiplicities do not sum to 3");
    if (got.size() != 3) return;
    for (const cplx& w : want) {
      double best = std::numeric_limits<double>::infinity();
      for (const cplx& g : got) best = std::min(best, std::abs(g - w));
      eig.observe(best);
    }
  });

  s.run(s.count(50), {&uniq}, [&](Rng& rng, long) {
    const cplx a = rng.unit_complex(), b = rng.unit_complex();
    const HermMatrix x = combine(random_frame(rng), {a, a, b});
    std::array<cplx, 3> al1{}, al2{};
    const Frame f1 = minimal_frame(x, &al1, rng.next());
    const Frame f2 = minimal_frame(x, &al2, rng.next());
    uniq.observe(max_abs_diff(combine(f1, al1), x));
    uniq.observe(max_abs_diff(combine(f2, al2), x));
    for (const Frame* f : {&f1, &f2}) {
      for (const auto& q : *f) uniq.require(peirce2_dim(q) == 1, "frame member is not minimal");
    }
    auto key = [](const cplx& z, const cplx& w) { return std::arg(z) < std::arg(w); };
    std::sort(al1.begin(), al1.end(), key);
    std::sort(al2.begin(), al2.end(), key);
    for (std::size_t j = 0; j < 3; ++j) uniq.observe(std::abs(al1[j] - al2[j]));
  });

  s.run(s.count(100), {&comp, &sqr}, [&](Rng& rng, long) {
    const HermMatrix e = random_unitary(rng);
    const HermMatrix u = random_unitary(rng);
    const SpectralResolution sr = spectral_decompose(u, e);
    HermMatrix sum(3, 3);
    for (std::size_t j = 0; j < sr.components.size(); ++j) {
      comp.observe(tripotent_residual(sr.components[j]));
      sum += sr.components[j];
      for (std::size_t k = j + 1; k < sr.components.size(); ++k) {
        comp.observe(sup_norm(triple(sr.components[j], sr.components[j], sr.components[k])));
      }
    }
    comp.observe(max_abs_diff(sum, e));
    comp.observe(sr.residual);
    const HermMatrix v = unitary_sqrt(u, e);
    sqr.observe(max_abs_diff(isotope_mul(v, v, e), u));
    sqr.observe(unitary_residual(v));
  });

  s.run(s.count(100), {&dt3, &dte}, [&](Rng& rng, long) {
    const HermMatrix u = random_unitary(rng, 2);
    const HermMatrix e = random_unitary(rng, 2);
    dt3.observe(rel(dt_unitary(promote(u, 3)), dt_value(u, &rng)));
    dte.observe(rel(dt_unitary(promote(u, 3), promote(e, 3)), dt_relative(u, e)));
  });

  s.run(s.count(100), {&sa}, [&](Rng& rng, long) {
    const SpectralResolution sr = spectral_decompose(random_self_adjoint(rng, 3, 3));
    for (const cplx& a : sr.eigenvalues) sa.observe(std::abs(a.imag()));
    for (const auto& q : sr.components) sa.observe(projection_residual(q));
  });
  return s.finish();
}

SuiteReport t_product(const SuiteOptions& o) {
  Suite s("t-product", o);
  Check& prod = s.add("dt(u) = dt_e(u) dt(e) for octonionic unitaries", 9, 1e-7);
  Check& sa = s.add("u = {e, u, e} unitary gives dt(u) = +-dt(e)", 9, 1e-7);
  Check& tri = s.add("dt(T(u)) = dt(u) dt(T(1)) for shifts T", 9, 1e-7);

  s.run(s.count(300), {&prod}, [&](Rng& rng, long) {
    const HermMatrix u = random_unitary(rng);
    const HermMatrix e = random_unitary(rng);
    prod.require(!entries_in_sublevel(u, 2, 1e-3) && !entries_in_sublevel(e, 2, 1e-3),
                 "instance is not genuinely octonionic");
    prod.observe(std::abs(dt_unitary(u) - dt_unitary(u, e) * dt_unitary(e)));
  });

  s.run(s.count(200), {&sa}, [&](Rng& rng, long) {
    const HermMatrix v = random_unitary(rng);
    const HermMatrix sym = symmetry(rng, 3);
    const HermMatrix u = triple(v, sym, v);
    const HermMatrix e = jordan_mul(v, v);
    sa.observe(max_abs_diff(triple(e, u, e), u));
    const cplx du = dt_unitary(u), de = dt_unitary(e);
    sa.observe(std::min(std::abs(du - de), std::abs(du + de)));
  });

  s.run(s.count(200), {&tri}, [&](Rng& rng, long i) {
    const HermMatrix w = random_unitary(rng);
    const HermMatrix u = random_unitary(rng);
    if (i % 2 == 0) {
      auto t = [&](const HermMatrix& x) { return triple(w, star(x), w); };
      tri.observe(std::abs(dt_unitary(t(u)) - dt_unitary(u) * dt_unitary(t(c6_identity()))));
    } else {
      const HermMatrix z = random_unitary(rng);
      auto t = [&](const HermMatrix& x) { return triple(w, star(triple(z, star(x), z)), w); };
      tri.observe(std::abs(dt_unitary(t(u)) - dt_unitary(u) * dt_unitary(t(c6_identity()))));
    }
  });
  return s.finish();
}

SuiteReport t_simbiq(const SuiteOptions& o) {
  Suite s("t-simbiq", o);
  Check& pipe = s.add("pipeline gives a verified Jordan *-automorphism", 10, 1e-9);
  Check& biq = s.add("images are biquaternionic, e's image diagonal", 10, 1e-8);
  Check& dtc = s.add("dt is unchanged by the reduction", 0, 1e-7);
  Check& cov = s.add("every labeled branch is hit in the coverage run", 10, kReduceTol);

  s.run(s.count(200), {&pipe, &biq, &dtc}, [&](Rng& rng, long) {
    const HermMatrix u = random_unitary(rng);
    const HermMatrix e = random_diagonal_unitary(rng);
    const ReductionResult r = simultaneous_biq(u, e);
    const KindReport k = verify_kind(r.automorphism, rng, 64);
    pipe.observe(std::max({k.jordan_residual, k.star_residual, k.unit_residual}));
    pipe.require(k.derived == AutoKind::jordan_star_auto, "derived kind " + to_string(k.derived));
    const HermMatrix tu = r.automorphism(u), te = r.automorphism(e);
    biq.observe(max_abs_diff(tu, r.images[0]));
    double off = 0.0;
    for (const HermMatrix* m : {&tu, &te}) {
      for (int i = 0; i < 3; ++i) {
        for (int j = i + 1; j < 3; ++j) {
          const CDElement x = m->entry(i, j);
          for (std::size_t c = 4; c < 8; ++c) off = std::max(off, std::abs(x[c]));
        }
      }
    }
    biq.observe(off);
    biq.require(is_diagonal(te, 1e-8), "image of e is not diagonal");
    dtc.observe(rel(dt_value(demote(tu, 2), &rng), dt_unitary(u)));
  });

  const long nc = s.count(10000);
  auto& table = s.coverage();
  for (ReductionBranch b : kAllBranches) table[case_path(b)] = 0;
  s.run(nc, {&cov}, [&](Rng& rng, long) {
    const ReductionBranch target = kAllBranches[static_cast<std::size_t>(rng.index(5))];
    const Frame f = coverage_frame(rng, target);
    const HermMatrix u = combine(f, unimodular(rng));
    const ReductionResult r = simultaneous_biq(u, random_diagonal_unitary(rng));
    cov.observe(r.certificate.worst_residual);
    if (r.certificate.branch) ++table[case_path(*r.certificate.branch)];
  });
  for (ReductionBranch b : kAllBranches) {
    if (table[case_path(b)] == 0) cov.fail("branch never hit: " + case_path(b));
  }
  return s.finish();
}

SuiteReport t_dt_c6(const SuiteOptions& o) {
  Suite s("t-dt-c6", o);
  Check& eq_n = s.add("normal: invertible <=> dt != 0 <=> range tripotent unitary", 11, 1e-8);
  Check& eq_b = s.add("biquaternionic: invertible <=> dt != 0 <=> range tripotent unitary", 11, 1e-8);
  Check& cubic = s.add("dt(l 1 - x) is monic with constant -dt(x)", 11, 1e-8);
  Check& red = s.add("supplied reducer route agrees with dt_3", 0, 1e-8);
  Check& ex = s.add("dt(0) = 0 and dt(diag) is the product", 0, 1e-12);

  auto equivalence = [](Check& c, const HermMatrix& x) {
    const cplx d = dt_general(x).value;
    const bool nz = std::abs(d) > 1e-8;
    const bool inv = is_invertible(x);
    const bool un = is_unitary(range_tripotent(x));
    c.require(nz == inv && inv == un, "equivalence broken: dt " + std::to_string(std::abs(d)) +
                                          (inv ? ", invertible" : ", singular") + (un ? ", unitary" : ", not unitary"));
    if (inv) {
      const HermMatrix y = jordan_inverse(x);
      c.observe(max_abs_diff(jordan_mul(x, y), c6_identity()));
      c.observe(max_abs_diff(jordan_mul(jordan_mul(x, x), y), x) / std::max(1.0, sup_norm(x)));
    }
    return d;
  };
  auto check_cubic = [&](const HermMatrix& x, cplx d) {
    const double rho = 1.0 + sup_norm(x);
    std::vector<std::pair<cplx, cplx>> pts;
    for (int k = 0; k < 4; ++k) {
      const cplx l = std::polar(rho, 2.0 * std::numbers::pi * (k + 0.25) / 4.0);
      pts.emplace_back(l, dt_general(l * c6_identity() - x).value);
    }
    const Polynomial p = poly_fit(pts);
    cubic.observe(std::abs(p.leading() - 1.0));
    cubic.observe(std::abs(p.coeffs[0] + d));
  };

  const long n = s.count(300);
  s.run(n, {&eq_n, &cubic}, [&](Rng& rng, long) {
    const HermMatrix x = random_normal(rng, 3, 0.3);
    check_cubic(x, equivalence(eq_n, x));
  });
  s.run(n, {&eq_b, &cubic}, [&](Rng& rng, long i) {
    const HermMatrix x = promote(i % 2 == 0 ? random_herm(rng, 3, 2) : random_singular_biq(rng), 3);
    check_cubic(x, equivalence(eq_b, x));
  });

  s.run(s.count(50), {&red}, [&](Rng& rng, long) {
    const HermMatrix y = random_herm(rng, 3, 2);
    C6Auto a = random_lifted_auto(rng, 2);
    HermMatrix x = a(promote(y, 3));
    while (entries_in_sublevel(x, 2, 1e-6)) {
      a = compose(random_lifted_auto(rng, 1), a);
      x = a(promote(y, 3));
    }
    const LinearMap back = inverse(a).map;
    const C6DtResult r = dt_general(x, &back);
    red.require(r.route == DtGeneralRoute::supplied_automorphism, "route was " + to_string(r.route));
    red.observe(rel(r.value, dt_value(y, &rng)));
  });

  s.run(1, {&ex}, [&](Rng&, long) {
    ex.observe(std::abs(dt_general(HermMatrix(3, 3)).value));
    const std::array<cplx, 3> d{2.0, -1.0, 3.0};
    ex.observe(std::abs(dt_general(HermMatrix::diagonal(d, 3)).value + 6.0));
  });
  return s.finish();
}

using SuiteFn = SuiteReport (*)(const SuiteOptions&);
struct Entry {
  const char* name;
  SuiteFn fn;
};
constexpr Entry kSuites[] = {
    {"cd-laws", cd_laws},         {"hat", hat_suite},         {"t-determinant", t_determinant},
    {"t-minproj", t_minproj},     {"aut-octonion", aut_octonion}, {"aut-c6", aut_c6},
    {"t-spectral", t_spectral},   {"t-product", t_product},   {"t-simbiq", t_simbiq},
    {"t-dt-c6", t_dt_c6},
};

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const Entry& e : kSuites) v.emplace_back(e.name);
    return v;
  }();
  return names;
}

bool is_suite(std::string_view name) {
  return std::any_of(std::begin(kSuites), std::end(kSuites), [&](const Entry& e) { return name == e.name; });
}

SuiteReport run_suite(std::string_view name, const SuiteOptions& options) {
  for (const Entry& e : kSuites) {
    if (name == e.name) return e.fn(options);
  }
  throw DomainError("unknown suite: " + std::string(name));
}

}  // namespace jbdet
