#include "qhb/obstruct.hpp"

#include <sstream>

#include "qhb/lattice.hpp"
#include "qhb/plumbing.hpp"
#include "qhb/whitelist.hpp"

namespace qhb {

const char* to_string(PredicateResult r) {
  switch (r) {
    case PredicateResult::Pass: return "pass";
    case PredicateResult::Fail: return "fail";
    case PredicateResult::NotApplicable: return "not-applicable";
  }
  return "?";
}

const char* to_string(Overall o) {
  switch (o) {
    case Overall::Obstructed: return "Obstructed";
    case Overall::NotObstructed: return "NotObstructed";
    case Overall::KnownBounds: return "KnownBounds";
    case Overall::Inconsistent: return "Inconsistent";
  }
  return "?";
}

namespace {

template <class... Ts>
std::string cat(const Ts&... xs) {
  std::ostringstream os;
  (os << ... << xs);
  return os.str();
}

std::string join(const std::vector<Int>& v) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ']';
  return os.str();
}

}  // namespace

Epsilon epsilon(Int nu, Int m) { return {nu, m, 2 * nu + 2 - (m - 1) * (m - 2)}; }

Check square_test(Int p) {
  if (p < 1) throw DomainError("square_test needs p >= 1");
  if (auto m = exact_sqrt(p)) return Check::pass(cat("m=", *m));
  return Check::fail(cat(p, " is not a square"));
}

Check integral_V_test(Int m, const VSequence& v) {
  if (m < 1) throw DomainError("integral_V_test needs m >= 1");
  for (Int k = 0; k <= (m - 1) / 2; ++k) {
    Int idx = m * (m - 2 * k - 1) / 2, want = k * (k + 1) / 2;
    if (v[idx] != want) return Check::fail(cat("k=", k, ": V_", idx, "=", v[idx], ", need ", want));
  }
  return Check::pass();
}

bool mvsnu_admits(Int nu, Int m) {
  if (nu < 0) throw DomainError("nu must be >= 0");
  if (m < 1) return false;
  Int t = m * (m - 1) / 2 - nu;
  return t >= 0 && t < m;
}

std::vector<Int> mvsnu_window(Int nu) {
  if (nu < 0) throw DomainError("nu must be >= 0");
  // m(m-1)/2 >= nu starts near (1 + sqrt(1 + 8 nu)) / 2.
  Int centre = (1 + isqrt(1 + 8 * nu)) / 2;
  std::vector<Int> out;
  for (Int m = std::max<Int>(1, centre - 2); m <= centre + 3; ++m)
    if (mvsnu_admits(nu, m)) out.push_back(m);
  return out;
}

bool pq_window_admits(Int nu, Int q, Int m) {
  if (nu < 0 || q < 0) throw DomainError("pq_window needs nu, q >= 0");
  if (m < 1) return false;
  if (nu == 0) return m <= q + 1;
  if ((2 * nu - 1) * q >= m * m) return false;
  Int lhs = 2 * m - q - 2;
  return lhs < 0 || lhs * lhs < q * q + 8 * q * nu + 8;
}

std::vector<Int> pq_window(Int nu, Int q) {
  if (nu < 0 || q < 0) throw DomainError("pq_window needs nu, q >= 0");
  std::vector<Int> out;
  for (Int m = 1;; ++m) {
    Int lhs = 2 * m - q - 2;
    if (nu == 0 ? m > q + 1 : (lhs >= 0 && lhs * lhs >= q * q + 8 * q * nu + 8)) break;
    if (pq_window_admits(nu, q, m)) out.push_back(m);
  }
  return out;
}

Check ipq_negative_test(Int p, Int q, Int nu) {
  if (!(0 < q && q < p)) throw DomainError("ipq_negative_test needs 0 < q < p");
  Int I = i_function(Rational(p, q));
  if (I < 0 && nu > 0) return Check::fail(cat("I(", p, "/", q, ")=", I, " < 0 with nu=", nu));
  return Check::pass(cat("I(", p, "/", q, ")=", I));
}

Check half_V_test(Int m, const VSequence& v) {
  if (m < 1 || m % 2 == 0) throw DomainError("half_V_test needs m odd");
  if (m == 1) return v[0] == 0 ? Check::pass() : Check::fail(cat("m=1 needs V_0=0, have ", v[0]));
  for (Int h = 0; h <= (m - 1) / 2; ++h) {
    Int num = m * m - (h % 2 ? 3 : 5) - 2 * h * m;
    if (num < 0) continue;
    if (num % 4 != 0) throw std::logic_error("half_V_test: non-integral index");
    Int idx = num / 4, want = h % 2 ? h * h - 1 : h * h;
    if (4 * v[idx] != want) return Check::fail(cat("h=", h, ": 4V_", idx, "=", 4 * v[idx], ", need ", want));
  }
  return Check::pass();
}

bool half_window_admits(Int nu, Int m) {
  if (m < 1 || m % 2 == 0) return false;
  if (m == 1) return nu == 0;
  return (m - 1) * (m - 1) >= 4 * nu + 5 && (m - 2) * (m - 2) < 4 * nu + 9;
}

Check third_V_test(Int m, const VSequence& v) {
  if (m < 1 || m % 3 == 0) throw DomainError("third_V_test needs gcd(m,3)=1");
  for (Int h = q3_h_max(m); h >= q3_h_min(m); --h) {
    Int i = q3_label(m, h);
    if (i < 0 || 2 * i > m * m) continue;
    Int idx, num;
    if (mod_floor(h, 3) == 0) {
      idx = i / 3;
      num = h * (h + 3);
    } else {
      Int off = mod_floor(h * m, 3) == 1 ? 2 : 1;
      if ((i - off) % 3 != 0) throw std::logic_error("third_V_test: non-integral index");
      idx = (i - off) / 3;
      num = (h + 1) * (h + 2);
    }
    if (num % 6 != 0) return Check::fail(cat("h=", h, ": required V value ", num, "/6 is not an integer"));
    if (v[idx] != num / 6) return Check::fail(cat("h=", h, " (label ", i, "): V_", idx, "=", v[idx], ", need ", num / 6));
  }
  return Check::pass();
}

bool third_window_admits(Int nu, Int m) {
  if (m < 1 || m % 3 == 0) return false;
  if (m <= 2) return nu == 0;
  Int a = 2 * m - 3, b = 2 * m - 5;
  return a * a >= 1 + 24 * nu && (b < 0 || b * b < 25 + 24 * nu);
}

Check thin_test(Int tau, Int m) {
  if (m < 1) throw DomainError("thin_test needs m >= 1");
  Int s = -2 * tau;
  bool ok = false;
  switch (m) {
    case 1: ok = s >= 0; break;
    case 2: ok = s >= -2; break;
    case 3: ok = s == -2 || s == -4; break;
    case 4: ok = s == -6 || s == -8; break;
    case 5: ok = s == -12; break;
    default: ok = false;
  }
  if (ok) return Check::pass(cat("sigma=", s));
  return Check::fail(cat("(m,sigma)=(", m, ",", s, ") not admissible"));
}

Check torus_9q_test(Int p, Int q, Int n) {
  if (p < q) std::swap(p, q);
  if (q < 2 || gcd(p, q) != 1 || n <= 0) throw DomainError("torus_9q_test needs coprime p > q >= 2 and n > 0");
  if (p <= 9 * q) return Check::pass();
  std::string cert = cat("p=", p, " > 9q=", 9 * q);
  if (auto m = exact_sqrt(n)) {
    auto v = v_torus(p, q);
    for (Int k = 0; k <= (*m - 1) / 2; ++k) {
      Int i = *m * (*m - 2 * k - 1) / 2;
      auto d = d_surgery(n, 1, i, v);
      if (d != 0) {
        cert += cat("; d(S^3_", n, ", ", i, ")=", d);
        break;
      }
    }
  }
  return Check::fail(cert);
}

Check gamma_inequality_test(Int p, Int q, Int m, const GammaOptions& opts) {
  if (p < q) std::swap(p, q);
  if (q < 2 || gcd(p, q) != 1 || m < 1) throw DomainError("gamma_inequality_test needs a torus knot and m >= 1");
  Int nu = (p - 1) * (q - 1) / 2;
  auto eps = epsilon(nu, m);
  if (eps.twice <= 0) return Check::not_applicable(cat("2eps=", eps.twice, " <= 0"));
  Semigroup sg(p, q);
  Int lo = opts.jmin.value_or(0), hi = opts.jmax.value_or(m - 3);
  for (Int j = std::max<Int>(lo, 0); j <= hi; ++j) {
    Int t = (j + 1) * (j + 2) / 2;
    Int bound = 2 * j * m + eps.twice;  // 2(jm + eps)
    Int g0 = sg.gamma_element(t), g1 = sg.gamma_element(t + 1);
    if (2 * g0 > bound) return Check::fail(cat("j=", j, ": 2Gamma(", t, ")=", 2 * g0, " > 2(jm+eps)=", bound));
    if (opts.strict ? 2 * g1 <= bound : 2 * g1 < bound)
      return Check::fail(cat("j=", j, ": 2Gamma(", t + 1, ")=", 2 * g1, opts.strict ? " <= " : " < ", "2(jm+eps)=", bound));
  }
  return Check::pass(cat("2eps=", eps.twice));
}

Check qgem_test(Int p, Int q) {
  auto m = exact_sqrt(p);
  if (!m) return Check::not_applicable(cat(p, " is not a square"));
  Int r = mod_floor(q, p);
  if (p > 1 && r < *m - 1) return Check::fail(cat("q mod p=", r, " < m-1=", *m - 1));
  return Check::pass();
}

Check owens_strle_test(Int p, Int q, const Rational& r) {
  if (r.sign() <= 0) throw DomainError("owens_strle_test needs r > 0");
  if (q < 0) return Check::pass("negative knot: m=0");
  auto bound = owens_strle_m(p, q);
  if (r < bound) return Check::fail(cat("r=", r, " < m(K)=", bound));
  return Check::pass(cat("m(K)=", bound));
}

Check d_vanishing_test(Int p, Int q, const VSequence& v, LabelConvention c) {
  auto il = integral_labels(p, q);
  if (!il.square) return Check::not_applicable(cat(p, " is not a square"));
  for (Int i : il.labels) {
    auto d = d_surgery(p, q, i, v, c);
    if (d != 0) return Check::fail(cat("d(label ", i, ")=", d));
  }
  return Check::pass(cat(il.labels.size(), " labels vanish"));
}

Check slope_embeddable(Int p, Int q, std::uint64_t node_budget) {
  if (p < 1 || q < 1 || gcd(p, q) != 1) throw DomainError("slope_embeddable needs coprime p, q >= 1");
  auto chain = blow_down_reduce(neg_cf_expand(p, q)).terms;
  if (chain.empty()) return Check::not_applicable("chain blows down to S^3");
  auto res = embed_graph(PlumbingGraph::linear(chain), {node_budget});
  switch (res.status) {
    case EmbedStatus::Embeddable: return Check::pass(cat("chain ", join(chain), " embeds"));
    case EmbedStatus::NotEmbeddable: return Check::fail(cat("chain ", join(chain), " does not embed"));
    case EmbedStatus::BudgetExceeded: break;
  }
  return Check::not_applicable(cat("chain ", join(chain), ": budget exhausted after ", res.nodes_explored, " nodes"));
}

Check half_torus_9q_test(Int p, Int q) {
  if (p < q) std::swap(p, q);
  if (p > 9 * q) return Check::fail(cat("p=", p, " > 9q=", 9 * q));
  return Check::pass();
}

Check third_torus_6q_test(Int p, Int q) {
  if (p < q) std::swap(p, q);
  if (q < 3) return Check::not_applicable("needs q >= 3");
  if (p >= 6 * q) return Check::fail(cat("p=", p, " >= 6q=", 6 * q));
  return Check::pass();
}

namespace {

struct NamedGraph {
  std::string label;
  PlumbingGraph graph;
};

// Definite plumbings bounded by +Y and -Y for Y = S^3_r(T_{p,q}), p > q > 0.
std::vector<NamedGraph> torus_surgery_graphs(Int p, Int q, const Rational& r) {
  std::vector<NamedGraph> out;
  auto keep = [&](std::string label, PlumbingGraph g) {
    if (g.size() == 0) return;
    auto d = definiteness(g);
    if (d == Definiteness::Positive || d == Definiteness::Negative) out.push_back({std::move(label), std::move(g)});
  };
  if (r == Rational(p * q)) {
    auto [a, b] = torus_surgery_connected_sum(p, q);
    auto chain = [](const LensSpace& l) { return l.p == 1 ? PlumbingGraph{} : lens_chain(l.p, l.q); };
    keep("+Y", PlumbingGraph::disjoint_union(chain(a), chain(b)));
    keep("-Y", PlumbingGraph::disjoint_union(chain(mirror(a)), chain(mirror(b))));
    return out;
  }
  auto s = torus_surgery_seifert(p, q, r);
  // Reversing a two-fibre description can leave a centre of weight <= 1; use both lens chains instead.
  if (auto l = seifert_as_lens(s)) {
    if (l->p > 1) {
      keep("+Y", lens_chain(l->p, l->q));
      keep("-Y", lens_chain(l->p, l->p - l->q));
    }
    return out;
  }
  keep("+Y", seifert_to_graph(normalize(s)));
  keep("-Y", seifert_to_graph(normalize(reverse_orientation(s))));
  return out;
}

class ReportBuilder {
 public:
  explicit ReportBuilder(ObstructionReport& rep) : rep_(rep) {}

  void add(std::string name, Check c, bool binding = true) {
    if (binding && c.failed() && first_fail_.empty()) first_fail_ = name + ": " + c.certificate;
    if (!binding && c.failed() && first_variant_.empty()) first_variant_ = name + ": " + c.certificate;
    rep_.verdicts.push_back({std::move(name), c.result, std::move(c.certificate), binding});
  }
  void skip(std::string name, std::string why, bool binding = true) {
    add(std::move(name), Check::not_applicable(std::move(why)), binding);
  }
  bool obstructed() const { return !first_fail_.empty(); }
  const std::string& first_fail() const { return first_fail_; }
  const std::string& first_variant() const { return first_variant_; }

 private:
  ObstructionReport& rep_;
  std::string first_fail_, first_variant_;
};

Check lattice_check(const std::vector<NamedGraph>& graphs, const VerdictOptions& opts) {
  if (graphs.empty()) return Check::not_applicable("no definite plumbing");
  std::string undecided;
  for (const auto& [label, g] : graphs) {
    auto tc = two_chain_obstruction(g, opts.two_chain_max_removed);
    if (tc.result == TwoChainResult::Obstructed)
      return Check::fail(cat(label, " graph (", g.size(), " vertices): removing ", tc.removed.size(),
                             " vertices leaves 2-chains ", join(tc.chain_lengths)));
    auto res = embed_graph(g, {opts.node_budget});
    if (res.status == EmbedStatus::NotEmbeddable)
      return Check::fail(cat(label, " graph (", g.size(), " vertices) does not embed (", res.nodes_explored, " nodes)"));
    if (res.status == EmbedStatus::BudgetExceeded) undecided += cat(undecided.empty() ? "" : "; ", label, " undecided");
  }
  if (!undecided.empty()) return Check::not_applicable(undecided + " (node budget)");
  return Check::pass(cat(graphs.size(), " definite graph(s) embed"));
}

}  // namespace

ObstructionReport rhb_verdict(const KnotModel& knot, const Rational& slope, const VerdictOptions& opts) {
  if (slope.sign() <= 0) throw DomainError("slope must be positive");
  ObstructionReport rep;
  rep.knot = knot.str();
  rep.slope = slope;
  ReportBuilder out(rep);

  const Int a = to_int(slope.num()), b = to_int(slope.den());
  const VSequence& v = knot.v();
  const Int nu = knot.nu();
  const TorusKnot* torus = knot.as_torus();
  const TorusKnot* pos_torus = torus && torus->positive() ? torus : nullptr;
  const ThinKnot* thin = knot.as_thin();
  const bool integral = b == 1;

  auto sq = square_test(a);
  const std::optional<Int> m = exact_sqrt(a);
  out.add("square", sq);

  if (torus) out.add("owens_strle", owens_strle_test(torus->p, torus->q, slope));
  else out.skip("owens_strle", "torus knots only");

  if (m) out.add("pq_window", pq_window_admits(nu, b, *m) ? Check::pass(cat("m=", *m, ", nu=", nu))
                                                        : Check::fail(cat("m=", *m, " outside the window for nu=", nu, ", q=", b)));
  else out.skip("pq_window", "slope numerator not a square");

  if (m && integral)
    out.add("mvsnu_window", mvsnu_admits(nu, *m) ? Check::pass(cat("m=", *m, ", nu=", nu))
                                                : Check::fail(cat("m=", *m, " not in ", join(mvsnu_window(nu)), " for nu=", nu)));
  else out.skip("mvsnu_window", "integral square slopes only");

  if (m && integral) out.add("integral_V", integral_V_test(*m, v));
  else out.skip("integral_V", "integral square slopes only");

  out.add("d_vanishing", d_vanishing_test(a, b, v));

  if (a > b) out.add("ipq_negative", ipq_negative_test(a, b, nu));
  else out.skip("ipq_negative", "needs slope > 1");

  if (nu == 0 && m && a > 1) out.add("qgem", qgem_test(a, b));
  else out.skip("qgem", "needs nu = 0 and a square numerator > 1");

  if (thin && m && integral) out.add("thin", thin_test(thin->tau, *m));
  else out.skip("thin", "thin knots, integral square slopes only");

  if (pos_torus && integral) out.add("torus_9q", torus_9q_test(pos_torus->p, pos_torus->q, a));
  else out.skip("torus_9q", "positive torus knots, integral slopes only");

  if (pos_torus && integral && m && mvsnu_admits(nu, *m))
    out.add("gamma", gamma_inequality_test(pos_torus->p, pos_torus->q, *m, opts.gamma));
  else out.skip("gamma", "positive torus knots, integral slopes inside the mvsnu window");

  if (b == 3 && m) {
    out.add("third_V", third_V_test(*m, v));
    out.add("third_window", third_window_admits(nu, *m) ? Check::pass()
                                                        : Check::fail(cat("m=", *m, " outside the window for nu=", nu)));
  } else {
    out.skip("third_V", "slopes m^2/3 only");
    out.skip("third_window", "slopes m^2/3 only");
  }
  if (b == 3 && pos_torus) out.add("third_torus_6q", third_torus_6q_test(pos_torus->p, pos_torus->q));
  else out.skip("third_torus_6q", "positive torus knots, slopes a/3 only");

  if (!opts.lattice) {
    out.skip("slope_lattice", "lattice checks disabled");
    out.skip("plumbing_lattice", "lattice checks disabled");
  } else if (out.obstructed()) {
    out.skip("slope_lattice", "already obstructed");
    out.skip("plumbing_lattice", "already obstructed");
  } else {
    if (m && a > 1) out.add("slope_lattice", slope_embeddable(a, b, opts.node_budget));
    else out.skip("slope_lattice", "needs a square numerator > 1");
    if (pos_torus && m) out.add("plumbing_lattice", lattice_check(torus_surgery_graphs(pos_torus->p, pos_torus->q, slope), opts));
    else out.skip("plumbing_lattice", "positive torus knots, square numerators only");
  }

  // Alternative readings of the printed denominator-2 and denominator-3 formulas.
  if (b == 2 && m) {
    out.add("half_V", half_V_test(*m, v), false);
    out.add("half_window", half_window_admits(nu, *m) ? Check::pass()
                                                      : Check::fail(cat("m=", *m, " outside the window for nu=", nu)),
            false);
  } else {
    out.skip("half_V", "slopes m^2/2 only", false);
    out.skip("half_window", "slopes m^2/2 only", false);
  }
  if (b == 2 && pos_torus) out.add("half_torus_9q", half_torus_9q_test(pos_torus->p, pos_torus->q), false);
  else out.skip("half_torus_9q", "positive torus knots, slopes a/2 only", false);
  if ((b == 2 || b == 3) && m) out.add("d_vanishing_shift2", d_vanishing_test(a, b, v, LabelConvention::ShiftTwo), false);
  else out.skip("d_vanishing_shift2", "square slopes a/2, a/3 only", false);

  auto hit = whitelist_lookup(knot, slope);
  if (out.obstructed()) {
    if (hit) {
      rep.overall = Overall::Inconsistent;
      rep.reason = cat("whitelisted (", hit->citation, ") but ", out.first_fail());
    } else {
      rep.overall = Overall::Obstructed;
      rep.reason = out.first_fail();
    }
  } else if (hit) {
    rep.overall = Overall::KnownBounds;
    rep.citation = hit->citation;
    rep.reason = hit->family + ": " + hit->citation;
  } else if (!out.first_variant().empty()) {
    rep.overall = Overall::Inconsistent;
    rep.reason = "binding predicates pass but " + out.first_variant();
  } else {
    rep.overall = Overall::NotObstructed;
    rep.reason = "no predicate obstructs";
  }
  return rep;
}

}  // namespace qhb
