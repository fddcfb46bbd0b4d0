#include "lepage/verification.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <sstream>
#include <tuple>

#include "lepage/errors.hpp"
#include "lepage/printer.hpp"
#include "rational_form.hpp"

namespace lepage {

namespace {

std::string basis_text(const BasisTuple& t) {
  std::string out;
  for (std::size_t k = 0; k < t.size(); ++k) out += (k ? "^" : "") + t[k].label();
  return out;
}

CheckReport failure(std::string condition, const Expr& witness, const ZeroResult& z, std::string basis = {}) {
  CheckReport r;
  r.pass = false;
  r.condition = std::move(condition);
  r.witness = witness;
  r.witness_point = z.witness;
  r.basis = std::move(basis);
  return r;
}

// First coefficient of the form that is not zero, in basis order.
CheckReport first_nonzero(const ExteriorForm& f, const std::string& condition, const ZeroPolicy& policy) {
  for (const auto& [t, c] : f.terms()) {
    auto z = equals_zero(c, policy);
    if (!z.is_zero()) return failure(condition, c, z, basis_text(t));
  }
  return CheckReport::ok();
}

CheckReport first_nonzero(const std::vector<LabeledCondition>& conditions, const ZeroPolicy& policy) {
  for (const auto& c : conditions) {
    auto z = equals_zero(c.value, policy);
    if (!z.is_zero()) return failure(c.label + " (" + c.indices + ")", c.value, z);
  }
  return CheckReport::ok();
}

std::string join_indices(std::initializer_list<std::pair<const char*, int>> parts) {
  std::string out;
  for (const auto& [name, v] : parts) out += std::string(out.empty() ? "" : ", ") + name + "=" + std::to_string(v);
  return out;
}

std::string multi_text(const MultiIndex& J) { return J.digits(); }

// Every ordering of the positions of a tuple; repeated values give repeated
// orderings.
std::vector<std::vector<int>> permutations(const std::vector<int>& values) {
  std::vector<int> pos(values.size());
  for (std::size_t k = 0; k < pos.size(); ++k) pos[k] = static_cast<int>(k);
  std::vector<std::vector<int>> out;
  do {
    std::vector<int> p;
    for (int k : pos) p.push_back(values[static_cast<std::size_t>(k)]);
    out.push_back(std::move(p));
  } while (std::next_permutation(pos.begin(), pos.end()));
  return out;
}

using Key = std::pair<int, MultiIndex>;

Key key(int sigma, std::initializer_list<int> I) { return {sigma, MultiIndex(I)}; }

// Memoized mixed partials ∂̃^k ℒ / ∂y^{σ1}_{I1} ... ∂y^{σk}_{Ik}.
class PartialTable {
 public:
  PartialTable(Expr f, DerivativeConvention c) : f_(std::move(f)), c_(c) {}

  const Expr& get(std::vector<Key> keys) {
    std::sort(keys.begin(), keys.end());
    auto it = memo_.find(keys);
    if (it != memo_.end()) return it->second;
    Expr value;
    if (keys.empty()) {
      value = f_;
    } else {
      auto rest = keys;
      Key last = rest.back();
      rest.pop_back();
      value = sym_partial(get(rest), last.first, last.second.entries(), c_);
    }
    return memo_.emplace(std::move(keys), std::move(value)).first->second;
  }

 private:
  Expr f_;
  DerivativeConvention c_;
  std::map<std::vector<Key>, Expr> memo_;
};

Expr coordinate(int sigma, const std::vector<int>& I) {
  return Expr::variable(JetVariable::fiber(sigma, MultiIndex(std::span<const int>(I))));
}

std::vector<int> cat(std::initializer_list<int> a) { return a; }

// Cut-derivative part shared by the triviality conditions and the
// Euler–Lagrange expansion.
Expr cut_part(PartialTable& d, const ChartContext& ctx, int sigma) {
  const int n = ctx.n;
  std::vector<Expr> terms{d.get({key(sigma, {})})};
  for (int i = 1; i <= n; ++i) {
    terms.push_back(-cut_derivative(d.get({key(sigma, {i})}), i, ctx));
    for (int j = 1; j <= n; ++j) {
      terms.push_back(cut_derivative(cut_derivative(d.get({key(sigma, {i, j})}), j, ctx), i, ctx));
    }
  }
  return canonicalize(Expr::sum(std::move(terms)));
}

// Coefficient block multiplying y^ν_{pqi}.
Expr third_order_block(PartialTable& d, const ChartContext& ctx, int sigma, int nu, int p, int q, int i) {
  std::vector<Expr> terms{d.get({key(nu, {p}), key(sigma, {i, q})}), -d.get({key(nu, {p, q}), key(sigma, {i})})};
  for (int j = 1; j <= ctx.n; ++j) {
    terms.push_back(2 * cut_derivative(d.get({key(nu, {p, q}), key(sigma, {i, j})}), j, ctx));
  }
  return Expr::sum(std::move(terms));
}

ChartContext second_order_chart(const Lagrangian& lambda) {
  if (lambda.order() > 2) throw UnsupportedOrder("the condition is stated for Lagrangians of order 2");
  return lambda.chart().with_order(2);
}

}  // namespace

CheckReport is_lepage_form(const ExteriorForm& rho, const ZeroPolicy& policy) {
  const int n = rho.chart().n;
  if (rho.degree() != n) throw PreconditionError("the Lepage condition applies to n-forms");
  // Forms with at least two contact factors only contribute to p_k d, k >= 2.
  ExteriorForm low = contact_component(rho, 0) + contact_component(rho, 1);
  ExteriorForm p1 = contact_component(exterior_derivative(low), 1);
  for (const auto& [t, c] : p1.terms()) {
    auto contact = std::find_if(t.begin(), t.end(), [](CoframeElement e) { return e.is_omega(); });
    if (contact->order() == 0) continue;
    auto z = equals_zero(c, policy);
    if (!z.is_zero()) return failure("lepage-condition", c, z, basis_text(t));
  }
  return CheckReport::ok();
}

CheckReport is_lepage_equivalent(const ExteriorForm& rho, const Lagrangian& lambda, const ZeroPolicy& policy) {
  auto report = is_lepage_form(rho, policy);
  if (!report) return report;
  int order = std::max(rho.order(), lambda.order());
  ExteriorForm diff = horizontalization(rho).lifted(order) - lambda.form().lifted(order);
  return first_nonzero(diff, "horizontal-part", policy);
}

CheckReport is_trivial(const Lagrangian& lambda, const ZeroPolicy& policy) {
  auto E = euler_lagrange_expressions(lambda);
  for (std::size_t s = 0; s < E.size(); ++s) {
    auto z = equals_zero(E[s], policy);
    if (!z.is_zero()) return failure("euler-lagrange (sigma=" + std::to_string(s + 1) + ")", E[s], z);
  }
  return CheckReport::ok();
}

std::vector<LabeledCondition> trivial_condition_list(const Lagrangian& lambda, DerivativeConvention convention) {
  const auto ctx = second_order_chart(lambda);
  const int n = ctx.n;
  const int m = ctx.m;
  PartialTable d(lambda.function(), convention);
  std::vector<LabeledCondition> out;
  for (int s = 1; s <= m; ++s) out.push_back({"triviality[1]", join_indices({{"sigma", s}}), cut_part(d, ctx, s)});
  for (int s = 1; s <= m; ++s) {
    for (int v = 1; v <= m; ++v) {
      for (const auto& A : sorted_multi_indices(n, 3)) {
        std::vector<Expr> terms;
        for (const auto& t : permutations(A.entries())) terms.push_back(third_order_block(d, ctx, s, v, t[0], t[1], t[2]));
        out.push_back({"triviality[2]", join_indices({{"sigma", s}, {"nu", v}}) + ", pqi=" + multi_text(A),
                       canonicalize(Expr::sum(std::move(terms)))});
      }
    }
  }
  for (int s = 1; s <= m; ++s) {
    for (int mu = 1; mu <= m; ++mu) {
      for (int v = mu; v <= m; ++v) {
        for (const auto& A : sorted_multi_indices(n, 3)) {
          for (const auto& B : sorted_multi_indices(n, 3)) {
            if (mu == v && B < A) continue;
            std::vector<Expr> terms;
            for (const auto& a : permutations(A.entries())) {
              for (const auto& b : permutations(B.entries())) {
                terms.push_back(d.get({key(mu, {a[0], a[1]}), key(v, {b[0], b[1]}), key(s, {b[2], a[2]})}));
              }
            }
            out.push_back({"triviality[3]",
                           join_indices({{"sigma", s}, {"mu", mu}, {"nu", v}}) + ", stj=" + multi_text(A) +
                               ", pqi=" + multi_text(B),
                           canonicalize(Expr::sum(std::move(terms)))});
          }
        }
      }
    }
  }
  for (int s = 1; s <= m; ++s) {
    for (int v = 1; v <= m; ++v) {
      for (const auto& A : sorted_multi_indices(n, 4)) {
        std::vector<Expr> terms;
        for (const auto& t : permutations(A.entries())) terms.push_back(d.get({key(v, {t[0], t[1]}), key(s, {t[2], t[3]})}));
        out.push_back({"triviality[4]", join_indices({{"sigma", s}, {"nu", v}}) + ", pqij=" + multi_text(A),
                       canonicalize(Expr::sum(std::move(terms)))});
      }
    }
  }
  return out;
}

CheckReport trivial_conditions_second_order(const Lagrangian& lambda, DerivativeConvention convention,
                                            const ZeroPolicy& policy) {
  if (lambda.order() != 2) throw PreconditionError("the triviality conditions are stated for r = 2");
  return first_nonzero(trivial_condition_list(lambda, convention), policy);
}

CheckReport order_reducible(const Lagrangian& lambda, DerivativeConvention convention, const ZeroPolicy& policy) {
  if (lambda.order() != 2) throw PreconditionError("order-reducibility is stated for r = 2");
  return first_nonzero(order_conditions(lambda, convention), policy);
}

std::vector<LabeledCondition> combination_condition_list_general(const Lagrangian& lambda,
                                                                 DerivativeConvention convention) {
  const auto ctx = second_order_chart(lambda);
  PartialTable d(lambda.function(), convention);
  std::vector<LabeledCondition> out;
  for (int s = 1; s <= ctx.m; ++s) out.push_back({"combination[1]", join_indices({{"sigma", s}}), cut_part(d, ctx, s)});
  for (int s = 1; s <= ctx.m; ++s) {
    for (int v = 1; v <= ctx.m; ++v) {
      for (const auto& A : sorted_multi_indices(ctx.n, 3)) {
        std::vector<Expr> terms;
        for (const auto& t : permutations(A.entries())) {
          int p = t[0], q = t[1], i = t[2];
          terms.push_back(d.get({key(v, {p}), key(s, {i, q})}) - d.get({key(v, {p, q}), key(s, {i})}));
        }
        out.push_back({"combination[2]", join_indices({{"sigma", s}, {"nu", v}}) + ", pqi=" + multi_text(A),
                       canonicalize(Expr::sum(std::move(terms)))});
      }
    }
  }
  return out;
}

std::vector<LabeledCondition> combination_condition_list(const Lagrangian& lambda, DerivativeConvention convention) {
  if (lambda.n() != 2) return combination_condition_list_general(lambda, convention);
  const auto ctx = second_order_chart(lambda);
  PartialTable d(lambda.function(), convention);
  auto D = [&](int a, std::initializer_list<int> I, int b, std::initializer_list<int> K) {
    return d.get({key(a, I), key(b, K)});
  };
  std::vector<LabeledCondition> out;
  for (int s = 1; s <= ctx.m; ++s) out.push_back({"combination[1]", join_indices({{"sigma", s}}), cut_part(d, ctx, s)});
  for (int s = 1; s <= ctx.m; ++s) {
    for (int v = 1; v <= ctx.m; ++v) {
      std::string idx = join_indices({{"sigma", s}, {"nu", v}});
      out.push_back({"combination[2]", idx, canonicalize(D(v, {1}, s, {1, 1}) - D(v, {1, 1}, s, {1}))});
      out.push_back({"combination[3]", idx, canonicalize(D(v, {2}, s, {2, 2}) - D(v, {2, 2}, s, {2}))});
      out.push_back({"combination[4]", idx,
                     canonicalize(2 * D(v, {1}, s, {1, 2}) - 2 * D(s, {1}, v, {1, 2}) + D(v, {2}, s, {1, 1}) -
                                  D(s, {2}, v, {1, 1}))});
      out.push_back({"combination[5]", idx,
                     canonicalize(2 * D(v, {2}, s, {1, 2}) - 2 * D(v, {1, 2}, s, {2}) + D(v, {1}, s, {2, 2}) -
                                  D(v, {2, 2}, s, {1}))});
    }
  }
  return out;
}

CheckReport combination_conditions(const Lagrangian& lambda, const Conventions& conventions, const ZeroPolicy& policy) {
  if (lambda.order() != 2) throw PreconditionError("the combination conditions are stated for r = 2");
  if (!order_reducible(lambda, conventions.lepage, policy)) {
    throw PreconditionError("the combination conditions require an order-reducible Lagrangian");
  }
  return first_nonzero(combination_condition_list(lambda, conventions.coefficients), policy);
}

CheckReport closure_check(const ExteriorForm& rho, const ZeroPolicy& policy) {
  return first_nonzero(exterior_derivative(rho), "closure", policy);
}

CheckReport forms_equal(const ExteriorForm& a, const ExteriorForm& b, const ZeroPolicy& policy) {
  if (a.degree() != b.degree()) {
    CheckReport r;
    r.pass = false;
    r.condition = "degree";
    r.witness = Expr(a.degree() - b.degree());
    return r;
  }
  int order = std::max(a.order(), b.order());
  return first_nonzero(a.lifted(order) - b.lifted(order), "difference", policy);
}

Lagrangian make_divergence_lagrangian(const DivergenceGenerator& g, DerivativeConvention convention) {
  const auto ctx = g.ctx.with_order(g.order);
  if (static_cast<int>(g.g.size()) != ctx.n) throw PreconditionError("a divergence generator needs n functions");
  if (g.order < 0 || g.order > 2) throw UnsupportedOrder("divergence generators of order 0, 1 or 2");
  for (const auto& gi : g.g) require_in_chart(gi, ctx);
  if (g.order == 2) {
    const int n = ctx.n;
    for (const auto& t : index_tuples(n, 3)) {
      int i = t[0], j = t[1], k = t[2];
      for (int s = 1; s <= ctx.m; ++s) {
        Expr c = sym_partial(g.g[i - 1], s, {j, k}, convention) + sym_partial(g.g[j - 1], s, {k, i}, convention) +
                 sym_partial(g.g[k - 1], s, {i, j}, convention);
        if (!equals_zero(c).is_zero()) {
          throw PreconditionError("the cyclic condition on the generator fails at " +
                                  join_indices({{"i", i}, {"j", j}, {"k", k}, {"sigma", s}}));
        }
      }
    }
  }
  std::vector<Expr> terms;
  for (int i = 1; i <= ctx.n; ++i) terms.push_back(total_derivative(g.g[i - 1], i, ctx));
  return Lagrangian(ctx, g.order + 1, Expr::sum(std::move(terms)));
}

Expr el_expansion(const Lagrangian& lambda, int sigma, DerivativeConvention convention) {
  const auto ctx = second_order_chart(lambda);
  const int n = ctx.n;
  const int m = ctx.m;
  PartialTable d(lambda.function(), convention);
  std::vector<Expr> terms{cut_part(d, ctx, sigma)};
  for (int v = 1; v <= m; ++v) {
    for (const auto& t : index_tuples(n, 3)) {
      terms.push_back(third_order_block(d, ctx, sigma, v, t[0], t[1], t[2]) * coordinate(v, t));
    }
    for (const auto& t : index_tuples(n, 4)) {
      int p = t[0], q = t[1], i = t[2], j = t[3];
      terms.push_back(d.get({key(v, {p, q}), key(sigma, {i, j})}) * coordinate(v, t));
    }
  }
  for (int mu = 1; mu <= m; ++mu) {
    for (int v = 1; v <= m; ++v) {
      for (const auto& t : index_tuples(n, 6)) {
        int s = t[0], u = t[1], p = t[2], q = t[3], i = t[4], j = t[5];
        const Expr& c = d.get({key(mu, {s, u}), key(v, {p, q}), key(sigma, {i, j})});
        if (c.is_zero()) continue;
        terms.push_back(c * coordinate(mu, cat({s, u, i})) * coordinate(v, cat({p, q, j})));
      }
    }
  }
  return canonicalize(Expr::sum(std::move(terms)));
}

CheckReport el_expansion_crosscheck(const Lagrangian& lambda, DerivativeConvention convention,
                                    const ZeroPolicy& policy) {
  auto E = euler_lagrange_expressions(lambda);
  for (int s = 1; s <= lambda.m(); ++s) {
    Expr diff = canonicalize(E[static_cast<std::size_t>(s - 1)] - el_expansion(lambda, s, convention));
    auto z = equals_zero(diff, policy);
    if (!z.is_zero()) return failure("euler-lagrange expansion (sigma=" + std::to_string(s) + ")", diff, z);
  }
  return CheckReport::ok();
}

std::optional<Conventions> CalibrationReport::selected() const {
  if (passing.size() == 1) return passing.front();
  return std::nullopt;
}

std::string CalibrationReport::to_text() const {
  std::ostringstream out;
  for (const auto& c : combinations) {
    out << describe(c.conventions) << ": " << (c.pass ? "pass" : "fail") << "\n";
    for (const auto& e : c.entries) out << "  " << e.name << ": " << e.outcome << "\n";
  }
  if (auto s = selected()) {
    out << "selected: " << describe(*s) << "\n";
  } else {
    out << "ambiguous: " << passing.size() << " combinations pass\n";
  }
  return out.str();
}

CalibrationReport calibrate_convention(const std::vector<NamedLagrangian>& corpus, const ZeroPolicy& policy) {
  if (corpus.empty()) throw PreconditionError("calibration needs a non-empty corpus");
  for (const auto& e : corpus) {
    if (!is_trivial(e.lambda, policy)) throw PreconditionError("calibration corpus member is not trivial: " + e.name);
  }
  const DerivativeConvention both[] = {DerivativeConvention::Plain, DerivativeConvention::Symmetrized};
  CalibrationReport report;
  for (auto lep : both) {
    for (auto coef : both) {
      CalibrationCombination combo{Conventions{lep, coef}, true, {}};
      for (const auto& e : corpus) {
        CalibrationEntry entry{e.name, "", false};
        try {
          auto Z = fundamental_second_order_n2(e.lambda, combo.conventions);
          auto closed = closure_check(Z.Z, policy);
          entry.closed = closed.pass;
          entry.outcome = closed.pass ? "closed"
                                      : "not closed: " + to_string(*closed.witness, e.lambda.m()) + " at " + closed.basis;
        } catch (const OrderReducibilityViolation& v) {
          entry.outcome = "refused: " + v.condition() + " gives " + v.witness();
        }
        combo.pass = combo.pass && entry.closed;
        combo.entries.push_back(std::move(entry));
      }
      if (combo.pass) report.passing.push_back(combo.conventions);
      report.combinations.push_back(std::move(combo));
    }
  }
  if (report.passing.empty()) throw CalibrationFailure("no convention combination closes the corpus:\n" + report.to_text());
  return report;
}

namespace {

// Polynomial section γ^σ(x) = Σ c_a x^a with |a| <= 4.
struct Section {
  int n = 0;
  std::vector<std::map<std::vector<int>, double>> components;

  double derivative(int sigma, const MultiIndex& J, const std::vector<double>& x) const {
    std::vector<int> order(static_cast<std::size_t>(n), 0);
    for (int i : J.entries()) ++order[static_cast<std::size_t>(i - 1)];
    double total = 0.0;
    for (const auto& [a, c] : components[static_cast<std::size_t>(sigma - 1)]) {
      double term = c;
      for (int k = 0; k < n && term != 0.0; ++k) {
        int e = a[static_cast<std::size_t>(k)];
        int o = order[static_cast<std::size_t>(k)];
        if (o > e) {
          term = 0.0;
          break;
        }
        for (int f = 0; f < o; ++f) term *= e - f;
        term *= std::pow(x[static_cast<std::size_t>(k)], e - o);
      }
      total += term;
    }
    return total;
  }
};

void exponents_rec(int n, int left, std::vector<int>& prefix, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(prefix.size()) == n) {
    out.push_back(prefix);
    return;
  }
  for (int e = 0; e <= left; ++e) {
    prefix.push_back(e);
    exponents_rec(n, left - e, prefix, out);
    prefix.pop_back();
  }
}

Section draw_section(const ChartContext& ctx, std::mt19937_64& rng) {
  std::vector<std::vector<int>> exps;
  std::vector<int> prefix;
  exponents_rec(ctx.n, 4, prefix, exps);
  Section s{ctx.n, {}};
  for (int sigma = 1; sigma <= ctx.m; ++sigma) {
    std::map<std::vector<int>, double> comp;
    for (const auto& a : exps) comp[a] = 2.0 * unit_uniform(rng()) - 1.0;
    s.components.push_back(std::move(comp));
  }
  return s;
}

Point prolongation(const Section& s, const ChartContext& ctx, int order, const std::vector<double>& x) {
  Point p;
  for (int i = 1; i <= ctx.n; ++i) p[JetVariable::base(i)] = x[static_cast<std::size_t>(i - 1)];
  for (int k = 0; k <= order; ++k) {
    for (auto v : ctx.with_order(order).fiber_layer(k)) p[v] = s.derivative(v.fiber_index(), v.multi_index(), x);
  }
  return p;
}

}  // namespace

CheckReport random_section_oracle(const Expr& f, const ChartContext& ctx, const SectionOracleOptions& options) {
  const int r = std::max(ctx.max_order, jet_order(f));
  const auto chart = ctx.with_order(r);
  require_in_chart(f, chart);
  const auto f_form = detail::form_of(f);
  std::vector<detail::RationalForm> df;
  std::vector<Expr> df_expr;
  for (int i = 1; i <= ctx.n; ++i) {
    df_expr.push_back(total_derivative(f, i, chart));
    df.push_back(detail::form_of(df_expr.back()));
  }
  // Points closer than this to a singularity of f or d_i f are redrawn.
  constexpr double kGuard = 0.25;
  std::mt19937_64 rng(options.seed);
  for (int trial = 0; trial < options.trials; ++trial) {
    int accepted = 0;
    int attempts = 0;
    const int max_attempts = 10 * options.points;
    Section s = draw_section(ctx, rng);
    while (accepted < options.points) {
      if (attempts++ >= max_attempts) {
        throw SamplingFailure("random-section oracle: too many points near a singularity");
      }
      if (attempts % options.points == 0) s = draw_section(ctx, rng);
      std::vector<double> x(static_cast<std::size_t>(ctx.n));
      for (auto& xi : x) xi = 2.0 * unit_uniform(rng()) - 1.0;
      Point p = prolongation(s, ctx, r + 1, x);
      bool rejected = false;
      std::vector<double> exact;
      for (int i = 1; i <= ctx.n && !rejected; ++i) {
        auto v = detail::sample_form(df[static_cast<std::size_t>(i - 1)], p, kGuard);
        rejected = v.rejected;
        exact.push_back(v.value);
      }
      std::vector<double> fd;
      for (int i = 1; i <= ctx.n && !rejected; ++i) {
        auto shifted = [&](double h) {
          auto y = x;
          y[static_cast<std::size_t>(i - 1)] += h;
          auto v = detail::sample_form(f_form, prolongation(s, ctx, r, y), kGuard);
          rejected = rejected || v.rejected;
          return v.value;
        };
        // Richardson combination of the central differences at h and h/2.
        double h = options.h;
        double wide = (shifted(h) - shifted(-h)) / (2.0 * h);
        double narrow = (shifted(h / 2) - shifted(-h / 2)) / h;
        fd.push_back((4.0 * narrow - wide) / 3.0);
      }
      if (rejected) continue;
      ++accepted;
      for (int i = 1; i <= ctx.n; ++i) {
        double e = exact[static_cast<std::size_t>(i - 1)];
        double a = fd[static_cast<std::size_t>(i - 1)];
        if (std::abs(e - a) > options.tolerance * std::max(1.0, std::abs(e))) {
          CheckReport rep;
          rep.pass = false;
          rep.condition = "section derivative (i=" + std::to_string(i) + ")";
          rep.witness = df_expr[static_cast<std::size_t>(i - 1)];
          rep.witness_point = p;
          return rep;
        }
      }
    }
  }
  return CheckReport::ok();
}

namespace {

const ChartContext kM1(2, 1, 2);
const ChartContext kM2(2, 2, 2);

Expr v(int sigma, std::initializer_list<int> I) { return y(sigma, I); }
Expr u(std::initializer_list<int> I) { return y(1, I); }

NamedLagrangian named(std::string name, const ChartContext& ctx, int r, const Expr& L) {
  return {std::move(name), Lagrangian(ctx, r, L)};
}

NamedLagrangian divergence(std::string name, const ChartContext& ctx, std::vector<Expr> g, int s) {
  return {std::move(name), make_divergence_lagrangian(DivergenceGenerator{ctx, std::move(g), s})};
}

const Expr kHalf = Expr::rational(1, 2);

}  // namespace

Lagrangian camassa_holm() {
  return Lagrangian(kM1, 2, kHalf * (u({1}) * pow(u({2}), 2) + pow(u({1, 2}), 2) / u({1})));
}

Lagrangian hessian_determinant() { return Lagrangian(kM1, 2, u({1, 1}) * u({2, 2}) - pow(u({1, 2}), 2)); }

std::vector<NamedLagrangian> first_order_corpus() {
  return {
      named("dirichlet", kM1, 1, kHalf * (pow(u({1}), 2) + pow(u({2}), 2))),
      named("wave-mixed", kM1, 1, u({1}) * u({2})),
      named("trivial-yy1", kM1, 1, u({}) * u({1})),
      named("rational-area", kM1, 1, 1 / (1 + pow(u({1}), 2) + pow(u({2}), 2))),
      named("potential", kM1, 1, x(1) * pow(u({}), 2) + u({1}) * pow(u({2}), 2)),
      named("trivial-shift", kM1, 1, 3 + u({1})),
      named("null-jacobian", kM2, 1, v(1, {1}) * v(2, {2}) - v(1, {2}) * v(2, {1})),
      named("dirichlet-m2", kM2, 1,
            kHalf * (pow(v(1, {1}), 2) + pow(v(1, {2}), 2) + pow(v(2, {1}), 2) + pow(v(2, {2}), 2)) + v(1, {}) * v(2, {})),
      named("coupled-rational", kM2, 1, v(1, {1}) * v(2, {2}) + v(1, {}) * v(2, {1}) / (1 + pow(v(2, {}), 2))),
  };
}

std::vector<NamedLagrangian> trivial_order_reducible_corpus() {
  return {
      {"hessian", hessian_determinant()},
      divergence("div-y2sq", kM1, {kHalf * pow(u({2}), 2), Expr(0)}, 1),
      divergence("div-yy1", kM1, {u({}) * u({1}), Expr(0)}, 1),
      divergence("div-mixed", kM1, {u({}) * u({2}), x(1) * u({1}) * u({})}, 1),
      divergence("div-rational", kM1, {u({2}) / (1 + pow(u({}), 2)), pow(u({1}), 2)}, 1),
      divergence("div-m2", kM2, {v(1, {}) * v(2, {2}), -v(1, {}) * v(2, {1}) + x(2) * v(2, {2})}, 1),
      divergence("div-cubic", kM1, {pow(u({1}), 2) * u({2}), x(2) * pow(u({}), 3)}, 1),
  };
}

std::vector<NamedLagrangian> nontrivial_order_reducible_corpus() {
  return {
      named("dirichlet-2", kM1, 2, kHalf * (pow(u({1}), 2) + pow(u({2}), 2))),
      named("wave-mixed-2", kM1, 2, u({1}) * u({2})),
      named("linear-second", kM1, 2, x(1) * u({2, 2}) * u({2}) + u({}) * u({1, 2}) + pow(u({}), 2)),
      named("linear-m2", kM2, 2, v(1, {1}) * v(2, {1, 2}) + v(2, {}) * v(1, {2, 2}) + v(1, {}) * v(2, {})),
  };
}

std::vector<NamedLagrangian> caratheodory_corpus() {
  return {
      named("shifted-hessian", kM1, 2, 1 + u({1, 1}) * u({2, 2})),
      {"camassa-holm", camassa_holm()},
      named("shifted-linear", kM1, 2, 2 + u({2}) * u({1, 2}) + pow(u({1}), 2)),
      named("rational-12", kM1, 2, pow(u({1, 2}), 2) / (1 + pow(u({}), 2)) + 1),
  };
}

std::vector<NamedLagrangian> second_order_corpus() {
  std::vector<NamedLagrangian> out = trivial_order_reducible_corpus();
  for (auto& e : nontrivial_order_reducible_corpus()) out.push_back(std::move(e));
  out.push_back({"camassa-holm", camassa_holm()});
  out.push_back(named("half-y11sq", kM1, 2, kHalf * pow(u({1, 1}), 2)));
  out.push_back(named("y11y22", kM1, 2, u({1, 1}) * u({2, 2})));
  out.push_back(named("laplacian-sq", kM1, 2, kHalf * pow(u({1, 1}) + u({2, 2}), 2)));
  out.push_back(named("rational-12", kM1, 2, pow(u({1, 2}), 2) / (1 + pow(u({}), 2))));
  out.push_back(named("mixed-hessian-m2", kM2, 2, v(1, {1, 1}) * v(2, {2, 2}) - v(1, {1, 2}) * v(2, {1, 2})));
  return out;
}

}  // namespace lepage
