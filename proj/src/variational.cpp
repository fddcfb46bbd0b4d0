#include "lepage/variational.hpp"

#include <algorithm>
#include <numeric>

#include "lepage/errors.hpp"
#include "lepage/zero_test.hpp"

namespace lepage {

Conventions default_conventions() { return Conventions{}; }

std::string describe(const Conventions& c) {
  return "lepage=" + convention_name(c.lepage) + ", coefficients=" + convention_name(c.coefficients);
}

Lagrangian::Lagrangian(const ChartContext& ctx, int r, const Expr& L)
    : ctx_(ctx.with_order(r)), r_(r), L_(canonicalize(L)) {
  if (r < 0) throw UnsupportedOrder("negative Lagrangian order");
  for (auto v : variables(L_)) {
    if (v.order() > r) {
      throw OrderMismatch("Lagrangian depends on " + v.name(ctx.m) + " but declared order is " + std::to_string(r));
    }
    ctx_.require(v);
  }
}

ExteriorForm Lagrangian::form() const { return L_ * omega_basis(ctx_).omega0.lifted(r_); }

namespace {

std::vector<int> concat(std::vector<int> a, const std::vector<int>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

// ω_i as (sign, dx-tuple).
std::pair<int, BasisTuple> omega_i(int n, int i) {
  BasisTuple t;
  for (int k = 1; k <= n; ++k) {
    if (k != i) t.push_back(CoframeElement::dx(k));
  }
  return {(i % 2 == 1) ? 1 : -1, t};
}

// Memoized free-index partials of a fixed function.
class Partials {
 public:
  Partials(Expr f, DerivativeConvention c) : f_(std::move(f)), c_(c) {}

  const Expr& first(int sigma, const std::vector<int>& I) {
    auto key = std::make_pair(sigma, MultiIndex(std::span<const int>(I)));
    auto it = first_.find(key);
    if (it == first_.end()) it = first_.emplace(key, sym_partial(f_, sigma, I, c_)).first;
    return it->second;
  }

  const Expr& second(int sigma, const std::vector<int>& I, int nu, const std::vector<int>& K) {
    auto key = std::make_tuple(sigma, MultiIndex(std::span<const int>(I)), nu, MultiIndex(std::span<const int>(K)));
    auto it = second_.find(key);
    if (it == second_.end()) it = second_.emplace(key, sym_partial(first(sigma, I), nu, K, c_)).first;
    return it->second;
  }

 private:
  Expr f_;
  DerivativeConvention c_;
  std::map<std::pair<int, MultiIndex>, Expr> first_;
  std::map<std::tuple<int, MultiIndex, int, MultiIndex>, Expr> second_;
};

void require_nonvanishing(const Lagrangian& lambda) {
  if (equals_zero(lambda.function()).is_zero()) {
    throw UndefinedForm("the Carathéodory form needs a non-vanishing Lagrangian");
  }
}

}  // namespace

std::vector<Expr> euler_lagrange_expressions(const Lagrangian& lambda) {
  const auto& ctx = lambda.chart();
  std::vector<Expr> out;
  for (int sigma = 1; sigma <= ctx.m; ++sigma) {
    Expr E;
    for (int k = 0; k <= lambda.order(); ++k) {
      for (const auto& J : sorted_multi_indices(ctx.n, k)) {
        Expr d = total_derivative(diff(lambda.function(), JetVariable::fiber(sigma, J)), J.entries(), ctx);
        E = canonicalize((k % 2 == 0) ? E + d : E - d);
      }
    }
    out.push_back(E);
  }
  return out;
}

ExteriorForm euler_lagrange_form(const Lagrangian& lambda) {
  const auto& ctx = lambda.chart();
  ExteriorForm out(ctx, ctx.n + 1, 2 * lambda.order());
  auto E = euler_lagrange_expressions(lambda);
  BasisTuple t{CoframeElement::omega(1)};
  for (int i = 1; i <= ctx.n; ++i) t.push_back(CoframeElement::dx(i));
  for (int sigma = 1; sigma <= ctx.m; ++sigma) {
    t[0] = CoframeElement::omega(sigma);
    out.add_term(t, E[static_cast<std::size_t>(sigma - 1)]);
  }
  return out;
}

ExteriorForm principal_lepage(const Lagrangian& lambda, DerivativeConvention convention) {
  const int r = lambda.order();
  if (r > 3) throw UnsupportedOrder("principal Lepage equivalent is available for r <= 3");
  const auto& ctx = lambda.chart();
  const int n = ctx.n;
  ExteriorForm theta = lambda.form().lifted(std::max(2 * r - 1, r));
  Partials partials(lambda.function(), convention);
  // d_p of a partial depends only on the multisets involved.
  std::map<std::tuple<int, MultiIndex, MultiIndex>, Expr> derived;
  for (int k = 0; k <= r - 1; ++k) {
    for (const auto& j : index_tuples(n, k)) {
      for (int i = 1; i <= n; ++i) {
        for (int sigma = 1; sigma <= ctx.m; ++sigma) {
          Expr coef;
          for (int l = 0; l <= r - 1 - k; ++l) {
            for (const auto& p : index_tuples(n, l)) {
              auto I = concat(concat(j, p), {i});
              auto key = std::make_tuple(sigma, MultiIndex(std::span<const int>(I)), MultiIndex(std::span<const int>(p)));
              auto it = derived.find(key);
              if (it == derived.end()) {
                it = derived.emplace(key, total_derivative(partials.first(sigma, I), p, ctx)).first;
              }
              coef = (l % 2 == 0) ? coef + it->second : coef - it->second;
            }
          }
          auto [sign, dxs] = omega_i(n, i);
          BasisTuple t{CoframeElement::omega(sigma, MultiIndex(std::span<const int>(j)))};
          t.insert(t.end(), dxs.begin(), dxs.end());
          theta.add_term(std::move(t), sign > 0 ? coef : -coef);
        }
      }
    }
  }
  return theta;
}

namespace {

// ℒ^{1-n} φ_1 ∧ ... ∧ φ_n for the given 1-forms.
ExteriorForm caratheodory_product(const Lagrangian& lambda, const std::vector<ExteriorForm>& phi) {
  ExteriorForm acc = phi.front();
  for (std::size_t k = 1; k < phi.size(); ++k) acc = wedge(acc, phi[k]);
  return pow(lambda.function(), 1 - lambda.n()) * acc;
}

}  // namespace

ExteriorForm caratheodory_first(const Lagrangian& lambda) {
  if (lambda.order() != 1) throw UnsupportedOrder("caratheodory_first needs a first-order Lagrangian");
  require_nonvanishing(lambda);
  const auto& ctx = lambda.chart();
  std::vector<ExteriorForm> phi;
  for (int j = 1; j <= ctx.n; ++j) {
    ExteriorForm f(ctx, 1, 1);
    f.add_term({CoframeElement::dx(j)}, lambda.function());
    for (int sigma = 1; sigma <= ctx.m; ++sigma) {
      f.add_term({CoframeElement::omega(sigma)}, diff(lambda.function(), JetVariable::fiber(sigma, {j})));
    }
    phi.push_back(std::move(f));
  }
  return caratheodory_product(lambda, phi);
}

namespace {

// A_{jσ} = ∂ℒ/∂y^σ_j - d_i ∂ℒ/∂y^σ_{ij} and B^{ij}_σ = ∂ℒ/∂y^σ_{ij}.
struct SecondOrderBlocks {
  std::map<std::pair<int, int>, Expr> A;                // (j, σ)
  std::map<std::tuple<int, int, int>, Expr> B;          // (i, j, σ)
};

SecondOrderBlocks second_order_blocks(const Lagrangian& lambda, DerivativeConvention convention) {
  const auto& ctx = lambda.chart();
  Partials partials(lambda.function(), convention);
  SecondOrderBlocks out;
  for (int sigma = 1; sigma <= ctx.m; ++sigma) {
    for (int j = 1; j <= ctx.n; ++j) {
      Expr a = partials.first(sigma, {j});
      for (int i = 1; i <= ctx.n; ++i) {
        const Expr& b = partials.first(sigma, {i, j});
        out.B[{i, j, sigma}] = b;
        a = a - total_derivative(b, i, ctx);
      }
      out.A[{j, sigma}] = canonicalize(a);
    }
  }
  return out;
}

}  // namespace

ExteriorForm caratheodory_second(const Lagrangian& lambda, DerivativeConvention convention) {
  if (lambda.order() != 2) throw UnsupportedOrder("caratheodory_second needs a second-order Lagrangian");
  require_nonvanishing(lambda);
  const auto& ctx = lambda.chart();
  auto blocks = second_order_blocks(lambda, convention);
  std::vector<ExteriorForm> phi;
  for (int j = 1; j <= ctx.n; ++j) {
    ExteriorForm f(ctx, 1, 3);
    f.add_term({CoframeElement::dx(j)}, lambda.function());
    for (int sigma = 1; sigma <= ctx.m; ++sigma) {
      f.add_term({CoframeElement::omega(sigma)}, blocks.A.at({j, sigma}));
      for (int i = 1; i <= ctx.n; ++i) {
        f.add_term({CoframeElement::omega(sigma, {i})}, blocks.B.at({i, j, sigma}));
      }
    }
    phi.push_back(std::move(f));
  }
  return caratheodory_product(lambda, phi);
}

ExteriorForm caratheodory_n2_blocks(const Lagrangian& lambda, DerivativeConvention convention) {
  if (lambda.order() != 2 || lambda.n() != 2) {
    throw UnsupportedOrder("the explicit decomposition is stated for n = 2, r = 2");
  }
  require_nonvanishing(lambda);
  const auto& ctx = lambda.chart();
  auto blocks = second_order_blocks(lambda, convention);
  Expr inv = pow(lambda.function(), -1);
  ExteriorForm out(ctx, 2, 3);
  for (int sigma = 1; sigma <= ctx.m; ++sigma) {
    for (int nu = 1; nu <= ctx.m; ++nu) {
      out.add_term({CoframeElement::omega(sigma), CoframeElement::omega(nu)},
                   inv * blocks.A.at({1, sigma}) * blocks.A.at({2, nu}));
      for (int j = 1; j <= 2; ++j) {
        out.add_term({CoframeElement::omega(sigma), CoframeElement::omega(nu, {j})},
                     inv * (blocks.B.at({j, 2, nu}) * blocks.A.at({1, sigma}) -
                            blocks.B.at({j, 1, nu}) * blocks.A.at({2, sigma})));
        for (int i = 1; i <= 2; ++i) {
          out.add_term({CoframeElement::omega(sigma, {i}), CoframeElement::omega(nu, {j})},
                       inv * blocks.B.at({i, 1, sigma}) * blocks.B.at({j, 2, nu}));
        }
      }
    }
  }
  return out;
}

ExteriorForm fundamental_first_order(const Lagrangian& lambda) {
  if (lambda.order() != 1) throw UnsupportedOrder("fundamental_first_order needs a first-order Lagrangian");
  const auto& ctx = lambda.chart();
  const int n = ctx.n;
  if (n > 4) throw UnsupportedOrder("fundamental_first_order is limited to n <= 4");
  ExteriorForm Z = lambda.form();
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 1);
  // ∂^kℒ/∂y^{σ1}_{j1}...∂y^{σk}_{jk} keyed by the sorted list of (σ, j).
  std::map<std::vector<std::pair<int, int>>, Expr> derivatives;
  auto derivative = [&](std::vector<std::pair<int, int>> vars) -> const Expr& {
    std::sort(vars.begin(), vars.end());
    auto it = derivatives.find(vars);
    if (it != derivatives.end()) return it->second;
    Expr d = lambda.function();
    for (auto [sigma, j] : vars) d = diff(d, JetVariable::fiber(sigma, {j}));
    return derivatives.emplace(vars, d).first->second;
  };
  std::vector<mpz_class> factorial(static_cast<std::size_t>(n) + 1, 1);
  for (int k = 1; k <= n; ++k) factorial[static_cast<std::size_t>(k)] = factorial[static_cast<std::size_t>(k - 1)] * k;
  do {
    int eps = levi_civita(perm);
    for (int k = 1; k <= n; ++k) {
      mpq_class weight(eps, factorial[static_cast<std::size_t>(n - k)] * factorial[static_cast<std::size_t>(k)] *
                                factorial[static_cast<std::size_t>(k)]);
      weight.canonicalize();
      // σ-tuples over [1..m]^k.
      std::vector<int> sigmas(static_cast<std::size_t>(k), 1);
      while (true) {
        std::vector<std::pair<int, int>> vars;
        BasisTuple t;
        for (int a = 0; a < k; ++a) {
          vars.emplace_back(sigmas[static_cast<std::size_t>(a)], perm[static_cast<std::size_t>(a)]);
          t.push_back(CoframeElement::omega(sigmas[static_cast<std::size_t>(a)]));
        }
        for (int a = k; a < n; ++a) t.push_back(CoframeElement::dx(perm[static_cast<std::size_t>(a)]));
        const Expr& d = derivative(vars);
        if (!d.is_zero()) Z.add_term(std::move(t), Expr(weight) * d);
        int pos = k - 1;
        while (pos >= 0 && sigmas[static_cast<std::size_t>(pos)] == ctx.m) sigmas[static_cast<std::size_t>(pos--)] = 1;
        if (pos < 0) break;
        ++sigmas[static_cast<std::size_t>(pos)];
      }
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return Z;
}

Expr FundamentalCoefficients::R(int i, int j, int sigma, int nu) const {
  if (i == j) return Expr();
  const Expr& r = R12.at({sigma, nu});
  return i == 1 ? r : canonicalize(-r);
}

FundamentalCoefficients fundamental_coefficients(const Lagrangian& lambda, DerivativeConvention convention) {
  if (lambda.n() != 2 || lambda.order() != 2) {
    throw UnsupportedOrder("the second-order fundamental form is defined for n = 2, r = 2");
  }
  const auto& ctx = lambda.chart();
  Partials d(lambda.function(), convention);
  auto cut = [&](const Expr& f, int i) { return cut_derivative(f, i, ctx); };
  FundamentalCoefficients out;
  const Expr half = Expr::rational(1, 2);
  for (int s = 1; s <= ctx.m; ++s) {
    for (int v = 1; v <= ctx.m; ++v) {
      Expr P = half * (d.second(s, {1}, v, {2}) - d.second(v, {1}, s, {2})) +
               cut(canonicalize(d.second(v, {1}, s, {1, 2}) - d.second(s, {1}, v, {1, 2})), 1) +
               cut(canonicalize(d.second(s, {2}, v, {1, 2}) - d.second(v, {2}, s, {1, 2})), 2);
      Expr Q1 = 2 * d.second(s, {1}, v, {1, 2}) - d.second(v, {1}, s, {1, 2}) - d.second(v, {2}, s, {1, 1}) -
                2 * cut(d.second(s, {1, 2}, v, {1, 2}), 2);
      Expr Q2 = -2 * d.second(s, {2}, v, {1, 2}) + d.second(v, {1}, s, {2, 2}) + d.second(v, {2}, s, {1, 2}) +
                2 * cut(d.second(s, {1, 2}, v, {1, 2}), 1);
      Expr R12 = -2 * d.second(s, {1, 2}, v, {1, 2});
      out.P[{s, v}] = canonicalize(P);
      out.Q1[{s, v}] = canonicalize(Q1);
      out.Q2[{s, v}] = canonicalize(Q2);
      out.R12[{s, v}] = canonicalize(R12);
    }
  }
  return out;
}

std::vector<LabeledCondition> order_conditions(const Lagrangian& lambda, DerivativeConvention convention) {
  if (lambda.n() != 2) return order_conditions_general(lambda, convention);
  if (lambda.order() != 2) throw UnsupportedOrder("order-reducibility is stated for second-order Lagrangians");
  const int m = lambda.m();
  Partials d(lambda.function(), convention);
  std::vector<LabeledCondition> out;
  for (int s = 1; s <= m; ++s) {
    for (int v = 1; v <= m; ++v) {
      std::string idx = "sigma=" + std::to_string(s) + ", nu=" + std::to_string(v);
      out.push_back({"order-reducibility[1]", idx, d.second(v, {1, 1}, s, {1, 1})});
      out.push_back({"order-reducibility[2]", idx, d.second(v, {1, 1}, s, {1, 2})});
      out.push_back({"order-reducibility[3]", idx, d.second(v, {2, 2}, s, {2, 1})});
      out.push_back({"order-reducibility[4]", idx, d.second(v, {2, 2}, s, {2, 2})});
      out.push_back({"order-reducibility[5]", idx,
                     canonicalize(d.second(v, {1, 1}, s, {2, 2}) + 2 * d.second(v, {1, 2}, s, {1, 2}))});
    }
  }
  return out;
}

std::vector<LabeledCondition> order_conditions_general(const Lagrangian& lambda, DerivativeConvention convention) {
  if (lambda.order() != 2) throw UnsupportedOrder("order-reducibility is stated for second-order Lagrangians");
  const int n = lambda.n();
  const int m = lambda.m();
  Partials d(lambda.function(), convention);
  std::vector<LabeledCondition> out;
  for (const auto& q4 : index_tuples(n, 4)) {
    int p = q4[0], q = q4[1], i = q4[2], j = q4[3];
    for (int s = 1; s <= m; ++s) {
      for (int v = 1; v <= m; ++v) {
        Expr c = d.second(v, {p, q}, s, {i, j}) + d.second(v, {i, p}, s, {q, j}) + d.second(v, {q, i}, s, {p, j});
        out.push_back({"order-reducibility",
                       "p=" + std::to_string(p) + ", q=" + std::to_string(q) + ", i=" + std::to_string(i) +
                           ", j=" + std::to_string(j) + ", sigma=" + std::to_string(s) + ", nu=" + std::to_string(v),
                       canonicalize(c)});
      }
    }
  }
  return out;
}

FundamentalSecondOrder fundamental_second_order_n2(const Lagrangian& lambda, const Conventions& conventions) {
  if (lambda.n() != 2 || lambda.order() != 2) {
    throw UnsupportedOrder("the second-order fundamental form is defined for n = 2, r = 2");
  }
  for (const auto& c : order_conditions(lambda, conventions.lepage)) {
    auto z = equals_zero(c.value);
    if (!z.is_zero()) throw OrderReducibilityViolation(c.label + " (" + c.indices + ")", to_string(c.value, lambda.m()));
  }
  const auto& ctx = lambda.chart();
  FundamentalSecondOrder out{principal_lepage(lambda, conventions.lepage),
                             fundamental_coefficients(lambda, conventions.coefficients)};
  const auto& k = out.coefficients;
  const Expr half = Expr::rational(1, 2);
  ExteriorForm extra(ctx, 2, 3);
  for (int s = 1; s <= ctx.m; ++s) {
    for (int v = 1; v <= ctx.m; ++v) {
      extra.add_term({CoframeElement::omega(s), CoframeElement::omega(v)}, half * k.P.at({s, v}));
      for (int j = 1; j <= 2; ++j) {
        extra.add_term({CoframeElement::omega(s), CoframeElement::omega(v, {j})}, k.Q(j, s, v));
        for (int i = 1; i <= 2; ++i) {
          extra.add_term({CoframeElement::omega(s, {i}), CoframeElement::omega(v, {j})}, half * k.R(i, j, s, v));
        }
      }
    }
  }
  out.Z = out.Z + extra;
  return out;
}

}  // namespace lepage
