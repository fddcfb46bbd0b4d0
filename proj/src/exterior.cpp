#include "lepage/exterior.hpp"

#include <algorithm>
#include <cctype>

#include "lepage/errors.hpp"
#include "lepage/jet_calculus.hpp"

namespace lepage {

CoframeElement CoframeElement::dx(int i) { return CoframeElement(JetVariable::base(i)); }

CoframeElement CoframeElement::omega(int sigma, const MultiIndex& J) {
  return CoframeElement(JetVariable::fiber(sigma, J));
}

std::string CoframeElement::label() const {
  if (is_dx()) return "dx" + std::to_string(index());
  std::string out = "w" + std::to_string(sigma());
  if (order() > 0) out += "_" + multi_index().digits();
  return out;
}

CoframeElement CoframeElement::from_label(const std::string& label) {
  auto digits = [&](std::size_t from, std::size_t to) {
    if (from >= to) throw std::invalid_argument("bad basis label: " + label);
    for (std::size_t k = from; k < to; ++k) {
      if (!std::isdigit(static_cast<unsigned char>(label[k]))) throw std::invalid_argument("bad basis label: " + label);
    }
  };
  if (label.rfind("dx", 0) == 0) {
    digits(2, label.size());
    return dx(std::stoi(label.substr(2)));
  }
  if (label.rfind("w", 0) == 0) {
    auto us = label.find('_');
    std::size_t end = us == std::string::npos ? label.size() : us;
    digits(1, end);
    int sigma = std::stoi(label.substr(1, end - 1));
    std::vector<int> J;
    if (us != std::string::npos) {
      digits(us + 1, label.size());
      for (std::size_t k = us + 1; k < label.size(); ++k) J.push_back(label[k] - '0');
    }
    return omega(sigma, MultiIndex(std::span<const int>(J)));
  }
  throw std::invalid_argument("bad basis label: " + label);
}

int sort_with_sign(BasisTuple& tuple) {
  int sign = 1;
  for (std::size_t i = 1; i < tuple.size(); ++i) {
    for (std::size_t j = i; j > 0 && tuple[j] < tuple[j - 1]; --j) {
      std::swap(tuple[j], tuple[j - 1]);
      sign = -sign;
    }
  }
  for (std::size_t i = 1; i < tuple.size(); ++i) {
    if (tuple[i] == tuple[i - 1]) return 0;
  }
  return sign;
}

ExteriorForm::ExteriorForm(const ChartContext& ctx, int degree, int order)
    : ctx_(ctx.with_order(std::max(ctx.max_order, order))), degree_(degree), order_(order) {
  if (degree < 0) throw std::invalid_argument("negative form degree");
  if (order < 0 || order > MultiIndex::kMaxOrder) throw UnsupportedOrder("form order out of range");
}

ExteriorForm ExteriorForm::scalar(const ChartContext& ctx, const Expr& f, int order) {
  ExteriorForm out(ctx, 0, order);
  out.add_term({}, f);
  return out;
}

ExteriorForm ExteriorForm::dx(const ChartContext& ctx, int i) {
  ctx.require_base_index(i);
  ExteriorForm out(ctx, 1, 0);
  out.add_term({CoframeElement::dx(i)}, Expr(1));
  return out;
}

ExteriorForm ExteriorForm::omega(const ChartContext& ctx, int sigma, const MultiIndex& J) {
  ctx.require_fiber_index(sigma);
  ExteriorForm out(ctx, 1, J.order() + 1);
  out.add_term({CoframeElement::omega(sigma, J)}, Expr(1));
  return out;
}

Expr ExteriorForm::coefficient(const BasisTuple& tuple) const {
  auto it = terms_.find(tuple);
  return it == terms_.end() ? Expr() : it->second;
}

void ExteriorForm::add_term(BasisTuple tuple, const Expr& coeff) {
  if (static_cast<int>(tuple.size()) != degree_) {
    throw std::invalid_argument("basis tuple of length " + std::to_string(tuple.size()) + " added to a " +
                                std::to_string(degree_) + "-form");
  }
  for (auto e : tuple) {
    if (e.is_dx()) {
      ctx_.require_base_index(e.index());
    } else {
      ctx_.require_fiber_index(e.sigma());
      if (e.order() > order_ - 1) {
        throw OrderMismatch("contact element " + e.label() + " exceeds form order " + std::to_string(order_));
      }
      for (int k = 0; k < e.order(); ++k) ctx_.require_base_index(e.multi_index()[k]);
    }
  }
  int sign = sort_with_sign(tuple);
  if (sign == 0) return;
  Expr c = canonicalize(coeff);
  if (c.is_zero()) return;
  for (auto v : variables(c)) {
    if (v.order() > order_) {
      throw OrderMismatch("coefficient depends on " + v.name(ctx_.m) + " beyond form order " + std::to_string(order_));
    }
    if (v.is_base()) ctx_.require_base_index(v.base_index());
    else ctx_.require_fiber_index(v.fiber_index());
  }
  auto it = terms_.find(tuple);
  Expr signed_c = sign > 0 ? c : canonicalize(-c);
  if (it == terms_.end()) {
    terms_.emplace(std::move(tuple), signed_c);
    return;
  }
  Expr sum = canonicalize(it->second + signed_c);
  if (sum.is_zero()) {
    terms_.erase(it);
  } else {
    it->second = sum;
  }
}

ExteriorForm ExteriorForm::lifted(int order) const {
  if (order < order_) throw OrderMismatch("cannot lower the order of a form");
  ExteriorForm out = *this;
  out.order_ = order;
  out.ctx_ = ctx_.with_order(std::max(ctx_.max_order, order));
  return out;
}

int ExteriorForm::coefficient_order() const {
  int r = 0;
  for (const auto& [tuple, c] : terms_) r = std::max(r, jet_order(c));
  return r;
}

namespace {

void require_compatible(const ExteriorForm& a, const ExteriorForm& b) {
  if (a.chart().n != b.chart().n || a.chart().m != b.chart().m) {
    throw ChartMismatch("forms on charts " + a.chart().describe() + " and " + b.chart().describe());
  }
}

}  // namespace

ExteriorForm operator+(const ExteriorForm& a, const ExteriorForm& b) {
  require_compatible(a, b);
  if (a.degree() != b.degree()) throw std::invalid_argument("sum of forms of different degree");
  ExteriorForm out = a.lifted(std::max(a.order(), b.order()));
  for (const auto& [tuple, c] : b.terms()) out.add_term(tuple, c);
  return out;
}

ExteriorForm operator-(const ExteriorForm& a, const ExteriorForm& b) { return a + Expr(-1) * b; }

ExteriorForm operator*(const Expr& f, const ExteriorForm& a) {
  int order = std::max(a.order(), jet_order(f));
  ExteriorForm out(a.chart(), a.degree(), order);
  Expr g = canonicalize(f);
  if (g.is_zero()) return out;
  for (const auto& [tuple, c] : a.terms()) out.add_term(tuple, g * c);
  return out;
}

ExteriorForm wedge(const ExteriorForm& a, const ExteriorForm& b) {
  require_compatible(a, b);
  ExteriorForm out(a.chart(), a.degree() + b.degree(), std::max(a.order(), b.order()));
  for (const auto& [ta, ca] : a.terms()) {
    for (const auto& [tb, cb] : b.terms()) {
      BasisTuple t = ta;
      t.insert(t.end(), tb.begin(), tb.end());
      out.add_term(std::move(t), ca * cb);
    }
  }
  return out;
}

ExteriorForm exterior_derivative(const ExteriorForm& a) {
  const ChartContext& c = a.chart();
  ChartContext ctx = c.with_order(a.order());
  ExteriorForm out(c, a.degree() + 1, a.order() + 1);
  for (const auto& [tuple, f] : a.terms()) {
    // df ∧ e1 ∧ ... ∧ eq
    for (int i = 1; i <= c.n; ++i) {
      BasisTuple t{CoframeElement::dx(i)};
      t.insert(t.end(), tuple.begin(), tuple.end());
      out.add_term(std::move(t), total_derivative(f, i, ctx));
    }
    for (auto v : variables(f)) {
      if (!v.is_fiber()) continue;
      BasisTuple t{CoframeElement::omega(v.fiber_index(), v.multi_index())};
      t.insert(t.end(), tuple.begin(), tuple.end());
      out.add_term(std::move(t), diff(f, v));
    }
    // f d(e1 ∧ ... ∧ eq) with d(ω_J) = dx^i ∧ ω_{Ji}.
    for (std::size_t k = 0; k < tuple.size(); ++k) {
      if (!tuple[k].is_omega()) continue;
      Expr signed_f = (k % 2 == 0) ? f : -f;
      for (int i = 1; i <= c.n; ++i) {
        BasisTuple t(tuple.begin(), tuple.begin() + static_cast<std::ptrdiff_t>(k));
        t.push_back(CoframeElement::dx(i));
        t.push_back(CoframeElement::omega(tuple[k].sigma(), tuple[k].multi_index().appended(i)));
        t.insert(t.end(), tuple.begin() + static_cast<std::ptrdiff_t>(k) + 1, tuple.end());
        out.add_term(std::move(t), signed_f);
      }
    }
  }
  return out;
}

ExteriorForm contact_component(const ExteriorForm& a, int k) {
  ExteriorForm out(a.chart(), a.degree(), a.order());
  for (const auto& [tuple, c] : a.terms()) {
    int contact = static_cast<int>(std::count_if(tuple.begin(), tuple.end(), [](CoframeElement e) { return e.is_omega(); }));
    if (contact == k) out.add_term(tuple, c);
  }
  return out;
}

ExteriorForm horizontalization(const ExteriorForm& a) { return contact_component(a, 0); }

int levi_civita(const std::vector<int>& indices) {
  std::vector<int> v = indices;
  int sign = 1;
  for (std::size_t i = 1; i < v.size(); ++i) {
    for (std::size_t j = i; j > 0 && v[j] < v[j - 1]; --j) {
      std::swap(v[j], v[j - 1]);
      sign = -sign;
    }
  }
  for (std::size_t i = 1; i < v.size(); ++i) {
    if (v[i] == v[i - 1]) return 0;
  }
  return sign;
}

OmegaBasis omega_basis(const ChartContext& ctx) {
  OmegaBasis out{ExteriorForm(ctx, ctx.n, 0), {}};
  BasisTuple all;
  for (int i = 1; i <= ctx.n; ++i) all.push_back(CoframeElement::dx(i));
  out.omega0.add_term(all, Expr(1));
  for (int j = 1; j <= ctx.n; ++j) {
    ExteriorForm w(ctx, ctx.n - 1, 0);
    BasisTuple t;
    for (int i = 1; i <= ctx.n; ++i) {
      if (i != j) t.push_back(CoframeElement::dx(i));
    }
    w.add_term(t, Expr((j % 2 == 1) ? 1 : -1));
    out.omega.push_back(std::move(w));
  }
  return out;
}

}  // namespace lepage
