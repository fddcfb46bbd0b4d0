#include "lepage/cli.hpp"

#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "lepage/errors.hpp"
#include "lepage/form_io.hpp"
#include "lepage/parser.hpp"
#include "lepage/printer.hpp"
#include "lepage/verification.hpp"

namespace lepage {

namespace {

struct Options {
  int n = 2;
  int m = 1;
  int order = 1;
  std::string lagrangian;
  std::string file;
  std::string format = "text";
  std::string convention = "sym";
  std::uint64_t seed = 0;
  int samples = 25;
  double tol = 1e-9;
  std::string form = "theta";
  std::string input_form;
  std::string at;
  std::string check_kind;
  int contact = 0;
};

class UsageError : public Error {
 public:
  using Error::Error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

class Session {
 public:
  Session(const Options& o, std::ostream& out) : o_(o), out_(out) {
    policy_.samples = o.samples;
    policy_.seed = o.seed;
    policy_.abs_tol = o.tol;
  }

  int run(const std::string& command) {
    if (command == "calibrate") return calibrate();
    resolve_conventions();
    if (command == "el") return emit(euler_lagrange_form(lagrangian()), [&] {
      auto E = euler_lagrange_expressions(lagrangian());
      std::string text;
      for (std::size_t s = 0; s < E.size(); ++s) {
        text += (s ? "\n" : "") + std::string("E_") + std::to_string(s + 1) + " = " + print(E[s]);
      }
      return text;
    });
    if (command == "theta" || command == "caratheodory" || command == "fundamental") return emit(constructed(command));
    if (command == "d") return emit(exterior_derivative(input()));
    if (command == "hor") return emit(horizontalization(input()));
    if (command == "contact") return emit(contact_component(input(), o_.contact));
    if (command == "eval") return eval();
    if (command == "check") return check();
    throw UsageError("unknown command " + command);
  }

 private:
  const Lagrangian& lagrangian() {
    if (!lambda_) {
      std::string source = o_.lagrangian;
      if (!o_.file.empty()) source = read_file(o_.file);
      if (source.empty()) throw UsageError("a Lagrangian is required (--lagrangian or --file)");
      lambda_ = parse_lagrangian({o_.n, o_.m, o_.order, source});
    }
    return *lambda_;
  }

  void resolve_conventions() {
    if (o_.convention == "auto") {
      auto report = calibrate_convention(trivial_order_reducible_corpus(), policy_);
      if (!report.selected()) throw CalibrationFailure("calibration is ambiguous:\n" + report.to_text());
      conv_ = *report.selected();
    } else {
      auto c = parse_convention(o_.convention);
      conv_ = Conventions{c, c};
    }
  }

  ExteriorForm constructed(const std::string& kind) {
    const auto& l = lagrangian();
    if (kind == "lagrangian") return l.form();
    if (kind == "theta") return principal_lepage(l, conv_.lepage);
    if (kind == "caratheodory") return l.order() <= 1 ? caratheodory_first(l) : caratheodory_second(l, conv_.lepage);
    if (kind == "fundamental") {
      if (l.order() <= 1) return fundamental_first_order(l);
      return fundamental_second_order_n2(l, conv_).Z;
    }
    throw UsageError("unknown form kind " + kind);
  }

  ExteriorForm input() {
    if (!o_.input_form.empty()) return from_form_document(read_file(o_.input_form));
    return constructed(o_.form);
  }

  std::string print(const Expr& e) const {
    return o_.format == "latex" ? to_latex(e, o_.m) : to_string(e, o_.m);
  }

  template <class Text>
  int emit(const ExteriorForm& f, Text text) {
    if (o_.format == "json") {
      out_ << to_form_document(f) << "\n";
    } else {
      out_ << text() << "\n";
    }
    return 0;
  }

  int emit(const ExteriorForm& f) {
    if (o_.format == "json") {
      out_ << to_form_document(f) << "\n";
    } else if (o_.format == "latex") {
      out_ << format_form_latex(f) << "\n";
    } else {
      out_ << format_form_text(f) << "\n";
    }
    return 0;
  }

  Point parse_point(const std::string& text) const {
    Point p;
    ChartContext ctx(o_.n, o_.m, o_.order);
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
      auto eq = item.find('=');
      if (eq == std::string::npos) throw UsageError("expected name=value in --at, got '" + item + "'");
      Expr v = parse_expression(item.substr(0, eq), ctx);
      if (v.kind() != NodeKind::Variable) throw UsageError("not a coordinate: " + item.substr(0, eq));
      try {
        p[v.var()] = std::stod(item.substr(eq + 1));
      } catch (const std::exception&) {
        throw UsageError("bad number in --at: " + item);
      }
    }
    return p;
  }

  int eval() {
    double v = eval_numeric(lagrangian().function(), parse_point(o_.at));
    if (o_.format == "json") {
      out_ << nlohmann::json{{"value", v}}.dump() << "\n";
    } else {
      out_ << std::setprecision(17) << v << "\n";
    }
    return 0;
  }

  std::string point_text(const Point& p) const {
    std::ostringstream s;
    s << std::setprecision(6);
    bool first = true;
    for (const auto& [v, x] : p) {
      s << (first ? "" : ", ") << v.name(o_.m) << "=" << x;
      first = false;
    }
    return s.str();
  }

  int report(const CheckReport& r) {
    if (o_.format == "json") {
      nlohmann::ordered_json j;
      j["pass"] = r.pass;
      if (!r.pass) {
        j["condition"] = r.condition;
        if (r.witness) j["witness"] = to_string(*r.witness, o_.m);
        if (!r.basis.empty()) j["basis"] = r.basis;
        if (r.witness_point) {
          nlohmann::ordered_json pt;
          for (const auto& [v, x] : *r.witness_point) pt[v.name(o_.m)] = x;
          j["point"] = pt;
        }
      }
      out_ << j.dump(2) << "\n";
    } else if (r.pass) {
      out_ << "pass\n";
    } else {
      out_ << "fail: " << r.condition << "\n";
      if (r.witness) out_ << "witness: " << print(*r.witness) << "\n";
      if (!r.basis.empty()) out_ << "basis: " << r.basis << "\n";
      if (r.witness_point) out_ << "at: " << point_text(*r.witness_point) << "\n";
    }
    return r.pass ? 0 : 1;
  }

  int check() {
    const std::string& k = o_.check_kind;
    if (k == "trivial") return report(is_trivial(lagrangian(), policy_));
    if (k == "order") return report(order_reducible(lagrangian(), conv_.lepage, policy_));
    if (k == "lepage") return report(is_lepage_form(input(), policy_));
    if (k == "closed") return report(closure_check(input(), policy_));
    if (k == "equivalent") return report(is_lepage_equivalent(input(), lagrangian(), policy_));
    throw UsageError("unknown check " + k);
  }

  int calibrate() {
    auto corpus = trivial_order_reducible_corpus();
    auto r = calibrate_convention(corpus, policy_);
    if (o_.format == "json") {
      nlohmann::ordered_json j;
      auto combos = nlohmann::ordered_json::array();
      for (const auto& c : r.combinations) {
        nlohmann::ordered_json entries = nlohmann::ordered_json::array();
        for (const auto& e : c.entries) entries.push_back({{"name", e.name}, {"outcome", e.outcome}});
        combos.push_back({{"lepage", convention_name(c.conventions.lepage)},
                          {"coefficients", convention_name(c.conventions.coefficients)},
                          {"pass", c.pass},
                          {"entries", entries}});
      }
      j["combinations"] = combos;
      if (auto s = r.selected()) {
        j["selected"] = {{"lepage", convention_name(s->lepage)}, {"coefficients", convention_name(s->coefficients)}};
      } else {
        j["selected"] = nullptr;
      }
      out_ << j.dump(2) << "\n";
    } else {
      out_ << r.to_text();
    }
    return r.selected() ? 0 : 1;
  }

  Options o_;
  std::ostream& out_;
  ZeroPolicy policy_;
  Conventions conv_;
  std::optional<Lagrangian> lambda_;
};

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Symbolic variational calculus on jet bundles", "lepage"};
  app.require_subcommand(1);
  app.add_option("--n", o.n, "Base dimension")->check(CLI::Range(1, 9));
  app.add_option("--m", o.m, "Fiber dimension")->check(CLI::Range(1, 99));
  app.add_option("--order", o.order, "Declared order of the Lagrangian")->check(CLI::Range(0, 4));
  auto* lag = app.add_option("--lagrangian", o.lagrangian, "Lagrangian expression");
  app.add_option("--file", o.file, "File holding the Lagrangian expression")->excludes(lag);
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "latex", "json"}));
  app.add_option("--convention", o.convention, "Free-index derivative convention")
      ->check(CLI::IsMember({"plain", "sym", "auto"}));
  app.add_option("--seed", o.seed, "Seed of the numeric zero test");
  app.add_option("--samples", o.samples, "Sample points of the numeric zero test")->check(CLI::PositiveNumber);
  app.add_option("--tol", o.tol, "Absolute tolerance of the numeric zero test")->check(CLI::PositiveNumber);
  app.add_option("--form", o.form, "Form to operate on")
      ->check(CLI::IsMember({"lagrangian", "theta", "caratheodory", "fundamental"}));
  app.add_option("--input-form", o.input_form, "FormDocument JSON file to operate on");
  app.add_option("--at", o.at, "Point for eval, e.g. x1=0,y_1=2");

  app.add_subcommand("el", "Euler-Lagrange expressions")->fallthrough();
  app.add_subcommand("theta", "Principal Lepage equivalent")->fallthrough();
  app.add_subcommand("caratheodory", "Caratheodory form")->fallthrough();
  app.add_subcommand("fundamental", "Fundamental Lepage form")->fallthrough();
  auto* check = app.add_subcommand("check", "Run a check")->fallthrough();
  check->add_option("kind", o.check_kind, "trivial, order, lepage, closed or equivalent")
      ->required()
      ->check(CLI::IsMember({"trivial", "order", "lepage", "closed", "equivalent"}));
  app.add_subcommand("d", "Exterior derivative")->fallthrough();
  app.add_subcommand("hor", "Horizontal component")->fallthrough();
  auto* contact = app.add_subcommand("contact", "k-contact component")->fallthrough();
  contact->add_option("k", o.contact, "Number of contact factors")->required()->check(CLI::NonNegativeNumber);
  app.add_subcommand("eval", "Evaluate the Lagrangian at --at")->fallthrough();
  app.add_subcommand("calibrate", "Run the convention calibration")->fallthrough();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  std::string command = app.get_subcommands().front()->get_name();
  try {
    return Session(o, out).run(command);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const ChartMismatch& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const OrderMismatch& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const MissingVariable& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const OrderReducibilityViolation& e) {
    err << "refused: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace lepage
