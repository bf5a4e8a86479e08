#include "towerdecomp/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "towerdecomp/decomp.hpp"
#include "towerdecomp/elem.hpp"
#include "towerdecomp/embed.hpp"
#include "towerdecomp/error.hpp"
#include "towerdecomp/parse.hpp"
#include "towerdecomp/render.hpp"

namespace towerdecomp {

namespace {

using nlohmann::json;

struct Options {
  std::string command;
  std::string tower_path;
  std::vector<std::string> exprs;
  bool json = false;
  bool latex = false;
  bool normalize = false;
  bool matrix = false;
};

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::SyntaxError:
    case ErrorCode::UnknownName:
    case ErrorCode::InvalidTower:
    case ErrorCode::ZeroArgument:
    case ErrorCode::DivisionByZero:
      return kExitParse;
    case ErrorCode::TowerNotSPrimitive:
    case ErrorCode::HeadMonomialNotOne:
    case ErrorCode::NotLogarithmic:
    case ErrorCode::PreconditionCLIMI:
    case ErrorCode::Degenerate:
    case ErrorCode::NotSimple:
    case ErrorCode::NotProper:
    case ErrorCode::HigherGeneratorPresent:
      return kExitValidation;
    default:
      return kExitVerification;
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::InvalidTower, "cannot read tower file " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

class Session {
 public:
  Session(const Options& opt, std::ostream& out) : opt_(opt), out_(out) {}

  int run() {
    source_ = parse_tower_file(read_file(opt_.tower_path));
    if (opt_.command == "decomp") return decomp(false);
    if (opt_.command == "integrate") return decomp(true);
    if (opt_.command == "elementary") return elementary();
    if (opt_.command == "check") return check();
    if (opt_.command == "matrix") return matrix();
    if (opt_.command == "embed") return embed();
    throw Error(ErrorCode::Internal, "unknown command " + opt_.command);
  }

 private:
  std::string text(const RationalFunction& f, const Tower& t) const {
    return opt_.latex ? render_latex(f, t.names()) : render(f, t.names());
  }

  // Validated working tower; with --normalize, generators are shifted to
  // simple derivatives and inputs are rewritten accordingly.
  void prepare() {
    if (opt_.normalize) {
      NormalizedGenerators ng = normalize_generators(source_);
      tower_ = std::move(ng.tower);
      shifts_ = std::move(ng.shifts);
      to_working_ = std::move(ng.old_to_new);
    } else {
      tower_ = validated(source_);
      for (std::size_t k = 0; k < source_.nvars(); ++k) to_working_.push_back(source_.variable(k));
    }
    if (!tower_.is_s_primitive())
      throw Error(ErrorCode::TowerNotSPrimitive, "not S-primitive: " + tower_.validation().reason,
                  tower_.validation().generator);
  }

  RationalFunction input(const std::string& src) const {
    return substitute(parse_expression(src, source_), to_working_);
  }

  void require_exprs() const {
    if (opt_.exprs.empty()) throw Error(ErrorCode::SyntaxError, "missing --expr");
  }

  void print_shifts(json* j) const {
    for (const GeneratorShift& s : shifts_) {
      const std::string& name = tower_.names()[s.index];
      if (j) {
        (*j)["shifts"].push_back({{"generator", name}, {"shift", render(s.shift, tower_.names())}});
      } else {
        out_ << "shift " << name << ": " << text(s.shift, tower_) << "  (old " << name << " = new " << name
             << " + shift)\n";
      }
    }
  }

  static void verify(bool ok, const std::string& what) {
    if (!ok) throw Error(ErrorCode::Internal, "verification failed: " + what);
  }

  int decomp(bool integrate_only) {
    require_exprs();
    prepare();
    for (const std::string& src : opt_.exprs) {
      const RationalFunction f = input(src);
      const Decomposition d = add_decomp_in_field(tower_, f);
      verify(tower_.differentiate(d.g) + d.r == f, "f = g' + r");
      const RemainderCheck rc = is_remainder(tower_, d.r);
      verify(rc.ok, "remainder conditions");
      const bool integrable = d.r.is_zero();
      if (opt_.json) {
        json j = {{"tower", render_tower_file(tower_)},
                  {"input", render(f, tower_.names())},
                  {"g", render(d.g, tower_.names())},
                  {"r", render(d.r, tower_.names())},
                  {"integrable", integrable},
                  {"verified", true}};
        print_shifts(&j);
        out_ << j.dump() << '\n';
        continue;
      }
      print_shifts(nullptr);
      out_ << "f = " << text(f, tower_) << '\n';
      if (integrate_only) {
        if (integrable) {
          out_ << "integral: " << text(d.g, tower_) << '\n';
        } else {
          out_ << "no integral in the tower\n";
          out_ << "certificate r = " << text(d.r, tower_) << '\n';
        }
      } else {
        out_ << "g = " << text(d.g, tower_) << '\n';
        out_ << "r = " << text(d.r, tower_) << '\n';
        out_ << "integrable: " << (integrable ? "yes" : "no") << '\n';
      }
      out_ << "verified: f = g' + r\n";
    }
    return kExitOk;
  }

  std::string log_text(const LogTerm& t, const Tower& tw) const {
    const std::string arg = text(t.argument, tw);
    const std::string log = opt_.latex ? "\\log\\left(" + arg + "\\right)" : "log(" + arg + ")";
    if (t.coefficient == 1) return log;
    return render_rational(t.coefficient) + (opt_.latex ? " " : "*") + log;
  }

  int elementary() {
    require_exprs();
    prepare();
    for (const std::string& src : opt_.exprs) {
      const RationalFunction f = input(src);
      const ElementaryVerdict v = elementary_integrability(tower_, f);
      verify(tower_.differentiate(v.decomposition.g) + v.decomposition.r == f, "f = g' + r");
      std::string integral;
      if (v.status == Verdict::Yes) {
        RationalFunction check = tower_.differentiate(*v.rational_part);
        for (const LogTerm& t : v.logs) check += log_derivative(tower_, t.argument) * t.coefficient;
        verify(check == f, "elementary integral");
        integral = text(*v.rational_part, tower_);
        for (const LogTerm& t : v.logs) integral += " + " + log_text(t, tower_);
      }
      if (opt_.json) {
        json j = {{"tower", render_tower_file(tower_)},
                  {"input", render(f, tower_.names())},
                  {"verdict", to_string(v.status)},
                  {"reason", v.reason},
                  {"g", render(v.decomposition.g, tower_.names())},
                  {"r", render(v.decomposition.r, tower_.names())},
                  {"verified", true}};
        if (v.status == Verdict::Yes) {
          j["rational_part"] = render(*v.rational_part, tower_.names());
          j["logs"] = json::array();
          for (const LogTerm& t : v.logs)
            j["logs"].push_back({{"coefficient", render_rational(t.coefficient)},
                                 {"argument", render(t.argument, tower_.names())}});
          j["span_coeffs"] = json::array();
          for (const Rational& c : v.span_coeffs) j["span_coeffs"].push_back(render_rational(c));
        }
        if (v.certificate) j["certificate"] = render(*v.certificate, tower_.names());
        print_shifts(&j);
        out_ << j.dump() << '\n';
        continue;
      }
      print_shifts(nullptr);
      out_ << "f = " << text(f, tower_) << '\n';
      out_ << "r = " << text(v.decomposition.r, tower_) << '\n';
      out_ << "verdict: " << to_string(v.status) << " (" << v.reason << ")\n";
      if (v.status == Verdict::Yes) {
        for (const LogTerm& t : v.logs) out_ << "witness: " << log_text(t, tower_) << '\n';
        out_ << "integral: " << integral << '\n';
        out_ << "verified: integral' = f\n";
      }
      if (v.certificate) out_ << "certificate: non-constant residue " << text(*v.certificate, tower_) << '\n';
    }
    return kExitOk;
  }

  std::string well_generated_text(const Tower& t) const {
    if (!t.is_logarithmic()) return "n/a (not logarithmic)";
    const WellGeneratedCheck wg = is_well_generated(t);
    if (wg.ok) return "yes";
    std::string s = std::string("no (") + to_string(wg.failure) + " fails at ";
    s += wg.failure == WellGeneratedFailure::ONE ? "column" : "generator";
    s += wg.positions.size() > 1 ? "s " : " ";
    for (std::size_t k = 0; k < wg.positions.size(); ++k) s += (k ? ", " : "") + std::to_string(wg.positions[k]);
    return s + ")";
  }

  int check() {
    if (opt_.normalize) {
      NormalizedGenerators ng = normalize_generators(source_);
      shifts_ = std::move(ng.shifts);
      tower_ = std::move(ng.tower);
    } else {
      tower_ = validated(source_);
    }
    const Tower& t = tower_;
    const Validation& v = t.validation();
    const bool ok = v.status == ValidationStatus::SPrimitive;
    if (opt_.json) {
      json j = {{"tower", render_tower_file(t)}, {"s_primitive", ok}};
      if (!ok) {
        j["reason"] = v.reason;
        j["generator"] = v.generator;
        if (!v.dependence.empty()) {
          j["dependence"] = json::array();
          for (const Rational& c : v.dependence) j["dependence"].push_back(render_rational(c));
        }
      }
      if (ok) j["well_generated"] = well_generated_text(t);
      print_shifts(&j);
      out_ << j.dump() << '\n';
      return kExitOk;
    }
    if (opt_.normalize) {
      out_ << render_tower_file(t);
      print_shifts(nullptr);
    }
    out_ << "generators: " << t.size() << '\n';
    out_ << "S-primitive: " << (ok ? "yes" : "no (" + v.reason + ")") << '\n';
    if (v.kind == RejectionKind::Dependence) {
      out_ << "dependence: " << t.names()[v.generator] << "' =";
      for (std::size_t j = 0; j < v.dependence.size(); ++j)
        out_ << (j ? " + " : " ") << render_rational(v.dependence[j]) << "*" << t.names()[j + 1] << "'";
      out_ << '\n';
    }
    if (ok) out_ << "well-generated: " << well_generated_text(t) << '\n';
    return kExitOk;
  }

  void print_matrix(const Tower& t, json* j) const {
    const AssociatedMatrix a = associated_matrix(t);
    if (j) {
      json rows = json::array();
      for (std::size_t i = 0; i < a.n; ++i) {
        json row = json::array();
        for (std::size_t c = 1; c <= a.n; ++c) row.push_back(render(a.at(i, c), t.names()));
        rows.push_back(row);
      }
      (*j)["matrix"] = rows;
      return;
    }
    if (opt_.latex) {
      out_ << "\\begin{pmatrix}\n";
      for (std::size_t i = 0; i < a.n; ++i) {
        out_ << "  ";
        for (std::size_t c = 1; c <= a.n; ++c) out_ << (c > 1 ? " & " : "") << render_latex(a.at(i, c), t.names());
        out_ << (i + 1 < a.n ? " \\\\\n" : "\n");
      }
      out_ << "\\end{pmatrix}\n";
      return;
    }
    for (std::size_t i = 0; i < a.n; ++i) {
      out_ << "P" << i << ":";
      for (std::size_t c = 1; c <= a.n; ++c) out_ << (c > 1 ? " | " : " ") << render(a.at(i, c), t.names());
      out_ << '\n';
    }
  }

  int matrix() {
    const Tower& t = source_;
    if (opt_.json) {
      json j = {{"tower", render_tower_file(t)}};
      print_matrix(t, &j);
      const SignificantData sd = significant_data(t);
      j["sv"] = sd.sv;
      j["sc"] = json::array();
      for (const auto& c : sd.sc) j["sc"].push_back(render(c, t.names()));
      out_ << j.dump() << '\n';
      return kExitOk;
    }
    print_matrix(t, nullptr);
    return kExitOk;
  }

  int embed() {
    const NormalizedTower nt = normalize_tower(source_);
    const Embedding e = embed_well_generated(nt.tower);
    const Tower& target = e.target;
    std::vector<RationalFunction> phi;
    for (const RationalFunction& img : nt.old_to_new) phi.push_back(substitute(img, e.images));
    bool identity = target.size() == source_.size();
    for (std::size_t k = 0; k < phi.size() && identity; ++k) identity = phi[k] == target.variable(k);

    json j;
    if (opt_.json) {
      j["tower"] = render_tower_file(source_);
      j["normalized"] = render_tower_file(nt.tower);
      j["target"] = render_tower_file(target);
      j["w"] = target.size();
      j["identity"] = identity;
      for (std::size_t k = 1; k < phi.size(); ++k) j["phi"][source_.names()[k]] = render(phi[k], target.names());
    } else {
      for (const TowerChange& c : nt.changes) {
        if (c.kind == TowerChange::Kind::Swap) {
          out_ << "normalize: swap generators " << c.index << " and " << c.index + 1 << '\n';
        } else {
          out_ << "normalize: eliminate significant component of generator " << c.index << " with coefficients";
          for (const Rational& q : c.coeffs) out_ << ' ' << render_rational(q);
          out_ << '\n';
        }
      }
      if (!nt.changes.empty()) out_ << "normalized tower:\n" << render_tower_file(nt.tower);
      out_ << "target tower:\n" << render_tower_file(target);
      for (std::size_t k = 1; k < phi.size(); ++k)
        out_ << "phi(" << source_.names()[k] << ") = " << text(phi[k], target) << '\n';
      out_ << "w = " << target.size() << '\n';
      if (identity) out_ << "identity embedding: tower is already well generated\n";
    }
    if (opt_.matrix) {
      if (opt_.json) {
        json a, b;
        print_matrix(nt.tower, &a);
        print_matrix(target, &b);
        j["source_matrix"] = a["matrix"];
        j["target_matrix"] = b["matrix"];
      } else {
        out_ << "source matrix:\n";
        print_matrix(nt.tower, nullptr);
        out_ << "target matrix:\n";
        print_matrix(target, nullptr);
      }
    }
    for (const std::string& src : opt_.exprs) {
      const RationalFunction f = parse_expression(src, source_);
      const RationalFunction fs = substitute(f, nt.old_to_new);
      const Decomposition ds = add_decomp_in_field(nt.tower, fs);
      verify(nt.tower.differentiate(ds.g) + ds.r == fs, "source decomposition");
      const RationalFunction ft = substitute(f, phi);
      const Decomposition dt = add_decomp_in_field(target, ft);
      verify(target.differentiate(dt.g) + dt.r == ft, "target decomposition");
      if (opt_.json) {
        j["inputs"].push_back({{"input", render(f, source_.names())},
                               {"r_source", render(ds.r, nt.tower.names())},
                               {"image", render(ft, target.names())},
                               {"g_target", render(dt.g, target.names())},
                               {"r_target", render(dt.r, target.names())},
                               {"verified", true}});
      } else {
        out_ << "f = " << text(f, source_) << '\n';
        out_ << "  remainder in source: " << text(ds.r, nt.tower) << '\n';
        out_ << "  phi(f) = " << text(ft, target) << '\n';
        out_ << "  remainder in target: " << text(dt.r, target) << '\n';
      }
    }
    if (opt_.json) out_ << j.dump() << '\n';
    return kExitOk;
  }

  const Options& opt_;
  std::ostream& out_;
  Tower source_;
  Tower tower_;
  std::vector<GeneratorShift> shifts_;
  std::vector<RationalFunction> to_working_;
};

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Additive decomposition in S-primitive towers over Q(x)", "towerdecomp"};
  app.require_subcommand(1);
  const std::vector<std::pair<std::string, std::string>> commands = {
      {"decomp", "decompose f as g' + r with a remainder r"},
      {"integrate", "decide whether f has an integral in the tower"},
      {"elementary", "decide whether f has an elementary integral"},
      {"embed", "embed a logarithmic tower into a well-generated one"},
      {"matrix", "print the associated matrix"},
      {"check", "validate the tower"},
  };
  for (const auto& [name, desc] : commands) {
    CLI::App* sub = app.add_subcommand(name, desc);
    sub->add_option("--tower", opt.tower_path, "tower file")->required();
    sub->add_option("--expr", opt.exprs, "element of the tower");
    sub->add_flag("--json", opt.json, "JSON output");
    sub->add_flag("--latex", opt.latex, "LaTeX output");
    sub->add_flag("--normalize", opt.normalize, "shift generators to simple derivatives");
    sub->add_flag("--matrix", opt.matrix, "also print associated matrices (embed)");
    sub->callback([&opt, sub] { opt.command = sub->get_name(); });
  }
  std::vector<std::string> argv_storage{"towerdecomp"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_storage) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e, out, err);
    return rc == 0 ? kExitOk : kExitParse;
  }

  try {
    return Session(opt, out).run();
  } catch (const Error& e) {
    const int rc = exit_code_for(e.code());
    if (opt.json) out << json{{"error", to_string(e.code())}, {"message", e.what()}}.dump() << '\n';
    err << "error: " << to_string(e.code()) << ": " << e.what() << '\n';
    return rc;
  }
}

}  // namespace towerdecomp
