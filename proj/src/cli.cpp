#include "skein/cli.hpp"

#include <complex>
#include <cstdio>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"
#include "skein/classify.hpp"
#include "skein/hecke.hpp"
#include "skein/link.hpp"
#include "skein/temperley.hpp"
#include "skein/threebox.hpp"
#include "skein/young.hpp"

namespace skein::cli {

namespace {

using nlohmann::ordered_json;

std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

std::string fmt_complex(std::complex<double> v) {
  std::string s = fmt_double(v.real());
  s += v.imag() < 0 ? " - " : " + ";
  s += fmt_double(std::abs(v.imag()));
  s += "i";
  return s;
}

struct FormatError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void require_format(const std::string& fmt,
                    const std::vector<std::string>& allowed) {
  for (const std::string& a : allowed)
    if (fmt == a) return;
  throw FormatError("format '" + fmt + "' is not available for this command");
}

ordered_json verdict_json(const Verdict& v) { return v.to_json(); }

std::string verdict_text(const Verdict& v) {
  switch (v.kind) {
    case Verdict::Kind::positive_root_of_unity:
      return "PositiveRootOfUnity N=" + std::to_string(v.N) +
             " l=" + std::to_string(v.l);
    case Verdict::Kind::positive_real:
      return "PositiveReal N=" + std::to_string(v.N);
    case Verdict::Kind::negative:
      return "Negative witness=[" +
             (v.witness ? v.witness->to_string() : std::string()) +
             "] trace=" + fmt_double(v.witness_trace);
    case Verdict::Kind::indeterminate:
      break;
  }
  return "Indeterminate: " + v.reason;
}

struct PointFlags {
  double q_re = 0.0, q_im = 0.0, r_re = 0.0, r_im = 0.0;
  long root_n = 0, root_m = 0;
  double real_q0 = 0.0;
  long real_n = 0;
  double delta_override = 0.0;
  CLI::App* sub_ = nullptr;

  void add_to(CLI::App* sub, bool numeric_only) {
    sub_ = sub;
    auto* qre = sub->add_option("--q-re", q_re, "real part of q");
    auto* qim = sub->add_option("--q-im", q_im, "imaginary part of q");
    auto* rre = sub->add_option("--r-re", r_re, "real part of r");
    auto* rim = sub->add_option("--r-im", r_im, "imaginary part of r");
    qre->needs(rre);
    (void)qim;
    (void)rim;
    if (!numeric_only) {
      sub->add_option("--root-n", root_n, "exact mode: r = q^N");
      sub->add_option("--root-m", root_m, "exact mode: q = exp(i pi/m)");
      sub->add_option("--real-q0", real_q0, "exact mode: real q >= 1");
      sub->add_option("--real-n", real_n, "exact mode: exponent for real q");
      sub->add_option("--delta", delta_override,
                      "circle parameter supplied directly when q = +-1");
    }
  }

  ParameterPoint make() const {
    const bool has_root = sub_->count("--root-n") > 0 ||
                          sub_->count("--root-m") > 0;
    const bool has_real = sub_->count("--real-q0") > 0;
    const bool has_numeric = sub_->count("--q-re") > 0;
    const bool has_override = sub_->count("--delta") > 0;
    if (has_root) {
      if (root_n <= 0 || root_m <= 0)
        throw std::domain_error("exact mode needs --root-n and --root-m");
      return ParameterPoint::root_of_unity(root_n, root_m);
    }
    if (has_real) return ParameterPoint::real_power(real_q0, real_n);
    if (!has_numeric)
      throw std::domain_error(
          "give a point: --q-re/--q-im/--r-re/--r-im, or --root-n/--root-m, "
          "or --real-q0/--real-n");
    ParameterPoint p = ParameterPoint::at(ComplexPoint{q_re, q_im, 1e-9},
                                          ComplexPoint{r_re, r_im, 1e-9});
    if (has_override) p.delta_override = delta_override;
    return p;
  }
};

ordered_json point_json(const ParameterPoint& p) {
  ordered_json j;
  const std::complex<double> q = p.q_value();
  std::complex<double> r{0.0, 0.0};
  bool have_r = true;
  try {
    r = p.r_value();
  } catch (const std::domain_error&) {
    have_r = false;
  }
  j["q_re"] = q.real();
  j["q_im"] = q.imag();
  if (have_r) {
    j["r_re"] = r.real();
    j["r_im"] = r.imag();
  }
  if (p.delta_override) j["delta"] = *p.delta_override;
  return j;
}

ordered_json relation_json(const RelationCoefficients& rc) {
  ordered_json j;
  j["omega"] = rc.omega == OmegaTag::one ? "1" : "primitive";
  j["a"] = rc.a;
  j["a_prime"] = rc.a_prime;
  j["b"] = rc.b.to_string();
  j["c"] = rc.c.to_string();
  if (rc.d) j["d"] = rc.d->to_string();
  if (rc.epsilon) j["epsilon"] = rc.epsilon->to_string();
  const CappingCheck check = verify_capping(rc);
  j["capping_ok"] = check.ok;
  j["residual_s"] = check.residual_s.to_string();
  j["residual_tl"] = check.residual_tl.to_string();
  return j;
}

ordered_json cutdown_json(OmegaTag tag) {
  ordered_json arr = ordered_json::array();
  for (const CutdownItem& item : cutdown_coefficients(tag)) {
    ordered_json j;
    j["item"] = item.id;
    ordered_json terms = ordered_json::array();
    for (const auto& [target, coeff] : item.terms) {
      ordered_json t;
      t["target"] = target;
      t["coefficient"] = coeff.to_string();
      terms.push_back(t);
    }
    j["terms"] = terms;
    if (item.omega_eigenvalue) j["coefficient_is_rotation_eigenvalue"] = true;
    if (item.epsilon_multiplier) j["first_coefficient_multiplies_epsilon"] = true;
    if (item.variant_second) j["variant_second"] = item.variant_second->to_string();
    arr.push_back(j);
  }
  return arr;
}

struct Session {
  std::ostringstream out;
  std::ostringstream err;
  int code = 0;
};

void setup_homfly(CLI::App& app, Session& session) {
  auto* sub = app.add_subcommand(
      "homfly", "closure invariant of a braid in the (q, r) variables");
  auto braid = std::make_shared<std::string>();
  auto strands = std::make_shared<int>(2);
  auto normalized = std::make_shared<bool>(false);
  auto use_skein = std::make_shared<bool>(false);
  auto format = std::make_shared<std::string>("text");
  sub->add_option("--braid", *braid,
                  "space-separated letters, sign = crossing sense")
      ->required();
  sub->add_option("--strands", *strands, "strand count")->required();
  sub->add_flag("--normalized", *normalized,
                "divide by the writhe framing factor and one circle");
  sub->add_flag("--skein", *use_skein,
                "evaluate by recursive crossing resolution instead of the "
                "trace engine");
  sub->add_option("--format", *format, "output format")
      ->check(CLI::IsMember({"text", "json"}));
  sub->callback([&session, braid, strands, normalized, use_skein, format]() {
    require_format(*format, {"text", "json"});
    BraidWord word{*strands, parse_braid_word(*braid)};
    word.validate();
    RationalFunction value = (*use_skein ? skein_resolve_value(word)
                                         : closure_value(word))
                                 .value;
    if (*normalized) {
      const RationalFunction framing(LaurentPoly::monomial(
          Rational(1), 0, -word.writhe(), vars_qr()));
      value = value * framing / circle_parameter_qr();
    }
    if (*format == "json") {
      ordered_json j;
      j["braid"] = word.letters_text();
      j["strands"] = word.n;
      j["writhe"] = word.writhe();
      j["components"] = closure_component_count(word);
      j["normalized"] = *normalized;
      j["engine"] = *use_skein ? "skein" : "trace";
      j["value"] = value.to_string();
      session.out << j.dump(2) << "\n";
    } else {
      session.out << value.to_string() << "\n";
    }
  });
}

void setup_jones(CLI::App& app, Session& session) {
  auto* sub = app.add_subcommand(
      "jones", "Kauffman-bracket Jones value of a braid closure");
  auto braid = std::make_shared<std::string>();
  auto strands = std::make_shared<int>(2);
  auto format = std::make_shared<std::string>("text");
  sub->add_option("--braid", *braid, "space-separated letters")->required();
  sub->add_option("--strands", *strands, "strand count")->required();
  sub->add_option("--format", *format, "output format")
      ->check(CLI::IsMember({"text", "json"}));
  sub->callback([&session, braid, strands, format]() {
    require_format(*format, {"text", "json"});
    BraidWord word{*strands, parse_braid_word(*braid)};
    word.validate();
    const RationalFunction bracket = jones_oracle(word);
    if (*format == "json") {
      const JonesCalibration cal = calibrate_jones_map();
      const RationalFunction via_trace =
          apply_calibration(homfly_jones_specialization(word), cal);
      ordered_json j;
      j["braid"] = word.letters_text();
      j["strands"] = word.n;
      j["value"] = bracket.to_string();
      j["trace_engine_agrees"] = via_trace == bracket;
      session.out << j.dump(2) << "\n";
    } else {
      session.out << bracket.to_string() << "\n";
    }
  });
}

void setup_qtrace(CLI::App& app, Session& session) {
  auto* sub = app.add_subcommand(
      "qtrace", "quantum trace of a Young diagram, symbolic or specialized");
  auto diagram_text = std::make_shared<std::string>();
  auto n_opt = std::make_shared<long>(0);
  auto m_opt = std::make_shared<long>(0);
  auto q0_opt = std::make_shared<double>(0.0);
  auto q_re = std::make_shared<double>(0.0);
  auto q_im = std::make_shared<double>(0.0);
  auto r_re = std::make_shared<double>(0.0);
  auto r_im = std::make_shared<double>(0.0);
  auto format = std::make_shared<std::string>("text");
  sub->add_option("--diagram", *diagram_text, "rows, e.g. 2,1")->required();
  auto* n_o = sub->add_option("--n", *n_opt, "specialize r = q^N");
  auto* m_o = sub->add_option("--m", *m_opt, "with q = exp(i pi/m)");
  auto* q0_o = sub->add_option("--q0", *q0_opt, "with real q = q0 >= 1");
  auto* qre_o = sub->add_option("--q-re", *q_re, "numeric q, real part");
  sub->add_option("--q-im", *q_im, "numeric q, imaginary part");
  auto* rre_o = sub->add_option("--r-re", *r_re, "numeric r, real part");
  sub->add_option("--r-im", *r_im, "numeric r, imaginary part");
  qre_o->needs(rre_o);
  m_o->needs(n_o);
  q0_o->needs(n_o);
  sub->add_option("--format", *format, "output format")
      ->check(CLI::IsMember({"text", "json"}));
  sub->callback([&session, sub, diagram_text, n_opt, m_opt, q0_opt, q_re, q_im,
                 r_re, r_im, format]() {
    require_format(*format, {"text", "json"});
    const YoungDiagram diagram = YoungDiagram::parse(*diagram_text);
    const bool specialized = sub->count("--n") > 0;
    const bool numeric = sub->count("--q-re") > 0;
    if (specialized && numeric)
      throw std::domain_error("choose one of the specialization modes");
    if (specialized) {
      std::optional<long> m;
      std::optional<double> q0;
      if (sub->count("--m") > 0) m = *m_opt;
      if (sub->count("--q0") > 0) q0 = *q0_opt;
      const SpecializedTrace st = trace_at_specialization(diagram, *n_opt, m, q0);
      if (*format == "json") {
        ordered_json j;
        j["diagram"] = diagram.to_string();
        j["ill_defined"] = st.ill_defined;
        if (!st.ill_defined) {
          j["sign"] = st.sign;
          j["value"] = st.value;
        }
        session.out << j.dump(2) << "\n";
      } else if (st.ill_defined) {
        session.out << "ill-defined: a hook quantum integer vanishes\n";
      } else {
        session.out << fmt_double(st.value) << "\n";
      }
      return;
    }
    if (numeric) {
      const ComplexPoint value =
          trace_numeric(diagram, ComplexPoint{*q_re, *q_im, 1e-9},
                        ComplexPoint{*r_re, *r_im, 1e-9});
      if (*format == "json") {
        ordered_json j;
        j["diagram"] = diagram.to_string();
        j["re"] = value.re;
        j["im"] = value.im;
        session.out << j.dump(2) << "\n";
      } else {
        session.out << fmt_complex(value.value()) << "\n";
      }
      return;
    }
    const RationalFunction symbolic = quantum_trace(diagram);
    if (*format == "json") {
      ordered_json j;
      j["diagram"] = diagram.to_string();
      j["value"] = symbolic.to_string();
      session.out << j.dump(2) << "\n";
    } else {
      session.out << symbolic.to_string() << "\n";
    }
  });
}

void setup_jw(CLI::App& app, Session& session) {
  auto* sub = app.add_subcommand(
      "jw", "highest-weight projector of the diagram algebra");
  auto strands = std::make_shared<int>(2);
  auto format = std::make_shared<std::string>("text");
  sub->add_option("--strands", *strands, "strand count")->required();
  sub->add_option("--format", *format, "output format")
      ->check(CLI::IsMember({"text", "json"}));
  sub->callback([&session, strands, format]() {
    require_format(*format, {"text", "json"});
    const TLElement f = jones_wenzl(*strands, rf_delta());
    if (*format == "json") {
      ordered_json terms = ordered_json::array();
      for (const auto& [diagram, coeff] : f.combo()) {
        ordered_json t;
        t["diagram"] = diagram.to_string();
        t["coefficient"] = coeff.to_string();
        terms.push_back(t);
      }
      ordered_json j;
      j["strands"] = *strands;
      j["terms"] = terms;
      session.out << j.dump(2) << "\n";
    } else {
      session.out << f.to_string() << "\n";
    }
  });
}

void setup_idem3(CLI::App& app, Session& session) {
  auto* sub = app.add_subcommand(
      "idem3", "closed-form three-strand idempotent pair over Q(q, r)");
  auto format = std::make_shared<std::string>("json");
  sub->add_option("--format", *format, "output format")
      ->check(CLI::IsMember({"text", "json"}));
  sub->callback([&session, format]() {
    require_format(*format, {"text", "json"});
    const IdempotentSystemCheck check = idempotent_system_check();
    if (*format == "json") {
      ordered_json residuals = ordered_json::array();
      for (const RationalFunction& res : check.residuals)
        residuals.push_back(res.to_string());
      ordered_json j;
      j["ok"] = check.ok;
      j["residuals"] = residuals;
      j["trace_p"] = check.trace_p.to_string();
      j["trace_q"] = check.trace_q.to_string();
      session.out << j.dump(2) << "\n";
    } else {
      session.out << (check.ok ? "all residuals vanish\n"
                               : "RESIDUALS DO NOT VANISH\n");
      session.out << "trace_p = " << check.trace_p.to_string() << "\n";
      session.out << "trace_q = " << check.trace_q.to_string() << "\n";
    }
  });
}

void setup_relations(CLI::App& app, Session& session) {
  auto* sub = app.add_subcommand(
      "relations",
      "cut-down table and 2<->2 move coefficients of the three-box algebra");
  auto format = std::make_shared<std::string>("json");
  sub->add_option("--format", *format, "output format")
      ->check(CLI::IsMember({"text", "json"}));
  sub->callback([&session, format]() {
    require_format(*format, {"text", "json"});
    ordered_json j;
    j["cutdown_omega_one"] = cutdown_json(OmegaTag::one);
    j["cutdown_omega_primitive"] = cutdown_json(OmegaTag::primitive);
    ordered_json solutions = ordered_json::array();
    for (OmegaTag tag : {OmegaTag::one, OmegaTag::primitive})
      for (int a : {1, -1})
        solutions.push_back(relation_json(two_two_solutions(tag, a)));
    j["two_two_solutions"] = solutions;
    if (*format == "json") {
      session.out << j.dump(2) << "\n";
    } else {
      for (const auto& sol : j["two_two_solutions"])
        session.out << "omega=" << sol["omega"].get<std::string>()
                    << " a=" << sol["a"].get<int>() << " capping_ok="
                    << (sol["capping_ok"].get<bool>() ? "yes" : "no") << "\n";
    }
  });
}

void setup_exclusions(CLI::App& app, Session& session) {
  auto* sub = app.add_subcommand(
      "exclusions",
      "certified root isolation for the parameter-exclusion branches");
  auto format = std::make_shared<std::string>("json");
  sub->add_option("--format", *format, "output format")
      ->check(CLI::IsMember({"text", "json"}));
  sub->callback([&session, format]() {
    require_format(*format, {"text", "json"});
    const ordered_json report = exclusion_report();
    if (*format == "json") {
      session.out << report.dump(2) << "\n";
      return;
    }
    for (const auto& branch : report["branches"]) {
      session.out << "branch " << branch["id"].get<std::string>() << ": ";
      if (branch.contains("verdict"))
        session.out << branch["verdict"].get<std::string>();
      else
        session.out << "see systems";
      session.out << "\n";
    }
    session.out << report["conclusion"].get<std::string>() << "\n";
  });
}

void setup_classify(CLI::App& app, Session& session) {
  auto* sub = app.add_subcommand(
      "classify", "positivity verdict for a parameter point");
  auto flags = std::make_shared<PointFlags>();
  auto cap = std::make_shared<int>(12);
  auto format = std::make_shared<std::string>("json");
  flags->add_to(sub, false);
  sub->add_option("--witness-cap", *cap, "cell bound for witness scans");
  sub->add_option("--format", *format, "output format")
      ->check(CLI::IsMember({"text", "json"}));
  sub->callback([&session, flags, cap, format]() {
    require_format(*format, {"text", "json"});
    const ParameterPoint point = flags->make();
    const Verdict verdict = positivity(point, *cap);
    if (*format == "json")
      session.out << verdict_json(verdict).dump(2) << "\n";
    else
      session.out << verdict_text(verdict) << "\n";
    if (verdict.kind == Verdict::Kind::indeterminate) session.code = 2;
  });
}

void setup_solve_params(CLI::App& app, Session& session) {
  auto* sub = app.add_subcommand(
      "solve-params", "all (q, r) matching a (delta, gamma) pair");
  auto delta = std::make_shared<double>(0.0);
  auto gamma = std::make_shared<double>(0.0);
  auto format = std::make_shared<std::string>("json");
  sub->add_option("--delta", *delta, "circle parameter, > 2")->required();
  sub->add_option("--gamma", *gamma, "trace ratio, > 0")->required();
  sub->add_option("--format", *format, "output format")
      ->check(CLI::IsMember({"text", "json"}));
  sub->callback([&session, delta, gamma, format]() {
    require_format(*format, {"text", "json"});
    const CorrespondenceResult result = qr_from_delta_gamma(*delta, *gamma);
    if (*format == "json") {
      ordered_json points = ordered_json::array();
      for (const ParameterPoint& p : result.points)
        points.push_back(point_json(p));
      ordered_json j;
      j["delta"] = *delta;
      j["gamma"] = *gamma;
      j["points"] = points;
      if (!result.diagnostic.empty()) j["diagnostic"] = result.diagnostic;
      session.out << j.dump(2) << "\n";
    } else {
      for (const ParameterPoint& p : result.points) {
        const auto q = p.q_value();
        const auto r = p.r_value();
        session.out << "q = " << fmt_complex(q) << ", r = " << fmt_complex(r)
                    << "\n";
      }
      if (!result.diagnostic.empty())
        session.out << "diagnostic: " << result.diagnostic << "\n";
    }
    if (result.points.empty()) session.code = 2;
  });
}

void setup_orbit(CLI::App& app, Session& session) {
  auto* sub = app.add_subcommand(
      "orbit", "the four isomorphic parameter points of a given one");
  auto flags = std::make_shared<PointFlags>();
  auto format = std::make_shared<std::string>("json");
  flags->add_to(sub, false);
  sub->add_option("--format", *format, "output format")
      ->check(CLI::IsMember({"text", "json"}));
  sub->callback([&session, flags, format]() {
    require_format(*format, {"text", "json"});
    const std::vector<ParameterPoint> members =
        symmetry_orbit(flags->make());
    if (*format == "json") {
      ordered_json arr = ordered_json::array();
      for (const ParameterPoint& p : members) arr.push_back(point_json(p));
      session.out << arr.dump(2) << "\n";
    } else {
      for (const ParameterPoint& p : members)
        session.out << "q = " << fmt_complex(p.q_value())
                    << ", r = " << fmt_complex(p.r_value()) << "\n";
    }
  });
}

void setup_scan(CLI::App& app, Session& session) {
  auto* sub = app.add_subcommand(
      "scan", "positivity verdicts over a parameter grid");
  auto shape = std::make_shared<std::string>("real");
  auto a_lo = std::make_shared<double>(1.05);
  auto a_hi = std::make_shared<double>(1.95);
  auto a_count = std::make_shared<int>(10);
  auto b_lo = std::make_shared<double>(1.1);
  auto b_hi = std::make_shared<double>(3.9);
  auto b_count = std::make_shared<int>(10);
  auto cap = std::make_shared<int>(12);
  auto format = std::make_shared<std::string>("csv");
  sub->add_option("--shape", *shape,
                  "real: q and r real; circle: angles of unimodular q and r")
      ->check(CLI::IsMember({"real", "circle"}));
  sub->add_option("--a-lo", *a_lo, "first axis start (q or its angle)");
  sub->add_option("--a-hi", *a_hi, "first axis end");
  sub->add_option("--a-count", *a_count, "first axis sample count");
  sub->add_option("--b-lo", *b_lo, "second axis start (r or its angle)");
  sub->add_option("--b-hi", *b_hi, "second axis end");
  sub->add_option("--b-count", *b_count, "second axis sample count");
  sub->add_option("--witness-cap", *cap, "cell bound for witness scans");
  sub->add_option("--format", *format, "output format")
      ->check(CLI::IsMember({"csv", "json", "text"}));
  sub->callback([&session, shape, a_lo, a_hi, a_count, b_lo, b_hi, b_count,
                 cap, format]() {
    const ScanShape s =
        *shape == "circle" ? ScanShape::unit_circle : ScanShape::real_axis;
    const std::vector<ScanPoint> grid =
        scan_grid(s, *a_lo, *a_hi, *a_count, *b_lo, *b_hi, *b_count, *cap);
    if (*format == "json")
      session.out << scan_json(grid).dump(2) << "\n";
    else
      session.out << scan_csv(grid);
  });
}

}  // namespace

RunResult run(const std::vector<std::string>& args) {
  Session session;
  CLI::App app{"exact skein-theoretic invariants and positivity verdicts"};
  app.name("skein");
  app.require_subcommand(1);

  setup_homfly(app, session);
  setup_jones(app, session);
  setup_qtrace(app, session);
  setup_jw(app, session);
  setup_idem3(app, session);
  setup_relations(app, session);
  setup_exclusions(app, session);
  setup_classify(app, session);
  setup_solve_params(app, session);
  setup_orbit(app, session);
  setup_scan(app, session);

  std::vector<std::string> argv_store;
  argv_store.reserve(args.size() + 1);
  argv_store.push_back("skein");
  for (const std::string& a : args) argv_store.push_back(a);
  std::vector<const char*> argv;
  argv.reserve(argv_store.size());
  for (const std::string& a : argv_store) argv.push_back(a.c_str());

  RunResult result;
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
    result.exit_code = session.code;
  } catch (const CLI::ParseError& e) {
    const int parse_code = app.exit(e, session.out, session.err);
    result.exit_code = parse_code == 0 ? 0 : 1;
  } catch (const FormatError& e) {
    session.err << "error: " << e.what() << "\n";
    result.exit_code = 1;
  } catch (const std::exception& e) {
    session.err << "error: " << e.what() << "\n";
    result.exit_code = 1;
  }
  result.out = session.out.str();
  result.err = session.err.str();
  return result;
}

}  // namespace skein::cli
