// linpoly command-line frontend.
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "linpoly/error.hpp"
#include "linpoly/galois.hpp"
#include "linpoly/groups.hpp"
#include "linpoly/parse.hpp"
#include "linpoly/report.hpp"

using namespace linpoly;

namespace {

enum class Format { Json, Tsv, Text };

struct Common {
  std::string seed_text;
  std::string format = "text";
  bool json_flag = false;
  std::string out;
  unsigned jobs = 1;
};

std::uint64_t resolve_seed(const Common& c) {
  std::string s = c.seed_text;
  if (s.empty()) {
    if (const char* env = std::getenv("LINPOLY_SEED")) s = env;
  }
  if (s.empty()) return kDefaultSeed;
  try {
    std::size_t used = 0;
    const std::uint64_t v = std::stoull(s, &used, 0);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    fail(ErrorCode::Parse, "invalid seed '" + s + "'");
  }
}

Format resolve_format(const Common& c) {
  if (c.json_flag || c.format == "json") return Format::Json;
  if (c.format == "tsv") return Format::Tsv;
  return Format::Text;
}

void flatten_tsv(const json& j, const std::string& path, std::ostream& os) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) flatten_tsv(v, path.empty() ? k : path + "." + k, os);
  } else if (j.is_array()) {
    std::size_t i = 0;
    for (const auto& v : j) flatten_tsv(v, path + "[" + std::to_string(i++) + "]", os);
  } else {
    os << path << '\t' << (j.is_string() ? j.get<std::string>() : j.dump()) << '\n';
  }
}

std::string str(const json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

// Each command fills a JSON document and optionally a human-readable text.
struct Output {
  json doc;
  std::string text;
  bool pass = true;
};

void emit(const Output& out, const Common& c) {
  std::ostringstream os;
  switch (resolve_format(c)) {
    case Format::Json: os << out.doc.dump(2) << '\n'; break;
    case Format::Tsv: flatten_tsv(out.doc, "", os); break;
    case Format::Text: os << (out.text.empty() ? out.doc.dump(2) + "\n" : out.text); break;
  }
  if (c.out.empty()) {
    std::cout << os.str();
  } else {
    std::ofstream f(c.out);
    if (!f) fail(ErrorCode::BadInput, "cannot write " + c.out);
    f << os.str();
  }
}

std::vector<unsigned> parse_list(const std::string& s, std::size_t min, std::size_t max) {
  std::vector<unsigned> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(static_cast<unsigned>(std::stoul(item)));
    } catch (const std::exception&) {
      fail(ErrorCode::Parse, "expected integers in '" + s + "'");
    }
  }
  if (out.size() < min || out.size() > max) fail(ErrorCode::Parse, "wrong number of entries in '" + s + "'");
  return out;
}

Budget parse_budget(const std::string& text, unsigned max_k) {
  if (text.empty()) return Budget::uniform(64, max_k);
  if (text.find(':') == std::string::npos) {
    return Budget::uniform(parse_list(text, 1, 1)[0], max_k);
  }
  Budget b;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto colon = item.find(':');
    if (colon == std::string::npos) fail(ErrorCode::Parse, "budget entries are k:count");
    b.schedule.emplace_back(parse_list(item.substr(0, colon), 1, 1)[0], parse_list(item.substr(colon + 1), 1, 1)[0]);
  }
  return b;
}

LinearizedPoly read_linearized(const std::string& field, const std::string& L, std::uint64_t seed) {
  if (L.find("q=") != std::string::npos) return parse_linearized_spec(L, seed);
  if (field.empty()) fail(ErrorCode::Parse, "--field is required unless --L has the form 'q=... L=...'");
  return parse_linearized(parse_field(field, seed), L);
}

std::string type_table(const TypeCensus& c) {
  std::ostringstream os;
  os << "elements\ttype\n";
  for (const auto& [t, n] : c.counts) os << n << '\t' << t.to_string() << '\n';
  return os.str();
}

std::string classification_text(const json& j) {
  std::ostringstream os;
  os << "L = " << str(j["L"]) << "  (q=" << j["q"] << ", n=" << j["n"] << ")\n";
  os << "verdict: " << str(j["verdict"]) << '\n';
  if (!j["witness"].is_null()) {
    os << "witness: k=" << j["witness"]["k"] << " c=" << str(j["witness"]["c"]) << " type "
       << str(j["witness"]["type"]["text"]) << '\n';
  }
  for (const auto& c : j["candidates_excluded"]) {
    os << "  " << str(c["group"]) << " (order " << str(c["order"]) << ", " << c["distinct_types"]
       << " types): " << (c["witness_absent"].get<bool>() ? "excluded" : "not excluded") << '\n';
  }
  os << "samples used: " << j["samples_used"] << " (ramified " << j["ramified"] << ")\n";
  os << "order lower bound: " << str(j["order_lower_bound"]) << '\n';
  if (!j["proposition_divisor"].is_null()) os << "proposition divisor: " << str(j["proposition_divisor"]) << '\n';
  return os.str();
}

int exit_code_for(const Error& e) {
  if (e.is_guard()) return 3;
  if (e.code() == ErrorCode::Internal) return 1;
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"linpoly: Galois groups of q-linearized polynomials, checked at desk scale"};
  app.require_subcommand(1);
  Common common;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--seed", common.seed_text, "Master seed (decimal or 0x hex); LINPOLY_SEED overrides the default");
    sub->add_option("--format", common.format, "Output format")->check(CLI::IsMember({"json", "tsv", "text"}));
    sub->add_flag("--json", common.json_flag, "Shorthand for --format json");
    sub->add_option("--out", common.out, "Write the report to this file");
    sub->add_option("--jobs", common.jobs, "Worker count (accepted; runs are single-threaded and deterministic)");
  };

  std::string field, poly, L, f_text, g_text, alpha_text, beta_text, order_text, types_text, budget_text, sections_text;
  unsigned n_opt = 0, max_k = 6, q_opt = 0;
  std::size_t N = kDefaultTruncation;
  bool no_meta = false, with_cls = false, include_excluded = false;

  auto* factor_cmd = app.add_subcommand("factor", "Complete factorization over F_q (squarefree, distinct-degree, equal-degree)");
  factor_cmd->add_option("--field", field, "Field spec: p, p^k or p^k/c0,...,ck")->required();
  factor_cmd->add_option("--poly", poly, "Polynomial: expression, d:c;... or c0,c1,...")->required();
  add_common(factor_cmd);

  auto* groups_cmd = app.add_subcommand(
      "groups", "Orders and cycle types of GL_n(q) and GammaL_{n/d}(q^d) on the q^n - 1 nonzero vectors");
  groups_cmd->add_option("--order", order_text, "n,q[,d]: print |GL_n(q)| or |GammaL_{n/d}(q^d)|");
  groups_cmd->add_option("--types", types_text, "n,q[,d]: enumerate the group and list its cycle types");
  add_common(groups_cmd);

  auto add_hensel_opts = [&](CLI::App* sub) {
    sub->add_option("--field", field, "Field spec for K")->required();
    sub->add_option("--f", f_text, "f(X)")->required();
    sub->add_option("--g", g_text, "g(y)")->required();
    sub->add_option("--alpha", alpha_text, "Root of f in the field (chosen automatically when absent)");
    sub->add_option("--beta", beta_text, "Root of g in the field (chosen automatically when absent)");
    sub->add_option("-N,--precision", N, "Truncation order in z");
    add_common(sub);
  };
  auto* hensel_cmd = app.add_subcommand(
      "hensel",
      "Roots of f, g with coprime multiplicities a, b: H(X) = X^a u(X z^r) - z v(z^s) factors as A U with A "
      "Eisenstein of degree a");
  add_hensel_opts(hensel_cmd);
  auto* newton_cmd = app.add_subcommand(
      "newton", "Newton polygon of f(X) - g(y) over E((y)): two segments, (0,b)-(a,0) and (a,0)-(deg f,0)");
  add_hensel_opts(newton_cmd);

  auto* mult_cmd = app.add_subcommand(
      "multiplicity", "L(X)/X = X^{q^m-1} h(X)^{q^m} with h separable, h(0) != 0 and a_m - X h'(X) = h(X)");
  mult_cmd->add_option("--field", field, "Field spec for F_q");
  mult_cmd->add_option("--L", L, "i:a_i;j:a_j;... (or commas) or 'q=<field> L=...'")->required();
  add_common(mult_cmd);

  auto* classify_cmd = app.add_subcommand(
      "classify",
      "Galois group of L(X)/X - t over F_q(t): certify GL_n(q) by a Frobenius cycle type outside every "
      "GammaL_{n/d}(q^d), d > 1");
  classify_cmd->add_option("--field", field, "Field spec for F_q");
  classify_cmd->add_option("--n", n_opt, "Expected q-degree (checked against L)");
  classify_cmd->add_option("--L", L, "i:a_i;j:a_j;... (or commas) or 'q=<field> L=...'")->required();
  classify_cmd->add_option("--budget", budget_text, "Draws per extension degree, or a schedule k:count,...");
  classify_cmd->add_option("--max-k", max_k, "Largest extension degree when --budget is a single count");
  add_common(classify_cmd);

  auto* prop_cmd = app.add_subcommand(
      "proposition", "q^m (q^m - 1)(q^n - 1) divides the order of the Galois group of L(X)/X - t");
  prop_cmd->add_option("--field", field, "Field spec for F_q");
  prop_cmd->add_option("--L", L, "i:a_i;j:a_j;... (or commas) or 'q=<field> L=...'")->required();
  prop_cmd->add_flag("--classify", with_cls, "Also classify and compare with the identified group");
  prop_cmd->add_option("--budget", budget_text, "Sampling budget for --classify");
  prop_cmd->add_option("--max-k", max_k, "Largest extension degree for --classify");
  add_common(prop_cmd);

  auto* thm_cmd = app.add_subcommand(
      "verify-theorem",
      "For n an odd prime: the Galois group of L(X)/X - t over F_q(t) is GL_n(q) unless L(X) = X^{q^n}; "
      "classifies every L of q-degree n");
  thm_cmd->add_option("--q", q_opt, "Prime power q")->required();
  thm_cmd->add_option("--n", n_opt, "Odd prime n")->required();
  thm_cmd->add_option("--budget", budget_text, "Draws per extension degree, or a schedule k:count,...");
  thm_cmd->add_option("--max-k", max_k, "Largest extension degree");
  thm_cmd->add_flag("--include-excluded", include_excluded, "Add the row L = X^{q^n}");
  add_common(thm_cmd);

  auto* repro_cmd = app.add_subcommand(
      "reproduce-paper",
      "Theorem certificates, the Proposition divisors, the divisibility deduction, the multiplicity identities "
      "and the Hensel/Eisenstein/Newton checks in one JSON report");
  repro_cmd->add_option("--sections", sections_text, "Comma-separated subset of theorem,proposition,deduction,multiplicity,hensel");
  repro_cmd->add_flag("--no-meta", no_meta, "Omit timestamps and timings");
  repro_cmd->add_option("--budget", budget_text, "Sampling budget");
  repro_cmd->add_option("--max-k", max_k, "Largest extension degree");
  repro_cmd->add_option("-N,--precision", N, "Truncation order for the Hensel section");
  add_common(repro_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    const std::uint64_t seed = resolve_seed(common);
    Output out;

    if (factor_cmd->parsed()) {
      const Field F = parse_field(field, seed);
      const Poly a = parse_poly(F, poly);
      Rng rng = Rng::stream(seed, "edf");
      const Factorization fac = factor(a, rng);
      out.doc = factorization_json(a, fac);
      out.pass = out.doc["product_check"].get<bool>();
      std::ostringstream os;
      os << a.to_string() << " = " << F.format(fac.unit);
      for (const auto& f : fac.factors) {
        os << " * (" << f.poly.to_string() << ")";
        if (f.multiplicity > 1) os << '^' << f.multiplicity;
      }
      os << '\n';
      out.text = os.str();
    } else if (groups_cmd->parsed()) {
      if (order_text.empty() == types_text.empty()) fail(ErrorCode::BadInput, "give exactly one of --order, --types");
      const auto args = parse_list(order_text.empty() ? types_text : order_text, 2, 3);
      const unsigned n = args[0];
      const std::uint64_t q = args[1];
      const unsigned d = args.size() == 3 ? args[2] : 0;
      if (!prime_power(q)) fail(ErrorCode::BadInput, std::to_string(q) + " is not a prime power");
      GroupDescriptor g = d ? describe_gamma_l(n, q, d) : describe_gl(n, q);
      if (!order_text.empty()) {
        out.doc = group_json(g);
        out.text = g.order.str() + "\n";
      } else {
        g.census = d ? semilinear_cycle_types(q, n, d) : gl_cycle_types(n, q);
        out.doc = group_json(g);
        out.text = g.name() + " order " + g.order.str() + "\n" + type_table(*g.census);
      }
    } else if (hensel_cmd->parsed() || newton_cmd->parsed()) {
      const Field F = parse_field(field, seed);
      const Poly f = parse_poly(F, f_text);
      const Poly g = parse_poly(F, g_text);
      HenselProblem prob = [&] {
        if (alpha_text.empty() != beta_text.empty()) fail(ErrorCode::BadInput, "give both --alpha and --beta or neither");
        if (!alpha_text.empty()) return HenselProblem::make(f, parse_element(F, alpha_text), g, parse_element(F, beta_text));
        Rng rng = Rng::stream(seed, "edf");
        return choose_problem(f, g, rng);
      }();
      const HenselRun run = hensel_cmd->parsed() ? run_hensel(prob, N) : run_newton(prob, N);
      out.doc = run.report;
      if (newton_cmd->parsed()) {
        out.doc["field"] = field_json(prob.field);
        out.doc["a"] = prob.a;
        out.doc["b"] = prob.b;
      }
      out.pass = run.pass;
      std::ostringstream os;
      const json& poly_j = hensel_cmd->parsed() ? out.doc["newton"]["polygon"] : out.doc["polygon"];
      os << "E = " << prob.field.describe() << "\n";
      os << "alpha = " << prob.field.format(prob.alpha) << " (a=" << prob.a << "), beta = " << prob.field.format(prob.beta)
         << " (b=" << prob.b << "), r=" << prob.rs.r << ", s=" << prob.rs.s << "\n";
      if (hensel_cmd->parsed()) {
        os << "H = " << str(out.doc["H"]) << "\nA = " << str(out.doc["A"]) << "\nU = " << str(out.doc["U"]) << "\n";
        os << "Eisenstein: " << (out.doc["eisenstein"]["eisenstein"].get<bool>() ? "yes" : "no") << " ("
           << str(out.doc["eisenstein"]["reason"]) << ")\n";
      }
      os << "Newton polygon vertices: " << poly_j["vertices"].dump() << "\n";
      os << (run.pass ? "PASS" : "FAIL") << "\n";
      out.text = os.str();
    } else if (mult_cmd->parsed()) {
      const LinearizedPoly Lp = read_linearized(field, L, seed);
      const auto md = multiplicity_decomposition(Lp);
      out.doc = multiplicity_json(Lp, md);
      std::ostringstream os;
      os << "L = " << Lp.to_string() << "\nm = " << md.m << "\nh = " << md.h.to_string() << "\nL(X)/X = X^"
         << md.zero_root_multiplicity << " * h(X)^" << md.h_root_multiplicity << "\n";
      out.text = os.str();
    } else if (classify_cmd->parsed()) {
      const LinearizedPoly Lp = read_linearized(field, L, seed);
      if (n_opt && n_opt != Lp.qdegree()) {
        fail(ErrorCode::BadInput, "--n " + std::to_string(n_opt) + " does not match q-degree " + std::to_string(Lp.qdegree()));
      }
      const ClassificationResult r = classify(Lp, parse_budget(budget_text, max_k), seed);
      out.doc = classification_json(Lp, r);
      out.pass = r.verdict != Verdict::UndeterminedWithinBudget;
      out.text = classification_text(out.doc);
    } else if (prop_cmd->parsed()) {
      const LinearizedPoly Lp = read_linearized(field, L, seed);
      const PropositionReport r = proposition_check(Lp, with_cls, parse_budget(budget_text, max_k), seed);
      out.doc = proposition_json(Lp, r);
      out.pass = r.pass;
      std::ostringstream os;
      os << "L = " << Lp.to_string() << "  (q=" << r.q << ", n=" << r.n << ", m=" << r.m << ")\n";
      os << "divisor q^m(q^m-1)(q^n-1) = " << r.divisor << "\n";
      os << "corollary pair (a,b) = (" << r.corollary.a << "," << r.corollary.b << "), a*b*deg = " << r.corollary.divisor
         << (r.corollary_matches ? " (matches)" : " (MISMATCH)") << "\n";
      os << "|GL_n(q)| = " << r.gl_order << (r.divides_gl ? " (divisible)" : " (NOT divisible)") << "\n";
      if (r.verdict) os << "classification: " << verdict_name(*r.verdict) << "\n";
      os << (r.pass ? "PASS" : "FAIL") << "\n";
      out.text = os.str();
    } else if (thm_cmd->parsed()) {
      const TheoremTable t = verify_theorem(q_opt, n_opt, parse_budget(budget_text, max_k), seed, include_excluded);
      out.doc = theorem_json(t);
      out.pass = t.pass;
      std::ostringstream os;
      os << "q=" << t.q << " n=" << t.n << "  |GL_n(q)| = " << order_gl(t.n, t.q) << "\n";
      for (const auto& g : t.candidates) os << "candidate " << g.name() << ": " << g.census->elements << " elements, "
                                          << g.census->counts.size() << " cycle types\n";
      os << "L\tverdict\twitness\tsamples\tlower_bound\tdivisor\n";
      auto row = [&](const json& r) {
        os << str(r["L"]) << '\t' << str(r["verdict"]) << '\t'
           << (r["witness"].is_null() ? "-" : str(r["witness"]["type"]["text"])) << '\t' << r["samples_used"] << '\t'
           << str(r["order_lower_bound"]) << '\t' << (r["proposition_divisor"].is_null() ? "-" : str(r["proposition_divisor"]))
           << '\n';
      };
      for (const auto& r : out.doc["rows"]) row(r);
      if (out.doc.contains("excluded")) row(out.doc["excluded"]);
      os << (t.pass ? "PASS" : "FAIL") << "\n";
      out.text = os.str();
    } else if (repro_cmd->parsed()) {
      ReproduceOptions o;
      o.seed = seed;
      o.meta = !no_meta;
      o.precision = N;
      o.budget = parse_budget(budget_text, max_k);
      if (!sections_text.empty()) {
        std::stringstream ss(sections_text);
        std::string s;
        while (std::getline(ss, s, ',')) o.sections.insert(s);
      }
      out.doc = reproduce_paper(o);
      out.pass = out.doc["pass"].get<bool>();
      if (resolve_format(common) == Format::Text) common.format = "json";
    }
    if (!out.doc.contains("seed")) out.doc["seed"] = seed;
    emit(out, common);
    return out.pass ? 0 : 1;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
