#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <sstream>

#include "polylin/equivalence.hpp"
#include "polylin/errors.hpp"
#include "polylin/json_io.hpp"
#include "polylin/normal_forms.hpp"
#include "polylin/pencils.hpp"
#include "polylin/sweep.hpp"
#include "polylin/verify.hpp"

namespace polylin {

namespace {

struct Options {
  std::string in, out, mode = "cofactors", from, kind = "hermite", basis;
  std::string bases = "monomial,recurrence,bernstein,lagrange", nodes;
  int grade = -1;
  std::size_t nmax = 3, count = 200;
  int lmax = 6;
  std::uint64_t seed = 1;
  bool inject_fault = false, monic = false, text = false;
};

std::string read_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ParseError("cannot read '" + path + "'");
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

Json read_json(const Options& o) {
  if (o.in.empty()) throw ParseError("--in is required");
  return parse_json(read_file(o.in));
}

void write(const Options& o, const std::string& text, std::ostream& out) {
  if (o.out.empty()) {
    out << text;
    return;
  }
  std::ofstream f(o.out);
  if (!f) throw ParseError("cannot write '" + o.out + "'");
  f << text;
}

void write_json(const Options& o, const Json& j, std::ostream& out) { write(o, j.dump(2) + "\n", out); }

std::vector<Rational> parse_list(const std::string& s) {
  std::vector<Rational> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(parse_rational(item));
  return out;
}

// Target basis from --basis (a kind name, "chebyshev", or a BasisSpec JSON file).
BasisSpec target_basis(const Options& o, int grade) {
  const int g = o.grade >= 0 ? o.grade : grade;
  if (o.basis.size() > 5 && o.basis.substr(o.basis.size() - 5) == ".json")
    return basis_from_json(parse_json(read_file(o.basis)));
  if (o.basis == "chebyshev") return BasisSpec::chebyshev(g);
  switch (parse_basis_kind(o.basis)) {
    case BasisKind::Monomial: return BasisSpec::monomial(g);
    case BasisKind::Bernstein: return BasisSpec::bernstein(g);
    case BasisKind::Lagrange: {
      auto nodes = parse_list(o.nodes);
      if (nodes.empty())
        for (int k = 0; k <= g; ++k) nodes.emplace_back(k);
      return BasisSpec::lagrange(std::move(nodes));
    }
    case BasisKind::Recurrence:
      throw ParseError("recurrence target needs a BasisSpec JSON file");
  }
  throw ParseError("unknown basis");
}

Json certificate(const std::string& kind, const MatrixPolynomial& p, const Verdict& v) {
  return {{"kind", kind}, {"basis", to_json(p.basis)}, {"verified", v.ok},
          {"unit", v.constant ? to_json(*v.constant) : Json(nullptr)}};
}

int finish(const Options& o, Json cert, const Verdict& v, std::ostream& out, std::ostream& err) {
  cert["verdict"] = to_json(v);
  write_json(o, cert, out);
  if (!v.ok) {
    err << "falsified: " << v.check;
    for (const auto& [k, val] : v.counterexample) err << " " << k << "=" << val;
    err << "\n";
    return kFalsified;
  }
  return kVerified;
}

int cmd_pencil(const Options& o, std::ostream& out) {
  const MatrixPolynomial p = matrix_polynomial_from_json(read_json(o));
  write_json(o, to_json(build_pencil(p)), out);
  return kVerified;
}

int cmd_equiv(const Options& o, std::ostream& out, std::ostream& err) {
  MatrixPolynomial p = matrix_polynomial_from_json(read_json(o));
  validate(p);
  if (!o.from.empty()) {
    Options t = o;
    t.basis = o.from;
    const BasisSpec b = target_basis(t, p.grade());
    if (!(b.kind == p.basis.kind && o.from != "chebyshev")) p = convert(p, b);
  }
  const Pencil l = build_pencil(p);
  if (o.mode == "cofactors") {
    const CofactorPair cf = cofactors(p, l);
    const Verdict v = verify_linearization(l, p, cf);
    Json c = certificate("cofactors", p, v);
    c["L"] = to_json(l);
    c["E"] = to_json(cf.e);
    c["F"] = to_json(cf.f);
    return finish(o, std::move(c), v, out, err);
  }
  if (o.mode == "hermite") {
    HermiteAnalogue ha;
    switch (p.basis.kind) {
      case BasisKind::Recurrence: ha = recurrence_hermite_analogue(p, l, o.monic); break;
      case BasisKind::Bernstein: ha = bernstein_hermite_analogue(p, l); break;
      case BasisKind::Lagrange: ha = lagrange_hermite_factors(p, l); break;
      case BasisKind::Monomial: throw PreconditionError("hermite mode needs a non-monomial basis");
    }
    const Verdict v = verify_hermite_analogue(ha, l);
    Json c = certificate("hermite-analogue", p, v);
    c["L"] = to_json(l);
    c["Uinv"] = to_json(ha.uinv);
    c["H"] = to_json(ha.h);
    c["cornerIndex"] = ha.corner_block;
    return finish(o, std::move(c), v, out, err);
  }
  if (o.mode == "strict") {
    StrictEquivalence se;
    Pencil target;
    if (p.basis.kind == BasisKind::Bernstein) {
      se = bernstein_strict_equivalence(p);
      target = build_monomial_pencil(to_monomial(p));
    } else if (p.basis.kind == BasisKind::Lagrange) {
      se = lagrange_strict_equivalence(p);
      MatrixPolynomial m = to_monomial(p);
      m.coeffs.resize(p.grade() + 3, Matrix(p.n, p.n));
      m.basis = BasisSpec::monomial(p.grade() + 2);
      target = build_monomial_pencil(m);
    } else {
      throw PreconditionError("strict mode needs a bernstein or lagrange polynomial");
    }
    const Verdict v = verify_strict(se, l, target);
    Json c = certificate("strict", p, v);
    c["from"] = to_json(l);
    c["to"] = to_json(target);
    c["U"] = to_json(se.u);
    c["W"] = to_json(se.w);
    return finish(o, std::move(c), v, out, err);
  }
  if (o.mode == "reversal") {
    if (p.basis.kind != BasisKind::Bernstein) throw PreconditionError("reversal mode needs a bernstein polynomial");
    const BernsteinReversal br = bernstein_reversal_equivalence(p);
    const Verdict v = verify_strict(br.se, br.reversed, shifted_reversal(br.original));
    Json c = certificate("reversal", p, v);
    Json d = Json::array();
    for (const auto& m : bernstein_reversal_coeffs(p.coeffs)) d.push_back(to_json(m));
    c["d"] = std::move(d);
    c["from"] = to_json(br.reversed);
    c["to"] = to_json(shifted_reversal(br.original));
    c["U"] = to_json(br.se.u);
    c["W"] = to_json(br.se.w);
    return finish(o, std::move(c), v, out, err);
  }
  throw ParseError("unknown --mode '" + o.mode + "'");
}

int cmd_nf(const Options& o, std::ostream& out, std::ostream& err) {
  const Json j = read_json(o);
  const PolyMatrix m = j.is_object() && j.contains("C1") ? pencil_from_json(j).to_poly_matrix()
                                                         : poly_matrix_from_json(j);
  if (o.kind == "mask") {
    const auto grid = mask(m);
    if (o.text) {
      std::string s;
      for (const auto& row : grid) {
        for (std::size_t c = 0; c < row.size(); ++c) s += (c ? " " : "") + std::string(1, row[c]);
        s += "\n";
      }
      write(o, s, out);
    } else {
      write_json(o, mask_json(grid), out);
    }
    return kVerified;
  }
  if (o.kind == "hermite") {
    const HermiteResult r = hermite_form(m);
    const Verdict v = verify_hermite(m, r);
    Json c = {{"kind", "hermite"}, {"H", to_json(r.h)}, {"U", to_json(r.u)},
              {"pivotColumns", r.pivot_cols}, {"rankDeficient", r.rank_deficient},
              {"mask", mask_json(mask(r.h))["mask"]}, {"verified", v.ok}};
    return finish(o, std::move(c), v, out, err);
  }
  if (o.kind == "smith") {
    const SmithResult r = smith_form(m);
    const Verdict v = verify_smith(m, r);
    Json f = Json::array();
    for (const auto& p : r.factors()) f.push_back(to_json(p));
    Json c = {{"kind", "smith"}, {"S", to_json(r.s)}, {"E", to_json(r.e)}, {"F", to_json(r.f)},
              {"factors", std::move(f)}, {"verified", v.ok}};
    return finish(o, std::move(c), v, out, err);
  }
  throw ParseError("unknown --kind '" + o.kind + "'");
}

int cmd_sweep(const Options& o, std::ostream& out, std::ostream& err) {
  SweepOptions s;
  s.bases.clear();
  std::stringstream ss(o.bases);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) s.bases.push_back(parse_basis_kind(item));
  s.nmax = o.nmax;
  s.lmax = o.lmax;
  s.count = o.count;
  s.seed = o.seed;
  s.inject_fault = o.inject_fault;
  const SweepReport rep = run_sweep(s);
  write_json(o, rep.to_json(s), out);
  if (!rep.ok) {
    err << "sweep falsified: " << rep.counterexample->dump() << "\n";
    return kFalsified;
  }
  return kVerified;
}

int cmd_convert(const Options& o, std::ostream& out) {
  const MatrixPolynomial p = matrix_polynomial_from_json(read_json(o));
  if (o.basis.empty()) throw ParseError("--basis is required");
  write_json(o, to_json(convert(p, target_basis(o, p.grade()))), out);
  return kVerified;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Companion pencils and exact equivalence certificates for matrix polynomials"};
  app.name("polylin");
  app.require_subcommand(1);
  Options o;

  auto io = [&](CLI::App* c) {
    c->add_option("--in", o.in, "input JSON file");
    c->add_option("--out", o.out, "output file (default: stdout)");
  };
  auto* pencil = app.add_subcommand("pencil", "build the companion pencil of P");
  io(pencil);
  auto* equiv = app.add_subcommand("equiv", "build and verify an equivalence certificate");
  io(equiv);
  equiv->add_option("--mode", o.mode, "cofactors|strict|reversal|hermite")
      ->check(CLI::IsMember({"cofactors", "strict", "reversal", "hermite"}));
  equiv->add_option("--from", o.from, "convert P to this basis first");
  equiv->add_option("--nodes", o.nodes, "comma-separated nodes for --from lagrange");
  equiv->add_flag("--monic", o.monic, "monic corner for the recurrence Hermite analogue");
  auto* nf = app.add_subcommand("nf", "Hermite/Smith normal form or mask of a polynomial matrix");
  io(nf);
  nf->add_option("--kind", o.kind, "hermite|smith|mask")->check(CLI::IsMember({"hermite", "smith", "mask"}));
  nf->add_flag("--text", o.text, "print the mask as a text grid");
  auto* sweep = app.add_subcommand("sweep", "randomized verification sweep");
  sweep->add_option("--out", o.out, "report file (default: stdout)");
  sweep->add_option("--bases", o.bases, "comma-separated basis kinds");
  sweep->add_option("--nmax", o.nmax, "largest block size")->check(CLI::Range(1, 8));
  sweep->add_option("--lmax", o.lmax, "largest grade")->check(CLI::Range(1, 12));
  sweep->add_option("--count", o.count, "instances per basis");
  sweep->add_option("--seed", o.seed, "random seed");
  sweep->add_flag("--inject-fault", o.inject_fault, "perturb the first pencil (test hook)");
  auto* conv = app.add_subcommand("convert", "change the basis of P");
  io(conv);
  conv->add_option("--basis", o.basis, "monomial|bernstein|chebyshev|lagrange or a basis JSON file");
  conv->add_option("--grade", o.grade, "target grade (default: grade of P)");
  conv->add_option("--nodes", o.nodes, "comma-separated nodes for a lagrange target");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : kInputError;
  }

  try {
    if (*pencil) return cmd_pencil(o, out);
    if (*equiv) return cmd_equiv(o, out, err);
    if (*nf) return cmd_nf(o, out, err);
    if (*sweep) return cmd_sweep(o, out, err);
    if (*conv) return cmd_convert(o, out);
  } catch (const PreconditionError& e) {
    err << e.what() << "\n";
    return kPrecondition;
  } catch (const ParseError& e) {
    err << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const DimensionError& e) {
    err << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const nlohmann::json::exception& e) {
    err << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const Error& e) {
    err << e.what() << "\n";
    return kFalsified;
  }
  return kInputError;
}

}  // namespace polylin
