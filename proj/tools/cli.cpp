#include "cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>
#include <variant>

#include "mgdual/emit.hpp"
#include "mgdual/idealops.hpp"
#include "mgdual/oracle.hpp"
#include "mgdual/parser.hpp"

namespace mgdual::cli {

namespace {

using json = nlohmann::ordered_json;

enum class Format { Table, Json, Csv };

struct Options {
  std::string file;
  std::string ideal;
  std::string degree;
  std::string poly;
  std::string by;
  std::string format = "table";
  bool verify = false;
  std::size_t verify_limit = 1500;
  bool quiet = false;
};

class Session {
public:
  Session(const Options& opt, std::ostream& out, std::ostream& err)
      : opt_(opt), out_(out), err_(err), problem_(load(opt.file)), grading_(problem_.grading()) {
    format_ = opt.format == "json" ? Format::Json : opt.format == "csv" ? Format::Csv : Format::Table;
  }

  bool mismatch() const noexcept { return mismatch_; }

  void validate() {
    if (format_ == Format::Json) {
      json doc = envelope();
      json ideals = json::array();
      for (const auto& ni : problem_.ideals) {
        GradedIdeal i = problem_.ideal(ni.name);
        json gens = json::array(), degs = json::array();
        for (std::size_t j = 0; j < i.size(); ++j) {
          gens.push_back(i.generators()[j].to_string(grading_.var_names()));
          degs.push_back(i.degrees()[j].coords());
        }
        ideals.push_back({{"name", ni.name}, {"generators", gens}, {"degrees", degs}});
      }
      doc["meta"]["valid"] = true;
      doc["meta"]["ideals"] = ideals;
      doc["meta"]["queries"] = problem_.queries.size();
      out_ << doc.dump(2) << '\n';
      return;
    }
    if (format_ == Format::Csv) {
      out_ << "ideal,generator,degree\n";
      for (const auto& ni : problem_.ideals) {
        GradedIdeal i = problem_.ideal(ni.name);
        for (std::size_t j = 0; j < i.size(); ++j)
          out_ << ni.name << ",\"" << i.generators()[j].to_string(grading_.var_names()) << "\",\""
               << i.degrees()[j].to_string() << "\"\n";
      }
      return;
    }
    out_ << "grading: " << grading_.nvars() << " variables, rank " << grading_.rank() << '\n';
    out_ << "  A =" << matrix_text(grading_.degree_matrix()) << '\n';
    out_ << "  B =" << matrix_text(grading_.cone_matrix()) << '\n';
    for (const auto& ni : problem_.ideals) {
      GradedIdeal i = problem_.ideal(ni.name);
      out_ << "ideal " << ni.name << ": " << i.size() << " homogeneous generator(s)";
      if (i.is_zero()) out_ << " (zero ideal)";
      out_ << '\n';
      for (std::size_t j = 0; j < i.size(); ++j)
        out_ << "  deg " << i.degrees()[j].to_string() << ": "
             << i.generators()[j].to_string(grading_.var_names()) << '\n';
    }
    if (!problem_.queries.empty()) out_ << problem_.queries.size() << " quer(ies)\n";
    out_ << "ok\n";
  }

  void hilbert_cmd(const std::string& ideal, const MultiDegree& max) {
    DualPresentation p(problem_.ideal(ideal));
    HilbertTable t = hilbert_table(p, max);
    if (opt_.verify) verify_table(p.recipe(), t);
    emit_table(t, json::object(), "H_" + ideal);
  }

  void dual_basis_cmd(const std::string& ideal, const MultiDegree& m) {
    GradedIdeal i = problem_.ideal(ideal);
    DualPresentation p(i);
    const Subspace& d = dual_at(p, m);
    auto basis = basis_functionals(grading_, d);
    if (opt_.verify && oracle_size(p.recipe(), m) <= opt_.verify_limit) {
      HilbertTable t{{m, d.dim()}};
      verify_table(p.recipe(), t);
      // Every basis functional must kill the degree-m spanning set of I.
      for (const auto& f : basis)
        for (std::size_t j = 0; j < i.size(); ++j) {
          const MultiDegree rest = m - i.degrees()[j];
          if (!grading_.in_weight_semigroup(rest)) continue;
          for (const auto& beta : grading_.monomials_of_degree(rest))
            if (sgn(eval_functional(f, i.generators()[j].shifted(beta))) != 0) {
              report("functional " + f.to_string() + " does not vanish on I");
              break;
            }
        }
    }
    if (format_ == Format::Json) {
      json doc = envelope();
      json list = json::array();
      for (const auto& f : basis) list.push_back(f.to_string());
      doc["values"].push_back({{"degree", m.coords()}, {"dim", d.dim()}, {"basis", list}});
      out_ << doc.dump(2) << '\n';
    } else if (format_ == Format::Csv) {
      out_ << degree_header() << "index,functional\n";
      for (std::size_t r = 0; r < basis.size(); ++r)
        out_ << degree_cells(m) << r << ",\"" << basis[r].to_string() << "\"\n";
    } else {
      if (!opt_.quiet) out_ << "D_0^" << m.to_string() << "(" << ideal << "): dim " << d.dim() << '\n';
      for (const auto& f : basis) out_ << (opt_.quiet ? "" : "  ") << f.to_string() << '\n';
    }
  }

  void member_cmd(const std::string& ideal, const std::string& expr) {
    Polynomial g = parse_polynomial(expr, grading_.var_names());
    DualPresentation p(problem_.ideal(ideal));
    MembershipResult r = membership(g, p);
    const MultiDegree m = *g.homogeneous_degree(grading_);
    if (opt_.verify) {
      if (oracle_size(p.recipe(), m) > opt_.verify_limit) err_ << "verify: skipped, degree above --verify-limit\n";
      else if (oracle_membership(g, p.recipe()) != r.member) report("oracle membership disagrees for " + expr);
    }
    const std::string gtext = g.to_string(grading_.var_names());
    if (format_ == Format::Json) {
      json doc = envelope();
      json v = {{"degree", m.coords()}, {"dim", dual_at(p, m).dim()}, {"member", r.member}};
      if (r.witness) {
        v["witness"] = r.witness->to_string();
        v["witness_value"] = r.witness_value.get_str();
      }
      doc["values"].push_back(v);
      doc["meta"]["polynomial"] = gtext;
      out_ << doc.dump(2) << '\n';
    } else if (format_ == Format::Csv) {
      out_ << degree_header() << "member,witness,witness_value\n" << degree_cells(m) << (r.member ? "true" : "false")
           << ",\"" << (r.witness ? r.witness->to_string() : "") << "\"," << (r.witness ? r.witness_value.get_str() : "")
           << '\n';
    } else {
      out_ << gtext << (r.member ? " is a member of " : " is not a member of ") << ideal << '\n';
      if (r.witness)
        out_ << "witness: " << r.witness->to_string() << " (value " << r.witness_value.get_str() << ")\n";
    }
  }

  void quotient_cmd(const std::string& ideal, const std::string& by, const MultiDegree& max) {
    Recipe base = leaf(problem_.ideal(ideal));
    auto divisor = resolve(by);
    Recipe r = std::holds_alternative<GradedIdeal>(divisor)
                   ? quotient_by_ideal(base, std::get<GradedIdeal>(divisor))
                   : quotient_by_poly(base, std::get<Polynomial>(divisor));
    DualPresentation p(r);
    HilbertTable t = hilbert_table(p, max);
    if (opt_.verify) verify_table(r, t);
    json meta = {{"recipe", describe(r)}};
    emit_table(t, meta, "H_{" + ideal + ":" + by + "}");
  }

  void saturate_cmd(const std::string& ideal, const std::string& by, const MultiDegree& window) {
    DualPresentation p(problem_.ideal(ideal));
    auto divisor = resolve(by);
    GradedIdeal j = std::holds_alternative<GradedIdeal>(divisor)
                        ? std::get<GradedIdeal>(divisor)
                        : GradedIdeal(grading_, {std::get<Polynomial>(divisor)});
    SaturationResult s = saturate(p, j, window);
    const HilbertTable& final_table = s.chain[s.stabilized_at];
    if (opt_.verify) verify_table(s.result.recipe(), final_table);

    json chain = json::array();
    for (const auto& t : s.chain) chain.push_back(values_json(t));
    json meta = {{"stabilized_at", s.stabilized_at},
                 {"window_stabilized", s.window_stabilized},
                 {"recipe", describe(s.result.recipe())},
                 {"chain", chain}};
    if (format_ == Format::Table) {
      for (std::size_t q = 0; q < s.chain.size(); ++q) {
        if (!opt_.quiet) out_ << "H_{" << ideal << ":" << by << "^" << q << "}\n";
        out_ << format_hilbert_table(s.chain[q], grading_.rank());
      }
      out_ << "window-stabilized at p = " << s.stabilized_at << '\n';
      if (!opt_.quiet)
        err_ << "note: equality of consecutive tables holds on the window only; this does not certify "
                "global saturation\n";
      return;
    }
    emit_table(final_table, meta, "");
  }

  void multiplicity_cmd(const std::string& ideal, const MultiDegree& bound) {
    GradedIdeal i = problem_.ideal(ideal);
    MultiplicityResult r = multiplicity(i, bound);
    if (opt_.verify) {
      DualPresentation p(i);
      verify_table(p.recipe(), hilbert_table(p, bound));
    }
    json meta = {{"multiplicity", r.multiplicity}, {"complete", r.complete}};
    if (r.certified_level) meta["certified_level"] = *r.certified_level;
    if (format_ == Format::Table) {
      out_ << "multiplicity " << r.multiplicity << (r.complete ? " (complete)" : " (incomplete: raise the bound)")
           << '\n';
      return;
    }
    DualPresentation p(i);
    emit_table(hilbert_table(p, bound), meta, "");
  }

  void run_queries() {
    for (const Query& q : problem_.queries) {
      if (format_ == Format::Table && !opt_.quiet) out_ << "> " << query_text(q) << '\n';
      switch (q.kind) {
        case QueryKind::Hilbert: hilbert_cmd(q.ideal, *q.degree); break;
        case QueryKind::DualBasis: dual_basis_cmd(q.ideal, *q.degree); break;
        case QueryKind::Member: member_cmd(q.ideal, q.argument); break;
        case QueryKind::Quotient: quotient_cmd(q.ideal, q.argument, *q.degree); break;
        case QueryKind::Saturate: saturate_cmd(q.ideal, q.argument, *q.degree); break;
        case QueryKind::Multiplicity: multiplicity_cmd(q.ideal, *q.degree); break;
      }
    }
  }

  MultiDegree degree(const std::string& text) const { return parse_degree(text, grading_.rank()); }

private:
  static ProblemFile load(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(Errc::ParseError, "cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_problem(ss.str());
  }

  static std::string matrix_text(const IntMatrix& m) {
    std::string s;
    for (const auto& row : m) {
      s += " [";
      for (std::size_t j = 0; j < row.size(); ++j) s += (j ? " " : "") + std::to_string(row[j]);
      s += "]";
    }
    return s;
  }

  static std::string query_text(const Query& q) {
    std::string s = std::string(query_keyword(q.kind)) + " " + q.ideal;
    if (q.kind == QueryKind::Quotient || q.kind == QueryKind::Saturate) s += " by";
    if (!q.argument.empty()) s += q.argument_is_expression ? " \"" + q.argument + "\"" : " " + q.argument;
    if (q.degree) s += " " + q.degree->to_string();
    return s;
  }

  std::variant<GradedIdeal, Polynomial> resolve(const std::string& by) const {
    if (problem_.find_ideal(by)) return problem_.ideal(by);
    return parse_polynomial(by, grading_.var_names());
  }

  json envelope() const {
    return json{{"grading",
                 {{"vars", grading_.var_names()}, {"A", grading_.degree_matrix()}, {"B", grading_.cone_matrix()}}},
                {"values", json::array()},
                {"meta", json::object()}};
  }

  static json values_json(const HilbertTable& t) {
    json v = json::array();
    for (const auto& [m, h] : t) v.push_back({{"degree", m.coords()}, {"dim", h}});
    return v;
  }

  std::string degree_header() const {
    std::string s;
    for (std::size_t c = 0; c < grading_.rank(); ++c) s += "m" + std::to_string(c + 1) + ",";
    return s;
  }
  static std::string degree_cells(const MultiDegree& m) {
    std::string s;
    for (Int v : m.coords()) s += std::to_string(v) + ",";
    return s;
  }

  void emit_table(const HilbertTable& t, json meta, const std::string& title) {
    switch (format_) {
      case Format::Json: {
        json doc = envelope();
        doc["values"] = values_json(t);
        doc["meta"] = std::move(meta);
        out_ << doc.dump(2) << '\n';
        break;
      }
      case Format::Csv:
        out_ << format_hilbert_csv(t, grading_.rank());
        break;
      case Format::Table:
        if (!opt_.quiet && !title.empty()) out_ << title << '\n';
        out_ << format_hilbert_table(t, grading_.rank());
        break;
    }
  }

  // Largest graded piece the oracle would have to reduce for degree m.
  std::size_t oracle_size(const Recipe& r, const MultiDegree& m) const {
    std::size_t worst = grading_.monomials_of_degree(m).size();
    for (const auto& d : leaf_requirements(DualPresentation(r), m))
      worst = std::max(worst, grading_.monomials_of_degree(d.degree).size());
    return worst;
  }

  void verify_table(const Recipe& r, const HilbertTable& t) {
    std::size_t skipped = 0;
    for (const auto& [m, h] : t) {
      if (oracle_size(r, m) > opt_.verify_limit) {
        ++skipped;
        continue;
      }
      const std::size_t o = oracle_hilbert(r, m);
      if (o != h) report("degree " + m.to_string() + ": dual dimension " + std::to_string(h) + ", oracle " +
                         std::to_string(o));
    }
    if (skipped) err_ << "verify: skipped " << skipped << " degree(s) above --verify-limit\n";
    if (!mismatch_ && !opt_.quiet)
      err_ << "verify: " << t.size() - skipped << " degree(s) agree with the oracle\n";
  }

  void report(const std::string& what) {
    mismatch_ = true;
    err_ << "verify mismatch: " << what << '\n';
  }

  const Options& opt_;
  std::ostream& out_;
  std::ostream& err_;
  ProblemFile problem_;
  Grading grading_;
  Format format_ = Format::Table;
  bool mismatch_ = false;
};

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Multigraded Macaulay dual spaces: Hilbert functions, membership, quotients, saturation", "mgdual"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_option("--format", opt.format, "Output format")
      ->check(CLI::IsMember({"table", "json", "csv"}))
      ->capture_default_str();
  app.add_flag("--verify", opt.verify, "Cross-check results against the brute-force oracle (exit 2 on mismatch)");
  app.add_option("--verify-limit", opt.verify_limit,
                 "Skip oracle checks whose graded pieces exceed this many monomials")
      ->capture_default_str();
  app.add_flag("--quiet", opt.quiet, "Suppress titles and notes");

  auto add = [&](const char* name, const char* help) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("file", opt.file, "Problem file")->required();
    return sub;
  };
  auto ideal_opt = [&](CLI::App* sub) { sub->add_option("--ideal", opt.ideal, "Ideal name")->required(); };

  CLI::App* validate = add("validate", "Check the grading and generator homogeneity");
  CLI::App* run_cmd = add("run", "Execute the queries listed in the file");
  CLI::App* hilbert = add("hilbert", "Hilbert function on all degrees below a bound");
  ideal_opt(hilbert);
  hilbert->add_option("--max-degree", opt.degree, "Degree, e.g. 4 or \"(4,4)\"")->required();
  CLI::App* dual_basis = add("dual-basis", "Basis functionals of the dual space in one degree");
  ideal_opt(dual_basis);
  dual_basis->add_option("--degree", opt.degree, "Degree")->required();
  CLI::App* member = add("member", "Ideal membership of a homogeneous polynomial");
  ideal_opt(member);
  member->add_option("--poly", opt.poly, "Polynomial expression")->required();
  CLI::App* quotient = add("quotient", "Hilbert function of an ideal quotient");
  ideal_opt(quotient);
  quotient->add_option("--by", opt.by, "Ideal name or polynomial expression")->required();
  quotient->add_option("--max-degree", opt.degree, "Degree")->required();
  CLI::App* saturate_cmd = add("saturate", "Iterated quotients until the window stabilizes");
  ideal_opt(saturate_cmd);
  saturate_cmd->add_option("--by", opt.by, "Ideal name or polynomial expression")->required();
  saturate_cmd->add_option("--window", opt.degree, "Largest window degree")->required();
  CLI::App* mult = add("multiplicity", "Dimension of the dual space at the origin");
  ideal_opt(mult);
  mult->add_option("--bound", opt.degree, "Bound degree")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    Session s(opt, out, err);
    if (validate->parsed()) s.validate();
    else if (run_cmd->parsed()) s.run_queries();
    else if (hilbert->parsed()) s.hilbert_cmd(opt.ideal, s.degree(opt.degree));
    else if (dual_basis->parsed()) s.dual_basis_cmd(opt.ideal, s.degree(opt.degree));
    else if (member->parsed()) s.member_cmd(opt.ideal, opt.poly);
    else if (quotient->parsed()) s.quotient_cmd(opt.ideal, opt.by, s.degree(opt.degree));
    else if (saturate_cmd->parsed()) s.saturate_cmd(opt.ideal, opt.by, s.degree(opt.degree));
    else if (mult->parsed()) s.multiplicity_cmd(opt.ideal, s.degree(opt.degree));
    return s.mismatch() ? 2 : 0;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace mgdual::cli
