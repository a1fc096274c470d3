// Command-line front end for the slice Dirac operator calculus library.
//
//   slicealg verify osp --degree 4
//   slicealg verify hermite --jmax 6 --kmax 3
//   slicealg gram --jmax 3 --kmax 2 --m 2 --format csv --out gram.csv
//   slicealg oracle compare --jmax 2 --kmax 2 --m 2 --c 1
//
// Exit status: 0 when every check passes, 1 on verification failure,
// 2 on usage errors.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "slicealg/hermite.hpp"
#include "slicealg/inner_product.hpp"
#include "slicealg/operators.hpp"
#include "slicealg/oracle.hpp"
#include "slicealg/report.hpp"

namespace {

struct Options {
  int degree = 4;
  int jmax = 4;
  int kmax = 3;
  int m = 2;
  double c = 1.0;
  std::string lambdas = "1,2,3,4,5,6,7,8";
  std::string format = "text";
  std::string out;
};

std::vector<slicealg::Rational> parse_lambdas(const std::string& csv) {
  std::vector<slicealg::Rational> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    out.push_back(slicealg::rational_from_string(item));
  }
  if (out.empty()) throw CLI::ValidationError("--lambdas", "empty list");
  return out;
}

void emit(const Options& opt, const std::string& body) {
  if (opt.out.empty()) {
    std::cout << body;
    return;
  }
  std::ofstream f(opt.out);
  if (!f) throw CLI::ValidationError("--out", "cannot open " + opt.out);
  f << body;
}

int finish(const Options& opt, const slicealg::Report& rep) {
  if (opt.format == "json") {
    emit(opt, rep.to_json().dump(2) + "\n");
  } else {
    emit(opt, rep.text());
  }
  return rep.passed() ? 0 : 1;
}

void add_common(CLI::App* app, Options& opt, bool with_m = false,
                bool with_c = false) {
  app->add_option("--jmax", opt.jmax, "largest order j");
  app->add_option("--kmax", opt.kmax, "largest degree k");
  app->add_option("--degree", opt.degree, "largest monomial degree");
  app->add_option("--lambdas", opt.lambdas,
                  "comma-separated rational scale factors");
  if (with_m) app->add_option("--m", opt.m, "ambient vector dimension m");
  if (with_c) app->add_option("--c", opt.c, "numeric value of c");
  app->add_option("--format", opt.format, "text, json or csv")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  app->add_option("--out", opt.out, "write output to this file");
}

}  // namespace

int main(int argc, char** argv) {
  using namespace slicealg;

  CLI::App app{"Exact verification of the slice Dirac operator calculus"};
  app.require_subcommand(1);
  Options opt;
  int rc = 0;

  // verify ----------------------------------------------------------------
  CLI::App* verify = app.add_subcommand("verify", "run a verification sweep");
  verify->require_subcommand(1);

  CLI::App* v_osp = verify->add_subcommand(
      "osp", "superalgebra relations on dressed monomials");
  add_common(v_osp, opt);
  v_osp->callback([&] {
    rc = finish(opt, check_osp_relations(opt.degree, {0, frac(1, 4)}));
  });

  CLI::App* v_pow =
      verify->add_subcommand("powers", "operator identities for powers of x");
  add_common(v_pow, opt);
  v_pow->callback(
      [&] { rc = finish(opt, check_power_identities(4, opt.degree)); });

  CLI::App* v_herm = verify->add_subcommand(
      "hermite", "generalized Hermite polynomial identities");
  add_common(v_herm, opt);
  v_herm->callback([&] {
    Report rep;
    rep.suite = "hermite";
    rep.merge(check_lowering(opt.jmax, opt.kmax));
    rep.merge(check_ode(opt.jmax, opt.kmax));
    rep.merge(check_closed_forms(opt.jmax, opt.kmax));
    rep.merge(check_rodrigues(opt.jmax, opt.kmax, parse_lambdas(opt.lambdas)));
    rep.merge(check_ladder(opt.jmax, opt.kmax));
    rep.merge(check_oscillator(opt.jmax, opt.kmax));
    rc = finish(opt, rep);
  });

  CLI::App* v_orth = verify->add_subcommand(
      "orthogonality", "Gram matrix structure of the psi functions");
  add_common(v_orth, opt, /*with_m=*/true);
  v_orth->callback([&] {
    Multivector one(opt.m + 1, ExactScalar(1));
    Report rep = gram_matrix(opt.jmax, opt.kmax, opt.m, one, one).verification;
    rep.merge(check_beta_scan(parse_lambdas(opt.lambdas), opt.m));
    rc = finish(opt, rep);
  });

  CLI::App* v_adj = verify->add_subcommand(
      "adjoint", "symmetry of D0 and antisymmetry of x under the pairing");
  add_common(v_adj, opt, /*with_m=*/true);
  v_adj->callback(
      [&] { rc = finish(opt, check_selfadjoint(opt.jmax, opt.kmax, opt.m)); });

  // kernel ----------------------------------------------------------------
  CLI::App* kernel = app.add_subcommand(
      "kernel", "kernel of D0 on homogeneous slice polynomials");
  add_common(kernel, opt);
  kernel->callback([&] {
    Report rep = check_kernel(opt.kmax);
    if (opt.format == "text") {
      std::ostringstream os;
      os << rep.text();
      for (int k = 0; k <= opt.kmax; ++k) {
        os << "degree " << k << ":\n";
        for (const SlicePoly& p : kernel_basis(k)) os << "  " << p.str() << "\n";
      }
      emit(opt, os.str());
      rc = rep.passed() ? 0 : 1;
    } else {
      rc = finish(opt, rep);
    }
  });

  // table -----------------------------------------------------------------
  CLI::App* table = app.add_subcommand("table", "print symbolic tables");
  table->require_subcommand(1);
  CLI::App* t_herm =
      table->add_subcommand("hermite", "H_j applied to the degree-k generator");
  add_common(t_herm, opt);
  t_herm->callback([&] {
    std::ostringstream os;
    if (opt.format == "json") {
      nlohmann::json rows = nlohmann::json::array();
      for (int j = 0; j <= opt.jmax; ++j)
        for (int k = 0; k <= opt.kmax; ++k)
          rows.push_back({{"j", j}, {"k", k},
                          {"poly", hermite_poly(j, k).str()}});
      os << rows.dump(2) << "\n";
    } else if (opt.format == "csv") {
      os << "j,k,poly\n";
      for (int j = 0; j <= opt.jmax; ++j)
        for (int k = 0; k <= opt.kmax; ++k)
          os << j << "," << k << ",\"" << hermite_poly(j, k).str() << "\"\n";
    } else {
      for (int j = 0; j <= opt.jmax; ++j)
        for (int k = 0; k <= opt.kmax; ++k)
          os << "H_" << j << "(m_" << k << ") = " << hermite_poly(j, k).str()
             << "\n";
    }
    emit(opt, os.str());
  });

  // gram ------------------------------------------------------------------
  CLI::App* gram = app.add_subcommand("gram", "inner-product Gram matrix");
  add_common(gram, opt, /*with_m=*/true);
  gram->callback([&] {
    Multivector one(opt.m + 1, ExactScalar(1));
    GramReport g = gram_matrix(opt.jmax, opt.kmax, opt.m, one, one);
    if (opt.format == "json") {
      emit(opt, g.to_json().dump(2) + "\n");
    } else if (opt.format == "csv") {
      emit(opt, g.csv());
    } else {
      emit(opt, g.verification.text() + g.csv());
    }
    rc = g.verification.passed() ? 0 : 1;
  });

  // beta-scan -------------------------------------------------------------
  CLI::App* beta = app.add_subcommand(
      "beta-scan", "pairing of psi_{0,0} and psi_{2,0} across Gaussian scales");
  add_common(beta, opt, /*with_m=*/true);
  beta->callback([&] {
    std::vector<Rational> ls = parse_lambdas(opt.lambdas);
    if (opt.format == "json") {
      nlohmann::json rows = nlohmann::json::array();
      for (const auto& row : beta_scan(ls, opt.m))
        rows.push_back({{"lambda", row.lambda.get_str()},
                        {"value", row.value.to_json()},
                        {"closed_form", row.closed_form.str()},
                        {"is_zero", row.is_zero}});
      emit(opt, rows.dump(2) + "\n");
      rc = check_beta_scan(ls, opt.m).passed() ? 0 : 1;
    } else if (opt.format == "csv") {
      std::ostringstream os;
      os << "lambda,value,is_zero\n";
      for (const auto& row : beta_scan(ls, opt.m))
        os << row.lambda.get_str() << ",\"" << row.closed_form.str() << "\","
           << (row.is_zero ? 1 : 0) << "\n";
      emit(opt, os.str());
      rc = check_beta_scan(ls, opt.m).passed() ? 0 : 1;
    } else {
      rc = finish(opt, check_beta_scan(ls, opt.m));
    }
  });

  // oracle ----------------------------------------------------------------
  CLI::App* oracle = app.add_subcommand("oracle", "numeric cross-checks");
  oracle->require_subcommand(1);
  CLI::App* o_cmp = oracle->add_subcommand(
      "compare", "quadrature and finite-difference comparison");
  add_common(o_cmp, opt, /*with_m=*/true, /*with_c=*/true);
  o_cmp->callback([&] {
    rc = finish(opt, oracle_compare(opt.jmax, opt.kmax, opt.m, opt.c));
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? 0 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return rc;
}
