// Command-line front end: solve, bound, diagonal, annihilator, coeff,
// automaton, verify. Inputs are JSON files (schemas in the io module),
// outputs are deterministic JSON on stdout or a file. Exit codes: 0 success,
// 1 domain error, 2 malformed input.

#include <CLI11.hpp>
#include <json.hpp>

#include <gmpxx.h>

#include <iostream>
#include <string>

#include "sectio/annihilator.hpp"
#include "sectio/automaton.hpp"
#include "sectio/io.hpp"

namespace {

using namespace sectio;

void emit(const std::string& text, const std::string& output_path) {
  if (output_path.empty())
    std::cout << text;
  else
    io::write_file(output_path, text);
}

std::vector<mpz_class> parse_index_list(const std::string& csv) {
  std::vector<mpz_class> out;
  std::string token;
  for (size_t i = 0; i <= csv.size(); ++i) {
    if (i == csv.size() || csv[i] == ',') {
      if (token.empty())
        raise(ErrorCode::MalformedInput, "empty index entry");
      for (char c : token)
        if (c < '0' || c > '9')
          raise(ErrorCode::MalformedInput,
                "index entries must be nonnegative decimal integers");
      out.emplace_back(token, 10);
      token.clear();
    } else {
      token += csv[i];
    }
  }
  return out;
}

std::vector<int32_t> parse_degree_list(const std::string& csv) {
  std::vector<int32_t> out;
  for (const auto& z : parse_index_list(csv)) {
    if (!z.fits_sint_p())
      raise(ErrorCode::MalformedInput, "degree entry out of range");
    out.push_back(static_cast<int32_t>(z.get_si()));
  }
  return out;
}

std::string elem_text(const Field& F, FieldElem x) {
  const auto cs = F.coeffs(x);
  if (cs.size() == 1) return std::to_string(cs[0]);
  std::string s = "[";
  for (size_t i = 0; i < cs.size(); ++i)
    s += (i ? "," : "") + std::to_string(cs[i]);
  return s + "]";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact section-operator calculus over finite fields"};
  app.require_subcommand(1);

  int threads = 1;
  app.add_option("--threads", threads, "max worker threads for enumeration kernels")
      ->check(CLI::Range(1, 256));

  std::string branch_path, poly_path, series_path, cert_path, output_path;

  auto* solve = app.add_subcommand("solve", "solve a branch to a truncated series");
  int32_t solve_prec = 16;
  solve->add_option("--branch", branch_path, "branch file")->required();
  solve->add_option("--prec", solve_prec, "total-degree precision")
      ->required()
      ->check(CLI::Range(1, 1 << 20));
  solve->add_option("-o,--output", output_path, "write result to a file");

  auto* bound = app.add_subcommand("bound", "p-degree bounds from an annihilator");
  bound->add_option("--poly", poly_path, "polynomial file")->required();
  bound->add_option("-o,--output", output_path, "write result to a file");

  auto* diag = app.add_subcommand("diagonal", "diagonal of a branch series");
  int32_t diag_order = 32;
  diag->add_option("--branch", branch_path, "branch file")->required();
  diag->add_option("--order", diag_order, "number of exact coefficients")
      ->required()
      ->check(CLI::Range(1, 1 << 20));
  diag->add_option("-o,--output", output_path, "write result to a file");

  auto* annih = app.add_subcommand("annihilator",
                                   "linearized annihilator of a diagonal");
  int32_t annih_order = 200;
  int64_t annih_nmax = -1;
  std::string degree_csv;
  annih->add_option("--branch", branch_path, "branch file");
  annih->add_option("--series", series_path,
                    "univariate series file (skips the diagonal step)");
  annih->add_option("--order", annih_order, "diagonal order")
      ->check(CLI::Range(1, 1 << 20));
  annih->add_option("--nmax", annih_nmax,
                    "p-degree budget; defaults to the polytope bound");
  annih->add_option("--degrees", degree_csv, "coefficient degree schedule, e.g. 4,8,16");
  annih->add_option("-o,--output", output_path, "write result to a file");

  auto* coeff = app.add_subcommand("coeff", "coefficient at a multi-index");
  std::string index_csv;
  coeff->add_option("--branch", branch_path, "branch file")->required();
  coeff->add_option("--index", index_csv, "comma-separated index, any magnitude")
      ->required();

  auto* autom = app.add_subcommand("automaton", "synthesize a coefficient automaton");
  int64_t max_states = 100000;
  std::string format = "json";
  autom->add_option("--branch", branch_path, "branch file")->required();
  autom->add_option("--max-states", max_states, "state budget")
      ->check(CLI::Range(int64_t{1}, int64_t{1} << 40));
  autom->add_option("--format", format, "json or dot")
      ->check(CLI::IsMember({"json", "dot"}));
  autom->add_option("-o,--output", output_path, "write result to a file");

  auto* verify = app.add_subcommand("verify", "check a certificate against a series");
  int32_t verify_order = 0;
  verify->add_option("--cert", cert_path, "certificate file")->required();
  verify->add_option("--series", series_path, "univariate series file")->required();
  verify->add_option("--order", verify_order, "verification order")
      ->required()
      ->check(CLI::Range(0, 1 << 20));

  // Option and usage mistakes are malformed input: exit 2, not CLI11's 1.
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*solve) {
      const Branch b = io::import_branch(io::read_file(branch_path));
      emit(io::export_series(hensel_solve(b, solve_prec)), output_path);
    } else if (*bound) {
      const MultiPoly A = io::import_poly(io::read_file(poly_path));
      emit(io::export_bound_report(bound_report(A, threads)), output_path);
    } else if (*diag) {
      const Branch b = io::import_branch(io::read_file(branch_path));
      auto ctx = SectionContext::make(b);
      emit(io::export_series(diagonal_of_branch(ctx, diag_order)), output_path);
    } else if (*annih) {
      const std::vector<int32_t> schedule =
          degree_csv.empty() ? default_degree_schedule() : parse_degree_list(degree_csv);
      if (!series_path.empty()) {
        const TruncatedSeries g = io::import_series(io::read_file(series_path));
        if (annih_nmax < 0)
          raise(ErrorCode::MalformedInput, "--nmax is required with --series");
        const AnnihilatorCertificate cert =
            find_linearized_annihilator(g, annih_nmax, schedule);
        emit(io::export_certificate(cert), output_path);
      } else if (!branch_path.empty()) {
        const Branch b = io::import_branch(io::read_file(branch_path));
        if (annih_nmax < 0) {
          const PipelineResult r = diagonal_pipeline(b, annih_order, schedule);
          emit(io::export_certificate(r.cert, &r.bounds), output_path);
        } else {
          auto ctx = SectionContext::make(b);
          const BoundReport bounds = bound_report(ctx->E(), threads);
          const TruncatedSeries g = diagonal_of_branch(ctx, annih_order);
          const AnnihilatorCertificate cert =
              find_linearized_annihilator(g, annih_nmax, schedule);
          emit(io::export_certificate(cert, &bounds), output_path);
        }
      } else {
        raise(ErrorCode::MalformedInput, "provide --branch or --series");
      }
    } else if (*coeff) {
      const Branch b = io::import_branch(io::read_file(branch_path));
      const std::vector<mpz_class> index = parse_index_list(index_csv);
      const FieldElem value = coeff_query(b, index);
      std::cout << elem_text(b.E.field(), value) << "\n";
    } else if (*autom) {
      const Branch b = io::import_branch(io::read_file(branch_path));
      const Dfao M = build_dfao(b, max_states);
      emit(export_dfao(M, format == "dot" ? DfaoFormat::dot : DfaoFormat::json),
           output_path);
    } else if (*verify) {
      const AnnihilatorCertificate cert = io::import_certificate(io::read_file(cert_path));
      const TruncatedSeries g = io::import_series(io::read_file(series_path));
      const bool ok = verify_annihilation(cert.L, g, verify_order);
      nlohmann::json j;
      j["verified"] = ok;
      j["order"] = verify_order;
      std::cout << j.dump(2) << "\n";
      return ok ? 0 : 1;
    }
  } catch (const Error& err) {
    nlohmann::json j;
    j["error"] = error_code_name(err.code());
    j["detail"] = err.what();
    std::cout << j.dump(2) << "\n";
    return err.code() == ErrorCode::MalformedInput ? 2 : 1;
  } catch (const std::exception& ex) {
    nlohmann::json j;
    j["error"] = "MalformedInput";
    j["detail"] = ex.what();
    std::cout << j.dump(2) << "\n";
    return 2;
  }
  return 0;
}
