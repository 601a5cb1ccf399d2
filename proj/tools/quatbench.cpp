// Command-line front end: seeded matrix generation, single inversions,
// benchmark sweeps, CSV reports, SVG plots and a built-in self check.
//
// Exit codes: 0 success, 1 usage error, 2 numerical failure
// (singular / not generic), 3 I/O error.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "quatmat/bench.hpp"
#include "quatmat/embeddings.hpp"
#include "quatmat/inversion.hpp"
#include "quatmat/metrics.hpp"
#include "quatmat/plot.hpp"
#include "quatmat/qmat_io.hpp"
#include "quatmat/random.hpp"

namespace {

using namespace quatmat;

int cmd_gen(std::size_t n, std::uint64_t seed, const std::string& out) {
  const QuatMatrix z = random_quat_matrix(n, seed);
  write_qmat(out, z);
  std::printf("wrote %s: n=%zu seed=%llu\n", out.c_str(), n,
              static_cast<unsigned long long>(seed));
  return 0;
}

int cmd_invert(const std::string& in, std::size_t gen_n, std::uint64_t seed, int alg,
               const std::string& out) {
  QuatMatrix z;
  if (!in.empty()) {
    z = read_qmat(in);
  } else if (gen_n > 0) {
    z = random_quat_matrix(gen_n, seed);
  } else {
    throw UsageError("invert: give either --in FILE or --gen-n N");
  }
  const Algorithm algorithm = algorithm_from_code(alg);
  const auto t0 = std::chrono::steady_clock::now();
  const InversionReport rep = invert_with(algorithm, z);
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const double res = right_residual(z, rep.inverse);
  std::printf("n=%zu alg=%d (%s) time=%.6fs residual=%.6e branch=%s min_pivot=%.6e\n",
              z.rows(), alg, algorithm_name(algorithm), secs, res,
              branch_name(rep.branch), rep.min_pivot);
  if (!out.empty()) {
    write_qmat(out, rep.inverse);
    std::printf("wrote inverse to %s\n", out.c_str());
  }
  return 0;
}

int cmd_bench(BenchConfig cfg, const std::string& out_csv, const std::string& plot_dir) {
  std::ofstream csv(out_csv, std::ios::trunc);
  if (!csv) throw IoError("bench: cannot open '" + out_csv + "'");
  const auto records = run_bench(cfg, &csv, &std::cerr);
  csv.close();
  if (!csv) throw IoError("bench: short write to '" + out_csv + "'");
  std::printf("wrote %zu rows to %s\n", records.size(), out_csv.c_str());
  print_summary(std::cout, records);
  if (!plot_dir.empty()) {
    std::filesystem::create_directories(plot_dir);
    const std::string base = plot_dir + "/";
    write_time_plot(records, base + "time.svg");
    write_ratio_plot(records, base + "ratio.svg");
    write_residual_plot(records, base + "residual.svg");
    std::printf("wrote plots to %stime.svg, %sratio.svg, %sresidual.svg\n",
                base.c_str(), base.c_str(), base.c_str());
  }
  return 0;
}

int cmd_plot(const std::string& csv_path, const std::string& out_dir) {
  const auto records = read_csv(csv_path);
  std::filesystem::create_directories(out_dir);
  const std::string base = out_dir + "/";
  write_time_plot(records, base + "time.svg");
  write_ratio_plot(records, base + "ratio.svg");
  write_residual_plot(records, base + "residual.svg");
  std::printf("wrote %stime.svg, %sratio.svg, %sresidual.svg\n", base.c_str(),
              base.c_str(), base.c_str());
  return 0;
}

// Built-in invariant checks; fast enough to run on every install.
int cmd_verify() {
  int failures = 0;
  auto check = [&](const char* name, bool ok) {
    std::printf("%s: %s\n", ok ? "ok" : "FAIL", name);
    if (!ok) ++failures;
  };

  {
    const Quaternion i{0, 1, 0, 0}, j{0, 0, 1, 0}, k{0, 0, 0, 1};
    const Quaternion ij = quat_mul(i, j), ji = quat_mul(j, i);
    const Quaternion jk = quat_mul(j, k), ki = quat_mul(k, i);
    check("hamilton table (ij=k, jk=i, ki=j, ji=-k)",
          ij.z == 1 && ij.w == 0 && ij.x == 0 && ij.y == 0 && jk.x == 1 &&
              ki.y == 1 && ji.z == -1);
  }
  {
    bool ok = true;
    for (int t = 0; t < 100 && ok; ++t) {
      const QuatMatrix p = random_quat_matrix(1, 1000 + t);
      const QuatMatrix q = random_quat_matrix(1, 2000 + t);
      const Quaternion a = p.at(0, 0), b = q.at(0, 0);
      const auto ra = quat_as_complex_2x2(a), rb = quat_as_complex_2x2(b);
      const auto rab = quat_as_complex_2x2(quat_mul(a, b));
      for (int r = 0; r < 2; ++r) {
        for (int c = 0; c < 2; ++c) {
          ComplexScalar s{0, 0};
          for (int m = 0; m < 2; ++m) {
            s = complex_add(s, complex_mul(ra[r][m], rb[m][c]));
          }
          ok = ok && std::abs(s.re - rab[r][c].re) <= 1e-14 &&
               std::abs(s.im - rab[r][c].im) <= 1e-14;
        }
      }
    }
    check("2x2 complex representation is multiplicative (100 pairs, 1e-14)", ok);
  }
  {
    bool ok = true;
    for (int t = 0; t < 20 && ok; ++t) {
      const QuatMatrix z = random_quat_matrix(3, 31 + t);
      const QuatMatrix w = random_quat_matrix(3, 77 + t);
      ok = ok && max_abs_diff(complex_adjoint(mat_mul(z, w)),
                              mat_mul(complex_adjoint(z), complex_adjoint(w))) <= 1e-12;
      ok = ok && max_abs_diff(real_adjoint(mat_mul(z, w)),
                              mat_mul(real_adjoint(z), real_adjoint(w))) <= 1e-12;
    }
    check("adjoint representations are multiplicative (20 pairs, 1e-12)", ok);
  }
  {
    const QuatMatrix z = random_quat_matrix(6, 99);
    const QuatMatrix ref = reference_inverse(z);
    bool ok = true;
    for (int a = 1; a <= 6; ++a) {
      const InversionReport rep = invert(algorithm_from_code(a), z);
      ok = ok && max_abs_diff(rep.inverse, ref) <= 1e-11;
    }
    check("all six algorithms match the adjoint oracle on a random 6x6", ok);
  }
  {
    const QuatMatrix z = random_quat_matrix(6, 5);
    const InversionReport r1 = invert(Algorithm::complex_frobenius, z, true);
    const InversionReport r2 = invert(Algorithm::real_frobenius, z, true);
    const InversionReport r5 = invert(Algorithm::skew_real, z, true);
    check("operation certificates (2+3 complex / 4+13 real / 4+16 real)",
          r1.flops.inversion_count(Field::cplx, 6) == 2 &&
              r1.flops.multiplication_count(Field::cplx, 6) == 3 &&
              r2.flops.inversion_count(Field::real, 6) == 4 &&
              r2.flops.multiplication_count(Field::real, 6) == 13 &&
              r5.flops.inversion_count(Field::real, 6) == 4 &&
              r5.flops.multiplication_count(Field::real, 6) == 16);
  }
  {
    const auto tmp = std::filesystem::temp_directory_path() / "quatmat_verify.qmat";
    const QuatMatrix z = random_quat_matrix(5, 123);
    write_qmat(tmp.string(), z);
    const QuatMatrix back = read_qmat(tmp.string());
    std::filesystem::remove(tmp);
    check("qmat container round-trips bit-exactly", max_abs_diff(z, back) == 0.0);
  }
  {
    const QuatMatrix z = random_quat_matrix(8, 7);
    const double res = right_residual(z, reference_inverse(z));
    const QuatMatrix eye = QuatMatrix::identity(4);
    const QuatMatrix zero(4, 4);
    const double res_id = right_residual(eye, zero);
    check("residual metric (oracle small; ||I||_F/n^2 = n^{-3/2})",
          res <= 5e-13 && std::abs(res_id - 0.125) <= 1e-15);
  }
  {
    const QuatMatrix z1 = random_quat_matrix(4, 2024);
    const QuatMatrix z2 = random_quat_matrix(4, 2024);
    bool in_range = true;
    for (const RealMatrix* p : {&z1.a, &z1.b, &z1.c, &z1.d}) {
      for (double v : p->data()) in_range = in_range && v > -1.0 && v < 1.0;
    }
    check("seeded generation is deterministic and inside (-1,1)",
          max_abs_diff(z1, z2) == 0.0 && in_range);
  }

  if (failures == 0) {
    std::printf("all checks passed\n");
    return 0;
  }
  std::printf("%d check(s) failed\n", failures);
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"dense quaternion matrix inversion benchmark tool"};
  app.require_subcommand(1);

  auto* gen = app.add_subcommand("gen", "generate a seeded random matrix file");
  std::size_t gen_n = 0;
  std::uint64_t gen_seed = 0;
  std::string gen_out;
  gen->add_option("--n", gen_n, "matrix order")->required();
  gen->add_option("--seed", gen_seed, "PRNG seed");
  gen->add_option("--out", gen_out, "output .qmat path")->required();

  auto* inv = app.add_subcommand("invert", "invert one matrix with one algorithm");
  std::string inv_in, inv_out;
  std::size_t inv_gen_n = 0;
  std::uint64_t inv_seed = 0;
  int inv_alg = 2;
  inv->add_option("--in", inv_in, "input .qmat path");
  inv->add_option("--gen-n", inv_gen_n, "generate a random input of this order instead");
  inv->add_option("--seed", inv_seed, "seed for --gen-n");
  inv->add_option("--alg", inv_alg, "algorithm id 1..6")->required();
  inv->add_option("--out", inv_out, "write the inverse to this .qmat path");

  auto* bench = app.add_subcommand("bench", "run a benchmark sweep and write a CSV");
  std::vector<std::size_t> sizes;
  int trials = 10;
  std::vector<int> algs = {1, 2, 3, 4, 5, 6};
  std::uint64_t bench_seed = 0;
  bool count_flops = false, no_warmup = false;
  std::string out_csv = "bench.csv", plot_dir;
  bench->add_option("--sizes", sizes,
                    "matrix orders (default 100,200,...,1000)")->delimiter(',');
  bench->add_option("--trials", trials, "trials per size (default 10)");
  bench->add_option("--algs", algs, "algorithm ids (default all)")->delimiter(',');
  bench->add_option("--seed", bench_seed, "base seed");
  bench->add_flag("--count-flops", count_flops,
                  "add a separate instrumented pass per trial");
  bench->add_flag("--no-warmup", no_warmup, "skip the warm-up inversions");
  bench->add_option("--out", out_csv, "CSV output path (default bench.csv)");
  bench->add_option("--plots", plot_dir, "also emit SVG plots into this directory");

  auto* plot = app.add_subcommand("plot", "render SVG figures from a bench CSV");
  std::string plot_csv, plot_out = ".";
  plot->add_option("--csv", plot_csv, "input CSV path")->required();
  plot->add_option("--out-dir", plot_out, "output directory (default .)");

  auto* verify = app.add_subcommand("verify", "run the built-in invariant checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (gen->parsed()) return cmd_gen(gen_n, gen_seed, gen_out);
    if (inv->parsed()) return cmd_invert(inv_in, inv_gen_n, inv_seed, inv_alg, inv_out);
    if (bench->parsed()) {
      BenchConfig cfg;
      cfg.sizes = sizes.empty()
                      ? std::vector<std::size_t>{100, 200, 300, 400, 500,
                                                 600, 700, 800, 900, 1000}
                      : sizes;
      cfg.trials = trials;
      cfg.algorithms = algs;
      cfg.seed = bench_seed;
      cfg.count_flops = count_flops;
      cfg.warmup = !no_warmup;
      return cmd_bench(std::move(cfg), out_csv, plot_dir);
    }
    if (plot->parsed()) return cmd_plot(plot_csv, plot_out);
    if (verify->parsed()) return cmd_verify();
  } catch (const UsageError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  } catch (const IoError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 3;
  } catch (const NotGenericError& e) {
    std::fprintf(stderr, "error: %s\nhint: try another algorithm id\n", e.what());
    return 2;
  } catch (const Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 1;
}
