#include "verify.hpp"

#include <cmath>
#include <complex>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "baselines.hpp"
#include "clifford.hpp"
#include "codebook.hpp"
#include "design.hpp"
#include "relays.hpp"
#include "rng.hpp"
#include "signalset.hpp"
#include "sweep.hpp"

namespace ddstc {

using Mat = Eigen::MatrixXcd;

namespace {

AlgebraElement random_element(int a, RandomStream& rng) {
  AlgebraElement x(a);
  for (int i = 0; i < x.dim(); ++i) x.set_coeff_at(i, rng.gaussian());
  return x;
}

double max_abs(const Mat& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace

AlgebraSuite run_algebra_suite(int a, int trials, std::uint64_t seed) {
  ComplexBasis basis{a};
  std::vector<Mat> center, family;
  for (int d = 0; d < (1 << a); ++d) {
    center.push_back(left_regular_rep(
        AlgebraElement::basis(a, {0, static_cast<std::uint32_t>(d)}), basis));
    family.push_back(left_regular_rep(
        AlgebraElement::basis(a, {2, static_cast<std::uint32_t>(d)}), basis));
  }

  AlgebraSuite s;
  for (int t = 0; t < trials; ++t) {
    RandomStream rng(seed, 0x300000 + a, t);
    AlgebraElement x = random_element(a, rng);
    AlgebraElement y = random_element(a, rng);
    Mat rx = left_regular_rep(x, basis);
    Mat ry = left_regular_rep(y, basis);
    s.homomorphism =
        std::max(s.homomorphism, max_abs(left_regular_rep(x * y, basis) - rx * ry));
    s.conjugation = std::max(
        s.conjugation,
        max_abs(left_regular_rep(conj_automorphism(x), basis) - rx.conjugate()));
    for (const Mat& d : center)
      s.center = std::max(s.center, max_abs(d * rx - rx * d));
    for (const Mat& g : family)
      s.anticommute =
          std::max(s.anticommute, max_abs(g * rx.conjugate() - rx * g));
  }
  return s;
}

namespace {

void algebra_rows(std::vector<CheckRow>& rows, int lambda) {
  AlgebraSuite s = run_algebra_suite(lambda - 1, 1000, 1);
  rows.push_back({"algebra", "homomorphism", s.homomorphism < 1e-12, s.homomorphism});
  rows.push_back({"algebra", "conjugation", s.conjugation < 1e-12, s.conjugation});
  rows.push_back({"algebra", "center_commute", s.center < 1e-12, s.center});
  rows.push_back(
      {"algebra", "anticommute_family", s.anticommute < 1e-12, s.anticommute});
}

void design_rows(std::vector<CheckRow>& rows, const LinearDesign& d, int lambda) {
  auto gc = verify_group_decodable(d, canonical_partition(d.num_complex_vars()));
  rows.push_back({"design", "group_decodable", gc.ok, gc.max_violation});

  int a = lambda - 1;
  ComplexBasis basis{a};
  double scale = 1.0 / std::sqrt(static_cast<double>(1 << lambda));
  double worst = 0.0;
  for (int k = 0; k < 100; ++k) {
    RandomStream rng(1, 0x400000, k);
    Eigen::VectorXcd z(basis.size());
    for (int i = 0; i < z.size(); ++i) z(i) = rng.complex_gaussian();
    Mat lhs = scale * left_regular_rep(from_complex_coords(a, z), basis);
    worst = std::max(worst, max_abs(lhs - d.evaluate_complex(z)));
  }
  rows.push_back({"design", "algebra_match", worst < 1e-12, worst});
}

void signalset_rows(std::vector<CheckRow>& rows, const SignalSet& s) {
  SignalSetReport r = verify_signal_set(s);
  rows.push_back({"signalset", "single_coordinate", r.single_coordinate.ok,
                  r.single_coordinate.worst});
  rows.push_back({"signalset", "radii_increasing", r.radii_increasing.ok,
                  r.radii_increasing.worst});
  rows.push_back({"signalset", "energy", r.energy.ok, r.energy.worst});
  rows.push_back(
      {"signalset", "pair_support", r.pair_support.ok, r.pair_support.worst});
  rows.push_back({"signalset", "pair_cancellation", r.pair_cancellation.ok,
                  r.pair_cancellation.worst});
}

void codebook_rows(std::vector<CheckRow>& rows, const Codebook& c,
                   double expected_mean_sq, std::uint64_t pair_budget,
                   int workers) {
  UnitarityReport u = check_scaled_unitary(c);
  rows.push_back({"codebook", "unitary_offdiag", u.max_offdiag < 1e-10,
                  u.max_offdiag});
  rows.push_back({"codebook", "unitary_diag", u.max_diag_spread < 1e-10,
                  u.max_diag_spread});
  rows.push_back({"codebook", "mean_scale_sq",
                  std::abs(u.mean_scale_sq - expected_mean_sq) <= 1e-12,
                  u.mean_scale_sq});

  DiversityOptions opt;
  opt.pair_budget = pair_budget;
  opt.sample_on_budget = true;
  opt.workers = workers;
  DiversityResult div = diversity_and_gain(c, opt);
  rows.push_back(
      {"codebook", "fully_diverse", div.fully_diverse, div.min_gram_det});
  if (div.sampled)
    rows.push_back({"codebook", "diversity_sampled", true,
                    static_cast<double>(div.pairs_checked)});
  rows.push_back({"codebook", "group_decodable", true,
                  c.group_decodable ? 1.0 : 0.0});
}

void relay_rows(std::vector<CheckRow>& rows, const RelaySystem& rs,
                const Codebook& c, bool expect_x0_identity) {
  double unit = 0.0, perm = 0.0;
  bool perm_counts = true;
  for (const Mat& m : rs.matrices) {
    unit = std::max(unit, max_abs(m.adjoint() * m - Mat::Identity(rs.t(), rs.t())));
    for (int row = 0; row < m.rows(); ++row) {
      int nz_row = 0, nz_col = 0;
      for (int col = 0; col < m.cols(); ++col) {
        if (m(row, col) != 0.0) ++nz_row;
        if (m(col, row) != 0.0) ++nz_col;
        std::complex<double> e = m(row, col);
        double dev = std::min({std::abs(e), std::abs(e - 1.0), std::abs(e + 1.0),
                               std::abs(e - std::complex<double>(0, 1)),
                               std::abs(e + std::complex<double>(0, 1))});
        perm = std::max(perm, dev);
      }
      if (nz_row != 1 || nz_col != 1) perm_counts = false;
    }
  }
  rows.push_back({"relays", "unitary", unit < 1e-12, unit});
  rows.push_back(
      {"relays", "signed_permutation", perm_counts && perm == 0.0, perm});

  if (expect_x0_identity) {
    double dev = max_abs(rs.x0 - Mat::Identity(rs.t(), rs.t()));
    rows.push_back({"relays", "x0_identity", dev == 0.0, dev});
  }
  double x0u = max_abs(rs.x0.adjoint() * rs.x0 - Mat::Identity(rs.t(), rs.t()));
  rows.push_back({"relays", "x0_unitary", x0u < 1e-12, x0u});

  CompatReport comp = verify_compatibility(rs, c);
  rows.push_back({"relays", "compatibility", comp.ok, comp.max_violation});
}

void proposed_relay_extras(std::vector<CheckRow>& rows, const RelaySystem& rs,
                           const Codebook& c, int lambda) {
  const LinearDesign& d = *c.design;
  LinearDesign rec = reconstruct_design(rs);
  double worst = 0.0;
  for (int k = 0; k < 100; ++k) {
    RandomStream rng(1, 0x500000, k);
    Eigen::VectorXd s(d.num_real_vars());
    for (int i = 0; i < s.size(); ++i) s(i) = rng.gaussian();
    worst = std::max(worst, max_abs(rec.evaluate(s) - d.evaluate(s)));
  }
  rows.push_back({"relays", "reconstruct_match", worst < 1e-12, worst});

  auto family = alternate_relay_family(lambda);
  double viol = 0.0;
  RandomStream rng(1, 0x600000, 0);
  std::uint64_t samples = std::min<std::uint64_t>(c.size(), 500);
  for (std::uint64_t k = 0; k < samples; ++k) {
    const Mat& u = c.words[rng.next_below(c.size())];
    for (const Mat& m : family)
      viol = std::max(viol, max_abs(m * u.conjugate() - u * m));
  }
  for (const Mat& m : family)
    viol = std::max(viol,
                    max_abs(m.adjoint() * m - Mat::Identity(rs.t(), rs.t())));
  rows.push_back({"relays", "alternate_family", viol < 1e-10, viol});
}

}  // namespace

std::vector<CheckRow> verify_code(const std::string& code, int lambda,
                                  double rate, std::uint64_t q_override,
                                  std::uint64_t pair_budget, int workers) {
  std::vector<CheckRow> rows;
  CodeBundle bundle = build_code(code, lambda, rate, q_override);
  if (code == "proposed") {
    algebra_rows(rows, lambda);
    design_rows(rows, *bundle.book.design, lambda);
    signalset_rows(rows, *bundle.book.points);
    codebook_rows(rows, bundle.book, 4.0 / bundle.relays.r(), pair_budget,
                  workers);
    relay_rows(rows, bundle.relays, bundle.book, true);
    proposed_relay_extras(rows, bundle.relays, bundle.book, lambda);
  } else {
    codebook_rows(rows, bundle.book, 1.0, pair_budget, workers);
    relay_rows(rows, bundle.relays, bundle.book, code == "circulant");
  }
  return rows;
}

bool all_pass(const std::vector<CheckRow>& rows) {
  for (const auto& r : rows)
    if (!r.pass) return false;
  return true;
}

std::string report_csv(const std::vector<CheckRow>& rows) {
  std::string out = "check,name,pass,worst_value\n";
  char buf[64];
  for (const auto& r : rows) {
    std::snprintf(buf, sizeof buf, "%.10g", r.worst);
    out += r.check + ',' + r.name + ',' + (r.pass ? "true" : "false") + ',' +
           buf + '\n';
  }
  return out;
}

}  // namespace ddstc
