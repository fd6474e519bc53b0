#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wittsig/invariants.hpp"
#include "wittsig/report.hpp"

namespace wittsig {

/// Objects of C_4 with trivial twist: invertibles and the two families X, Y.
struct TrivialTwistCensus {
  std::vector<Weight> invertibles;  // unit and lambda1..3
  std::vector<Weight> x_set;
  std::vector<Weight> y_set;
  std::vector<Weight> found;        // every trivial-twist alcove weight
  bool ok = false;                  // found == invertibles + X + Y exactly
};

struct LocalDims {
  CyclotomicNumber d1;
  CyclotomicNumber d2;
  CyclotomicNumber dim_d4;          // dim(C_4) / 16
  bool x_share_qdim = false;
  bool y_share_qdim = false;
  std::vector<Weight> d1_witnesses;  // X weights whose qdim equals the stated d1
  std::vector<Weight> d2_witnesses;
  bool d1_matches = false;
  bool d2_matches = false;
  bool dim_matches = false;
  bool ok = false;
};

struct EtaleCandidate {
  int a1 = 0;
  int a2 = 0;
  CyclotomicNumber dim;
  std::vector<CyclotomicNumber> conjugates;  // distinct conjugates of dim
  bool totally_positive = false;
  // Later stages run only on survivors of the earlier ones; unset otherwise.
  std::optional<Rational> norm;     // of dim(D4) / dim^2 over Q(zeta_7)^+
  std::optional<bool> norm_integral;
  std::optional<bool> ratio_admissible;
};

struct CandidateBounds {
  int a1_max = 0;
  int a2_max = 0;
};

/// The D_4 anisotropy argument, stage by stage; every stage keeps its exact
/// values so later stages and the report can reuse them.
class AnisotropyD4 {
 public:
  explicit AnisotropyD4(unsigned threads = 1, PrecisionSchedule schedule = {});

  const CategoryData& category() const noexcept { return c4_; }

  TrivialTwistCensus trivial_twist_objects() const;
  LocalDims local_dims() const;

  /// Largest a with dim(D4) >= (1 + a d)^2, by certified comparisons.
  int max_multiplicity(const CyclotomicNumber& d) const;
  CandidateBounds candidate_bounds(const LocalDims& dims) const;

  std::vector<EtaleCandidate> run_filters(const LocalDims& dims, const CandidateBounds& bounds) const;

  /// Full pipeline as one report (claim "anisotropy-d4").
  Report report() const;

  /// Same content as a human-readable table, in the order of the argument.
  std::string text_report() const;

 private:
  unsigned threads_;
  PrecisionSchedule schedule_;
  CategoryData c4_;
};

/// "c0 + c1*(z7+z7^6) + c2*(z7^2+z7^5)" style form of a real element of
/// Q(zeta_p)^+ (p prime), or "g*[b1*(..) + b2*(..) + ...]" when `factored`.
std::string period_form(const CyclotomicNumber& x, bool factored);

}  // namespace wittsig
