#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "covers/abchars.hpp"

namespace covers::pardini {

using abchars::AbChar;
using abchars::FiniteAbelianGroup;

// Finitely generated abelian group standing in for Pic of the base:
// Z^rank x prod Z/torsion_i. Classes are integer vectors with the torsion
// coordinates reduced.
struct PicardModel {
  long rank = 0;
  std::vector<long> torsion;

  long dim() const { return rank + (long)torsion.size(); }
};

struct PicClass {
  std::vector<long> coords;
  bool operator==(const PicClass&) const = default;
};

PicClass pic_zero(const PicardModel& pic);
PicClass pic_reduce(const PicardModel& pic, PicClass c);
PicClass pic_add(const PicardModel& pic, const PicClass& a, const PicClass& b);
PicClass pic_sub(const PicardModel& pic, const PicClass& a, const PicClass& b);
PicClass pic_scale(const PicardModel& pic, long n, const PicClass& a);
std::string pic_str(const PicClass& c);

// Branch component D_i labelled by g_i in A; the inertia group is <g_i>
// with order m_i (derived), the ramification order over D_i.
struct BranchLabel {
  PicClass divisor_class;
  std::vector<long> g;
  std::string section_name;  // s_i
  long order = 1;            // m_i = ord(g_i), filled by make_label
};

BranchLabel make_label(const FiniteAbelianGroup& A, PicClass cls,
                       std::vector<long> g, std::string section_name);

// Full building data: one class per character, L(trivial) = 0.
struct BuildingData {
  FiniteAbelianGroup A;
  PicardModel pic;
  std::vector<BranchLabel> labels;
  std::map<AbChar, PicClass> L;
};

// Reduced data: classes only on a generating set of A^*.
struct ReducedBuildingData {
  FiniteAbelianGroup A;
  PicardModel pic;
  std::vector<BranchLabel> labels;
  std::vector<AbChar> gen_chars;
  std::vector<PicClass> gen_classes;
};

// the unique a in [0, m_i) with chi(g_i) = zeta_{m_i}^a
long a_coeff(const FiniteAbelianGroup& A, const std::vector<BranchLabel>& labels,
             const AbChar& chi, long i);

// floor((a^i_chi + a^i_chi') / m_i), always 0 or 1
long epsilon(const FiniteAbelianGroup& A, const std::vector<BranchLabel>& labels,
             const AbChar& chi, const AbChar& chi2, long i);

// D_{chi,chi'} = sum_i eps^i_{chi,chi'} D_i
PicClass d_class(const BuildingData& bd, const AbChar& chi, const AbChar& chi2);

struct FundamentalViolation {
  AbChar chi, chi2;
  PicClass lhs, rhs;
};

// empty iff L(chi) + L(chi') = L(chi chi') + D_{chi,chi'} for all pairs
std::vector<FundamentalViolation> check_fundamental(const BuildingData& bd);

// Extend reduced data to all characters along the generator recurrence;
// a second pass along a permuted generator order must agree
// (PathDependence otherwise, an internal assertion).
BuildingData complete_reduced(const ReducedBuildingData& rbd);

// cocycle identity eps^i_{chi,chi'} + eps^i_{chi chi',chi''} =
// eps^i_{chi',chi''} + eps^i_{chi,chi' chi''} for all triples and labels
bool associativity_check(const FiniteAbelianGroup& A,
                         const std::vector<BranchLabel>& labels);

// true iff the sum of the inertia subgroups <g_i>, i in subset, is direct
bool inertia_injection_check(const FiniteAbelianGroup& A,
                             const std::vector<BranchLabel>& labels,
                             const std::vector<long>& subset);

// relation strings z_chi z_chi' = prod s_i^eps z_{chi chi'}, one per
// unordered pair of nontrivial characters; throws InvalidData when the
// fundamental relations fail
std::vector<std::string> cover_equations(const BuildingData& bd);

struct CanonicalClasses {
  PicClass c1_Lprime;      // sum of the reduced-data generator classes
  PicClass K_V_descent;    // K_W + (n-1) c1(L'); K_V is its pullback
  std::string pullback_rule;  // f^*D = n R_red with D the total branch class
};

CanonicalClasses canonical_classes(const ReducedBuildingData& rbd,
                                   const PicClass& K_W, long n);

struct PushforwardSummand {
  long u_index = 0;
  PicClass cls;  // omega_Y + (t-1) c1(L'_q), tensored with the symbolic U_i
};

std::vector<PushforwardSummand> pushforward_canonical_plan(
    const PicardModel& pic, long t, const PicClass& c1_Lprime_q,
    const PicClass& omega_Y, const std::vector<long>& u_indices);

}  // namespace covers::pardini
