#pragma once

#include "riccati/system.hpp"

#include <optional>
#include <string>
#include <vector>

namespace riccati {

// Reduction of a k-periodic system to the k autonomous maps
// B_i = A_{i-1} ... A_0 A_{k-1} ... A_i governing the subsequences x_{nk+i}.
// All B_i share trace and determinant.
std::vector<Matrix2> reduce(const PeriodicSystem& system);

// Trace, determinant and discriminant of the reduced map, plus the root data
// of X^2 - T X + D = 0 in the regime the sign of the discriminant selects.
struct CharacteristicData {
  enum class RootKind { RealDistinct, RealDouble, ComplexPair };

  Scalar trace;
  Scalar det;
  Scalar delta;  // trace^2 - 4*det
  RootKind kind;
  std::optional<Scalar> lambda;  // dominant root (|lambda| > |mu|), or double root
  std::optional<Scalar> mu;
  std::optional<Scalar> r_squared;    // ComplexPair: modulus^2 = det
  std::optional<Scalar> cos2_theta;   // ComplexPair: trace^2 / (4*det)
};

CharacteristicData characteristic(const Matrix2& b0);

// Whether the rotation angle of an elliptic map is a rational multiple of pi.
// With rational trace and determinant the decision is exact: cos(2*theta) is
// rational, so a rational angle forces trace^2/det into {1, 2, 3}, landing
// theta on a denominator q in {3, 4, 6}. Otherwise a continued-fraction
// expansion of theta/pi gives a heuristic answer.
struct ThetaClass {
  enum class Kind { FiniteOrder, Irrational, HeuristicFiniteOrder, HeuristicIrrational };
  Kind kind;
  long q = 0;  // reduced denominator of theta/pi when finite order

  bool finite_order() const {
    return kind == Kind::FiniteOrder || kind == Kind::HeuristicFiniteOrder;
  }
  bool heuristic() const {
    return kind == Kind::HeuristicFiniteOrder || kind == Kind::HeuristicIrrational;
  }
};

ThetaClass theta_rationality(const Scalar& trace, const Scalar& det);

// A single enumerated forbidden point: the n-th member of a pole family,
// together with the orbit step at which the iteration dies.
struct ForbiddenPoint {
  Scalar point;
  long pole_step;
  long family_n = 0;  // index within its family; 0 for prefix points
};

enum class FamilyKind { DistinctRoots, DoubleRoot, Empty };

struct ForbiddenFamily {
  long branch;        // residue class i of the family
  Matrix2 transform;  // preimage map pulling pole families back to step 0
  FamilyKind kind;
  std::vector<ForbiddenPoint> points;
};

struct ForbiddenSetDescription {
  std::vector<ForbiddenPoint> prefix;
  std::vector<ForbiddenFamily> families;

  // All points merged, deduplicated (keeping the earliest pole step) and
  // ordered by pole step.
  std::vector<ForbiddenPoint> flatten() const;
};

// Forbidden set of the autonomous equation y_{n+1} = f_M(y_n): the poles of
// M^n for n >= 1. Empty when the c entry vanishes. Collects the first `depth`
// members, skipping indices whose power has no pole.
ForbiddenSetDescription autonomous_forbidden(const Matrix2& m, long depth);

// Forbidden set of the periodic system: preimages of the single-step poles
// -d_i/c_i for 0 <= i <= k-2, plus the pullbacks of the autonomous families
// of every B_i.
ForbiddenSetDescription forbidden_set(const PeriodicSystem& system, long depth);

struct OscillationBranch {
  enum class Kind { Diverges, Frozen, Converges };
  long index;
  Kind kind;
  std::optional<Scalar> limit;  // Converges only
};

// Classification verdict for the asymptotic behavior of all solutions.
struct BehaviorClass {
  enum class Kind {
    PeriodicAll,
    AttractingFixedPoint,
    AttractingCycle,
    UnstableAttractorPoint,
    UnstableAttractorCycle,
    PeriodicAllRotation,
    DenseOrbits,
    Oscillating,
    NotCoveredByPaper,
  };

  Kind kind;
  long period = 0;                    // PeriodicAll / PeriodicAllRotation
  std::optional<Scalar> fixed_point;  // point verdicts
  std::vector<Scalar> cycle;          // cycle verdicts, length k
  std::vector<Scalar> excluded;       // initial values outside the basin
  bool stable = false;
  bool heuristic_rotation = false;  // rotation decided by the float heuristic
  std::vector<OscillationBranch> branches;  // Oscillating
  std::string reason;                       // NotCoveredByPaper

  bool is_cycle_kind() const {
    return kind == Kind::AttractingCycle || kind == Kind::UnstableAttractorCycle;
  }
  bool is_point_kind() const {
    return kind == Kind::AttractingFixedPoint || kind == Kind::UnstableAttractorPoint;
  }
};

const char* behavior_kind_name(BehaviorClass::Kind kind);

BehaviorClass classify(const PeriodicSystem& system);

}  // namespace riccati
